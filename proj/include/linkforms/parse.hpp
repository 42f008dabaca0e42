#pragma once

#include <cctype>
#include <sstream>
#include <variant>

#include "linkforms/lens.hpp"

namespace linkforms {

/// Expression grammar (whitespace-insensitive):
///   expr := term ('+' term)*
///   term := [count '*'] gen
///   gen  := 'A^'k'('a')' | 'E0^'k | 'E1^'k | 'C'p'^'k'('a')'
///         | 'Q^'k'('abar')' | 'QE0^'k'['alpha','gamma']' | 'QE1^'k'['alpha','gamma']'
/// Plain (A/E) and quadratic (Q/QE) generators must not be mixed; C
/// generators are legal in both contexts, the odd refinement being unique.
using ParsedExpr = std::variant<Pairing, QuadraticForm>;

namespace detail {

class ExprParser {
 public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    ParsedExpr parse() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '0') {
            std::size_t save = pos_++;
            skip_ws();
            if (pos_ >= s_.size()) return Pairing{};  // the trivial pairing
            pos_ = save;
        }
        parse_term();
        skip_ws();
        while (pos_ < s_.size()) {
            expect('+');
            parse_term();
            skip_ws();
        }
        if (saw_plain_ && saw_quad_)
            throw parse_error("cannot mix plain and quadratic generators", pos_);
        if (saw_quad_) return make_quadratic(std::move(qtwo_), std::move(odd_));
        return make_pairing(std::move(two_), std::move(odd_));
    }

 private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of expression", pos_);
        return s_[pos_];
    }

    void expect(char c) {
        if (peek() != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    long long number() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            throw parse_error("expected a number", start);
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    void parse_term() {
        long long count = 1;
        skip_ws();
        std::size_t mark = pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            count = number();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
            } else {
                throw parse_error("expected '*' after multiplicity", pos_);
            }
            if (count < 0) throw parse_error("negative multiplicity", mark);
        }
        std::size_t n2 = two_.size(), nodd = odd_.size(), nq = qtwo_.size();
        parse_gen();
        for (long long i = 1; i < count; ++i) {
            if (two_.size() > n2)
                two_.push_back(two_.back());
            else if (odd_.size() > nodd)
                odd_.push_back(odd_.back());
            else if (qtwo_.size() > nq)
                qtwo_.push_back(qtwo_.back());
        }
        if (count == 0) {
            two_.resize(n2);
            odd_.resize(nodd);
            qtwo_.resize(nq);
        }
    }

    void parse_gen() {
        skip_ws();
        std::size_t mark = pos_;
        char c = peek();
        try {
            if (c == 'A') {
                ++pos_;
                expect('^');
                long long k = number();
                expect('(');
                long long a = number();
                expect(')');
                two_.push_back(cyclic2(check_level(k), a));
                saw_plain_ = true;
            } else if (c == 'E') {
                ++pos_;
                char which = peek();
                if (which != '0' && which != '1') throw parse_error("expected E0 or E1", pos_);
                ++pos_;
                expect('^');
                long long k = number();
                if (which == '0')
                    two_.push_back(e0(check_level(k)));
                else
                    two_.push_back(e1(check_level(k)));
                saw_plain_ = true;
            } else if (c == 'C') {
                ++pos_;
                long long p = number();
                expect('^');
                long long k = number();
                expect('(');
                long long a = number();
                expect(')');
                odd_.push_back(odd_gen(p, check_level(k), a));
            } else if (c == 'Q') {
                ++pos_;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == 'E') {
                    ++pos_;
                    char which = peek();
                    if (which != '0' && which != '1') throw parse_error("expected QE0 or QE1", pos_);
                    ++pos_;
                    expect('^');
                    long long k = number();
                    expect('[');
                    long long alpha = number();
                    expect(',');
                    long long gamma = number();
                    expect(']');
                    if (which == '0')
                        qtwo_.push_back(qe0(check_level(k), static_cast<int>(alpha),
                                            static_cast<int>(gamma)));
                    else
                        qtwo_.push_back(qe1(check_level(k), static_cast<int>(alpha),
                                            static_cast<int>(gamma)));
                } else {
                    expect('^');
                    long long k = number();
                    expect('(');
                    long long abar = number();
                    expect(')');
                    qtwo_.push_back(qcyclic(check_level(k), abar));
                }
                saw_quad_ = true;
            } else {
                throw parse_error("expected a generator", pos_);
            }
        } catch (const invalid_generator& e) {
            throw parse_error(std::string("invalid generator: ") + e.what(), mark);
        }
    }

    int check_level(long long k) {
        if (k < 1 || k > 62) throw parse_error("level out of range", pos_);
        return static_cast<int>(k);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::vector<Gen2> two_;
    std::vector<GenOdd> odd_;
    std::vector<QGen2> qtwo_;
    bool saw_plain_ = false;
    bool saw_quad_ = false;
};

}  // namespace detail

inline ParsedExpr parse_expression(std::string_view text) {
    return detail::ExprParser(text).parse();
}

inline Pairing parse_pairing(std::string_view text) {
    ParsedExpr e = parse_expression(text);
    if (auto* p = std::get_if<Pairing>(&e)) return std::move(*p);
    throw parse_error("expected a plain pairing expression", 0);
}

inline QuadraticForm parse_quadratic(std::string_view text) {
    ParsedExpr e = parse_expression(text);
    if (auto* q = std::get_if<QuadraticForm>(&e)) return std::move(*q);
    // a pure odd expression parses as a Pairing; its refinement is unique
    Pairing p = std::get<Pairing>(std::move(e));
    if (!p.two.empty())
        throw parse_error("2-adic generators need explicit quadratic refinements (Q/QE0/QE1)", 0);
    QuadraticForm q;
    q.odd = std::move(p.odd);
    return q;
}

/// Lens connected sums: "L(8,1)#L(16,3)"; the empty sum "" is the sphere.
inline std::vector<LensSpace> parse_lens_sum(std::string_view text) {
    std::vector<LensSpace> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a number", start);
        return std::stoll(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    while (pos < text.size()) {
        if (!out.empty()) {
            if (text[pos] != '#') throw parse_error("expected '#'", pos);
            ++pos;
            skip_ws();
        }
        if (text[pos] != 'L') throw parse_error("expected 'L'", pos);
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') throw parse_error("expected '('", pos);
        ++pos;
        long long n = number();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') throw parse_error("expected ','", pos);
        ++pos;
        long long q = number();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') throw parse_error("expected ')'", pos);
        ++pos;
        LensSpace L{n, q};
        validate(L);
        out.push_back(L);
        skip_ws();
    }
    return out;
}

/// Source expressions for the topology commands: either a generator
/// expression or a lens connected sum.
inline Pairing parse_source(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == 'L') return connected_sum(parse_lens_sum(text));
    return parse_pairing(text);
}

namespace detail {

template <class Gen>
inline void print_run(std::ostringstream& os, bool& first, const Gen& g, long long count,
                      const std::string& body) {
    (void)g;
    if (!first) os << " + ";
    first = false;
    if (count > 1) os << count << "*";
    os << body;
}

}  // namespace detail

inline std::string to_string(const Gen2& g) {
    std::ostringstream os;
    switch (g.kind) {
        case Gen2Kind::Cyclic: os << "A^" << g.level << "(" << g.residue << ")"; break;
        case Gen2Kind::E0: os << "E0^" << g.level; break;
        case Gen2Kind::E1: os << "E1^" << g.level; break;
    }
    return os.str();
}

inline std::string to_string(const GenOdd& g) {
    std::ostringstream os;
    os << "C" << g.p << "^" << g.level << "(" << canonical_unit(g) << ")";
    return os.str();
}

inline std::string to_string(const QGen2& g) {
    std::ostringstream os;
    switch (g.kind) {
        case QGen2Kind::QCyclic: os << "Q^" << g.level << "(" << g.abar << ")"; break;
        case QGen2Kind::QE0: os << "QE0^" << g.level << "[" << g.alpha << "," << g.gamma << "]"; break;
        case QGen2Kind::QE1: os << "QE1^" << g.level << "[" << g.alpha << "," << g.gamma << "]"; break;
    }
    return os.str();
}

namespace detail {

template <class Gen>
inline void print_sorted(std::ostringstream& os, bool& first, const std::vector<Gen>& gens) {
    std::size_t i = 0;
    while (i < gens.size()) {
        std::size_t j = i;
        while (j < gens.size() && gens[j] == gens[i]) ++j;
        print_run(os, first, gens[i], static_cast<long long>(j - i), to_string(gens[i]));
        i = j;
    }
}

}  // namespace detail

inline std::string to_string(const Pairing& x) {
    if (x.two.empty() && x.odd.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    detail::print_sorted(os, first, x.two);
    for (auto& [p, gens] : x.odd) detail::print_sorted(os, first, gens);
    return os.str();
}

inline std::string to_string(const QuadraticForm& q) {
    if (q.two.empty() && q.odd.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    detail::print_sorted(os, first, q.two);
    for (auto& [p, gens] : q.odd) detail::print_sorted(os, first, gens);
    return os.str();
}

}  // namespace linkforms

// Command-line surface for the linking-pairing classification library.
//
// Decision commands exit 0 for "yes" and 1 for "no"; exit 2 is reserved for
// usage, parse and resource errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "linkforms/linkforms.hpp"

namespace {

using namespace linkforms;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::string flavor_name(const Table& t) {
    switch (t.flavor()) {
        case Flavor::Two: return "two";
        case Flavor::Odd: return "odd:" + std::to_string(t.odd_prime());
        case Flavor::Quadratic: return "quadratic";
    }
    return "?";
}

void print_table(const Table& t) {
    std::cout << "flavor " << flavor_name(t) << "\n";
    if (t.empty()) {
        std::cout << "  (all entries trivial)\n";
        return;
    }
    for (auto& [k, e] : t.entries()) {
        std::cout << "  [" << k << "] r=" << e.r << " s=";
        if (t.flavor() == Flavor::Odd)
            std::cout << (z8_to_sign(e.s) == 1 ? "+1" : "-1");
        else
            std::cout << e.s.str();
        std::cout << "\n";
    }
}

int cmd_invariants(const std::string& expr, long long prime, bool as_json) {
    ParsedExpr parsed = parse_expression(expr);
    json out;
    out["tables"] = json::array();
    auto emit = [&](const Table& t, long long p, const std::string& provenance) {
        if (as_json) {
            json j = table_to_json_with_provenance(t, provenance);
            j["prime"] = p;
            out["tables"].push_back(std::move(j));
        } else {
            if (p > 0) std::cout << "prime " << p << ": ";
            print_table(t);
        }
    };
    if (auto* x = std::get_if<Pairing>(&parsed)) {
        std::vector<long long> ps = prime > 0 ? std::vector<long long>{prime} : primes_of(*x);
        if (ps.empty()) ps.push_back(2);
        for (long long p : ps) emit(invariant_table(*x, p), p, "closed-form");
    } else {
        const QuadraticForm& q = std::get<QuadraticForm>(parsed);
        if (prime > 0 && prime != 2) {
            emit(invariant_table(underlying_pairing(q), prime), prime, "closed-form");
        } else {
            emit(quad_invariant_table(q), 2, "oracle");
            if (prime <= 0)
                for (long long p : primes_of(underlying_pairing(q)))
                    if (p != 2) emit(invariant_table(underlying_pairing(q), p), p, "closed-form");
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return kYes;
}

int cmd_iso(const std::string& e1, const std::string& e2) {
    ParsedExpr a = parse_expression(e1), b = parse_expression(e2);
    bool iso;
    if (std::holds_alternative<Pairing>(a) && std::holds_alternative<Pairing>(b))
        iso = is_isomorphic(std::get<Pairing>(a), std::get<Pairing>(b));
    else if (std::holds_alternative<QuadraticForm>(a) && std::holds_alternative<QuadraticForm>(b))
        iso = is_isomorphic(std::get<QuadraticForm>(a), std::get<QuadraticForm>(b));
    else
        throw error("cannot compare a pairing with a quadratic form");
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return iso ? kYes : kNo;
}

int cmd_admissible(const std::string& path, bool explain) {
    Table t = table_from_json(load_json(path));
    AdmissibilityReport rep = check_admissible(t);
    if (explain || !rep.verdict) std::cout << rep.str() << "\n";
    if (rep.verdict && !explain) std::cout << "admissible" << "\n";
    return rep.verdict ? kYes : kNo;
}

int cmd_realize(const std::string& path) {
    Table t = table_from_json(load_json(path));
    try {
        if (t.flavor() == Flavor::Quadratic) {
            std::cout << to_string(realize_quadratic(t)) << "\n";
        } else {
            std::cout << to_string(realize(t)) << "\n";
        }
    } catch (const inadmissible_error& e) {
        std::cout << e.report.str() << "\n";
        return kNo;
    }
    return kYes;
}

int cmd_summand(const std::string& part, const std::string& whole) {
    auto w = orthogonal_summand(parse_source(part), parse_source(whole));
    std::cout << (w ? to_string(*w) : "NONE") << "\n";
    return w ? kYes : kNo;
}

int cmd_quad_summand(const std::string& part, const std::string& whole) {
    auto w = quadratic_summand(parse_quadratic(part), parse_quadratic(whole));
    std::cout << (w ? to_string(*w) : "NONE") << "\n";
    return w ? kYes : kNo;
}

int cmd_lens(const std::string& target, const std::string& source) {
    auto comma = target.find(',');
    if (comma == std::string::npos) throw error("--target expects n,q");
    LensSpace L{std::stoll(target.substr(0, comma)), std::stoll(target.substr(comma + 1))};
    validate(L);
    auto w = degree_one_onto_lens(parse_source(source), L);
    std::cout << (w ? to_string(*w) : "NONE") << "\n";
    return w ? kYes : kNo;
}

int cmd_lens_all(long long pi, const std::string& source) {
    bool ok = onto_all_lens(parse_source(source), pi);
    std::cout << (ok ? "yes" : "no") << "\n";
    return ok ? kYes : kNo;
}

int cmd_spin(const std::string& target, const std::string& source) {
    auto w = spin_degree_one(parse_quadratic(source), parse_quadratic(target));
    std::cout << (w ? to_string(*w) : "NONE") << "\n";
    return w ? kYes : kNo;
}

int cmd_gram(const std::string& path, bool invariants, bool decompose, bool nondeg,
             long long prime, bool as_json) {
    json j = load_json(path);
    GramPairing g = gram_from_json(j);
    if (nondeg) {
        bool ok = nondegenerate(g);
        std::cout << (ok ? "nondegenerate" : "degenerate") << "\n";
        return ok ? kYes : kNo;
    }
    if (!nondegenerate(g)) throw error("gram pairing is degenerate");
    std::vector<long long> ps = prime > 0 ? std::vector<long long>{prime} : primes_of(g);
    if (invariants) {
        json out;
        out["tables"] = json::array();
        for (long long p : ps) {
            Table t = gram_invariant_table(g, p);
            if (as_json) {
                json tj = table_to_json_with_provenance(t, "oracle");
                tj["prime"] = p;
                out["tables"].push_back(std::move(tj));
            } else {
                std::cout << "prime " << p << ": ";
                print_table(t);
            }
        }
        if (as_json) std::cout << out.dump(2) << "\n";
        return kYes;
    }
    if (decompose) {
        Pairing total;
        for (long long p : ps) {
            if (p == 2) {
                total.two = realize(gram_invariant_table(g, 2)).two;
            } else {
                for (const GenOdd& gen : diagonalize_odd(g, p)) total.odd[p].push_back(gen);
            }
        }
        canonicalize(total);
        std::cout << to_string(total) << "\n";
        return kYes;
    }
    throw error("gram: pick one of --invariants, --decompose, --nondegenerate");
}

int cmd_quad_invariants(const std::string& expr, bool as_json) {
    return cmd_invariants(expr, 0, as_json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of linking pairings and quadratic forms"};
    app.require_subcommand(1);

    std::string expr, expr2, file, part, whole, target, source;
    long long prime = 0, pi = 0;
    bool as_json = false, explain = false;
    bool opt_inv = false, opt_dec = false, opt_nondeg = false;

    auto* inv = app.add_subcommand("invariants", "print the invariant table(s) of an expression");
    inv->add_option("expr", expr)->required();
    inv->add_option("--prime", prime);
    inv->add_flag("--json", as_json);

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two expressions");
    iso->add_option("expr1", expr)->required();
    iso->add_option("expr2", expr2)->required();

    auto* adm = app.add_subcommand("admissible", "decide admissibility of a table file");
    adm->add_option("table-file", file)->required();
    adm->add_flag("--explain", explain);

    auto* rea = app.add_subcommand("realize", "realize a table file as a generator sum");
    rea->add_option("table-file", file)->required();

    auto* sum = app.add_subcommand("summand", "find an orthogonal complement of part in whole");
    sum->add_option("--part", part)->required();
    sum->add_option("--whole", whole)->required();

    auto* lens = app.add_subcommand("lens", "degree-one map onto a lens space target");
    lens->add_option("--target", target, "n,q")->required();
    lens->add_option("--source", source, "expression or lens sum L(n,q)#...")->required();

    auto* lensall = app.add_subcommand("lens-all", "degree-one maps onto all lens spaces with pi1 = Z/n");
    lensall->add_option("--pi", pi)->required();
    lensall->add_option("--source", source)->required();

    auto* gram = app.add_subcommand("gram", "oracle-side queries on explicit Gram data");
    gram->add_option("file", file)->required();
    gram->add_flag("--invariants", opt_inv);
    gram->add_flag("--decompose", opt_dec);
    gram->add_flag("--nondegenerate", opt_nondeg);
    gram->add_option("--prime", prime);
    gram->add_flag("--json", as_json);

    auto* quad = app.add_subcommand("quad", "quadratic-flavor commands");
    quad->require_subcommand(1);
    auto* qinv = quad->add_subcommand("invariants", "invariant table of a quadratic expression");
    qinv->add_option("expr", expr)->required();
    qinv->add_flag("--json", as_json);
    auto* qadm = quad->add_subcommand("admissible", "admissibility of a quadratic table file");
    qadm->add_option("table-file", file)->required();
    qadm->add_flag("--explain", explain);
    auto* qrea = quad->add_subcommand("realize", "realize a quadratic table file");
    qrea->add_option("table-file", file)->required();
    auto* qsum = quad->add_subcommand("summand", "quadratic orthogonal complement");
    qsum->add_option("--part", part)->required();
    qsum->add_option("--whole", whole)->required();
    auto* qspin = quad->add_subcommand("spin", "spin-preserving degree-one query");
    qspin->add_option("--target", target, "quadratic expression")->required();
    qspin->add_option("--source", source, "quadratic expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*inv) return cmd_invariants(expr, prime, as_json);
        if (*iso) return cmd_iso(expr, expr2);
        if (*adm) return cmd_admissible(file, explain);
        if (*rea) return cmd_realize(file);
        if (*sum) return cmd_summand(part, whole);
        if (*lens) return cmd_lens(target, source);
        if (*lensall) return cmd_lens_all(pi, source);
        if (*gram) return cmd_gram(file, opt_inv, opt_dec, opt_nondeg, prime, as_json);
        if (*quad) {
            if (*qinv) return cmd_quad_invariants(expr, as_json);
            if (*qadm) return cmd_admissible(file, explain);
            if (*qrea) return cmd_realize(file);
            if (*qsum) return cmd_quad_summand(part, whole);
            if (*qspin) return cmd_spin(target, source);
        }
    } catch (const inadmissible_error& e) {
        std::cout << e.report.str() << "\n";
        return kNo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

#pragma once

#include <json.hpp>

#include "linkforms/parse.hpp"
#include "linkforms/table.hpp"

namespace linkforms {

using json = nlohmann::json;

/// Table files:
///   {"flavor": "two"|"odd:<p>"|"quadratic",
///    "entries": [{"k": int, "r": int, "s": int|"inf"}]}
/// Unsupported indices are omitted; duplicate k is rejected. Odd-flavor
/// signatures are written as +-1.
inline json table_to_json(const Table& t) {
    json j;
    switch (t.flavor()) {
        case Flavor::Two: j["flavor"] = "two"; break;
        case Flavor::Odd: j["flavor"] = "odd:" + std::to_string(t.odd_prime()); break;
        case Flavor::Quadratic: j["flavor"] = "quadratic"; break;
    }
    j["entries"] = json::array();
    for (auto& [k, e] : t.entries()) {
        json row;
        row["k"] = k;
        row["r"] = e.r;
        if (t.flavor() == Flavor::Odd)
            row["s"] = z8_to_sign(e.s);
        else if (e.s.is_inf())
            row["s"] = "inf";
        else
            row["s"] = e.s.value();
        j["entries"].push_back(std::move(row));
    }
    return j;
}

inline Table table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("flavor") || !j.contains("entries"))
        throw error("table file must have 'flavor' and 'entries'");
    std::string flavor = j["flavor"].get<std::string>();
    Table t;
    if (flavor == "two") {
        t = Table::two();
    } else if (flavor == "quadratic") {
        t = Table::quadratic();
    } else if (flavor.rfind("odd:", 0) == 0) {
        long long p = std::stoll(flavor.substr(4));
        if (p == 2 || !is_prime(p)) throw error("odd flavor prime must be an odd prime");
        t = Table::odd(p);
    } else {
        throw error("unknown table flavor: " + flavor);
    }
    std::set<int> seen;
    for (const json& row : j["entries"]) {
        int k = row.at("k").get<int>();
        if (!seen.insert(k).second) throw error("duplicate table index " + std::to_string(k));
        long long r = row.at("r").get<long long>();
        Z8Bar s;
        const json& sv = row.at("s");
        if (sv.is_string()) {
            if (sv.get<std::string>() != "inf") throw error("signature must be an int or \"inf\"");
            s = Z8Bar::inf();
        } else if (t.flavor() == Flavor::Odd) {
            long long v = sv.get<long long>();
            if (v != 1 && v != -1) throw error("odd-flavor signature must be +-1");
            s = sign_to_z8(static_cast<int>(v));
        } else {
            s = Z8Bar(sv.get<long long>());
        }
        if (t.flavor() == Flavor::Odd && s.is_inf())
            throw error("odd-flavor signature must be +-1");
        t.set(k, r, s);
    }
    return t;
}

namespace detail {

inline QZ rational_from_json(const json& v) {
    if (v.is_number_integer()) return QZ(v.get<long long>(), 1);
    if (!v.is_string()) throw error("rationals must be ints or \"p/q\" strings");
    std::string s = v.get<std::string>();
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return QZ(std::stoll(s), 1);
    return QZ(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace detail

/// Gram files:
///   {"orders": [ints], "gram": [[rationals]], "qvals": [rationals]?}
/// Rationals are "p/q" strings (or ints) and are reduced mod 1 on load.
inline GramPairing gram_from_json(const json& j) {
    GramPairing g;
    if (!j.is_object() || !j.contains("orders") || !j.contains("gram"))
        throw error("gram file must have 'orders' and 'gram'");
    for (const json& d : j["orders"]) g.orders.push_back(d.get<long long>());
    for (const json& row : j["gram"]) {
        g.gram.emplace_back();
        for (const json& v : row) g.gram.back().push_back(detail::rational_from_json(v));
    }
    validate(g);
    return g;
}

inline GramQuadratic gram_quadratic_from_json(const json& j) {
    GramQuadratic q;
    q.base = gram_from_json(j);
    if (!j.contains("qvals")) throw error("quadratic gram file must have 'qvals'");
    for (const json& v : j["qvals"]) q.qvals.push_back(detail::rational_from_json(v));
    validate(q);
    return q;
}

inline json gram_to_json(const GramPairing& g) {
    json j;
    j["orders"] = g.orders;
    j["gram"] = json::array();
    for (auto& row : g.gram) {
        json r = json::array();
        for (auto& v : row) r.push_back(v.str());
        j["gram"].push_back(std::move(r));
    }
    return j;
}

/// Table rendering with per-entry provenance of the signature values.
inline json table_to_json_with_provenance(const Table& t, const std::string& provenance) {
    json j = table_to_json(t);
    for (json& row : j["entries"]) row["provenance"] = provenance;
    return j;
}

}  // namespace linkforms

#pragma once

// JSON encodings shared by the command-line tool and the tests.
//
//   group   {"degree": 10, "order": 20, "generators": ["(1 3 5 7 9)(2 4 6 8 10)", ...]}
//   chain   {"theorem": 2, "gamma": group, "gamma1": group, "gamma2": group,
//            "p": 2, "q": 2, "relation": "≡ 1 (mod 2)", "status": "ok", "form": "i5 + i1234 ≡ 1 (mod 2)"}
//
// A chain library file is a JSON object {"ambient": group, "chains": [chain, ...], ...}.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "catalog.hpp"
#include "indsolve.hpp"
#include "library.hpp"
#include "oliver.hpp"

namespace evasive {

using Json = nlohmann::ordered_json;

inline Json to_json(const PermGroup& g) {
    return Json{{"degree", g.degree()}, {"order", g.order()}, {"generators", g.generator_strings()}};
}

inline PermGroup group_from_json(const Json& j) {
    const int degree = j.at("degree").get<int>();
    auto g = closure_of_strings(degree, j.at("generators").get<std::vector<std::string>>());
    if (j.contains("order") && j.at("order").get<std::size_t>() != g.order())
        throw PermError("group order " + std::to_string(g.order()) + " does not match the recorded order " +
                        std::to_string(j.at("order").get<std::size_t>()));
    return g;
}

inline std::string relation_string(const Relation& r) {
    if (r.is_congruence()) return "≡ " + std::to_string(r.rhs) + " (mod " + std::to_string(r.modulus) + ")";
    return "= " + std::to_string(r.rhs);
}

inline Json prime_json(const PrimePower& p) {
    if (p.any_prime()) return "any";
    return p.prime;
}

inline Json to_json(const ChainRecord& rec) {
    const auto& c = rec.chain;
    Json j{{"theorem", c.theorem}, {"gamma", to_json(*c.gamma)}, {"gamma1", to_json(*c.gamma1)}};
    if (c.gamma2) j["gamma2"] = to_json(*c.gamma2);
    j["p"] = prime_json(c.p);
    if (c.q) j["q"] = prime_json(*c.q);
    j["relation"] = relation_string(c.relation);
    j["status"] = to_string(rec.status);
    if (rec.form) j["form"] = rec.form->to_string();
    return j;
}

// Re-verifies the hypotheses while reading, so a library file cannot smuggle
// in an invalid chain.
inline OliverChain chain_from_json(const Json& j) {
    const auto g = group_from_json(j.at("gamma"));
    const auto g1 = group_from_json(j.at("gamma1"));
    if (j.at("theorem").get<int>() == 1) return verify_thm1(g1, g);
    return verify_thm2(group_from_json(j.at("gamma2")), g1, g);
}

inline Json to_json(const Catalog& cat) {
    Json classes = Json::array();
    for (const auto& c : cat.classes()) {
        const auto degs = c.representative.degrees();
        classes.push_back({{"id", c.id},
                           {"members", c.members},
                           {"edges", c.edge_count()},
                           {"degree", degs.empty() ? 0 : degs.front()},
                           {"bits", c.representative.to_bitstring()}});
    }
    return Json{{"vertices", cat.vertex_count()}, {"count", cat.classes().size()}, {"classes", classes}};
}

inline Json to_json(const InclusionPoset& P) {
    Json leq = Json::array(), hasse = Json::array();
    for (std::size_t a = 0; a < P.classes.size(); ++a)
        for (std::size_t b = 0; b < P.classes.size(); ++b)
            if (a != b && P.leq[a][b]) leq.push_back({P.classes[a], P.classes[b]});
    for (const auto& [a, b] : P.hasse) hasse.push_back({P.classes[a], P.classes[b]});
    return Json{{"classes", P.classes}, {"less", leq}, {"hasse", hasse}};
}

inline Json to_json(const SolutionTable& t) {
    Json cols = Json::array();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        Json values = Json::object();
        for (std::size_t r = 0; r < t.rows.size(); ++r) values["i" + t.rows[r]] = t.columns[c].values[r];
        cols.push_back({{"label", t.labels[c]}, {"values", values}});
    }
    return Json{{"rows", t.rows}, {"columns", cols}};
}

}  // namespace evasive

#pragma once

// Lemma definitions loaded from data and their mechanical verification:
// group orders, homomorphisms and kernels, the Oliver chain, edge orbits
// and the Euler form compared with the printed equation.
//
// A lemma file looks like
//
//   {"degree": 10, "lemmas": [
//     {"name": "T6", "theorem": 1,
//      "gamma": ["(2 4 6 8 10)", "(1 6)(2 7)(3 8)(4 9)(5 10)"],
//      "hom": {"modulus": 10, "images": [4, 5]},
//      "kernel": ["(1 3 5 7 9)(2 10 8 6 4)"],
//      "expected": {"kernel_order": 5, "p": 5, "quotient": 10},
//      "orbits": ["135", "2", "4"],
//      "assumes": "T24",
//      "form": "2i2 - i24 + i135 - 2i1235 = 1"}]}
//
// "kernel" lists printed generators of G1. With "hom" present, G1 is the
// computed kernel and the printed list is only compared against it.
// Theorem-2 lemmas add "hom2" (images of the printed kernel generators)
// and "kernel2". "assumes" names a lemma whose conclusion is substituted
// before comparing forms; "conclusion" lists values the lemma's form
// forces together with monotonicity.

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "indsolve.hpp"
#include "oliver.hpp"
#include "orbits.hpp"

namespace evasive {

struct LemmaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HomSpec {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> images;
};

struct LemmaSpec {
    std::string name;
    int theorem = 1;
    int degree = 10;
    std::vector<std::string> gamma;
    std::optional<HomSpec> hom;
    std::vector<std::string> kernel;
    std::optional<HomSpec> hom2;
    std::vector<std::string> kernel2;
    std::map<std::string, std::int64_t> expected;
    std::vector<std::string> orbits;  // printed orbit graphs, as member names
    std::optional<std::string> assumes;
    LinearForm form;
    std::map<ClassId, int> conclusion;
};

struct LemmaFile {
    int degree = 10;
    std::vector<LemmaSpec> lemmas;

    const LemmaSpec& at(const std::string& name) const {
        for (const auto& l : lemmas)
            if (l.name == name) return l;
        throw LemmaError("no lemma named " + name);
    }
};

inline LemmaFile parse_lemma_file(const nlohmann::json& j) {
    LemmaFile f;
    f.degree = j.value("degree", 10);
    auto hom_of = [](const nlohmann::json& h) {
        return HomSpec{h.at("modulus").get<std::uint64_t>(), h.at("images").get<std::vector<std::uint64_t>>()};
    };
    for (const auto& l : j.at("lemmas")) {
        LemmaSpec s;
        s.name = l.at("name").get<std::string>();
        s.theorem = l.at("theorem").get<int>();
        if (s.theorem != 1 && s.theorem != 2) throw LemmaError(s.name + ": theorem must be 1 or 2");
        s.degree = l.value("degree", f.degree);
        s.gamma = l.at("gamma").get<std::vector<std::string>>();
        if (l.contains("hom")) s.hom = hom_of(l.at("hom"));
        s.kernel = l.at("kernel").get<std::vector<std::string>>();
        if (s.theorem == 2) {
            s.hom2 = hom_of(l.at("hom2"));
            s.kernel2 = l.at("kernel2").get<std::vector<std::string>>();
        }
        if (l.contains("expected")) s.expected = l.at("expected").get<std::map<std::string, std::int64_t>>();
        s.orbits = l.value("orbits", std::vector<std::string>{});
        if (l.contains("assumes")) s.assumes = l.at("assumes").get<std::string>();
        s.form = parse_form(l.at("form").get<std::string>());
        if (l.contains("conclusion")) s.conclusion = l.at("conclusion").get<std::map<ClassId, int>>();
        f.lemmas.push_back(std::move(s));
    }
    return f;
}

inline LemmaFile load_lemma_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LemmaError("cannot open lemma file " + path);
    return parse_lemma_file(nlohmann::json::parse(in));
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct LemmaReport {
    std::string name;
    std::vector<Check> checks;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
    std::optional<OliverChain> chain;
    std::optional<EulerExpansion> expansion;
    std::optional<LinearForm> generated;  // as computed, forced values substituted
    std::optional<LinearForm> compared;   // after substituting the assumed conclusion
    std::map<ClassId, int> conclusion;    // derived, when the lemma lists one

    bool pass() const {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

// Variables whose value is the same in every solution of `sys`.
inline std::map<ClassId, int> implied_values(const ConstraintSystem& sys, const std::vector<ClassId>& among) {
    const auto sols = enumerate_solutions(sys);
    std::map<ClassId, int> out;
    if (sols.empty()) return out;
    for (const auto& v : among) {
        const int x = sols.front().at(v);
        if (std::all_of(sols.begin(), sols.end(), [&](const auto& s) { return s.at(v) == x; })) out[v] = x;
    }
    return out;
}

namespace detail {

inline std::string order_text(std::size_t n) {
    auto pp = prime_power(n);
    if (!pp || pp->any_prime() || pp->exponent == 1) return std::to_string(n);
    return std::to_string(n) + " = " + std::to_string(pp->prime) + "^" + std::to_string(pp->exponent);
}

inline void expect(LemmaReport& r, const LemmaSpec& s, const std::string& key, std::int64_t actual,
                   const std::string& what) {
    auto it = s.expected.find(key);
    if (it == s.expected.end()) {
        r.notes.push_back(what + " " + std::to_string(actual));
        return;
    }
    r.checks.push_back({what, it->second == actual,
                        "expected " + std::to_string(it->second) + ", computed " + std::to_string(actual)});
}

// G1 = kernel of the homomorphism when one is given, else the closure of
// the printed generators. A printed list that closes to a different group
// is a warning.
inline std::optional<PermGroup> kernel_step(LemmaReport& r, const PermGroup& source, const std::optional<HomSpec>& hom,
                                            const std::vector<std::string>& printed, const std::string& label) {
    const PermGroup printed_group = closure_of_strings(source.degree(), printed);
    if (!hom) return printed_group;
    try {
        const auto h = make_hom(source, hom->modulus, hom->images, true);
        r.checks.push_back({label + " homomorphism", true, "onto Z_" + std::to_string(hom->modulus)});
        PermGroup k = kernel(h);
        if (k != printed_group)
            r.warnings.push_back("printed generators of " + label + " kernel close to a group of order " +
                                 std::to_string(printed_group.order()) + "; the computed kernel has order " +
                                 std::to_string(k.order()) + " and is used");
        return k;
    } catch (const HomError& e) {
        r.checks.push_back({label + " homomorphism", false, e.what()});
        return std::nullopt;
    }
}

}  // namespace detail

inline LemmaReport run_lemma(const LemmaSpec& s, const Catalog& cat, const InclusionPoset& poset,
                             const std::map<std::string, std::map<ClassId, int>>& conclusions = {}) {
    LemmaReport r;
    r.name = s.name;
    if (s.degree != cat.vertex_count()) throw LemmaError(s.name + ": degree does not match the catalog");

    const PermGroup G = closure_of_strings(s.degree, s.gamma);
    detail::expect(r, s, "gamma_order", static_cast<std::int64_t>(G.order()), "order of G");

    auto G1 = detail::kernel_step(r, G, s.hom, s.kernel, "G -> Z_m");
    if (!G1) return r;
    detail::expect(r, s, "kernel_order", static_cast<std::int64_t>(G1->order()), "order of G1");

    try {
        if (s.theorem == 1) {
            r.chain = verify_thm1(*G1, G);
            r.notes.push_back("G/G1 cyclic of order " + std::to_string(G.order() / G1->order()) + ", |G1| = " +
                              detail::order_text(G1->order()));
            detail::expect(r, s, "quotient", static_cast<std::int64_t>(G.order() / G1->order()), "order of G/G1");
        } else {
            // hom2 images refer to the printed kernel generators
            const PermGroup printed1 = closure_of_strings(s.degree, s.kernel);
            if (printed1 != *G1) {
                r.checks.push_back({"G1 -> Z_m domain", false, "printed kernel differs from the computed kernel"});
                return r;
            }
            auto G2 = detail::kernel_step(r, printed1, s.hom2, s.kernel2, "G1 -> Z_m");
            if (!G2) return r;
            detail::expect(r, s, "kernel2_order", static_cast<std::int64_t>(G2->order()), "order of G2");
            r.chain = verify_thm2(*G2, *G1, G);
            r.notes.push_back("G/G1 has order " + detail::order_text(G.order() / G1->order()) + ", so q = " +
                              std::to_string(r.chain->q->prime));
            r.notes.push_back("G1/G2 cyclic of order " + std::to_string(G1->order() / G2->order()) + ", |G2| = " +
                              detail::order_text(G2->order()));
            detail::expect(r, s, "quotient", static_cast<std::int64_t>(G1->order() / G2->order()), "order of G1/G2");
            if (s.expected.count("q"))
                detail::expect(r, s, "q", static_cast<std::int64_t>(r.chain->q->prime), "prime q");
        }
        r.checks.push_back({"chain hypotheses", true, "Theorem " + std::to_string(s.theorem)});
        if (s.expected.count("p") && !r.chain->p.any_prime())
            detail::expect(r, s, "p", static_cast<std::int64_t>(r.chain->p.prime), "prime p");
    } catch (const ChainError& e) {
        r.checks.push_back({"chain hypotheses", false, e.what()});
        return r;
    }

    // orbit classes as a multiset, printed graphs mapped to their classes
    const OrbitSet os = edge_orbits(G, &cat);
    std::vector<ClassId> got, want;
    std::vector<std::string> literal;
    for (std::size_t k = 0; k < os.orbits.size(); ++k) {
        got.push_back(os.orbit_class(k).value_or("?"));
        literal.push_back(literal_circulant_name(os.orbits[k]).value_or("not a circulant on 1..n"));
    }
    for (const auto& m : s.orbits) want.push_back(cat.class_of_member(m).value_or("?" + m));
    std::sort(got.begin(), got.end(), ClassIdLess{});
    std::sort(want.begin(), want.end(), ClassIdLess{});
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (const auto& x : v) out += (out.empty() ? "" : ", ") + x;
        return "{" + out + "}";
    };
    r.checks.push_back({"orbit classes", got == want, "printed " + join(want) + ", computed " + join(got)});
    {
        auto printed = s.orbits, computed = literal;
        std::sort(printed.begin(), printed.end());
        std::sort(computed.begin(), computed.end());
        if (!s.orbits.empty() && printed != computed)
            r.warnings.push_back("orbit graphs are " + join(literal) + ", printed " + join(s.orbits));
    }

    try {
        r.expansion = euler_form(G, cat, r.chain->relation);
    } catch (const OrbitError& e) {
        r.checks.push_back({"euler form", false, e.what()});
        return r;
    }
    r.generated = r.expansion->form;
    std::map<ClassId, int> assumed;
    if (s.assumes) {
        auto it = conclusions.find(*s.assumes);
        if (it == conclusions.end()) throw LemmaError(s.name + " assumes " + *s.assumes + ", which has not been run");
        assumed = it->second;
    }
    r.compared = r.generated->substitute(assumed);
    const LinearForm printed = s.form.substitute(forced_values()).substitute(assumed);
    r.checks.push_back({"euler form", equivalent(*r.compared, printed),
                        "printed " + printed.to_string() + ", computed " + r.compared->to_string()});

    if (!s.conclusion.empty()) {
        std::vector<ClassId> vars;
        for (const auto& [id, a] : r.generated->coefficients()) vars.push_back(id);
        const auto sys = ConstraintSystem::build(cat, poset, {*r.generated});
        r.conclusion = implied_values(sys, vars);
        std::string got_text;
        for (const auto& [id, v] : r.conclusion) got_text += (got_text.empty() ? "i" : ", i") + id + "=" + std::to_string(v);
        r.checks.push_back({"conclusion", r.conclusion == s.conclusion, "forced " + (got_text.empty() ? "nothing" : got_text)});
    }
    return r;
}

// Runs lemmas in file order so that "assumes" can refer to earlier ones.
inline std::vector<LemmaReport> run_lemmas(const LemmaFile& file, const Catalog& cat, const InclusionPoset& poset) {
    std::vector<LemmaReport> out;
    std::map<std::string, std::map<ClassId, int>> conclusions;
    for (const auto& s : file.lemmas) {
        out.push_back(run_lemma(s, cat, poset, conclusions));
        conclusions[s.name] = out.back().conclusion;
    }
    return out;
}

// The lemma constraints as computed, one per lemma whose chain and form
// were obtained.
inline std::vector<LinearForm> computed_forms(const std::vector<LemmaReport>& reports) {
    std::vector<LinearForm> out;
    for (const auto& r : reports)
        if (r.generated) out.push_back(*r.generated);
    return out;
}

// The lemma constraints exactly as printed in the lemma file.
inline std::vector<LinearForm> printed_forms(const LemmaFile& file) {
    std::vector<LinearForm> out;
    for (const auto& s : file.lemmas) out.push_back(s.form);
    return out;
}

}  // namespace evasive

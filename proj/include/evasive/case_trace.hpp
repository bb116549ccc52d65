#pragma once

// Mechanical replay of the case split behind the six-column table:
//
//   Case 1    i2 = 0                   -> A
//   Case 2    i1235 = 1                -> A*
//   Case 3    i2 = 1, i1235 = 0
//   Case 3.1    i13 = 1, i245 = 0      -> infeasible
//   Case 3.2    i13 = 0, i245 = 1      -> B, B*, C, C*
//
// Every claimed implication is checked against the whole constraint
// system: a value is implied when fixing the opposite value leaves no
// solution. Residual equations are recomputed by substituting the facts
// established so far and compared with the claimed ones up to scaling.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "indsolve.hpp"

namespace evasive {

enum class StepStatus { confirmed, differs, refuted };

inline std::string to_string(StepStatus s) {
    switch (s) {
        case StepStatus::confirmed: return "confirmed";
        case StepStatus::differs: return "differs";
        case StepStatus::refuted: return "refuted";
    }
    return "?";
}

struct TraceStep {
    std::string claim;
    StepStatus status = StepStatus::confirmed;
    std::string detail;
};

struct TraceCase {
    std::string name;
    std::string assumption;
    std::vector<TraceStep> steps;
    bool has_outcome = true;
    std::set<std::string> expected;  // column labels; empty means infeasible
    std::set<std::string> obtained;  // unlabelled solutions appear as "?k"
    bool outcome_ok() const { return !has_outcome || expected == obtained; }
};

struct CaseTrace {
    std::vector<TraceCase> cases;
    bool pass() const {
        return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.outcome_ok(); });
    }
};

namespace detail {

class Tracer {
public:
    Tracer(const Catalog& cat, const InclusionPoset& poset, const std::map<std::string, LinearForm>& lemmas,
           const SolutionTable& expected)
        : cat_(cat), poset_(poset), lemmas_(lemmas), expected_(expected) {
        std::vector<LinearForm> forms;
        for (const auto& [name, f] : lemmas) forms.push_back(f);
        sys_ = ConstraintSystem::build(cat, poset, forms);
    }

    CaseTrace run() {
        CaseTrace t;
        const Facts& t24 = t24_;

        // Case 1
        {
            TraceCase c{"Case 1", "i2 = 0", {}, true, {"A"}, {}};
            auto known = with(t24, {{"2", 0}});
            std::set<ClassId> open;
            const auto mono = ConstraintSystem::build(cat_, poset_, {});
            const auto pr = propagate(mono, known);
            for (std::size_t v = 0; v < pr.values.size(); ++v)
                if (pr.values[v] < 0) open.insert(mono.variables()[v]);
            const std::set<ClassId> claimed{"1", "13", "15", "135"};
            c.steps.push_back({"by monotonicity the only undetermined indicators are i1, i13, i15, i135",
                               open == claimed ? StepStatus::confirmed : StepStatus::refuted,
                               "undetermined: " + names(open)});
            implies(c, known, {{"135", 1}}, "T18 gives i135 = 1");
            implies(c, known, {{"1", 1}, {"15", 1}, {"13", 1}}, "i1 >= i15 >= i13 >= i135 forces i1 = i15 = i13 = 1");
            implies(c, known, {{"P", 0}, {"Pbar", 0}}, "i2 = 0 forces iP = iPbar = 0");
            c.obtained = outcome(known);
            t.cases.push_back(std::move(c));
        }
        // Case 2
        {
            TraceCase c{"Case 2", "i1235 = 1", {}, true, {"A*"}, {}};
            auto known = with(t24, {{"1235", 1}});
            auto s1 = enumerate_solutions(fixed(with(t24, {{"2", 0}})));
            auto s2 = enumerate_solutions(fixed(known));
            std::vector<IndicatorAssignment> d;
            for (const auto& s : s1) d.push_back(dual(s, cat_));
            std::sort(d.begin(), d.end());
            c.steps.push_back({"dual to Case 1", d == s2 ? StepStatus::confirmed : StepStatus::refuted,
                               "dual of the Case 1 solutions " + std::string(d == s2 ? "equals" : "differs from") +
                                   " the Case 2 solutions"});
            c.obtained = outcome(known);
            t.cases.push_back(std::move(c));
        }
        // Case 3
        auto known3 = with(t24, {{"2", 1}, {"1235", 0}});
        {
            TraceCase c{"Case 3", "i2 = 1, i1235 = 0", {}, false, {}, {}};
            residual(c, "T6", known3, "-i24 + i135 = -1");
            implies(c, known3, {{"24", 1}, {"135", 0}}, "hence i24 = 1 and i135 = 0");
            residual(c, "T4", known3, "i13 - 2i25 - 2i123 + i245 = -1");
            implies(c, known3, {{"123", 0}}, "i123 = 0");
            implies(c, known3, {{"25", 1}}, "i25 = 1");
            {
                const bool ok = enumerate_solutions(fixed(known3).with(parse_form("i13 + i245 = 0"))).empty() &&
                                enumerate_solutions(fixed(known3).with(parse_form("i13 + i245 = 2"))).empty();
                c.steps.push_back({"i13 + i245 = 1", ok ? StepStatus::confirmed : StepStatus::refuted,
                                   ok ? "no solution has i13 + i245 != 1" : "a solution with i13 + i245 != 1 exists"});
            }
            implies(c, known3, {{"1", 1}, {"1245", 0}}, "i1 = 1 and i1245 = 0");
            t.cases.push_back(std::move(c));
        }
        // Case 3.1
        {
            TraceCase c{"Case 3.1", "i13 = 1, i245 = 0", {}, true, {}, {}};
            auto known = with(known3, {{"13", 1}, {"245", 0}});
            implies(c, known, {{"15", 1}, {"124", 0}}, "subgraph inclusion gives i15 = 1 and i124 = 0");
            lemma_equals(c, "T8", "i14 = i145");
            residual(c, "T1", known, "-2i12 + 2i124 = 2", {"145", "14"});
            c.obtained = outcome(known);
            c.steps.push_back({"infeasible", c.obtained.empty() ? StepStatus::confirmed : StepStatus::refuted,
                               std::to_string(c.obtained.size()) + " solution(s)"});
            t.cases.push_back(std::move(c));
        }
        // Case 3.2
        {
            TraceCase c{"Case 3.2", "i13 = 0, i245 = 1", {}, true, {"B", "B*", "C", "C*"}, {}};
            auto known = with(known3, {{"13", 0}, {"245", 1}});
            lemma_equals(c, "T8", "i14 = i145");
            residual(c, "T1", known, "i12 + i15 - i124 - i125 = 1", {"145", "14"});
            implies(c, known, {{"P", 1}}, "iP >= i245 = 1");
            implies(c, known, {{"Pbar", 0}}, "iPbar <= i13 = 0");
            c.obtained = outcome(known);
            t.cases.push_back(std::move(c));
        }
        return t;
    }

private:
    using Facts = std::map<ClassId, int>;

    static Facts with(Facts a, const Facts& b) {
        for (const auto& [k, v] : b) a[k] = v;
        return a;
    }

    static std::string names(const std::set<ClassId>& ids) {
        std::vector<ClassId> v(ids.begin(), ids.end());
        std::sort(v.begin(), v.end(), ClassIdLess{});
        std::string s;
        for (const auto& id : v) s += (s.empty() ? "i" : ", i") + id;
        return s.empty() ? "none" : s;
    }

    ConstraintSystem fixed(const Facts& facts) const {
        std::vector<LinearForm> extra;
        for (const auto& [id, v] : facts) extra.push_back(LinearForm({{id, 1}}, Relation::equals(v)));
        return sys_.with(extra);
    }

    // Each fact is checked alone; confirmed facts join `known`.
    void implies(TraceCase& c, Facts& known, const Facts& claim, const std::string& text) {
        std::vector<std::string> bad;
        for (const auto& [id, v] : claim)
            if (!enumerate_solutions(fixed(with(known, {{id, 1 - v}}))).empty()) bad.push_back("i" + id + " = " + std::to_string(1 - v));
        if (bad.empty()) {
            known = with(known, claim);
            c.steps.push_back({text, StepStatus::confirmed, "implied by the system"});
            return;
        }
        std::string d;
        for (const auto& b : bad) d += (d.empty() ? "" : "; ") + b + " is still feasible";
        c.steps.push_back({text, StepStatus::refuted, d});
    }

    const LinearForm* lemma(TraceCase& c, const std::string& name) {
        auto it = lemmas_.find(name);
        if (it != lemmas_.end()) return &it->second;
        c.steps.push_back({"uses " + name, StepStatus::refuted, name + " is not part of the system"});
        return nullptr;
    }

    void lemma_equals(TraceCase& c, const std::string& name, const std::string& claim) {
        const auto* f = lemma(c, name);
        if (!f) return;
        const auto g = f->substitute(forced_values()).substitute(t24_);
        const bool same = equivalent(g, parse_form(claim));
        c.steps.push_back({name + " reads " + claim, same ? StepStatus::confirmed : StepStatus::differs, g.to_string()});
    }

    void residual(TraceCase& c, const std::string& name, const Facts& known, const std::string& claim,
                  std::pair<ClassId, ClassId> merge = {}) {
        const auto* f = lemma(c, name);
        if (!f) return;
        LinearForm g = f->substitute(forced_values());
        if (!merge.first.empty()) g = g.merge_variable(merge.first, merge.second);
        g = g.substitute(known);
        const bool same = equivalent(g, parse_form(claim));
        c.steps.push_back({name + " becomes " + claim, same ? StepStatus::confirmed : StepStatus::differs,
                           "recomputed: " + g.to_string()});
    }

    std::set<std::string> outcome(const Facts& known) const {
        const auto sols = enumerate_solutions(fixed(known));
        const auto labels = label_solutions(sols, expected_);
        std::set<std::string> out;
        std::size_t unnamed = 0;
        for (const auto& l : labels) out.insert(l.value_or("?" + std::to_string(++unnamed)));
        return out;
    }

    const Catalog& cat_;
    const InclusionPoset& poset_;
    const std::map<std::string, LinearForm>& lemmas_;
    const SolutionTable& expected_;
    ConstraintSystem sys_;
    const Facts t24_{{"5", 1}, {"1234", 0}};  // conclusion of T24, used throughout
};

}  // namespace detail

// `lemmas` maps lemma names (T24, T1, T4, T6, T8, T18) to their forms;
// the constraint system is those forms plus monotonicity.
inline CaseTrace case_trace(const Catalog& cat, const InclusionPoset& poset,
                            const std::map<std::string, LinearForm>& lemmas, const SolutionTable& expected) {
    return detail::Tracer(cat, poset, lemmas, expected).run();
}

}  // namespace evasive

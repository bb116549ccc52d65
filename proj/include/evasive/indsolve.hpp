#pragma once

// 0/1 indicator systems over catalog classes.
//
// i_G = 1 when G's edge set is a face of the complex. Faces are closed
// under subsets, so G <= G' in the inclusion poset gives i_G >= i_G'. The
// empty and complete graphs are fixed (1 and 0 for nontrivial complexes);
// everything else is a variable constrained by linear forms.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "linear_form.hpp"
#include "orbits.hpp"

namespace evasive {

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndicatorAssignment {
    std::vector<ClassId> variables;
    std::vector<int> values;

    int at(const ClassId& id) const {
        auto it = std::find(variables.begin(), variables.end(), id);
        if (it == variables.end()) throw SolveError("unknown indicator i" + id);
        return values[static_cast<std::size_t>(it - variables.begin())];
    }

    std::map<ClassId, int> as_map() const {
        std::map<ClassId, int> m;
        for (std::size_t k = 0; k < variables.size(); ++k) m[variables[k]] = values[k];
        return m;
    }

    friend bool operator==(const IndicatorAssignment&, const IndicatorAssignment&) = default;
    friend bool operator<(const IndicatorAssignment& a, const IndicatorAssignment& b) { return a.values < b.values; }
};

// Pair (lower, upper) of variable indices with lower <= upper in the poset,
// hence value[upper] <= value[lower].
struct Monotone {
    std::size_t lower, upper;
};

class ConstraintSystem {
public:
    ConstraintSystem() = default;

    // Forms may mention "empty"/"complete"; forced values are substituted.
    static ConstraintSystem build(const Catalog& cat, const InclusionPoset& poset, const std::vector<LinearForm>& forms) {
        ConstraintSystem s;
        s.variables_ = cat.variable_ids();
        for (std::size_t a = 0; a < s.variables_.size(); ++a)
            for (std::size_t b = 0; b < s.variables_.size(); ++b)
                if (a != b && poset.le(s.variables_[a], s.variables_[b])) s.monotone_.push_back({a, b});
        for (const auto& f : forms) s.add(f);
        for (const auto& v : s.variables_) s.edge_counts_.push_back(cat.at(v).edge_count());
        return s;
    }

    ConstraintSystem with(const LinearForm& extra) const {
        ConstraintSystem s = *this;
        s.add(extra);
        return s;
    }

    ConstraintSystem with(const std::vector<LinearForm>& extra) const {
        ConstraintSystem s = *this;
        for (const auto& f : extra) s.add(f);
        return s;
    }

    const std::vector<ClassId>& variables() const { return variables_; }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const std::vector<Monotone>& monotone() const { return monotone_; }
    const std::vector<int>& edge_counts() const { return edge_counts_; }

    std::size_t index_of(const ClassId& id) const {
        auto it = std::find(variables_.begin(), variables_.end(), id);
        if (it == variables_.end()) throw SolveError("unknown indicator i" + id);
        return static_cast<std::size_t>(it - variables_.begin());
    }

    // Direct evaluation of every constraint, independent of any search.
    bool satisfied_by(const IndicatorAssignment& a) const {
        if (a.variables != variables_) throw SolveError("assignment variables do not match the system");
        for (const auto& m : monotone_)
            if (a.values[m.upper] > a.values[m.lower]) return false;
        auto lookup = [&](const ClassId& id) { return static_cast<std::int64_t>(a.values[index_of(id)]); };
        return std::all_of(forms_.begin(), forms_.end(), [&](const auto& f) { return f.satisfied_by(lookup); });
    }

private:
    void add(const LinearForm& f) {
        auto g = f.substitute(forced_values());
        for (const auto& [id, a] : g.coefficients())
            if (std::find(variables_.begin(), variables_.end(), id) == variables_.end())
                throw SolveError("form mentions unknown indicator i" + id + ": " + f.to_string());
        forms_.push_back(std::move(g));
    }

    std::vector<ClassId> variables_;
    std::vector<LinearForm> forms_;
    std::vector<Monotone> monotone_;
    std::vector<int> edge_counts_;
};

namespace detail {

// Tracks partial assignments (-1 = open) and checks feasibility of each
// constraint against the best and worst completions.
class PartialState {
public:
    explicit PartialState(const ConstraintSystem& sys) : sys_(sys) {
        const auto& vars = sys.variables();
        for (const auto& f : sys.forms()) {
            std::vector<std::pair<std::size_t, std::int64_t>> terms;
            for (const auto& [id, a] : f.coefficients()) terms.emplace_back(sys.index_of(id), a);
            terms_.push_back(std::move(terms));
        }
        values_.assign(vars.size(), -1);
        forms_of_.assign(vars.size(), {});
        for (std::size_t k = 0; k < terms_.size(); ++k)
            for (auto [v, a] : terms_[k]) forms_of_[v].push_back(k);
        mono_of_.assign(vars.size(), {});
        for (std::size_t k = 0; k < sys.monotone().size(); ++k) {
            mono_of_[sys.monotone()[k].lower].push_back(k);
            mono_of_[sys.monotone()[k].upper].push_back(k);
        }
    }

    std::vector<int>& values() { return values_; }
    const std::vector<int>& values() const { return values_; }

    bool monotone_ok(std::size_t v) const {
        for (auto k : mono_of_[v]) {
            const auto& m = sys_.monotone()[k];
            if (values_[m.lower] == 0 && values_[m.upper] == 1) return false;
        }
        return true;
    }

    bool form_ok(std::size_t k) const {
        const auto& f = sys_.forms()[k];
        std::int64_t lo = 0, hi = 0;
        bool open = false;
        for (auto [v, a] : terms_[k]) {
            if (values_[v] < 0) {
                open = true;
                (a < 0 ? lo : hi) += a;
            } else {
                lo += a * values_[v];
                hi += a * values_[v];
            }
        }
        if (f.is_congruence()) {
            if (open) return true;
            return mod_floor(lo - f.rhs(), f.relation().modulus) == 0;
        }
        return lo <= f.rhs() && f.rhs() <= hi;
    }

    bool consistent_at(std::size_t v) const {
        if (!monotone_ok(v)) return false;
        return std::all_of(forms_of_[v].begin(), forms_of_[v].end(), [&](auto k) { return form_ok(k); });
    }

    bool all_consistent() const {
        for (std::size_t v = 0; v < values_.size(); ++v)
            if (!monotone_ok(v)) return false;
        for (std::size_t k = 0; k < terms_.size(); ++k)
            if (!form_ok(k)) return false;
        return true;
    }

private:
    const ConstraintSystem& sys_;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> terms_;
    std::vector<int> values_;
    std::vector<std::vector<std::size_t>> forms_of_;
    std::vector<std::vector<std::size_t>> mono_of_;
};

}  // namespace detail

// Depth-first search over variables in a linear extension of the poset
// (by edge count, then canonical order). Results are sorted by value
// vector in canonical variable order.
inline std::vector<IndicatorAssignment> enumerate_solutions(const ConstraintSystem& sys) {
    const std::size_t n = sys.variables().size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return sys.edge_counts()[a] < sys.edge_counts()[b]; });

    detail::PartialState st(sys);
    if (!st.all_consistent()) return {};
    std::vector<IndicatorAssignment> out;
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            out.push_back({sys.variables(), st.values()});
            return;
        }
        const std::size_t v = order[depth];
        for (int val : {0, 1}) {
            st.values()[v] = val;
            if (st.consistent_at(v)) self(self, depth + 1);
        }
        st.values()[v] = -1;
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct PropagationResult {
    bool contradiction = false;
    std::vector<int> values;  // -1 = undetermined
};

// Fixes every variable whose opposite value is refuted by a single
// constraint given the current partial assignment, to a fixpoint.
inline PropagationResult propagate(const ConstraintSystem& sys, const std::map<ClassId, int>& assumptions = {}) {
    detail::PartialState st(sys);
    for (const auto& [id, v] : assumptions) st.values()[sys.index_of(id)] = v;
    PropagationResult r;
    if (!st.all_consistent()) {
        r.contradiction = true;
        r.values = st.values();
        return r;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < st.values().size(); ++v) {
            if (st.values()[v] >= 0) continue;
            bool ok[2];
            for (int val : {0, 1}) {
                st.values()[v] = val;
                ok[val] = st.consistent_at(v);
            }
            st.values()[v] = -1;
            if (!ok[0] && !ok[1]) {
                r.contradiction = true;
                r.values = st.values();
                return r;
            }
            if (ok[0] != ok[1]) {
                st.values()[v] = ok[1] ? 1 : 0;
                changed = true;
            }
        }
    }
    r.values = st.values();
    return r;
}

// value'(c) = 1 - value(class of the complement of c's representative).
inline IndicatorAssignment dual(const IndicatorAssignment& a, const Catalog& cat) {
    IndicatorAssignment d = a;
    for (std::size_t k = 0; k < a.variables.size(); ++k) d.values[k] = 1 - a.at(cat.complement_class(a.variables[k]));
    return d;
}

// Named columns of indicator values, rows in canonical variable order.
struct SolutionTable {
    std::vector<ClassId> rows;
    std::vector<std::string> labels;
    std::vector<IndicatorAssignment> columns;

    std::string to_text() const {
        std::size_t w = 9;
        for (const auto& r : rows) w = std::max(w, r.size() + 1);
        std::ostringstream os;
        os << "indicator";
        for (std::size_t k = 9; k < w; ++k) os << ' ';
        for (const auto& l : labels) os << ' ' << l;
        os << '\n';
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string name = "i" + rows[r];
            os << name;
            for (std::size_t k = name.size(); k < w; ++k) os << ' ';
            for (std::size_t c = 0; c < columns.size(); ++c) {
                os << ' ' << columns[c].values[r];
                for (std::size_t k = 1; k < labels[c].size(); ++k) os << ' ';
            }
            os << '\n';
        }
        return os.str();
    }

    static SolutionTable parse(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        SolutionTable t;
        bool header = false;
        std::vector<std::vector<int>> cols;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string first;
            ls >> first;
            if (!header) {
                if (first != "indicator") throw SolveError("table must start with an 'indicator' header");
                for (std::string l; ls >> l;) t.labels.push_back(l);
                cols.assign(t.labels.size(), {});
                header = true;
                continue;
            }
            if (first.size() < 2 || first[0] != 'i') throw SolveError("bad row name: " + first);
            t.rows.push_back(first.substr(1));
            for (auto& c : cols) {
                int v = -1;
                if (!(ls >> v) || (v != 0 && v != 1)) throw SolveError("bad table entry in row " + first);
                c.push_back(v);
            }
        }
        for (auto& c : cols) t.columns.push_back({t.rows, std::move(c)});
        return t;
    }
};

// Labels each solution by the expected column with identical content.
inline std::vector<std::optional<std::string>> label_solutions(const std::vector<IndicatorAssignment>& solutions,
                                                               const SolutionTable& expected) {
    std::vector<std::optional<std::string>> labels;
    for (const auto& s : solutions) {
        std::optional<std::string> l;
        for (std::size_t c = 0; c < expected.columns.size(); ++c) {
            bool same = expected.rows.size() == s.variables.size();
            for (std::size_t r = 0; same && r < expected.rows.size(); ++r)
                same = s.at(expected.rows[r]) == expected.columns[c].values[r];
            if (same) l = expected.labels[c];
        }
        labels.push_back(l);
    }
    return labels;
}

inline SolutionTable make_table(const std::vector<IndicatorAssignment>& solutions, const SolutionTable* expected) {
    SolutionTable t;
    if (!solutions.empty()) t.rows = solutions.front().variables;
    std::vector<std::optional<std::string>> labels(solutions.size());
    if (expected) labels = label_solutions(solutions, *expected);
    std::vector<std::pair<std::size_t, IndicatorAssignment>> keyed;
    for (std::size_t k = 0; k < solutions.size(); ++k) {
        std::size_t rank = SIZE_MAX;
        if (labels[k] && expected) {
            auto it = std::find(expected->labels.begin(), expected->labels.end(), *labels[k]);
            rank = static_cast<std::size_t>(it - expected->labels.begin());
        }
        keyed.emplace_back(rank, solutions[k]);
    }
    // labelled columns in expected order, unlabelled ones after in solution order
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t unnamed = 0;
    for (auto& [rank, s] : keyed) {
        t.labels.push_back(rank == SIZE_MAX ? "?" + std::to_string(++unnamed) : expected->labels[rank]);
        t.columns.push_back(std::move(s));
    }
    return t;
}

}  // namespace evasive

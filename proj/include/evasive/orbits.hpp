#pragma once

// Induced group actions on vertex pairs, edge orbits (the minimal
// invariant graphs) and the Euler characteristic of the fixed-point
// complex as a linear form in catalog indicators.
//
// The fixed-point complex has the orbits as vertices; a set S of orbits is
// a face iff the union graph of S has the property. So its Euler
// characteristic is sum over nonempty S of (-1)^(|S|+1) * i_{union S}.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "linear_form.hpp"
#include "perm.hpp"

namespace evasive {

struct OrbitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t max_orbits_for_expansion = 16;

// Permutation of pair indices induced by a vertex permutation.
inline std::vector<int> induced_edge_permutation(const Permutation& p) {
    const int n = p.degree();
    std::vector<int> e(static_cast<std::size_t>(Graph::pair_count(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e[static_cast<std::size_t>(Graph::edge_index(n, i, j))] = Graph::edge_index(n, p(i), p(j));
    return e;
}

struct EdgeAction {
    PermGroup group;
    std::vector<std::vector<int>> edge_perms;  // parallel to group.elements()

    explicit EdgeAction(PermGroup g) : group(std::move(g)) {
        if (group.degree() > max_graph_vertices) throw OrbitError("edge action needs degree <= 11");
        for (const auto& e : group.elements()) edge_perms.push_back(induced_edge_permutation(e));
    }
};

struct OrbitSet {
    int n = 0;
    std::vector<Graph> orbits;                         // ordered by smallest pair index
    std::vector<std::optional<ClassId>> subset_class;  // by subset bitmask; [0] unused

    Graph union_of(std::uint32_t subset) const {
        std::uint64_t m = 0;
        for (std::size_t k = 0; k < orbits.size(); ++k)
            if (subset >> k & 1u) m |= orbits[k].mask();
        return Graph::from_mask(n, m);
    }
    std::optional<ClassId> orbit_class(std::size_t k) const { return subset_class[std::size_t{1} << k]; }
};

// Orbits of the induced action on vertex pairs. Unions of orbit subsets are
// identified against the catalog when one is supplied and the orbit count
// is small enough for subset enumeration.
inline OrbitSet edge_orbits(const PermGroup& group, const Catalog* catalog = nullptr) {
    const int n = group.degree();
    if (n > max_graph_vertices) throw OrbitError("edge orbits need degree <= 11");
    const int m = Graph::pair_count(n);
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& g : group.generators()) {
        const auto e = induced_edge_permutation(g);
        for (int k = 0; k < m; ++k) {
            const int a = find(k), b = find(e[static_cast<std::size_t>(k)]);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    OrbitSet os;
    os.n = n;
    std::map<int, std::uint64_t> by_root;  // roots are orbit minima
    for (int k = 0; k < m; ++k) by_root[find(k)] |= 1ull << k;
    for (const auto& [root, mask] : by_root) os.orbits.push_back(Graph::from_mask(n, mask));

    if (catalog && os.orbits.size() <= max_orbits_for_expansion) {
        const std::uint32_t subsets = 1u << os.orbits.size();
        os.subset_class.assign(subsets, std::nullopt);
        for (std::uint32_t s = 1; s < subsets; ++s) os.subset_class[s] = catalog->identify(os.union_of(s));
    }
    return os;
}

// Connection-set name when the graph is literally a circulant G_D on
// vertices 1..n (same labels), e.g. "1234".
inline std::optional<std::string> literal_circulant_name(const Graph& g) {
    const int n = g.vertex_count();
    std::set<int> d;
    for (int k = 1; 2 * k <= n; ++k)
        if (g.has_edge(0, k)) d.insert(k);
    if (circulant(n, d) != g) return std::nullopt;
    if (d.empty()) return std::string("empty");
    return connection_set_name(d);
}

inline std::map<ClassId, int> forced_values() { return {{"empty", 1}, {"complete", 0}}; }

struct RawTerm {
    std::uint32_t subset = 0;
    int sign = 0;
    ClassId class_id;
    std::optional<std::string> literal;  // circulant name of the union, if literal
};

struct EulerExpansion {
    OrbitSet orbits;
    std::vector<RawTerm> raw;  // one term per nonempty orbit subset, by subset size then mask
    LinearForm form;           // merged by class, forced values substituted
    bool degenerate = false;
};

// `identify` maps a graph to its catalog class (or nullopt); callers that
// expand many groups can pass a memoizing wrapper around Catalog::identify.
// Subsets are visited by size, so a group is rejected at its first
// unidentifiable union.
template <class Identify>
EulerExpansion euler_form_with(const PermGroup& group, Identify&& identify, Relation relation) {
    EulerExpansion ex;
    ex.orbits = edge_orbits(group);
    const std::size_t k = ex.orbits.orbits.size();
    if (k > max_orbits_for_expansion)
        throw OrbitError(std::to_string(k) + " edge orbits; subset expansion is limited to " +
                         std::to_string(max_orbits_for_expansion));

    std::vector<std::uint32_t> subsets(std::size_t{1} << k);
    std::iota(subsets.begin(), subsets.end(), 0u);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });

    ex.orbits.subset_class.assign(subsets.size(), std::nullopt);
    LinearForm::Coefficients coeffs;
    for (auto s : subsets) {
        if (s == 0) continue;
        const Graph u = ex.orbits.union_of(s);
        std::optional<ClassId> cls = identify(u);
        if (!cls) throw OrbitError("orbit union " + u.to_bitstring() + " is not a catalog graph");
        const int sign = std::popcount(s) % 2 == 1 ? 1 : -1;
        ex.orbits.subset_class[s] = cls;
        ex.raw.push_back({s, sign, *cls, literal_circulant_name(u)});
        coeffs[*cls] += sign;
    }
    ex.form = LinearForm(std::move(coeffs), relation).substitute(forced_values());
    ex.degenerate = ex.form.is_degenerate();
    return ex;
}

inline EulerExpansion euler_form(const PermGroup& group, const Catalog& catalog, Relation relation) {
    if (group.degree() != catalog.vertex_count()) throw OrbitError("group degree does not match catalog");
    return euler_form_with(group, [&](const Graph& g) { return catalog.identify(g); }, relation);
}

// Raw expansion with literal circulant names where available, for audit.
inline std::string raw_expansion_string(const EulerExpansion& ex) {
    std::string s;
    for (const auto& t : ex.raw) {
        s += s.empty() ? (t.sign < 0 ? "-" : "") : (t.sign < 0 ? " - " : " + ");
        s += "i" + t.literal.value_or(t.class_id);
    }
    return s;
}

}  // namespace evasive

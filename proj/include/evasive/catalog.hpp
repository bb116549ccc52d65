#pragma once

// Catalog of vertex-transitive graphs (as isomorphism classes) and the
// inclusion poset "a <= b iff a's representative embeds in b's".
//
// n = 10: the 18 classes of nonempty proper circulants G_D, D a subset of
// {1,..,5}, the Petersen graph and its complement, plus the empty and the
// complete graph (22 classes). n = 5: empty, the 5-cycle class, K5.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "class_id.hpp"
#include "graph.hpp"

namespace evasive {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogClass {
    ClassId id;
    Graph representative;
    std::vector<std::string> members;  // connection-set names, or "P"/"Pbar"/"empty"

    int edge_count() const { return representative.edge_count(); }
    int degree() const { return representative.degrees().front(); }
};

class Catalog {
public:
    Catalog() = default;
    Catalog(int n, std::vector<CatalogClass> classes) : n_(n), classes_(std::move(classes)) {
        std::sort(classes_.begin(), classes_.end(),
                  [](const auto& a, const auto& b) { return ClassIdLess{}(a.id, b.id); });
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            index_[classes_[i].id] = i;
            for (const auto& m : classes_[i].members) member_class_[m] = classes_[i].id;
            degrees_.push_back(classes_[i].representative.degree_multiset());
        }
    }

    int vertex_count() const { return n_; }
    const std::vector<CatalogClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }

    bool contains(const ClassId& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const ClassId& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw CatalogError("unknown class id: " + id);
        return it->second;
    }
    const CatalogClass& at(const ClassId& id) const { return classes_[index_of(id)]; }

    // Class containing a member name such as "134" (G_{1,3,4}) or "P".
    std::optional<ClassId> class_of_member(const std::string& member) const {
        auto it = member_class_.find(member);
        if (it == member_class_.end()) return std::nullopt;
        return it->second;
    }

    // Ids of the classes that carry indicator variables (all but empty/complete).
    std::vector<ClassId> variable_ids() const {
        std::vector<ClassId> v;
        for (const auto& c : classes_)
            if (c.id != "empty" && c.id != "complete") v.push_back(c.id);
        return v;
    }

    std::optional<ClassId> identify(const Graph& g) const {
        if (g.vertex_count() != n_) return std::nullopt;
        const int e = g.edge_count();
        std::optional<std::vector<int>> degs;
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            if (classes_[i].edge_count() != e) continue;
            if (!degs) degs = g.degree_multiset();
            if (*degs != degrees_[i]) continue;
            if (is_isomorphic(g, classes_[i].representative)) return classes_[i].id;
        }
        return std::nullopt;
    }

    ClassId complement_class(const ClassId& id) const {
        auto c = identify(complement(at(id).representative));
        if (!c) throw CatalogError("complement of " + id + " is not in the catalog");
        return *c;
    }

private:
    int n_ = 0;
    std::vector<CatalogClass> classes_;
    std::map<ClassId, std::size_t> index_;
    std::map<std::string, ClassId> member_class_;
    std::vector<std::vector<int>> degrees_;
};

inline Catalog build_catalog(int n = 10) {
    if (n != 5 && n != 10) throw CatalogError("catalog is available for 5 and 10 vertices only");
    const int half = n / 2;

    // connection sets ordered by size, then lexicographically
    std::vector<std::set<int>> sets;
    for (unsigned m = 0; m < (1u << half); ++m) {
        std::set<int> d;
        for (int k = 0; k < half; ++k)
            if (m >> k & 1u) d.insert(k + 1);
        sets.push_back(std::move(d));
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.size(), connection_set_name(a)) < std::make_pair(b.size(), connection_set_name(b));
    });

    std::vector<CatalogClass> classes;
    for (const auto& d : sets) {
        if (d.empty() || static_cast<int>(d.size()) == half) continue;
        const Graph g = circulant(n, d);
        const std::string name = connection_set_name(d);
        bool merged = false;
        for (auto& c : classes) {
            if (is_isomorphic(g, c.representative)) {
                c.members.push_back(name);
                if (name < c.id) {
                    c.id = name;
                    c.representative = g;
                }
                merged = true;
                break;
            }
        }
        if (!merged) classes.push_back({name, g, {name}});
    }
    if (n == 10) {
        const Graph p = petersen();
        for (const auto& c : classes)
            if (is_isomorphic(p, c.representative) || is_isomorphic(complement(p), c.representative))
                throw CatalogError("Petersen graph matched circulant class " + c.id);
        classes.push_back({"P", p, {"P"}});
        classes.push_back({"Pbar", complement(p), {"Pbar"}});
    }
    std::set<int> full;
    for (int k = 1; k <= half; ++k) full.insert(k);
    classes.push_back({"empty", Graph(n), {"empty"}});
    classes.push_back({"complete", Graph::complete(n), {connection_set_name(full)}});

    for (auto& c : classes) std::sort(c.members.begin(), c.members.end(), ClassIdLess{});
    if (n == 10 && classes.size() != 22)
        throw CatalogError("expected 22 transitive classes on 10 vertices, built " + std::to_string(classes.size()));
    return Catalog(n, std::move(classes));
}

struct InclusionPoset {
    std::vector<ClassId> classes;
    std::vector<std::vector<bool>> leq;                              // leq[a][b]: a embeds in b
    std::map<std::pair<std::size_t, std::size_t>, Relabeling> witnesses;  // a < b, a mapped into b
    std::vector<std::pair<std::size_t, std::size_t>> hasse;          // covering pairs (lower, upper)

    std::size_t index_of(const ClassId& id) const {
        auto it = std::find(classes.begin(), classes.end(), id);
        if (it == classes.end()) throw CatalogError("unknown class id: " + id);
        return static_cast<std::size_t>(it - classes.begin());
    }
    bool le(const ClassId& a, const ClassId& b) const { return leq[index_of(a)][index_of(b)]; }
    std::optional<Relabeling> witness(const ClassId& a, const ClassId& b) const {
        auto it = witnesses.find({index_of(a), index_of(b)});
        if (it == witnesses.end()) return std::nullopt;
        return it->second;
    }
};

inline InclusionPoset build_poset(const Catalog& cat) {
    InclusionPoset P;
    const auto& cls = cat.classes();
    const std::size_t k = cls.size();
    for (const auto& c : cls) P.classes.push_back(c.id);
    P.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) {
                P.leq[a][b] = true;
                continue;
            }
            // distinct classes with equal edge counts are non-isomorphic
            if (cls[a].edge_count() >= cls[b].edge_count()) continue;
            if (auto w = contains_up_to_iso(cls[b].representative, cls[a].representative)) {
                P.leq[a][b] = true;
                P.witnesses.emplace(std::make_pair(a, b), std::move(*w));
            }
        }
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b || !P.leq[a][b]) continue;
            bool covered = true;
            for (std::size_t c = 0; c < k && covered; ++c)
                if (c != a && c != b && P.leq[a][c] && P.leq[c][b]) covered = false;
            if (covered) P.hasse.emplace_back(a, b);
        }
    return P;
}

// Known inclusions between named circulant and Petersen graphs, kept as
// test vectors against the computed poset.
struct NamedRelation {
    std::string lower;   // member name
    std::string upper;   // member name
    std::string group;   // "circulant", "petersen", "petersen-pair"
    std::string source;  // the relation as printed
};

inline std::vector<NamedRelation> known_inclusions() {
    return {
        {"5", "3", "circulant", "G_{1} ~ G_{3} > G_{5}"},
        {"2345", "1234", "circulant", "G_{1,2,3,4} > G_{2,3,4,5} ~ G_{1,2,4,5}"},
        {"1", "25", "circulant", "G_{2,5} ~ G_{4,5} > G_{1} ~ G_{3}"},
        {"123", "2345", "circulant", "G_{2,3,4,5} ~ G_{1,2,4,5} > G_{1,2,3} ~ G_{1,3,4}"},
        {"25", "12", "circulant", "G_{1,2} ~ G_{3,4} > G_{2,5} ~ G_{4,5}"},
        {"125", "123", "circulant", "G_{1,2,3} ~ G_{1,3,4} > G_{1,2,5} ~ G_{3,4,5}"},
        {"25", "14", "circulant", "G_{1,4} ~ G_{2,3} > G_{2,5} ~ G_{4,5}"},
        {"145", "123", "circulant", "G_{1,2,3} ~ G_{1,3,4} > G_{1,4,5} ~ G_{2,3,5}"},
        {"15", "124", "circulant", "G_{1,2,4} ~ G_{2,3,4} > G_{1,5} ~ G_{3,5}"},
        {"15", "13", "circulant", "G_{1,3} > G_{1,5} ~ G_{3,5}"},
        {"245", "124", "circulant", "G_{1,2,4} ~ G_{2,3,4} > G_{2,4,5}"},
        {"14", "125", "circulant", "G_{1,2,5} ~ G_{3,4,5} > G_{1,4} ~ G_{2,3}"},
        {"12", "145", "circulant", "G_{1,4,5} ~ G_{2,3,5} > G_{1,2} ~ G_{3,4}"},
        {"P", "Pbar", "petersen-pair", "P < Pbar"},
        {"5", "P", "petersen", "G_{5} < P"},
        {"2", "P", "petersen", "G_{2} ~ G_{4} < P"},
        {"Pbar", "1234", "petersen", "Pbar < G_{1,2,3,4}"},
        {"Pbar", "1235", "petersen", "Pbar < G_{1,2,3,5} ~ G_{1,3,4,5}"},
        {"P", "123", "petersen", "P < G_{1,2,3} ~ G_{1,3,4}"},
        {"P", "245", "petersen", "P < G_{2,4,5}"},
        {"25", "Pbar", "petersen", "G_{2,5} ~ G_{4,5} < Pbar"},
        {"13", "Pbar", "petersen", "G_{1,3} < Pbar"},
    };
}

// Listed isomorphic circulant pairs (captions). One of them pairs {1,2,3}
// with {1,4,5}, which does not hold; the search pairs {1,2,3} with {1,3,4}.
inline std::vector<std::pair<std::string, std::string>> known_isomorphisms() {
    return {{"1", "3"},     {"2345", "1245"}, {"2", "4"},     {"1235", "1345"},
            {"15", "35"},   {"124", "234"},   {"12", "34"},   {"125", "345"},
            {"14", "23"},   {"145", "235"},   {"25", "45"},   {"123", "145"}};
}

// Graph named by a catalog member: connection-set digits, "P", "Pbar",
// "empty" or "complete".
inline Graph member_graph(int n, const std::string& name) {
    if (name == "P" || name == "Pbar") {
        if (n != 10) throw CatalogError("the Petersen graphs need 10 vertices");
        return name == "P" ? petersen() : complement(petersen());
    }
    if (name == "empty") return Graph(n);
    if (name == "complete") return Graph::complete(n);
    return circulant(n, parse_connection_set(name));
}

struct RelationCheck {
    bool holds = false;
    std::optional<Relabeling> witness;  // maps the lower graph into the upper one
};

// Searches the named graphs themselves, not the class representatives, and
// re-checks the witness edge by edge.
inline RelationCheck check_inclusion(int n, const NamedRelation& r) {
    const Graph lower = member_graph(n, r.lower), upper = member_graph(n, r.upper);
    RelationCheck c;
    c.witness = contains_up_to_iso(upper, lower);
    c.holds = c.witness && lower.relabel(*c.witness).is_subgraph_of(upper) && lower.edge_count() < upper.edge_count();
    return c;
}

inline RelationCheck check_isomorphism(int n, const std::string& a, const std::string& b) {
    const Graph g = member_graph(n, a), h = member_graph(n, b);
    RelationCheck c;
    c.witness = is_isomorphic(g, h);
    c.holds = c.witness && g.relabel(*c.witness) == h;
    return c;
}

inline std::string relabeling_string(const Relabeling& sigma) {
    std::string s;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        s += (s.empty() ? "" : " ") + std::to_string(i + 1) + "->" + std::to_string(sigma[i] + 1);
    return s;
}

inline std::string poset_dot(const InclusionPoset& P, const Catalog& cat) {
    std::ostringstream os;
    os << "digraph inclusion {\n  rankdir=BT;\n";
    for (const auto& id : P.classes) {
        os << "  \"" << id << "\" [label=\"" << id << "\\n" << cat.at(id).edge_count() << " edges\"];\n";
    }
    for (auto [a, b] : P.hasse) os << "  \"" << P.classes[a] << "\" -> \"" << P.classes[b] << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace evasive

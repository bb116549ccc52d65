#pragma once

// Labeled simple graphs on at most 11 vertices, stored as a bit-vector over
// the n(n-1)/2 vertex pairs in lexicographic order (1,2),(1,3),...,(n-1,n).

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace evasive {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int max_graph_vertices = 11;

// Vertex relabeling: maps[v] is the image of vertex v (0-based).
using Relabeling = std::vector<int>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > max_graph_vertices) throw GraphError("vertex count must be in 1..11");
    }

    static int pair_count(int n) { return n * (n - 1) / 2; }

    // 0-based i < j
    static int edge_index(int n, int i, int j) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    static std::pair<int, int> edge_endpoints(int n, int index) {
        for (int i = 0; i < n - 1; ++i) {
            const int row = n - 1 - i;
            if (index < row) return {i, i + 1 + index};
            index -= row;
        }
        throw GraphError("edge index out of range");
    }

    static Graph complete(int n) {
        Graph g(n);
        const int m = pair_count(n);
        g.edges_ = m == 64 ? ~0ull : ((1ull << m) - 1);
        return g;
    }

    static Graph from_mask(int n, std::uint64_t mask) {
        Graph g(n);
        if (mask & ~complete(n).edges_) throw GraphError("edge mask has bits beyond the pair count");
        g.edges_ = mask;
        return g;
    }

    int vertex_count() const { return n_; }
    std::uint64_t mask() const { return edges_; }
    int edge_count() const { return std::popcount(edges_); }

    bool has_edge(int i, int j) const {
        if (i == j) return false;
        return (edges_ >> edge_index(n_, i, j)) & 1u;
    }

    void add_edge(int i, int j) {
        if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) throw GraphError("invalid edge");
        edges_ |= 1ull << edge_index(n_, i, j);
    }

    // Neighbourhood bitmasks, one per vertex.
    std::array<std::uint16_t, max_graph_vertices> adjacency() const {
        std::array<std::uint16_t, max_graph_vertices> adj{};
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) {
                    adj[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
                    adj[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
                }
        return adj;
    }

    std::vector<int> degrees() const {
        auto adj = adjacency();
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = std::popcount(adj[static_cast<std::size_t>(i)]);
        return d;
    }

    std::vector<int> degree_multiset() const {
        auto d = degrees();
        std::sort(d.begin(), d.end());
        return d;
    }

    bool is_regular() const {
        auto d = degrees();
        return std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); });
    }

    int triangle_count() const {
        auto adj = adjacency();
        int t = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) t += std::popcount(static_cast<unsigned>(adj[static_cast<std::size_t>(i)] & adj[static_cast<std::size_t>(j)]) >> (j + 1));
        return t;
    }

    bool is_subgraph_of(const Graph& other) const { return n_ == other.n_ && (edges_ & ~other.edges_) == 0; }

    Graph relabel(const Relabeling& sigma) const {
        Graph r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) r.add_edge(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
        return r;
    }

    Graph apply(const Permutation& p) const {
        Relabeling s(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = p(i);
        return relabel(s);
    }

    // Compact 0/1 string, one character per vertex pair in lexicographic order.
    std::string to_bitstring() const {
        std::string s;
        for (int k = 0; k < pair_count(n_); ++k) s += ((edges_ >> k) & 1u) ? '1' : '0';
        return s;
    }

    static Graph from_bitstring(int n, const std::string& s) {
        if (static_cast<int>(s.size()) != pair_count(n))
            throw GraphError("edge string must have " + std::to_string(pair_count(n)) + " characters");
        Graph g(n);
        for (int k = 0; k < pair_count(n); ++k) {
            if (s[static_cast<std::size_t>(k)] == '1') g.edges_ |= 1ull << k;
            else if (s[static_cast<std::size_t>(k)] != '0') throw GraphError("edge string must be 0/1");
        }
        return g;
    }

    // "n=10" then one "i j" line per edge, 1-based.
    std::string to_edge_list() const {
        std::ostringstream os;
        os << "n=" << n_ << '\n';
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) os << i + 1 << ' ' << j + 1 << '\n';
        return os.str();
    }

    static Graph from_edge_list(const std::string& text) {
        std::istringstream is(text);
        std::string header;
        if (!(is >> header) || header.rfind("n=", 0) != 0) throw GraphError("graph text must start with n=<count>");
        Graph g(std::stoi(header.substr(2)));
        int a = 0, b = 0;
        while (is >> a) {
            if (!(is >> b)) throw GraphError("dangling vertex in edge list");
            if (a < 1 || b < 1 || a > g.n_ || b > g.n_ || a == b) throw GraphError("edge out of range");
            g.add_edge(a - 1, b - 1);
        }
        if (!is.eof()) throw GraphError("malformed edge list");
        return g;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::uint64_t edges_ = 0;
};

inline Graph complement(const Graph& g) {
    return Graph::from_mask(g.vertex_count(), ~g.mask() & Graph::complete(g.vertex_count()).mask());
}

// Circulant graph on Z_n with connection set +-D, D a subset of {1..n/2}.
inline Graph circulant(int n, const std::set<int>& connection_set) {
    Graph g(n);
    for (int d : connection_set)
        if (d < 1 || 2 * d > n) throw GraphError("circulant difference out of range: " + std::to_string(d));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (connection_set.count(i - j) || connection_set.count(n + j - i)) g.add_edge(i, j);
    return g;
}

// "124" -> {1,2,4}; "" is the empty set.
inline std::set<int> parse_connection_set(const std::string& digits) {
    std::set<int> d;
    for (char c : digits) {
        if (c < '1' || c > '9') throw GraphError("bad connection set: " + digits);
        d.insert(c - '0');
    }
    return d;
}

inline std::string connection_set_name(const std::set<int>& d) {
    std::string s;
    for (int x : d) s += static_cast<char>('0' + x);
    return s;
}

// Kneser graph K(5,2): the ten 2-subsets of {1..5} in lexicographic order
// are vertices 1..10, adjacent when disjoint.
inline Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) pairs.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = pairs[static_cast<std::size_t>(i)];
            auto [c, d] = pairs[static_cast<std::size_t>(j)];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

namespace detail {

// Backtracking embedding of `small` into `big`: finds sigma with
// sigma(small) a subgraph of big. With `exact`, non-edges must map to
// non-edges as well, which for equal edge counts is an isomorphism.
class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& small, const Graph& big, bool exact)
        : n_(small.vertex_count()), exact_(exact), sadj_(small.adjacency()), badj_(big.adjacency()) {
        sdeg_ = small.degrees();
        bdeg_ = big.degrees();
        order_vertices();
    }

    std::optional<Relabeling> run() {
        map_.assign(static_cast<std::size_t>(n_), -1);
        if (extend(0, 0)) return map_;
        return std::nullopt;
    }

private:
    // Highest degree first, then the vertex with most already-placed
    // neighbours so adjacency constraints bite early.
    void order_vertices() {
        std::vector<bool> placed(static_cast<std::size_t>(n_), false);
        std::uint16_t placed_mask = 0;
        for (int step = 0; step < n_; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < n_; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                const int links = std::popcount(static_cast<unsigned>(sadj_[static_cast<std::size_t>(v)] & placed_mask));
                const int deg = sdeg_[static_cast<std::size_t>(v)];
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            placed[static_cast<std::size_t>(best)] = true;
            placed_mask |= static_cast<std::uint16_t>(1u << best);
            order_.push_back(best);
        }
    }

    bool extend(std::size_t depth, std::uint16_t used) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        std::uint16_t cand = static_cast<std::uint16_t>(((1u << n_) - 1) & ~used);
        for (std::size_t k = 0; k < depth; ++k) {
            const int u = order_[k];
            const auto img = badj_[static_cast<std::size_t>(map_[static_cast<std::size_t>(u)])];
            if (sadj_[static_cast<std::size_t>(v)] >> u & 1u)
                cand &= img;
            else if (exact_)
                cand &= static_cast<std::uint16_t>(~img);
        }
        while (cand) {
            const int w = std::countr_zero(static_cast<unsigned>(cand));
            cand &= static_cast<std::uint16_t>(cand - 1);
            const int dv = sdeg_[static_cast<std::size_t>(v)], dw = bdeg_[static_cast<std::size_t>(w)];
            if (exact_ ? dv != dw : dv > dw) continue;
            map_[static_cast<std::size_t>(v)] = w;
            if (extend(depth + 1, static_cast<std::uint16_t>(used | (1u << w)))) return true;
        }
        map_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    int n_;
    bool exact_;
    std::array<std::uint16_t, max_graph_vertices> sadj_, badj_;
    std::vector<int> sdeg_, bdeg_;
    std::vector<int> order_;
    Relabeling map_;
};

}  // namespace detail

// Returns sigma with g.relabel(sigma) == h.
inline std::optional<Relabeling> is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) throw GraphError("vertex count mismatch");
    if (g.edge_count() != h.edge_count() || g.degree_multiset() != h.degree_multiset() ||
        g.triangle_count() != h.triangle_count())
        return std::nullopt;
    return detail::EmbeddingSearch(g, h, true).run();
}

inline Relabeling invert_relabeling(const Relabeling& sigma) {
    Relabeling inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
    return inv;
}

// Returns sigma with small.relabel(sigma) a subgraph of big. Dense
// patterns are searched on the complement side, where
// sigma(small) <= big  <=>  sigma^-1(~big) <= ~small.
inline std::optional<Relabeling> contains_up_to_iso(const Graph& big, const Graph& small) {
    const int n = big.vertex_count();
    if (n != small.vertex_count()) throw GraphError("vertex count mismatch");
    if (small.edge_count() > big.edge_count()) return std::nullopt;
    if (2 * small.edge_count() > Graph::pair_count(n)) {
        auto tau = detail::EmbeddingSearch(complement(big), complement(small), false).run();
        if (!tau) return std::nullopt;
        return invert_relabeling(*tau);
    }
    return detail::EmbeddingSearch(small, big, false).run();
}

// Shortest cycle length, 0 for forests.
inline int girth(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int u = queue[h];
            for (int v = 0; v < n; ++v) {
                if (!(adj[static_cast<std::size_t>(u)] >> v & 1u)) continue;
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (parent[static_cast<std::size_t>(u)] != v) {
                    const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace evasive

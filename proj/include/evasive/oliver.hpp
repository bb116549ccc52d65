#pragma once

// Subgroup chains licensing Euler characteristic constraints on the
// fixed-point complex of a Z_p-acyclic complex:
//
//   Theorem-1 chain  G1 normal in G, G/G1 cyclic, |G1| = p^a
//                    => chi = 1
//   Theorem-2 chain  G2 normal in G1 normal in G, G1/G2 cyclic,
//                    |G2| = p^a, |G/G1| = q^b
//                    => chi = 1 (mod q)
//
// plus a bounded, deliberately incomplete search for such chains inside a
// given ambient group.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "linear_form.hpp"
#include "perm.hpp"

namespace evasive {

struct ChainError : std::runtime_error {
    ChainError(std::string hypothesis, const std::string& what)
        : std::runtime_error(hypothesis + ": " + what), hypothesis(std::move(hypothesis)) {}
    std::string hypothesis;  // not-subgroup, not-normal, quotient-not-cyclic, ...
};

struct OliverChain {
    std::shared_ptr<const PermGroup> gamma;
    std::shared_ptr<const PermGroup> gamma1;
    std::shared_ptr<const PermGroup> gamma2;  // null for Theorem-1 chains
    int theorem = 1;
    PrimePower p;                 // order of the normal p-subgroup; any_prime() when trivial
    std::optional<PrimePower> q;  // Theorem 2: |G/G1|
    Relation relation = Relation::equals(1);
};

namespace detail {

inline void require_normal_subgroup(const PermGroup& sub, const PermGroup& amb, const std::string& sub_name,
                                    const std::string& amb_name) {
    if (!sub.is_subgroup_of(amb)) throw ChainError("not-subgroup", sub_name + " is not contained in " + amb_name);
    if (!is_normal(sub, amb)) throw ChainError("not-normal", sub_name + " is not normal in " + amb_name);
}

}  // namespace detail

inline OliverChain verify_thm1(const PermGroup& gamma1, const PermGroup& gamma) {
    if (gamma1.degree() != gamma.degree()) throw ChainError("not-subgroup", "degree mismatch");
    detail::require_normal_subgroup(gamma1, gamma, "G1", "G");
    if (!is_cyclic(quotient(gamma, gamma1).group))
        throw ChainError("quotient-not-cyclic", "G/G1 of order " + std::to_string(gamma.order() / gamma1.order()) + " is not cyclic");
    auto p = prime_power_order(gamma1);
    if (!p) throw ChainError("order-not-prime-power", "|G1| = " + std::to_string(gamma1.order()));
    OliverChain c;
    c.gamma = std::make_shared<const PermGroup>(gamma);
    c.gamma1 = std::make_shared<const PermGroup>(gamma1);
    c.theorem = 1;
    c.p = *p;
    c.relation = Relation::equals(1);
    return c;
}

// When G1 = G the congruence holds for every prime, so the chain licenses
// chi = 1 outright.
inline OliverChain verify_thm2(const PermGroup& gamma2, const PermGroup& gamma1, const PermGroup& gamma) {
    if (gamma2.degree() != gamma1.degree() || gamma1.degree() != gamma.degree())
        throw ChainError("not-subgroup", "degree mismatch");
    detail::require_normal_subgroup(gamma1, gamma, "G1", "G");
    detail::require_normal_subgroup(gamma2, gamma1, "G2", "G1");
    if (!is_cyclic(quotient(gamma1, gamma2).group))
        throw ChainError("quotient-not-cyclic", "G1/G2 of order " + std::to_string(gamma1.order() / gamma2.order()) + " is not cyclic");
    auto p = prime_power_order(gamma2);
    if (!p) throw ChainError("order-not-prime-power", "|G2| = " + std::to_string(gamma2.order()));
    auto q = prime_power(gamma.order() / gamma1.order());
    if (!q) throw ChainError("quotient-order-not-prime-power", "|G/G1| = " + std::to_string(gamma.order() / gamma1.order()));
    OliverChain c;
    c.gamma = std::make_shared<const PermGroup>(gamma);
    c.gamma1 = std::make_shared<const PermGroup>(gamma1);
    c.gamma2 = std::make_shared<const PermGroup>(gamma2);
    c.theorem = 2;
    c.p = *p;
    c.q = *q;
    c.relation = q->any_prime() ? Relation::equals(1) : Relation::congruent(1, static_cast<std::int64_t>(q->prime));
    return c;
}

struct SearchOptions {
    std::size_t max_subgroup_order = 0;  // 0: ambient order
    std::size_t budget = 100000;         // maximum number of chains
    std::size_t max_candidates = 20000;  // maximum number of candidate subgroups
};

struct SearchResult {
    std::vector<OliverChain> chains;
    std::size_t candidate_subgroups = 0;
    bool truncated = false;
};

namespace detail {

// Ambient group with elements indexed 0..N-1 (0 = identity) and subgroups
// as bitsets over those indices.
class IndexedGroup {
public:
    using Bits = std::vector<std::uint64_t>;

    explicit IndexedGroup(const PermGroup& g) : group_(g), n_(g.order()) {
        inverse_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) inverse_[i] = group_.index_of(group_.elements()[i].inverse());
        if (n_ <= 2048) {
            table_.resize(n_ * n_);
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = 0; b < n_; ++b)
                    table_[a * n_ + b] = static_cast<std::uint32_t>(group_.index_of(group_.elements()[a] * group_.elements()[b]));
        }
    }

    std::size_t size() const { return n_; }
    const PermGroup& group() const { return group_; }

    std::size_t mul(std::size_t a, std::size_t b) const {
        if (!table_.empty()) return table_[a * n_ + b];
        return group_.index_of(group_.elements()[a] * group_.elements()[b]);
    }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::size_t conj(std::size_t h, std::size_t x) const { return mul(mul(x, h), inv(x)); }

    Bits empty_bits() const { return Bits((n_ + 63) / 64, 0); }
    static bool test(const Bits& b, std::size_t i) { return b[i / 64] >> (i % 64) & 1u; }
    static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
    static bool subset(const Bits& a, const Bits& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] & ~b[k]) return false;
        return true;
    }

    // Closure of generator indices; nullopt once it exceeds max_order.
    std::optional<std::pair<Bits, std::size_t>> closure(const std::vector<std::size_t>& gens, std::size_t max_order) const {
        Bits b = empty_bits();
        std::vector<std::size_t> els{0};
        set(b, 0);
        for (std::size_t h = 0; h < els.size(); ++h)
            for (auto g : gens) {
                const std::size_t y = mul(els[h], g);
                if (!test(b, y)) {
                    set(b, y);
                    els.push_back(y);
                    if (els.size() > max_order) return std::nullopt;
                }
            }
        return std::make_pair(std::move(b), els.size());
    }

    std::vector<std::size_t> members(const Bits& b) const {
        std::vector<std::size_t> m;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(b, i)) m.push_back(i);
        return m;
    }

private:
    PermGroup group_;
    std::size_t n_;
    std::vector<std::size_t> inverse_;
    std::vector<std::uint32_t> table_;
};

struct Candidate {
    IndexedGroup::Bits bits;
    std::size_t order = 0;
    std::vector<std::size_t> members;
    std::vector<std::size_t> gens;  // greedy over members in index order
};

}  // namespace detail

// Candidates: closures of one or two elements, then repeated extension of
// each candidate H by normalizing elements of prime order modulo H. All
// chains among candidates are reported in increasing (|G|, |G1|, |G2|).
inline SearchResult search_chains(const PermGroup& ambient, SearchOptions opt = {}) {
    SearchResult res;
    if (opt.budget == 0) {
        res.truncated = true;
        return res;
    }
    const std::size_t max_order = opt.max_subgroup_order ? opt.max_subgroup_order : ambient.order();
    detail::IndexedGroup G(ambient);
    using Bits = detail::IndexedGroup::Bits;

    std::vector<detail::Candidate> cands;
    std::map<Bits, std::size_t> seen;
    auto add = [&](Bits bits, std::size_t order) -> std::optional<std::size_t> {
        auto [it, fresh] = seen.emplace(bits, cands.size());
        if (!fresh) return std::nullopt;
        if (cands.size() >= opt.max_candidates) {
            seen.erase(it);
            res.truncated = true;
            return std::nullopt;
        }
        detail::Candidate c;
        c.bits = std::move(bits);
        c.order = order;
        cands.push_back(std::move(c));
        return cands.size() - 1;
    };

    add(G.closure({}, 1)->first, 1);
    std::vector<std::size_t> cyclic_gens;
    for (std::size_t x = 1; x < G.size(); ++x) {
        if (auto c = G.closure({x}, max_order))
            if (add(c->first, c->second)) cyclic_gens.push_back(x);
    }
    for (std::size_t i = 0; i < cyclic_gens.size(); ++i)
        for (std::size_t j = i + 1; j < cyclic_gens.size(); ++j)
            if (auto c = G.closure({cyclic_gens[i], cyclic_gens[j]}, max_order)) add(c->first, c->second);
    if (ambient.order() <= max_order) {
        std::vector<std::size_t> all(G.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        auto c = G.closure(all, max_order);
        add(c->first, c->second);
    }

    auto gens_of = [&](const Bits& bits) {
        std::vector<std::size_t> gens;
        Bits cur = G.closure({}, 1)->first;
        for (std::size_t x = 0; x < G.size(); ++x) {
            if (!G.test(bits, x) || G.test(cur, x)) continue;
            gens.push_back(x);
            cur = G.closure(gens, G.size())->first;
        }
        return gens;
    };

    for (std::size_t h = 0; h < cands.size(); ++h) {
        if (cands[h].gens.empty() && cands[h].order > 1) cands[h].gens = gens_of(cands[h].bits);
        const auto hgens = cands[h].gens;
        const auto hbits = cands[h].bits;
        const std::size_t horder = cands[h].order;
        Bits covered = hbits;
        for (std::size_t x = 1; x < G.size(); ++x) {
            if (G.test(covered, x)) continue;
            if (!std::all_of(hgens.begin(), hgens.end(), [&](auto g) { return G.test(hbits, G.conj(g, x)); })) continue;
            std::size_t k = 1;
            for (std::size_t y = x; !G.test(hbits, y); y = G.mul(y, x)) ++k;
            auto pp = prime_power(k);
            if (!pp || pp->exponent != 1 || horder * k > max_order) continue;
            auto ext_gens = hgens;
            ext_gens.push_back(x);
            auto c = G.closure(ext_gens, max_order);
            for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= c->first[w];
            add(c->first, c->second);
        }
    }

    for (auto& c : cands) {
        c.members = G.members(c.bits);
        if (c.gens.empty() && c.order > 1) c.gens = gens_of(c.bits);
    }
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return std::tie(a.order, a.members) < std::tie(b.order, b.members);
    });
    res.candidate_subgroups = cands.size();

    std::vector<std::shared_ptr<const PermGroup>> groups(cands.size());
    auto group_of = [&](std::size_t i) {
        if (!groups[i]) {
            std::vector<Permutation> gens;
            for (auto g : cands[i].gens) gens.push_back(ambient.elements()[g]);
            groups[i] = std::make_shared<const PermGroup>(closure(ambient.degree(), gens, cands[i].order));
        }
        return groups[i];
    };

    auto normal_in = [&](std::size_t a, std::size_t b) {
        const auto& A = cands[a];
        const auto& B = cands[b];
        if (B.order % A.order || !detail::IndexedGroup::subset(A.bits, B.bits)) return false;
        for (auto x : B.gens)
            for (auto h : A.gens)
                if (!G.test(A.bits, G.conj(h, x))) return false;
        return true;
    };
    auto cyclic_quotient = [&](std::size_t a, std::size_t b) {
        const std::size_t index = cands[b].order / cands[a].order;
        if (index == 1) return true;
        for (auto x : cands[b].members) {
            std::size_t k = 1;
            for (std::size_t y = x; !G.test(cands[a].bits, y); y = G.mul(y, x)) ++k;
            if (k == index) return true;
        }
        return false;
    };
    std::vector<std::optional<PrimePower>> pp(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) pp[i] = prime_power(cands[i].order);

    auto emit = [&](OliverChain c) {
        if (res.chains.size() >= opt.budget) {
            res.truncated = true;
            return false;
        }
        res.chains.push_back(std::move(c));
        return true;
    };

    bool stop = false;
    for (std::size_t g = 0; g < cands.size() && !stop; ++g) {
        for (std::size_t g1 = 0; g1 <= g && !stop; ++g1) {
            if (!normal_in(g1, g)) continue;
            const auto q = prime_power(cands[g].order / cands[g1].order);
            if (pp[g1] && cyclic_quotient(g1, g)) {
                OliverChain c;
                c.gamma = group_of(g);
                c.gamma1 = group_of(g1);
                c.theorem = 1;
                c.p = *pp[g1];
                c.relation = Relation::equals(1);
                if (!emit(std::move(c))) stop = true;
            }
            if (!q || q->any_prime()) continue;
            for (std::size_t g2 = 0; g2 <= g1 && !stop; ++g2) {
                if (!pp[g2] || !normal_in(g2, g1) || !cyclic_quotient(g2, g1)) continue;
                OliverChain c;
                c.gamma = group_of(g);
                c.gamma1 = group_of(g1);
                c.gamma2 = group_of(g2);
                c.theorem = 2;
                c.p = *pp[g2];
                c.q = *q;
                c.relation = Relation::congruent(1, static_cast<std::int64_t>(q->prime));
                if (!emit(std::move(c))) stop = true;
            }
        }
    }

    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::vector<std::string>, std::vector<std::string>,
                           std::vector<std::string>, int>;
    std::map<const PermGroup*, std::vector<std::string>> names;
    auto name = [&](const std::shared_ptr<const PermGroup>& g) {
        if (!g) return std::vector<std::string>{};
        auto it = names.find(g.get());
        if (it == names.end()) it = names.emplace(g.get(), g->generator_strings()).first;
        return it->second;
    };
    std::vector<std::pair<Key, std::size_t>> keyed;
    for (std::size_t i = 0; i < res.chains.size(); ++i) {
        const auto& c = res.chains[i];
        keyed.emplace_back(Key{c.gamma->order(), c.gamma1->order(), c.gamma2 ? c.gamma2->order() : 0, name(c.gamma),
                               name(c.gamma1), name(c.gamma2), c.theorem},
                           i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<OliverChain> sorted;
    sorted.reserve(keyed.size());
    for (const auto& [k, i] : keyed) sorted.push_back(std::move(res.chains[i]));
    res.chains = std::move(sorted);
    return res;
}

}  // namespace evasive

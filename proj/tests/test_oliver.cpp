#include <gtest/gtest.h>

#include "evasive/library.hpp"
#include "evasive/oliver.hpp"
#include "test_support.hpp"

using namespace evasive;
using namespace evasive::testing;

namespace {

bool prime_power_number(std::size_t n) {
    if (n == 1) return true;
    for (std::size_t p = 2; p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    return false;
}

bool normal_in(const PermGroup& sub, const PermGroup& amb) {
    for (const auto& s : sub.elements())
        if (!amb.contains(s)) return false;
    for (const auto& g : amb.elements())
        for (const auto& s : sub.elements())
            if (!sub.contains(g.inverse() * s * g)) return false;
    return true;
}

// Normal subgroup with cyclic quotient, checked element by element: some
// x in `amb` has x^k in `sub` only for k a multiple of the index.
bool normal_with_cyclic_quotient(const PermGroup& sub, const PermGroup& amb) {
    if (!normal_in(sub, amb)) return false;
    const std::size_t index = amb.order() / sub.order();
    for (const auto& g : amb.elements()) {
        std::size_t k = 1;
        Permutation x = g;
        while (!sub.contains(x)) {
            x = x * g;
            ++k;
        }
        if (k == index) return true;
    }
    return false;
}

void expect_valid(const OliverChain& c) {
    if (c.theorem == 1) {
        EXPECT_TRUE(normal_with_cyclic_quotient(*c.gamma1, *c.gamma));
        EXPECT_TRUE(prime_power_number(c.gamma1->order()));
    } else {
        ASSERT_TRUE(c.gamma2);
        ASSERT_TRUE(c.q);
        EXPECT_TRUE(normal_with_cyclic_quotient(*c.gamma2, *c.gamma1));
        EXPECT_TRUE(prime_power_number(c.gamma2->order()));
        EXPECT_TRUE(normal_in(*c.gamma1, *c.gamma));
        const std::size_t idx = c.gamma->order() / c.gamma1->order();
        EXPECT_GT(idx, 1u);
        EXPECT_TRUE(prime_power_number(idx));
        EXPECT_EQ(idx % c.q->prime, 0u);
        EXPECT_EQ(c.relation.modulus, static_cast<std::int64_t>(c.q->prime));
    }
}

}  // namespace

TEST(VerifyChain, TenCycleOverTrivial) {
    const auto c = verify_thm1(trivial_group(10), group({"(1 2 3 4 5 6 7 8 9 10)"}));
    EXPECT_EQ(c.theorem, 1);
    EXPECT_TRUE(c.p.any_prime());
    EXPECT_FALSE(c.relation.is_congruence());
}

TEST(VerifyChain, LemmaChains) {
    const auto G = group({"(1 3 5 7 9)(2 4 6 8 10)", "(2 7)(5 10)"});
    const auto G1 = kernel(make_hom(G, 5, {1, 0}));
    const auto c = verify_thm1(G1, G);
    EXPECT_EQ(c.p.prime, 2u);
    EXPECT_EQ(c.p.exponent, 4);
    expect_valid(c);

    const auto T = group({"(1 3 5 7 9)(2 4 6 8 10)", "(1 7 9 3)(2 4 8 6)", "(2 7)(5 10)"});
    const auto T1 = group({"(1 3 5 7 9)(2 4 6 8 10)", "(2 7)(5 10)"});
    ASSERT_EQ(T1, kernel(make_hom(T, 4, {0, 1, 0})));
    const auto T2 = kernel(make_hom(T1, 5, {3, 0}));
    const auto c2 = verify_thm2(T2, T1, T);
    EXPECT_EQ(c2.q->prime, 2u);
    EXPECT_EQ(c2.relation.modulus, 2);
    expect_valid(c2);
}

TEST(VerifyChain, HypothesisFailures) {
    auto hyp = [](auto&& f) {
        try {
            f();
        } catch (const ChainError& e) {
            return e.hypothesis;
        }
        return std::string("none");
    };
    const auto S3 = group({"(1 2 3)", "(1 2)"});
    EXPECT_EQ(hyp([&] { verify_thm1(group({"(1 2)"}), S3); }), "not-normal");
    EXPECT_EQ(hyp([&] { verify_thm1(group({"(4 5)"}), S3); }), "not-subgroup");
    const auto klein = group({"(1 2)(3 4)", "(1 3)(2 4)"});
    EXPECT_EQ(hyp([&] { verify_thm1(trivial_group(10), klein); }), "quotient-not-cyclic");
    const auto c6 = group({"(1 2 3 4 5 6)"});
    EXPECT_EQ(hyp([&] { verify_thm1(c6, c6); }), "order-not-prime-power");
    const auto C30 = group({"(1 2 3)(4 5)(6 7 8 9 10)"});
    EXPECT_EQ(hyp([&] { verify_thm2(trivial_group(10), trivial_group(10), C30); }), "quotient-order-not-prime-power");
    EXPECT_EQ(hyp([&] { verify_thm1(group({"(1 2 3)"}, 5), S3); }), "not-subgroup");
}

TEST(VerifyChain, MutatedGeneratorsNeverPassInvalidChains) {
    std::mt19937 rng(5);
    const auto base = group({"(1 3 5 7 9)(2 4 6 8 10)", "(2 7)(5 10)"});
    const auto base1 = kernel(make_hom(base, 5, {1, 0}));
    for (int t = 0; t < 40; ++t) {
        // replace one generator of G1 by a random element of S10
        std::vector<Permutation> g1 = base1.generators();
        g1[static_cast<std::size_t>(t) % g1.size()] = random_permutation(rng, 10);
        try {
            const PermGroup G1 = closure(10, g1, 5000);
            const auto c = verify_thm1(G1, base);
            expect_valid(c);
        } catch (const ChainError&) {
            const PermGroup G1 = closure(10, g1, 5000);
            EXPECT_FALSE(G1.is_subgroup_of(base) && normal_with_cyclic_quotient(G1, base) &&
                         prime_power_number(G1.order()));
        } catch (const PermError&) {
            // closure beyond the cap cannot lie inside a group of order 80
        }
    }
}

TEST(Search, TenCycle) {
    const auto res = search_chains(group({"(1 2 3 4 5 6 7 8 9 10)"}));
    EXPECT_FALSE(res.truncated);
    ASSERT_FALSE(res.chains.empty());
    for (const auto& c : res.chains) expect_valid(c);
    bool whole_over_trivial = false;
    for (const auto& c : res.chains)
        whole_over_trivial |= c.theorem == 1 && c.gamma->order() == 10 && c.gamma1->order() == 1;
    EXPECT_TRUE(whole_over_trivial);
    // Z10 has subgroups of order 1, 2, 5, 10
    EXPECT_EQ(res.candidate_subgroups, 4u);
}

TEST(Search, LemmaAmbientRediscoversParityChain) {
    const auto amb = group({"(1 3 5 7 9)(2 4 6 8 10)", "(1 7 9 3)(2 4 8 6)", "(2 7)(5 10)"});
    const auto res = search_chains(amb);
    EXPECT_FALSE(res.truncated);
    for (const auto& c : res.chains) expect_valid(c);
    const auto T1 = group({"(1 3 5 7 9)(2 4 6 8 10)", "(2 7)(5 10)"});
    ASSERT_EQ(T1, kernel(make_hom(amb, 4, {0, 1, 0})));
    const auto T2 = kernel(make_hom(T1, 5, {3, 0}));
    bool found = false;
    for (const auto& c : res.chains)
        found |= c.theorem == 2 && *c.gamma == amb && *c.gamma1 == T1 && *c.gamma2 == T2;
    EXPECT_TRUE(found);
    const auto lib = derive_forms(res.chains, catalog10());
    EXPECT_NE(std::find(lib.forms.begin(), lib.forms.end(), parse_form("i5 + i1234 ≡ 1 (mod 2)")), lib.forms.end());
}

TEST(Search, BudgetTruncates) {
    const auto amb = group({"(1 2 3 4 5 6 7 8 9 10)"});
    EXPECT_TRUE(search_chains(amb, {0, 0, 20000}).truncated);
    const auto r = search_chains(amb, {0, 2, 20000});
    EXPECT_TRUE(r.truncated);
    EXPECT_EQ(r.chains.size(), 2u);
}

TEST(Search, Deterministic) {
    const auto amb = group({"(1 3 5 7 9)(2 4 6 8 10)", "(2 7)(5 10)"});
    const auto a = search_chains(amb), b = search_chains(amb);
    ASSERT_EQ(a.chains.size(), b.chains.size());
    for (std::size_t i = 0; i < a.chains.size(); ++i) {
        EXPECT_EQ(*a.chains[i].gamma, *b.chains[i].gamma);
        EXPECT_EQ(a.chains[i].gamma1->generator_strings(), b.chains[i].gamma1->generator_strings());
    }
}

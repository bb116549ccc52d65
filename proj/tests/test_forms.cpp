#include <gtest/gtest.h>

#include "evasive/linear_form.hpp"
#include "evasive/rank_filter.hpp"

using namespace evasive;

TEST(FormParse, CanonicalPrinting) {
    EXPECT_EQ(parse_form("2i2 - i24 + i135 - 2i1235 = 1").to_string(), "2*i2 - i24 + i135 - 2*i1235 = 1");
    EXPECT_EQ(parse_form("i5 + i1234 ≡ 1 (mod 2)").to_string(), "i5 + i1234 ≡ 1 (mod 2)");
    EXPECT_EQ(parse_form("i14 = i145").to_string(), "i14 - i145 = 0");
    EXPECT_EQ(parse_form("i_P + 3 == 2*iPbar + 4").to_string(), "iP - 2*iPbar = 1");
    EXPECT_EQ(parse_form("i135 + i2 = 1").to_string(), "i2 + i135 = 1");
}

TEST(FormParse, CongruenceNormalisesResidues) {
    const auto f = parse_form("3i5 - i1234 = 5 (mod 2)");
    EXPECT_TRUE(f.is_congruence());
    EXPECT_EQ(f.to_string(), "i5 + i1234 ≡ 1 (mod 2)");
    EXPECT_TRUE(parse_form("2i5 ≡ 0 (mod 2)").is_degenerate());
}

TEST(FormParse, RoundTrip) {
    for (const char* s : {"2*i1 + 2*i2 - 2*i12 - i13 = 0", "i5 + i1234 ≡ 1 (mod 2)", "iP - iPbar + iempty - icomplete = 0",
                          "-i24 + i135 = -1"}) {
        const auto f = parse_form(s);
        EXPECT_EQ(parse_form(f.to_string()), f) << s;
    }
}

TEST(FormParse, Errors) {
    for (const char* s : {"", "i2 +", "i2 = ", "ix = 1", "i2 < 1", "i2 = 1 (mod 0)", "i2 = 1 junk", "2 3 = 1"})
        EXPECT_THROW(parse_form(s), FormError) << '"' << s << '"';
}

TEST(FormEval, Satisfaction) {
    const auto f = parse_form("2i2 - i24 + i135 - 2i1235 = 1");
    EXPECT_TRUE(f.satisfied_by({{"2", 1}, {"24", 1}, {"135", 0}, {"1235", 0}}));
    EXPECT_FALSE(f.satisfied_by({{"2", 0}, {"24", 1}, {"135", 0}, {"1235", 0}}));
    EXPECT_THROW(f.satisfied_by({{"2", 1}}), FormError);
    const auto g = parse_form("i5 + i1234 ≡ 1 (mod 2)");
    EXPECT_TRUE(g.satisfied_by({{"5", 1}, {"1234", 0}}));
    EXPECT_FALSE(g.satisfied_by({{"5", 1}, {"1234", 1}}));
}

TEST(FormEval, SubstituteAndMerge) {
    const auto f = parse_form("2i2 - i24 + i135 - 2i1235 = 1");
    EXPECT_EQ(f.substitute({{"2", 1}, {"1235", 0}}).to_string(), "-i24 + i135 = -1");
    EXPECT_EQ(parse_form("i14 - i145 + i12 = 0").merge_variable("145", "14").to_string(), "i12 = 0");
    EXPECT_EQ(parse_form("i12 = 0").merge_variable("145", "14"), parse_form("i12 = 0"));
}

TEST(FormEquivalence, ScalingOnly) {
    EXPECT_TRUE(equivalent(parse_form("i14 = i145"), parse_form("2i14 - 2i145 = 0")));
    EXPECT_TRUE(equivalent(parse_form("-2i12 + 2i124 = 2"), parse_form("i12 - i124 = -1")));
    EXPECT_FALSE(equivalent(parse_form("i12 - i124 = 1"), parse_form("i12 - i124 = -1")));
    EXPECT_FALSE(equivalent(parse_form("i12 + i124 = 1"), parse_form("i12 + i125 = 1")));
    EXPECT_FALSE(equivalent(parse_form("i5 = 1"), parse_form("i5 ≡ 1 (mod 2)")));
    EXPECT_TRUE(equivalent(parse_form("3i5 ≡ 1 (mod 2)"), parse_form("i5 ≡ 1 (mod 2)")));
}

TEST(RankFilter, DropsDependentEqualities) {
    const std::vector<LinearForm> forms{parse_form("i1 + i2 = 1"), parse_form("i2 + i5 = 1"), parse_form("i1 - i5 = 0"),
                                        parse_form("2i1 + 2i2 = 2"), parse_form("i1 + i5 ≡ 0 (mod 2)"),
                                        parse_form("i13 = 0")};
    const auto r = rank_filter(forms);
    EXPECT_EQ(r.rank, 3u);
    ASSERT_EQ(r.discarded.size(), 2u);
    EXPECT_EQ(r.discarded[0], forms[2]);
    EXPECT_EQ(r.discarded[1], forms[3]);
    EXPECT_EQ(r.kept, (std::vector<LinearForm>{forms[0], forms[1], forms[4], forms[5]}));
}

TEST(RankFilter, InconsistentRowIsIndependent) {
    const auto r = rank_filter({parse_form("i1 + i2 = 1"), parse_form("i1 + i2 = 2")});
    EXPECT_EQ(r.rank, 2u);
    EXPECT_TRUE(r.discarded.empty());
}

TEST(RankFilter, EmptyInput) {
    const auto r = rank_filter({});
    EXPECT_EQ(r.rank, 0u);
    EXPECT_TRUE(r.kept.empty());
}

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace evasive;
using namespace evasive::testing;

namespace {

std::vector<LinearForm> printed() { return printed_forms(lemma_file()); }
std::vector<LinearForm> computed() { return computed_forms(lemma_reports()); }

ConstraintSystem system_of(const std::vector<LinearForm>& forms) {
    return ConstraintSystem::build(catalog10(), poset10(), forms);
}

std::vector<IndicatorAssignment> sorted_columns() {
    auto c = six_columns().columns;
    std::sort(c.begin(), c.end());
    return c;
}

std::set<std::string> labels_of(const std::vector<IndicatorAssignment>& sols) {
    std::set<std::string> out;
    for (const auto& l : label_solutions(sols, six_columns())) out.insert(l.value_or("?"));
    return out;
}

}  // namespace

TEST(SixColumns, TableShape) {
    const auto& t = six_columns();
    EXPECT_EQ(t.labels, (std::vector<std::string>{"A", "A*", "B", "B*", "C", "C*"}));
    EXPECT_EQ(t.rows, catalog10().variable_ids());
    EXPECT_EQ(SolutionTable::parse(t.to_text()).columns, t.columns);
}

TEST(SixColumns, ClosedUnderDuality) {
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"A", "A*"}, {"B", "B*"}, {"C", "C*"}}) {
        EXPECT_EQ(dual(column(a), catalog10()), column(b));
        EXPECT_EQ(dual(column(b), catalog10()), column(a));
    }
}

TEST(SixColumns, Monotone) {
    const auto sys = system_of({});
    for (const auto& c : six_columns().columns) EXPECT_TRUE(sys.satisfied_by(c));
}

TEST(PrintedSystem, ExactlyTheSixColumns) {
    const auto sols = enumerate_solutions(system_of(printed()));
    EXPECT_EQ(sols, sorted_columns());
}

TEST(PrintedSystem, MatchesBruteForce) {
    EXPECT_EQ(enumerate_solutions(system_of(printed())), brute_force(catalog10(), poset10(), printed()));
}

TEST(PrintedSystem, ExtraConstraintsSelectColumns) {
    EXPECT_EQ(labels_of(enumerate_solutions(system_of(printed()).with(parse_form("i2 = 0")))), std::set<std::string>{"A"});
    EXPECT_EQ(labels_of(enumerate_solutions(system_of(printed()).with(parse_form("i1235 = 1")))),
              std::set<std::string>{"A*"});
    EXPECT_EQ(labels_of(enumerate_solutions(system_of(printed()).with(parse_form("iP = 1")).with(parse_form("iPbar = 0")))),
              (std::set<std::string>{"B", "B*", "C", "C*"}));
}

TEST(PrintedSystem, DroppingALemma) {
    // T24 and T18 are implied by the rest together with monotonicity
    const std::set<std::string> needed{"T1", "T4", "T6", "T8"};
    const auto forms = printed();
    const auto& specs = lemma_file().lemmas;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        auto fewer = forms;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
        const auto sols = enumerate_solutions(system_of(fewer));
        for (const auto& c : six_columns().columns) EXPECT_NE(std::find(sols.begin(), sols.end(), c), sols.end());
        if (needed.count(specs[k].name)) EXPECT_GT(sols.size(), 6u) << specs[k].name;
        else EXPECT_EQ(sols.size(), 6u) << specs[k].name;
    }
}

TEST(PrintedSystem, SolutionSetIsDualClosed) {
    const auto sols = enumerate_solutions(system_of(printed()));
    for (const auto& s : sols) EXPECT_NE(std::find(sols.begin(), sols.end(), dual(s, catalog10())), sols.end());
}

TEST(ComputedSystem, EightSolutionsContainingTheSix) {
    const auto sols = enumerate_solutions(system_of(computed()));
    EXPECT_EQ(sols, brute_force(catalog10(), poset10(), computed()));
    ASSERT_EQ(sols.size(), 8u);
    for (const auto& c : six_columns().columns) EXPECT_NE(std::find(sols.begin(), sols.end(), c), sols.end());
    std::vector<IndicatorAssignment> extra;
    for (const auto& s : sols)
        if (std::find(six_columns().columns.begin(), six_columns().columns.end(), s) == six_columns().columns.end())
            extra.push_back(s);
    ASSERT_EQ(extra.size(), 2u);
    EXPECT_TRUE(extra[0] == dual(extra[1], catalog10()));
    std::set<ClassId> ones;
    for (const auto& s : extra)
        if (s.at("12") == 0)
            for (std::size_t k = 0; k < s.values.size(); ++k)
                if (s.values[k]) ones.insert(s.variables[k]);
    EXPECT_EQ(ones, (std::set<ClassId>{"1", "2", "5", "13", "15", "24", "P"}));
}

TEST(ComputedSystem, DualClosed) {
    const auto sols = enumerate_solutions(system_of(computed()));
    for (const auto& s : sols) EXPECT_NE(std::find(sols.begin(), sols.end(), dual(s, catalog10())), sols.end());
}

TEST(Solver, MonotonicityAloneMatchesBruteForce) {
    const auto sols = enumerate_solutions(system_of({}));
    EXPECT_EQ(sols, brute_force(catalog10(), poset10(), {}));
    EXPECT_GT(sols.size(), 20u);
}

TEST(Solver, RandomSystemsMatchBruteForce) {
    std::mt19937 rng(9);
    const auto vars = catalog10().variable_ids();
    for (int t = 0; t < 8; ++t) {
        std::vector<LinearForm> forms;
        for (int f = 0; f < 2; ++f) {
            LinearForm::Coefficients c;
            for (int k = 0; k < 4; ++k) c[vars[rng() % vars.size()]] += static_cast<int>(rng() % 5) - 2;
            forms.emplace_back(c, f == 0 ? Relation::equals(static_cast<int>(rng() % 3) - 1) : Relation::congruent(1, 2));
        }
        EXPECT_EQ(enumerate_solutions(system_of(forms)), brute_force(catalog10(), poset10(), forms)) << t;
    }
}

TEST(Solver, Propagation) {
    const auto mono = system_of({});
    const auto r = propagate(mono, {{"2", 0}, {"5", 1}, {"1234", 0}});
    EXPECT_FALSE(r.contradiction);
    std::set<ClassId> open;
    for (std::size_t v = 0; v < r.values.size(); ++v)
        if (r.values[v] < 0) open.insert(mono.variables()[v]);
    EXPECT_EQ(open, (std::set<ClassId>{"1", "13", "15", "135"}));
    EXPECT_TRUE(propagate(mono, {{"5", 0}, {"1", 1}}).contradiction);
}

TEST(Solver, UnknownVariable) {
    EXPECT_THROW(system_of({parse_form("iP = 1")}).with(parse_form("i3 = 1")), std::exception);
}

TEST(FiveVertices, NoSolutions) {
    const auto cat = build_catalog(5);
    const auto poset = build_poset(cat);
    const auto file = load_lemma_file(data_path("lemmas_n5.json"));
    const auto sys = ConstraintSystem::build(cat, poset, printed_forms(file));
    EXPECT_TRUE(enumerate_solutions(sys).empty());
    EXPECT_EQ(enumerate_solutions(ConstraintSystem::build(cat, poset, {})).size(), 2u);
}

TEST(SolutionTableText, ParseErrors) {
    EXPECT_THROW(SolutionTable::parse("indicator A\ni1 2\n"), std::exception);
    EXPECT_THROW(SolutionTable::parse("indicator A B\ni1 1\n"), std::exception);
}

#include <gtest/gtest.h>

#include "rrbeck/verify.hpp"

namespace rrbeck {
namespace {

const Witness& find(const CheckResult& r, int n, const std::string& label)
{
    for (const auto& w : r.witnesses)
        if (w.n == n && w.label == label)
            return w;
    throw std::logic_error("no witness " + label + " at n=" + std::to_string(n));
}

TEST(FirstIdentity, SmallRange)
{
    const auto r = check_theorem1(4);
    EXPECT_EQ(r.status, CheckStatus::Pass);
    EXPECT_EQ(r.n_min, 0);
    EXPECT_EQ(r.n_max, 4);
    const auto& w = find(r, 4, "excess");
    EXPECT_EQ(w.expected, 2);
    EXPECT_EQ(w.actual, 2);
    ASSERT_EQ(w.routes.size(), 3u);
    EXPECT_EQ(find(r, 4, "t1").expected, 5);
    EXPECT_EQ(find(r, 4, "t2").expected, 3);
}

TEST(FirstIdentity, PairsAtFour)
{
    const std::vector<RectPair> want{{Partition{2}, 1, 2}, {Partition{}, 4, 1}};
    auto got = theorem1_pairs(4);
    std::sort(got.begin(), got.end());
    auto sorted = want;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(got, sorted);
}

TEST(SecondIdentity, SmallRange)
{
    const auto r = check_theorem2(4);
    EXPECT_EQ(r.status, CheckStatus::Pass);
    EXPECT_EQ(r.n_min, 1);
    EXPECT_EQ(find(r, 4, "s1").expected, 2);
    EXPECT_EQ(find(r, 4, "s2").expected, 1);
    EXPECT_EQ(find(r, 4, "excess").expected, 1);
}

TEST(Checks, EmptyAndTinyRanges)
{
    const auto r = check_rr_identities(0);
    EXPECT_EQ(r.status, CheckStatus::Pass);
    EXPECT_FALSE(r.first_failure());
    EXPECT_TRUE(check_theorem2(0).witnesses.empty());
    EXPECT_EQ(check_theorem2(0).status, CheckStatus::Pass);
}

TEST(Checks, Deterministic)
{
    for (const auto& name : check_names()) {
        const auto a = run_check(name, 12);
        const auto b = run_check(name, 12);
        ASSERT_TRUE(a.has_value()) << name;
        EXPECT_EQ(*a, *b) << name;
        EXPECT_NE(a->status, CheckStatus::Fail) << name;
    }
    EXPECT_FALSE(run_check("nope", 3).has_value());
}

TEST(Checks, FinishOrdersAndFlagsFailures)
{
    auto bad = detail::route_witness(3, "x", {{"a", 1}, {"b", 2}, {"c", 1}});
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.expected, 1);
    EXPECT_EQ(bad.actual, 2);
    auto good = detail::route_witness(1, "x", {{"a", 5}, {"b", 5}});
    const auto r = detail::finish("t", 0, 3, {bad, good});
    EXPECT_EQ(r.status, CheckStatus::Fail);
    EXPECT_EQ(r.witnesses.front().n, 1);
    EXPECT_EQ(r.first_failure()->n, 3);
    const auto d = detail::finish("t", 0, 3, {good}, {{2, "forward I1", "obj", "why"}});
    EXPECT_EQ(d.status, CheckStatus::DiagnosticDiscrepancy);
}

TEST(Corollary, EqualityAtOne)
{
    const auto r = check_corollary(20);
    EXPECT_EQ(r.status, CheckStatus::Pass);
    EXPECT_EQ(find(r, 1, "corollary").note, "equality");
    for (const auto& w : r.witnesses) {
        if (w.n > 1) {
            EXPECT_EQ(w.note, "strict") << w.n;
        }
    }
}

TEST(Tables, Rows)
{
    for (auto kind : {TableKind::Rr1Beck, TableKind::Rr2Beck, TableKind::BeckEuler, TableKind::Corollary}) {
        const auto rows = theorem_table(kind, 15);
        ASSERT_EQ(rows.size(), 15u);
        for (const auto& row : rows)
            EXPECT_TRUE(row.match) << row.n;
    }
    const auto rr1 = theorem_table(TableKind::Rr1Beck, 4);
    EXPECT_EQ(rr1[3].lhs, 5);
    EXPECT_EQ(rr1[3].rhs, 3);
    EXPECT_EQ(rr1[3].excess, 2);
    const auto euler = theorem_table(TableKind::BeckEuler, 4);
    EXPECT_EQ(euler[3].lhs, 6);
    EXPECT_EQ(euler[3].rhs, 3);
}

TEST(PsiCoverage, AllLeavesReached)
{
    const auto hit = psi_branch_coverage(70);
    for (auto b : kPsiBranches)
        EXPECT_TRUE(hit.contains(b)) << to_string(b);
}

} // namespace
} // namespace rrbeck

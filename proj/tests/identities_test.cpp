#include "tracech/identities.hpp"
#include "tracech/invariants.hpp"
#include "tracech/involution.hpp"
#include "tracech/io.hpp"
#include "tracech/parse.hpp"

#include <gtest/gtest.h>

using namespace tracech;

namespace {

TEST(TraceChLhs, GenericTwoByTwoFirstThree) {
    const WeightedDigraph g = generic_digraph(2);

    const IdentityReport r1 = trace_ch_lhs(g, 1);
    EXPECT_EQ(r1.branch, Branch::AtMostN);
    ASSERT_EQ(r1.terms.size(), 2u);
    EXPECT_EQ(r1.terms[0].first, "c_1");
    EXPECT_EQ(r1.terms[0].second, parse_expr("a + d", 2));
    EXPECT_EQ(r1.terms[1].first, "1*l_1");
    EXPECT_EQ(r1.terms[1].second, parse_expr("-(a + d)", 2));
    EXPECT_TRUE(r1.holds);

    const IdentityReport r2 = trace_ch_lhs(g, 2);
    EXPECT_EQ(r2.branch, Branch::AtMostN);
    ASSERT_EQ(r2.terms.size(), 3u);
    EXPECT_EQ(r2.terms[2].first, "2*l_2");
    EXPECT_EQ(r2.terms[2].second, parse_expr("2(ad - bc)", 2));
    EXPECT_TRUE(r2.holds);
    EXPECT_TRUE(r2.lhs.is_zero());

    const IdentityReport r3 = trace_ch_lhs(g, 3);
    EXPECT_EQ(r3.branch, Branch::AboveN);
    ASSERT_EQ(r3.terms.size(), 3u);  // c_3, c_2*l_1, c_1*l_2
    EXPECT_EQ(r3.terms[1].first, "c_2*l_1");
    EXPECT_TRUE(r3.holds);

    EXPECT_THROW(trace_ch_lhs(g, 0), std::invalid_argument);
}

TEST(MatrixForm, DiagonalAboveOrder) {
    Matrix m(3, std::vector<RingElement>(3));
    m[0][0] = RingElement(1);
    m[1][1] = RingElement(2);
    m[2][2] = RingElement(3);
    const IdentityReport rep = trace_ch_matrix_form(m, 5);
    EXPECT_EQ(rep.branch, Branch::AboveN);
    EXPECT_TRUE(rep.holds);
}

TEST(MatrixForm, IdentityOrderTwoAtR2) {
    // Tr(A^2) + Tr(A) d_1 + 2 d_2 = 2 - 4 + 2 = 0
    const IdentityReport rep = trace_ch_matrix_form(identity_matrix(2), 2);
    ASSERT_EQ(rep.terms.size(), 3u);
    EXPECT_EQ(rep.terms[0].second, RingElement(2));
    EXPECT_EQ(rep.terms[1].second, RingElement(-4));
    EXPECT_EQ(rep.terms[2].second, RingElement(2));
    EXPECT_TRUE(rep.holds);
}

TEST(MatrixForm, ZeroMatrix) {
    const IdentityReport rep = trace_ch_matrix_form(Matrix(3, std::vector<RingElement>(3)), 2);
    EXPECT_TRUE(rep.holds);
    EXPECT_EQ(rep.lhs, RingElement(0));
}

TEST(Suite, GenericTwoByTwoUpToThree) {
    const SuiteResult res = verify_suite(generic_digraph(2), 3);
    EXPECT_EQ(res.reports.size(), 6u);  // two forms per r
    EXPECT_TRUE(res.all_hold);
    EXPECT_TRUE(res.forms_agree);
}

TEST(Suite, GenericOrderThreeHeadlineRun) {
    const SuiteResult res = verify_suite(generic_digraph(3), 6);
    EXPECT_TRUE(res.all_hold);
    EXPECT_TRUE(res.forms_agree);
    for (const IdentityReport& rep : res.reports) EXPECT_TRUE(rep.lhs.is_zero());
}

TEST(Suite, RandomIntegerMatrices) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 1 + static_cast<int>(seed % 5);
        const WeightedDigraph g = WeightedDigraph::from_matrix(random_entries(n, 500 + seed));
        const SuiteResult res = verify_suite(g, 8);
        EXPECT_TRUE(res.all_hold) << "seed=" << seed << " n=" << n;
        EXPECT_TRUE(res.forms_agree) << "seed=" << seed << " n=" << n;
    }
}

TEST(Suite, BothBranchesOnSymbolicDigraphs) {
    for (int n = 1; n <= 3; ++n) {
        const WeightedDigraph g = generic_digraph(n);
        for (int r = 1; r <= 2 * n; ++r) {
            EXPECT_TRUE(trace_ch_lhs(g, r).holds) << "n=" << n << " r=" << r;
            EXPECT_TRUE(trace_ch_matrix_form(g.to_matrix(), r).holds) << "n=" << n << " r=" << r;
        }
    }
}

TEST(Bridge, PairSumsMatchTheIdentityLeftHandSide) {
    // Sum of W over all pairs, plus r*l_r when r <= n, reproduces the lhs.
    for (int n = 1; n <= 3; ++n) {
        const WeightedDigraph g = generic_digraph(n);
        for (int r = 1; r <= n + 2; ++r) {
            RingElement pair_sum;
            for (const WalkCyclePair& p : enumerate_pairs(g, r)) pair_sum += pair_weight(g, p);
            if (r <= n) pair_sum += repeated_add(ell(g, r), r);
            EXPECT_EQ(pair_sum, trace_ch_lhs(g, r).lhs) << "n=" << n << " r=" << r;
        }
    }
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const WeightedDigraph g = WeightedDigraph::from_matrix(random_entries(n, 600 + seed));
        for (int r = 1; r <= 5; ++r) {
            RingElement pair_sum;
            for (const WalkCyclePair& p : enumerate_pairs(g, r)) pair_sum += pair_weight(g, p);
            if (r <= n) pair_sum += repeated_add(ell(g, r), r);
            EXPECT_EQ(pair_sum, trace_ch_lhs(g, r).lhs);
        }
    }
}

TEST(Bridge, PairSumStratifiesByGammaLength) {
    // Pairs with L(gamma) = k contribute exactly c_{r-k} * l_k.
    const WeightedDigraph g = generic_digraph(2);
    const int r = 4;
    std::vector<RingElement> strata(3);
    for (const WalkCyclePair& p : enumerate_pairs(g, r))
        strata[static_cast<std::size_t>(p.gamma.length())] += pair_weight(g, p);
    for (int k = 0; k <= 2; ++k)
        EXPECT_EQ(strata[static_cast<std::size_t>(k)], c_walks(g, r - k) * ell(g, k)) << "k=" << k;
}

TEST(Json, ReportSerializationShape) {
    const IdentityReport rep = trace_ch_lhs(generic_digraph(2), 2);
    const nlohmann::json j = report_to_json(rep, FormatOptions{2});
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(j.at("r"), 2);
    EXPECT_EQ(j.at("branch"), "AtMostN");
    EXPECT_EQ(j.at("holds"), true);
    EXPECT_EQ(j.at("lhs"), "0");
    ASSERT_EQ(j.at("terms").size(), 3u);
    EXPECT_EQ(j.at("terms").at(0).at("label"), "c_2");
    EXPECT_EQ(j.at("terms").at(0).at("expr"), "a^2 + 2bc + d^2");
}

TEST(Repeated, AdditionActsAsIntegerMultiple) {
    EXPECT_EQ(repeated_add(parse_expr("ad - bc", 2), 3), parse_expr("3ad - 3bc", 2));
    EXPECT_EQ(repeated_add(RingElement(5), 0), RingElement(0));
}

}  // namespace

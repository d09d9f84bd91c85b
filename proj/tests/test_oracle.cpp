#include "hwpl/oracle/checks.hpp"

#include <gtest/gtest.h>

using namespace hwpl::oracle;

namespace {

NilpRep two_cycle(bool invertible_arrow) {
    NilpRep r;
    r.p = 2;
    r.dims = {1, 1};
    r.arrows = {Mat(1, 1), Mat(1, 1)};
    if (invertible_arrow) r.arrows[1](0, 0) = 1;
    return r;
}

} // namespace

TEST(Field, Inverses) {
    const Field f(7);
    for (int a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    EXPECT_THROW(Field(4), hwpl::PreconditionError);
}

TEST(Field, SubspaceCountsAreGaussianBinomials) {
    const Field f(3);
    // 1 + 13 + 13 + 1 subspaces of F_3^3
    EXPECT_EQ(all_subspaces(f, 3).size(), 28u);
    EXPECT_EQ(all_subspaces(Field(2), 4).size(), 67u);
}

TEST(Classify, JordanBlock) {
    const Field f(2);
    EXPECT_EQ(classify(f, build_rep({1, {{0, 2}}})), IsoType(1, {{0, 2}}));
}

TEST(Classify, TwoSimples) { EXPECT_EQ(classify(Field(2), two_cycle(false)), IsoType(2, {{0, 1}, {1, 1}})); }

TEST(Classify, LengthTwo) {
    // arrows[1] maps vertex 1 to vertex 0, so the top sits at vertex 1
    EXPECT_EQ(classify(Field(2), two_cycle(true)), IsoType(2, {{1, 2}}));
}

TEST(Classify, CanonicalRepresentativesRoundTrip) {
    const Field f(3);
    for (int p : {1, 2, 3})
        for (const auto& t : iso_types(p, 4)) EXPECT_EQ(classify(f, build_rep(t)), t);
}

TEST(BruteHall, Values) {
    for (int q : {2, 3, 5}) {
        const Field f(q);
        const IsoType s(1, {{0, 1}});
        EXPECT_EQ(brute_hall(f, s, s, build_rep(s + s)), q + 1);
        EXPECT_EQ(brute_hall(f, s, s, build_rep({1, {{0, 2}}})), 1);
    }
    const Field f(2);
    for (const auto& m : iso_types(2, 3))
        for (const auto& a : iso_types(2, 3))
            EXPECT_EQ(brute_hall(f, a, IsoType(2, {}), build_rep(m)), a == m ? 1 : 0);
}

TEST(BruteAut, Values) {
    for (int q : {2, 3}) {
        const Field f(q);
        EXPECT_EQ(brute_aut(f, build_rep({2, {{0, 3}}})), (q - 1) * q);
        EXPECT_EQ(brute_aut(f, build_rep({3, {{1, 1}}})), q - 1);
    }
    EXPECT_EQ(brute_aut(Field(2), build_rep({1, {{0, 1}, {0, 1}}})), 6);
}

TEST(BruteAut, StructuralCountAgrees) {
    for (int q : {2, 3}) {
        const Field f(q);
        for (int p : {1, 2})
            for (const auto& t : iso_types(p, q == 2 ? 4 : 3)) {
                const auto r = build_rep(t);
                EXPECT_EQ(brute_aut(f, r), structural_aut(f, r, t)) << t.to_string();
            }
    }
}

TEST(BruteAut, ScaleLimit) {
    EXPECT_THROW(brute_aut(Field(3), build_rep({1, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}}), 1e6), hwpl::ScaleError);
}

TEST(Green, SmallCases) {
    const Catalog c2(2, 2, 4);
    const auto r = green_suite(c2);
    EXPECT_TRUE(r.all_pass());
    const auto zero = std::find_if(r.records.begin(), r.records.end(),
                                   [](const CheckRecord& x) { return x.instance == "p=2 q=2 M=0 N=0 X=0 Y=0"; });
    ASSERT_NE(zero, r.records.end());
    EXPECT_EQ(zero->lhs, "1");
    EXPECT_EQ(zero->rhs, "1");
    const auto simple = std::find_if(r.records.begin(), r.records.end(), [](const CheckRecord& x) {
        return x.instance == "p=2 q=2 M=(0,1) N=(0,1) X=(0,1) Y=(0,1)";
    });
    ASSERT_NE(simple, r.records.end());
    EXPECT_TRUE(simple->verdict);
    const Catalog c1(1, 2, 4);
    EXPECT_TRUE(green_suite(c1).all_pass());
}

TEST(Associativity, DimThree) {
    for (int p : {1, 2})
        for (int q : {2, 3}) EXPECT_TRUE(assoc_suite(Catalog(p, q, 3)).all_pass());
}

TEST(RiedtmannPeng, Cases) {
    const Catalog c(1, 2, 4);
    const auto r = rp_suite(c);
    EXPECT_TRUE(r.all_pass());
    const auto ss = std::find_if(r.records.begin(), r.records.end(),
                                 [](const CheckRecord& x) { return x.instance == "p=1 q=2 A=(0,1) B=(0,1)"; });
    ASSERT_NE(ss, r.records.end());
    EXPECT_EQ(ss->lhs, "2");
    EXPECT_EQ(ss->rhs, "2");
    EXPECT_TRUE(rp_suite(Catalog(2, 3, 4)).all_pass());
}

TEST(Rotation, Sweep) {
    EXPECT_TRUE(rotation_suite(Catalog(2, 2, 3)).all_pass());
    EXPECT_TRUE(rotation_suite(Catalog(1, 3, 3)).all_pass());
}

TEST(ExtCensus, TotalsMatchExtDimension) {
    const Field f(3);
    for (const auto& x : iso_types(2, 2))
        for (const auto& y : iso_types(2, 2)) {
            const auto e = ext_census(f, build_rep(x), build_rep(y));
            std::int64_t total = 0;
            for (const auto& [t, n] : e.by_middle) total += n;
            std::int64_t expect = 1;
            for (int i = 0; i < e.ext_dim; ++i) expect *= 3;
            EXPECT_EQ(total, expect);
            // the split extension has middle term X + Y
            EXPECT_EQ(e.by_middle.at(x + y), 1);
        }
}

TEST(PointCount, Values) {
    EXPECT_EQ(ordinary_point_count(1, 5, 3), 3);
    EXPECT_EQ(ordinary_point_count(2, 3, 3), 3);
    EXPECT_EQ(ordinary_point_count(1, 2, 3), 0);
    EXPECT_EQ(ordinary_point_count(3, 2, 3), 2);
    EXPECT_EQ(ordinary_point_count(6, 2, 0), 9);
}

TEST(SEnumerate, Values) {
    AutCache auts;
    const hwpl::WeightType w({2, 3, 5});
    EXPECT_EQ(s_enumerate_at(w, 0, {hwpl::TubeIndec::exceptional(w, 2, 1, 2)}, 5, auts).value, 1);
    EXPECT_EQ(s_enumerate_at(w, 1, {}, 5, auts).value, 3);
    EXPECT_EQ(s_enumerate_at(w, 1, {}, 7, auts).value, 5);
    EXPECT_EQ(s_enumerate_at(w, 2, {}, 5, auts).value, 87);
    EXPECT_EQ(s_enumerate_at(w, 0, {}, 5, auts).value, hwpl::Rational(1, 4));
}

TEST(SEnumerate, RejectsBadSigma) {
    AutCache auts;
    const hwpl::WeightType w({2, 3, 5});
    EXPECT_THROW(s_enumerate_at(w, 1, {hwpl::TubeIndec::exceptional(w, 1, 0, 2)}, 5, auts), hwpl::PreconditionError);
    EXPECT_THROW(s_enumerate_at(w, 1, {hwpl::TubeIndec::exceptional(w, 3, 0, 1), hwpl::TubeIndec::exceptional(w, 3, 1, 2)},
                                5, auts),
                 hwpl::PreconditionError);
}

TEST(SEnumerate, SuiteMatchesClosedForm) {
    EXPECT_TRUE(s_enum_suite(hwpl::WeightType({2, 2, 2}), {0, 1, 2}, {0, 1, 2, 3}, {5, 7}).all_pass());
    EXPECT_TRUE(s_enum_suite(hwpl::WeightType({2, 3, 5}), {0, 1, 2}, {0, 1, 2, 3}, {5}).all_pass());
}

TEST(Parallel, DeterministicAcrossThreadCounts) {
    const Catalog c(2, 2, 3);
    setenv("HWPL_THREADS", "1", 1);
    const auto a = green_suite(c);
    setenv("HWPL_THREADS", "4", 1);
    const auto b = green_suite(c);
    unsetenv("HWPL_THREADS");
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].instance, b.records[i].instance);
        EXPECT_EQ(a.records[i].lhs, b.records[i].lhs);
    }
}

TEST(Parallel, RethrowsWorkerErrors) {
    setenv("HWPL_THREADS", "3", 1);
    EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                     if (i == 7) throw hwpl::InconsistencyError("boom");
                 }),
                 hwpl::InconsistencyError);
    unsetenv("HWPL_THREADS");
}

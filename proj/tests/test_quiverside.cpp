#include "hwpl/quiverside.hpp"

#include <gtest/gtest.h>

using hwpl::LaurentPoly;
using hwpl::QuiverCase;
using hwpl::QuiverFamily;
using hwpl::QuiverHallCase;
using hwpl::TubeIndec;
using hwpl::WeightType;
using hwpl::oracle::IsoType;

namespace {
const LaurentPoly q = LaurentPoly::q();
} // namespace

TEST(QuiverFamily, WeightTable) {
    EXPECT_EQ(hwpl::weight_of_type(QuiverFamily::parse("E~8")), WeightType({2, 3, 5}));
    EXPECT_EQ(hwpl::weight_of_type(QuiverFamily::parse("E~7")), WeightType({2, 3, 4}));
    EXPECT_EQ(hwpl::weight_of_type(QuiverFamily::parse("E~6")), WeightType({2, 3, 3}));
    EXPECT_EQ(hwpl::weight_of_type(QuiverFamily::parse("D~(4)")), WeightType({2, 2, 2}));
    EXPECT_EQ(hwpl::weight_of_type(QuiverFamily::parse("D~(9)")), WeightType({2, 2, 7}));
    EXPECT_EQ(hwpl::weight_of_type(QuiverFamily::parse("A~(2,3)")), WeightType({2, 3}));
}

TEST(QuiverFamily, InvalidParameters) {
    EXPECT_THROW(QuiverFamily::parse("D~(3)"), hwpl::PreconditionError);
    EXPECT_THROW(QuiverFamily::parse("A~(0,2)"), hwpl::PreconditionError);
    EXPECT_THROW(QuiverFamily::parse("E~9"), hwpl::PreconditionError);
    EXPECT_THROW(QuiverFamily::parse("F~4"), hwpl::ParseError);
    EXPECT_THROW(hwpl::weight_of_type(QuiverFamily::parse("A~(1,3)")), hwpl::UnsupportedError);
    EXPECT_EQ(QuiverFamily::parse("A~(2,5)").to_string(), "A~(2,5)");
}

TEST(Preprojective, Examples) {
    QuiverHallCase c;
    c.tag = QuiverCase::LinesToBundle;
    c.n = 0;
    EXPECT_EQ(hwpl::quiver_hall_preprojective(c).value, LaurentPoly(1));
    c.tag = QuiverCase::BundleHomogeneous;
    c.d = 1;
    c.n = 1;
    EXPECT_EQ(hwpl::quiver_hall_preprojective(c).value, q - 3);
    c.tag = QuiverCase::BundleExceptional;
    c.n = -1;
    EXPECT_EQ(hwpl::quiver_hall_preprojective(c).value, LaurentPoly(1));
    c.n.reset();
    c.euler = 3;
    EXPECT_EQ(hwpl::quiver_hall_preprojective(c).value, q - 2);
}

TEST(Preprojective, DelegatesToSheafSide) {
    const WeightType w({2, 3, 5});
    QuiverHallCase c;
    c.tag = QuiverCase::LineTorsion;
    c.weights = w;
    c.l1 = hwpl::LElement::zero(w);
    c.l2 = hwpl::LElement::c(w);
    c.s = hwpl::TorsionSheaf(TubeIndec::homogeneous(1, 1));
    EXPECT_EQ(hwpl::quiver_hall_preprojective(c).value, LaurentPoly(1));
    c.tag = QuiverCase::SplitMiddle;
    c.l2 = c.l1;
    c.s_sub = TubeIndec::homogeneous(1, 1);
    EXPECT_EQ(hwpl::quiver_hall_preprojective(c).value, q);
}

TEST(Preprojective, TwoWeightsRejectDefectMinusTwo) {
    QuiverHallCase c;
    c.tag = QuiverCase::LinesToBundle;
    c.weights = hwpl::weight_of_type(QuiverFamily::parse("A~(2,3)"));
    c.n = 1;
    EXPECT_THROW(hwpl::quiver_hall_preprojective(c), hwpl::UnsupportedError);
    c.weights = hwpl::weight_of_type(QuiverFamily::parse("D~(5)"));
    EXPECT_EQ(hwpl::quiver_hall_preprojective(c).value, q - 2);
}

TEST(Preprojective, MissingDataNamed) {
    QuiverHallCase c;
    c.tag = QuiverCase::LinesToBundle;
    try {
        hwpl::quiver_hall_preprojective(c);
        FAIL();
    } catch (const hwpl::PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("--n"), std::string::npos);
    }
}

TEST(Preinjective, Examples) {
    QuiverHallCase c;
    c.assume_exists = true;
    c.tag = QuiverCase::InjProj;
    c.r = TubeIndec::homogeneous(1, 1);
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), LaurentPoly(1));
    c.tag = QuiverCase::InjReg;
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), LaurentPoly(1));
    c.tag = QuiverCase::InjBundle;
    c.n = 1;
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), LaurentPoly(1));
    c.n = 3;
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), hwpl::f_poly(2));
}

TEST(Preinjective, RequiresExistenceFlag) {
    QuiverHallCase c;
    c.tag = QuiverCase::InjReg;
    EXPECT_THROW(hwpl::quiver_hall_preinjective(c), hwpl::PreconditionError);
}

TEST(Preinjective, InjProjTimesQMinusOneIsAut) {
    const WeightType w({2, 3, 5});
    std::vector<TubeIndec> rs;
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 4; ++n) rs.push_back(TubeIndec::homogeneous(d, n));
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < w.weight(i); ++j)
            for (int n = 1; n <= 7; ++n) rs.push_back(TubeIndec::exceptional(w, i, j, n));
    for (const auto& r : rs) {
        QuiverHallCase c;
        c.tag = QuiverCase::InjProj;
        c.assume_exists = true;
        c.r = r;
        EXPECT_EQ(hwpl::quiver_hall_preinjective(c) * (q - 1), hwpl::aut_count(r)) << r.to_string();
    }
}

TEST(Preinjective, HomogeneousMatchesSheafFormula) {
    for (int d = 1; d <= 2; ++d)
        for (int n = 1; n <= 3; ++n) {
            QuiverHallCase c;
            c.tag = QuiverCase::InjHomogeneous;
            c.assume_exists = true;
            c.r = TubeIndec::homogeneous(d, n);
            const auto prefactor = *hwpl::exact_divide(hwpl::aut_count(*c.r), q - 1);
            EXPECT_EQ(hwpl::exact_divide(hwpl::quiver_hall_preinjective(c), prefactor), hwpl::homog_torsion_formula(d, n));
        }
}

TEST(Preinjective, ExceptionalUsesNegatedEuler) {
    const WeightType w({2, 2, 2});
    QuiverHallCase c;
    c.tag = QuiverCase::InjExceptional;
    c.weights = w;
    c.assume_exists = true;
    c.r = TubeIndec::exceptional(w, 1, 0, 2);
    c.euler = 3;  // N = floor(-3/2) + 1 = -1
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), LaurentPoly(1));
    c.euler = -2;  // N = 2
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), hwpl::except_torsion_formula(2));
    c.r = TubeIndec::exceptional(w, 1, 0, 4);
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), q * hwpl::except_torsion_formula(2));
}

TEST(Preinjective, InjProjReg) {
    const WeightType w({2, 3, 5});
    QuiverHallCase c;
    c.tag = QuiverCase::InjProjReg;
    c.assume_exists = true;
    c.r = TubeIndec::homogeneous(1, 3);
    c.hom = 1;
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), q);
    c.hom = -1;
    EXPECT_THROW(hwpl::quiver_hall_preinjective(c), hwpl::PreconditionError);
    c.hom.reset();
    c.l1 = hwpl::LElement::zero(w);
    c.r1 = hwpl::TorsionSheaf(TubeIndec::homogeneous(1, 1));
    EXPECT_EQ(hwpl::quiver_hall_preinjective(c), q);
}

TEST(DerivedRotation, ZeroObjects) {
    const auto r = hwpl::derived_rotation_check(IsoType(1, {}), IsoType(1, {}), 2);
    EXPECT_TRUE(r.verdict);
    ASSERT_EQ(r.records.size(), 1u);
    EXPECT_EQ(r.records[0].lhs, "G=1");
}

TEST(DerivedRotation, JordanSimples) {
    const IsoType s(1, {{0, 1}});
    const auto r = hwpl::derived_rotation_check(s, s, 2);
    EXPECT_TRUE(r.verdict);
    const auto it = std::find_if(r.records.begin(), r.records.end(),
                                 [](const auto& x) { return x.instance.find("L=(0,2)") != std::string::npos; });
    ASSERT_NE(it, r.records.end());
    EXPECT_TRUE(it->verdict);
}

TEST(DerivedRotation, RankTwoSweep) {
    for (const auto& x : hwpl::oracle::iso_types(2, 3))
        for (const auto& y : hwpl::oracle::iso_types(2, 3)) {
            if (x.dim() + y.dim() > 3) continue;
            EXPECT_TRUE(hwpl::derived_rotation_check(x, y, 2).verdict) << x.to_string() << " " << y.to_string();
        }
}

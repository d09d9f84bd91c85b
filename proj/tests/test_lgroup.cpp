#include "hwpl/lgroup.hpp"

#include <gtest/gtest.h>

using hwpl::LElement;
using hwpl::WeightType;

namespace {
const WeightType w235({2, 3, 5});
const WeightType w222({2, 2, 2});
} // namespace

TEST(WeightType, ParseAndValidate) {
    EXPECT_EQ(WeightType::parse("2,3,5"), w235);
    EXPECT_EQ(w235.weight(3), 5);
    EXPECT_THROW(WeightType::parse("2,x"), hwpl::ParseError);
    EXPECT_THROW(WeightType({2}), hwpl::PreconditionError);
    EXPECT_THROW(WeightType({2, 1, 3}), hwpl::PreconditionError);
    EXPECT_THROW(w235.weight(4), hwpl::PreconditionError);
    EXPECT_THROW(WeightType({2, 3}).require_three("x"), hwpl::UnsupportedError);
}

TEST(LElement, NormalFormCarriesIntoC) {
    const auto e = LElement::normal_form(w235, {3, 0, 0}, 0);
    EXPECT_EQ(e.coefficient(1), 1);
    EXPECT_EQ(e.coefficient(2), 0);
    EXPECT_EQ(e.coefficient(3), 0);
    EXPECT_EQ(e.c_coefficient(), 1);
}

TEST(LElement, ZeroIsZero) { EXPECT_TRUE(LElement::normal_form(w235, {0, 0, 0}, 0).is_zero()); }

TEST(LElement, OmegaNormalForm) {
    const auto w = LElement::normal_form(w235, {-1, -1, -1}, 1);
    EXPECT_EQ(w, LElement::omega(w235));
    EXPECT_EQ(w.to_string(), "1,2,4;-2");
    EXPECT_FALSE(w.is_effective());
}

TEST(LElement, RelationPxEqualsC) {
    const auto x1 = LElement::x(w235, 1);
    EXPECT_EQ(hwpl::combine(x1, w235.weight(1) - 1, x1), LElement::c(w235));
}

TEST(LElement, CombineIdentities) {
    const auto a = LElement::parse(w235, "1,2,3;4");
    const auto b = LElement::parse(w235, "0,1,1;-7");
    EXPECT_EQ(hwpl::combine(a, 0, b), a);
    const auto om = LElement::omega(w235);
    EXPECT_TRUE((om + (-1) * om).is_zero());
}

TEST(LElement, OrderAndEffectiveness) {
    EXPECT_TRUE(LElement::zero(w235).is_effective());
    EXPECT_TRUE(hwpl::leq(LElement::zero(w235), LElement::c(w235)));
    EXPECT_FALSE(hwpl::leq(LElement::c(w235), LElement::zero(w235)));
}

TEST(LElement, TwiceOmegaIsMinusCForThreeTwos) {
    const auto two_omega = 2 * LElement::omega(w222);
    EXPECT_EQ(two_omega.to_string(), "0,0,0;-1");
    EXPECT_EQ(two_omega, -LElement::c(w222));
}

TEST(LElement, ParseAcceptsRawValues) {
    EXPECT_EQ(LElement::parse(w235, "3,0,0"), LElement::normal_form(w235, {1, 0, 0}, 1));
    EXPECT_EQ(LElement::parse(w235, "-1,-1,-1;1"), LElement::omega(w235));
    EXPECT_THROW(LElement::parse(w235, "1,2"), hwpl::ParseError);
    EXPECT_THROW(LElement::parse(w235, "1,2,a;0"), hwpl::ParseError);
}

TEST(LElement, GroupLawsOnASweep) {
    std::vector<LElement> els;
    for (int a = -2; a <= 2; ++a)
        for (int b = -3; b <= 3; b += 2)
            for (int c = -1; c <= 1; ++c) els.push_back(LElement::normal_form(w235, {a, b, 2 * c}, c));
    for (const auto& x : els)
        for (const auto& y : els) {
            EXPECT_EQ(x + y, y + x);
            EXPECT_EQ((x - y) + y, x);
            for (int i = 1; i <= 3; ++i) {
                EXPECT_GE((x + y).coefficient(i), 0);
                EXPECT_LT((x + y).coefficient(i), w235.weight(i));
            }
        }
}

/*
   Copyright 2026 The hmdist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "hmdist/cohomology.hpp"
#include "hmdist/intersection_ring.hpp"
#include "hmdist/poly_parse.hpp"

using namespace hmdist;

using IC = IntersectionClass<Rational>;

namespace {
IC ic(std::vector<long> v) {
    std::vector<Rational> r;
    for (long x : v) r.push_back(Rational(x));
    return IC(4, r);
}
}  // namespace

TEST(IntersectionClass, TruncatedProduct) {
    IC h = IC::linear(4, Rational(0), Rational(1));
    EXPECT_EQ(ic_pow(h, 4), ic({0, 0, 0, 0, 1}));
    EXPECT_TRUE(ic_pow(h, 5) == IC(4));
    EXPECT_EQ(ic_pow(ic({1, 1}), 5), ic({1, 5, 10, 10, 5}));
    EXPECT_EQ(ic_inverse(ic({1, 1})), ic({1, -1, 1, -1, 1}));
    EXPECT_EQ(ic_pow(ic({1, 1}), -1), ic_inverse(ic({1, 1})));
}

TEST(IntersectionClass, DimensionChecks) {
    EXPECT_THROW(IC(2) + IC(3), DimensionMismatch);
    EXPECT_THROW(IC(2, {1, 2, 3, 4}), DimensionMismatch);
    EXPECT_THROW(ic_inverse(ic({0, 1})), std::exception);
}

TEST(SheafClass, TangentBundle) {
    auto t = tangent_bundle<Rational>(4);
    EXPECT_EQ(t.rank, 4);
    EXPECT_EQ(t.chern, ic({1, 5, 10, 10, 5}));
    EXPECT_EQ(hrr(t), Rational(24));
    auto om = cotangent_bundle<Rational>(4);
    EXPECT_EQ(om.chern, ic({1, -5, 10, -10, 5}));
    EXPECT_EQ(hrr(om), Rational(-1));
}

TEST(SheafClass, TwistRule) {
    EXPECT_EQ(twist(line_bundle<Rational>(4, Rational(2)), 3L).chern, line_bundle<Rational>(4, Rational(5)).chern);
    auto e = hm_bundle<Rational>();
    auto e3 = twist(e, -3L);
    EXPECT_EQ(e3.c(1), Rational(-1));
    EXPECT_EQ(e3.c(2), Rational(4));
    EXPECT_EQ(dual(e).c(1), Rational(-5));
    EXPECT_EQ(dual(e).c(2), Rational(10));
}

TEST(SheafClass, ProductFormulasOnSplitBundles) {
    auto l = [](long k) { return line_bundle<Rational>(4, Rational(k)); };
    auto e = direct_sum(direct_sum(l(1), l(2)), direct_sum(l(-1), l(3)));
    auto w2 = wedge2_rank4(e);
    IC expect = IC::one(4);
    long ks[] = {1, 2, -1, 3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) expect = expect * l(ks[i] + ks[j]).chern;
    EXPECT_EQ(w2.rank, 6);
    EXPECT_EQ(w2.chern, expect);
    auto f = direct_sum(l(2), l(-3));
    EXPECT_EQ(sym2_rank2(f).chern, l(4).chern * l(-1).chern * l(-6).chern);
    EXPECT_EQ(tensor_rank4_rank2(e, f).rank, 8);
    EXPECT_EQ(tensor_rank4_rank2(e, f).chern, tensor(e, f).chern);
    EXPECT_THROW(wedge2_rank4(f), RankMismatch);
}

TEST(SheafClass, HrrMatchesLineBundleBinomials) {
    for (long d = -8; d <= 8; ++d) {
        Rational b = Rational(d + 1) * Rational(d + 2) * Rational(d + 3) * Rational(d + 4) / Rational(24);
        EXPECT_EQ(hrr(line_bundle<Rational>(4, Rational(d))), b) << d;
    }
    EXPECT_EQ(hrr(line_bundle<Rational>(2, Rational(3))), Rational(10));
}

TEST(SheafClass, HrrOfHmTensorMatchesTable) {
    auto ee = tensor(hm_bundle<Rational>(), hm_bundle<Rational>());
    for (long k = -16; k <= 2; ++k) EXPECT_EQ(hrr(twist(ee, k)), hm_tensor_table().chi(k)) << k;
}

TEST(SheafClass, ChernCharacterRoundTrip) {
    auto e = hm_bundle<Rational>();
    auto back = chern_from_character(chern_character(e));
    EXPECT_EQ(back.rank, 2);
    EXPECT_EQ(back.chern, e.chern);
}

TEST(SheafClass, SymbolicCoefficients) {
    VarTable vars;
    vars.allow_new = true;
    QPoly a = parse_poly("a", vars);
    auto e = twist(hm_bundle<QPoly>(), a);
    EXPECT_EQ(e.c(1), parse_poly("5 + 2*a", vars));
    EXPECT_EQ(e.c(2), parse_poly("10 + 5*a + a^2", vars));
    QPoly chi = hrr(e);
    for (long k = -3; k <= 3; ++k) EXPECT_EQ(chi.evaluate({Rational(k)}), hm_table().chi(k));
}

TEST(IdealSheaf, ClassRoundTrip) {
    auto i = ideal_sheaf_class(Integer(3), Integer(0));
    for (long t = -2; t <= 3; ++t) {
        auto [deg, pa] = read_ideal_class(twist(i, t).chern, Rational(t));
        EXPECT_EQ(deg, Rational(3));
        EXPECT_EQ(pa, Rational(0));
        Rational expect = hrr(line_bundle<Rational>(4, Rational(t))) - Rational(3 * t + 1);
        EXPECT_EQ(hrr(twist(i, t)), expect);
    }
    EXPECT_THROW(ideal_sheaf_class(Integer(0), Integer(0)), std::invalid_argument);
}

TEST(Numerics, StabilityConditions) {
    EXPECT_TRUE(bogomolov_violated(Rational(0), Rational(0)));
    EXPECT_FALSE(bogomolov_semistable_violated(Rational(0), Rational(0)));
    EXPECT_FALSE(bogomolov_violated(Rational(-1), Rational(4)));
    EXPECT_TRUE(schwarzenberger_s42(Integer(-1), Integer(4)));
    EXPECT_FALSE(schwarzenberger_s42(Integer(0), Integer(1)));
    auto n = normalize_rank2(hm_bundle<Rational>());
    EXPECT_EQ(n.twist_amount, -3);
    EXPECT_EQ(n.sheaf.c(1), Rational(-1));
}

TEST(EagonNorthcott, SplitExamples) {
    auto l = [](long k) { return line_bundle<Rational>(4, Rational(k)); };
    auto [d1, p1] = read_ideal_class(eagon_northcott_ideal_class(direct_sum(l(-2), l(-2)), Side::Conormal), Rational(0));
    EXPECT_EQ(d1, Rational(2));
    EXPECT_EQ(p1, Rational(0));
    auto [d2, p2] = read_ideal_class(eagon_northcott_ideal_class(direct_sum(l(1), l(0)), Side::Tangent), Rational(-1));
    EXPECT_EQ(d2, Rational(4));
    EXPECT_EQ(p2, Rational(0));
}

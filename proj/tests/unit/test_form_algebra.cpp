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

#include "hmdist/form_algebra.hpp"
#include "hmdist/poly_parse.hpp"

using namespace hmdist;

namespace {
using F = PForm<Rational>;
using V = PolyMultiVector<Rational>;
QPoly P(const std::string& s) { return parse_poly(s, projective_vars()); }
F dz(int c, std::vector<int> idx, const std::string& coeff = "1") { return F::term(c, idx, P(coeff)); }
V Dz(int c, std::vector<int> idx, const std::string& coeff = "1") { return V::term(c, idx, P(coeff)); }
}  // namespace

TEST(Masks, Signs) {
    EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
    EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
    EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
    EXPECT_EQ(permutation_sign({1, 1}), 0);
    EXPECT_EQ(mask_indices(indices_mask({3, 0})), (std::vector<int>{0, 3}));
    EXPECT_EQ(merge_sign(0b10, 0b01), -1);
    EXPECT_EQ(merge_sign(0b01, 0b10), 1);
    EXPECT_EQ(merge_sign(0b01, 0b01), 0);
}

TEST(Forms, WedgeIsGradedCommutative) {
    EXPECT_EQ(wedge(dz(5, {0}), dz(5, {1})), -wedge(dz(5, {1}), dz(5, {0})));
    EXPECT_TRUE(wedge(dz(5, {2}), dz(5, {2})).is_zero());
    EXPECT_TRUE(dz(5, {1, 1}).is_zero());
    EXPECT_EQ(dz(5, {1, 0}, "z2"), dz(5, {0, 1}, "-z2"));
    EXPECT_EQ(dz(5, {1, 0}).coefficient({0, 1}), QPoly(-1));
    F a = dz(5, {0, 1}), b = dz(5, {2, 3});
    EXPECT_EQ(wedge(a, b), wedge(b, a));
    EXPECT_EQ(wedge(dz(5, {0, 1, 2}), dz(5, {3, 4})).degree(), 5);
}

TEST(Forms, ExteriorDerivative) {
    EXPECT_EQ(ext_d(dz(5, {1}, "z0")), dz(5, {0, 1}));
    EXPECT_EQ(ext_d(F::scalar(3, P("z0*z1^2"))), dz(3, {0}, "z1^2") + dz(3, {1}, "2*z0*z1"));
    EXPECT_TRUE(ext_d(ext_d(F::scalar(4, P("z0^3*z2 - z1*z3")))).is_zero());
}

TEST(Forms, Contraction) {
    auto r = radial_field<Rational>(5);
    EXPECT_EQ(contract(r, dz(5, {0})), F::scalar(5, P("z0")));
    EXPECT_EQ(contract(r, dz(5, {0, 1})), dz(5, {1}, "z0") - dz(5, {0}, "z1"));
    EXPECT_TRUE(contract(r, contract(r, dz(5, {0, 1, 2}))).is_zero());
    EXPECT_THROW(contract(Dz(5, {0, 1}), dz(5, {0})), DegreeMismatch);
}

TEST(Forms, DegreeChecks) {
    F a(5, 1);
    EXPECT_THROW(a.add(0b11, P("z0")), DegreeMismatch);
    EXPECT_THROW(dz(5, {0}) + dz(5, {0, 1}), DegreeMismatch);
    EXPECT_THROW(F(5, 6), DegreeMismatch);
    EXPECT_THROW(dz(3, {4}), std::out_of_range);
}

TEST(Forms, Frobenius) {
    EXPECT_TRUE(frobenius_1form(dz(5, {0}, "z1")).is_zero());
    EXPECT_FALSE(frobenius_1form(dz(3, {2}) - dz(3, {0}, "z1")).is_zero());
    auto [a, b] = integrability_2form(dz(5, {0}), dz(5, {1}));
    EXPECT_TRUE(a.is_zero());
    EXPECT_TRUE(b.is_zero());
}

TEST(Fields, Brackets) {
    V d0 = Dz(3, {0}), v = Dz(3, {1}, "z0");
    EXPECT_EQ(lie_bracket(d0, v), Dz(3, {1}));
    EXPECT_EQ(schouten(d0, v), lie_bracket(d0, v));
    EXPECT_EQ(apply_field(v, P("z1^2")), P("2*z0*z1"));
    V biv = Dz(3, {0, 1});
    V f = V::scalar(3, P("z0*z1"));
    EXPECT_EQ(schouten(biv, f), Dz(3, {0}, "z0") - Dz(3, {1}, "z1"));
    EXPECT_EQ(schouten(biv, biv).degree(), 3);
    EXPECT_TRUE(schouten(biv, biv).is_zero());
}

TEST(Fields, EngelFlagsOnStandardModel) {
    V v1 = Dz(4, {3});
    V v2 = Dz(4, {0}) + Dz(4, {1}, "z2") + Dz(4, {2}, "z3");
    auto f = engel_flags(v1, v2);
    EXPECT_TRUE(f.nonintegrable);
    EXPECT_TRUE(f.f1_nonintegrable);
    EXPECT_TRUE(f.engel());
    EXPECT_FALSE(engel_flags(Dz(4, {0}), Dz(4, {1})).nonintegrable);
    auto contact = engel_flags(Dz(3, {1}), Dz(3, {0}) + Dz(3, {2}, "z1"));
    EXPECT_TRUE(contact.nonintegrable);
    EXPECT_FALSE(contact.f1_nonintegrable);
}

TEST(Forms, EngelFlagsOnStandardModel) {
    F w1 = dz(4, {1}) - dz(4, {0}, "z2");
    F w2 = dz(4, {2}) - dz(4, {0}, "z3");
    auto f = engel_flags(w1, w2);
    EXPECT_TRUE(f.engel());
    ASSERT_EQ(f.form_chain.size(), 4u);
    EXPECT_EQ(f.form_chain[2].degree(), 1);
    EXPECT_FALSE(engel_flags(dz(4, {0}), dz(4, {1})).nonintegrable);
}

TEST(Forms, TwistedFormValidation) {
    F w = dz(5, {1, 2}, "z0") - dz(5, {0, 2}, "z1") + dz(5, {0, 1}, "z2");
    EXPECT_TRUE(validate_twisted_form(w, 0));
    EXPECT_FALSE(validate_twisted_form(w, 1));
    EXPECT_FALSE(validate_twisted_form(dz(5, {1, 2}, "z0"), 0));
    EXPECT_TRUE(singular_point_check(w, {0, 0, 0, 1, 1}));
    EXPECT_FALSE(singular_point_check(w, {1, 0, 0, 0, 0}));
    EXPECT_THROW(singular_point_check(w, {0, 0, 0, 0, 0}), ZeroPoint);
}

TEST(Forms, AffineChart) {
    F w = dz(5, {1}, "z0") - dz(5, {0}, "z1");
    EXPECT_EQ(affine_chart(w, 0), dz(5, {1}));
    EXPECT_EQ(specialize(w, 1, P("z2")), dz(5, {1}, "z0") - dz(5, {0}, "z2"));
}

TEST(Matrices, InverseAndPullback) {
    Matrix<Rational> m{{1, 2}, {3, 4}};
    auto inv = matrix_inverse(m);
    EXPECT_EQ(inv, (Matrix<Rational>{{-2, 1}, {Rational(3, 2), Rational(-1, 2)}}));
    EXPECT_THROW(matrix_inverse(Matrix<Rational>{{1, 2}, {2, 4}}), SingularMatrix);
    Matrix<Rational> swap{{0, 1}, {1, 0}};
    QPoly f = parse_poly("z0*z1", projective_vars());
    EXPECT_EQ(invariance_scalar(f, swap), Rational(1));
    EXPECT_EQ(invariance_scalar(parse_poly("z0 - z1", projective_vars()), swap), Rational(-1));
    EXPECT_FALSE(invariance_scalar(parse_poly("z0", projective_vars()), swap).has_value());
    F w = dz(2, {0, 1});
    EXPECT_EQ(invariance_scalar(w, swap), Rational(-1));
    EXPECT_EQ(invariance_scalar(w, m), Rational(-2));
}

TEST(Pencil, HeisenbergInvariance) {
    auto rho = to_cyclotomic(pencil_bivector());
    EXPECT_EQ(invariance_scalar(rho, hm_sigma()), Cyclo5(1));
    // The printed coefficient mixes z_i^2 with cubic terms of different
    // character weight, so tau does not act by a scalar.
    EXPECT_FALSE(invariance_scalar(rho, hm_tau()).has_value());
    for (const auto& f : scroll_cubics()) {
        EXPECT_EQ(f.homogeneous_degree(0, 5), 3);
        EXPECT_TRUE(invariance_scalar(to_cyclotomic(f), hm_tau()).has_value());
    }
    EXPECT_EQ(scroll_cubics().size(), 5u);
    EXPECT_EQ(pencil_vars().size(), 7u);
}

TEST(Pencil, DecomposableMembers) {
    Cyclo5 s = Cyclo5::sqrt5();
    for (Cyclo5 lam : {Cyclo5(1) + s, Cyclo5(1) - s}) {
        auto sigma = constant_pencil_bivector(lam, Cyclo5(2));
        EXPECT_TRUE(wedge(sigma, sigma).is_zero());
    }
    auto generic = constant_pencil_bivector(Cyclo5(1), Cyclo5(1));
    EXPECT_FALSE(wedge(generic, generic).is_zero());
}

TEST(Pencil, SpecializationMatchesSymbolic) {
    auto sym = to_cyclotomic(pencil_bivector());
    auto num = pencil_bivector(Cyclo5(3), Cyclo5(-2));
    auto spec = specialize(specialize(sym, 5, CPoly(Cyclo5(3))), 6, CPoly(Cyclo5(-2)));
    EXPECT_EQ(spec, num);
}

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

#include "hmdist/multipoly.hpp"
#include "hmdist/poly_parse.hpp"

using namespace hmdist;

namespace {
QPoly P(const std::string& s) { return parse_poly(s, projective_vars()); }
}  // namespace

TEST(MultiPoly, NoZeroTermsStored) {
    QPoly p = P("z0 + z1") - P("z1");
    EXPECT_EQ(p.size(), 1u);
    EXPECT_TRUE((p - P("z0")).is_zero());
    EXPECT_EQ(QPoly(0).size(), 0u);
}

TEST(MultiPoly, WideningComparesEqual) {
    QPoly a = QPoly::variable(1, 0);
    QPoly b = QPoly::variable(5, 0);
    EXPECT_EQ(a, b);
    EXPECT_EQ((a + b).nvars(), 5u);
}

TEST(MultiPoly, ArithmeticAndPowers) {
    EXPECT_EQ(P("(z0 + z1)^2"), P("z0^2 + 2*z0*z1 + z1^2"));
    EXPECT_EQ(P("(z0 - z1)*(z0 + z1)"), P("z0^2 - z1^2"));
    EXPECT_EQ(P("z2").pow(0), QPoly(1));
    EXPECT_EQ(P("z0/2 + z0/2"), P("z0"));
}

TEST(MultiPoly, DegreeAndHomogeneity) {
    QPoly p = P("z0^2*z1 + z3^3");
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.homogeneous_degree(), 3);
    EXPECT_FALSE(P("z0 + 1").homogeneous_degree().has_value());
    EXPECT_EQ(QPoly().degree(), -1);
    EXPECT_EQ(p.degree(0, 1), 2);
}

TEST(MultiPoly, DerivativeSubstituteEvaluate) {
    QPoly p = P("z0^3*z1 - 2*z1^2");
    EXPECT_EQ(p.derivative(0), P("3*z0^2*z1"));
    EXPECT_EQ(p.derivative(1), P("z0^3 - 4*z1"));
    EXPECT_EQ(p.substitute(1, P("z2 + 1")), P("z0^3*z2 + z0^3 - 2*z2^2 - 4*z2 - 2"));
    EXPECT_EQ(p.evaluate({Rational(2), Rational(3)}), Rational(6));
    EXPECT_THROW(p.evaluate({Rational(2)}), std::invalid_argument);
}

TEST(MultiPoly, ComposeIsSimultaneous) {
    QPoly p = P("z0 - z1");
    EXPECT_EQ(p.compose({P("z1"), P("z0")}), P("z1 - z0"));
}

TEST(MultiPoly, Printing) {
    EXPECT_EQ(P("z0^2 - 3*z1 + 1/2").str(projective_vars()), "z0^2 - 3*z1 + 1/2");
    EXPECT_EQ(QPoly().str(), "0");
}

TEST(MultiPoly, CyclotomicCoefficients) {
    CPoly p = to_cyclotomic(P("z0 + z1"));
    CPoly q = CPoly::constant(2, Cyclo5::zeta());
    CPoly r = p * q;
    EXPECT_EQ(r.coefficient({1, 0}), Cyclo5::zeta());
    EXPECT_EQ((r * CPoly::constant(2, Cyclo5::zeta_pow(4))), p);
}

TEST(PolyParse, Errors) {
    EXPECT_THROW(P("z0 +"), ParseError);
    EXPECT_THROW(P("w1"), ParseError);
    EXPECT_THROW(P("z0 / z1"), ParseError);
    EXPECT_THROW(P("z0 / 0"), std::exception);
    EXPECT_THROW(P("(z0"), ParseError);
}

TEST(PolyParse, ErrorPosition) {
    try {
        P("z0 + + ");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GE(e.position(), 4u);
    }
}

TEST(PolyParse, NewVariables) {
    VarTable t;
    t.allow_new = true;
    QPoly p = parse_poly("a*b + a", t);
    EXPECT_EQ(t.names, (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(p.evaluate({Rational(2), Rational(5)}), Rational(12));
    EXPECT_EQ(parse_poly("-(a - 1)^2", t), parse_poly("-a^2 + 2*a - 1", t));
}

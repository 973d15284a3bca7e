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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmdist/cohomology.hpp"
#include "hmdist/intersection_ring.hpp"
#include "hmdist/multipoly.hpp"
#include "hmdist/rational.hpp"

namespace hmdist {

/// Numerical data of a codimension-2 distribution on P^4 from its degree d
/// and the degree of its singular curve. Tangent side: c_i(T_F); conormal
/// side: c_i(N*_F).
struct InvariantTriple {
    Rational c1, c2, pa;
};

InvariantTriple tangent_invariants(long d, const Rational& degZ);
InvariantTriple conormal_invariants(long d, const Rational& degZ);
InvariantTriple side_invariants(Side side, long d, const Rational& degZ);

/// The cubic in d with degZ = cubic(d) - (2d+1) c2.
template <class R>
R degz_cubic(Side side, const R& d) {
    if (side == Side::Tangent) return d * d * d - d * d + R(2) * d + R(2);
    return d * d * d + R(4) * d * d + R(7) * d + R(2);
}

/// Numerator N(d, degZ) of the genus formula pa = N / (8d^2 + 8d + 2).
template <class R>
R genus_numerator(Side side, const R& d, const R& z) {
    R d2 = d * d, d3 = d2 * d, d4 = d3 * d, d5 = d4 * d, d6 = d5 * d;
    R lin = R(12) * d3 - R(2) * d2 - R(11) * d - (side == Side::Tangent ? R(6) : R(1));
    return R(-2) * d6 - R(6) * d5 - R(10) * d4 - R(10) * d3 + R(8) * d2 + R(12) * d + R(4) + z * lin + R(2) * z * z;
}

template <class R>
R genus_denominator(const R& d) {
    return R(8) * d * d + R(8) * d + R(2);
}

class InvariantError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// degZ from (d, c2); throws InvariantError when the result is not positive.
Rational invert_degZ(Side side, long d, const Rational& c2);

template <class R>
R invert_degZ_symbolic(Side side, const R& d, const R& c2) {
    return degz_cubic(side, d) - (R(2) * d + R(1)) * c2;
}

/// The degree-1 and degree-2 specializations (c2 and pa as polynomials
/// in the single variable degZ) in the form they are usually displayed.
struct Specialization {
    QPoly c2, pa;
};
Specialization displayed_specialization(Side side, long d);
Specialization theorem_specialization(Side side, long d);

enum class FilterStatus { Pass, Fail, NotApplicable };
const char* filter_status_name(FilterStatus s);

struct FilterResult {
    std::string name;
    FilterStatus status;
    std::string detail;
};

struct DistributionNumerics {
    Side side = Side::Tangent;
    long d = 0;
    std::string branch;
    Rational c1, c2, degZ, pa;
    long normalization_twist = 0;
    Rational c1_normalized, c2_normalized;
    std::vector<FilterResult> filters;
    std::string provenance;

    bool feasible() const;
    std::vector<std::string> rejected_by() const;
};

struct Classification {
    Side side;
    long d;
    std::vector<DistributionNumerics> candidates;
    std::vector<long> survivors;  // distinct feasible degZ, ascending
};

class UnsupportedDegree : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic feasibility search for rank-2 locally free T_F (tangent) or N*_F
/// (conormal) with d in {1, 2}.
Classification classify_numeric(Side side, long d);

/// Invariants of the distribution with conormal sheaf E(-a-7).
struct HMInvariants {
    long a = 0;
    long degree = 0;
    bool intro_variant = false;
    Rational c1, c2;
    Rational degZ_closed, pa_closed;  // printed closed forms
    Rational degZ_theorem, pa_theorem;  // twist then inversion of the conormal formulas
    Rational degZ_resolution, pa_resolution;  // read off the Eagon-Northcott class
    bool agree = false;
};

class PathDisagreement : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Body convention (degree 2a+6) by default; paths must agree or
/// PathDisagreement is thrown. With intro_variant the degree-(2a+5) closed
/// forms are reported as is and agree records the (failing) comparison.
HMInvariants hm_invariants(long a, bool intro_variant = false);

/// Closed forms as polynomials in the single variable a.
QPoly hm_degz_closed_form(bool intro_variant = false);
QPoly hm_genus_closed_form(bool intro_variant = false);

struct HMSymbolic {
    QPoly c1, c2, degZ_theorem, degZ_resolution, pa_resolution;
    bool degz_identity = false, genus_identity = false;
};
/// Symbolic comparison of all paths in the variable a.
HMSymbolic hm_invariants_symbolic();

/// chi(E(-a-7+t)) as a polynomial in t (one variable) for fixed a.
QPoly hm_hilbert_polynomial(long a);
/// chi(E(-a-7+t)) in the variables (a, t) via HRR.
QPoly hm_hilbert_polynomial_symbolic();
/// The same polynomial assembled from the rank-2 expansion
/// 2 + 25/12 c1 + 35/24 (c1^2 - 2c2) + ... with c1 = -d_a-3+2t.
QPoly hm_hilbert_display_symbolic();

struct RaoTerm {
    long a = 0, q = 0;
    std::optional<Dim> value;
    std::vector<std::string> lemmas;  // lemmas that determined the value
    std::string detail;
};

/// h^1(I_{Z_a}(q)) from the vanishing lemmas and Table 2; nullopt is a gap.
RaoTerm rao_h1(long a, long q);

struct RaoDimension {
    long a = 0;
    Dim total = 0;
    bool exact = true;  // false: total is a lower bound
    std::vector<long> gaps;
    long q_min = 0, q_max = 0;  // every q outside [q_min, q_max] contributes 0
    std::vector<RaoTerm> terms;
};

RaoDimension rao_dimension(long a);

struct DegreeCheck {
    long d = 0;
    bool bott_ok = false, omega_ok = false, sym2_ok = false;
    bool ok() const { return bott_ok && omega_ok && sym2_ok; }
};

/// The vanishing conditions used to show H^0(I_{Z_a}(d)) = 0.
DegreeCheck degree_bound_check(long a, long d);

class VerificationFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// 2a+5, after re-verifying degree_bound_check for every d in [1, 2a+5].
long degree_bound(long a);

/// dim Hom(E(-a-7), Omega^1) = 5 chi(E(a+1)) - chi(E(a+2)).
Integer hom_dimension(long a);
/// 24 + hom_dimension(a) - 1.
Integer moduli_dimension(long a);
inline constexpr long kHMModuliDimension = 24;

QPoly hom_dimension_closed_form();
QPoly moduli_dimension_closed_form(bool intro_variant = false);
/// 5 chi(E(a+1)) - chi(E(a+2)) over Q[a].
QPoly hom_dimension_symbolic();

/// Conormal class E(-a-7) with a symbolic in variable slot 0.
SheafClass<QPoly> hm_conormal_symbolic();

}  // namespace hmdist

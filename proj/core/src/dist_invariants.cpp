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

#include "hmdist/dist_invariants.hpp"

#include <algorithm>
#include <set>

namespace hmdist {

InvariantTriple side_invariants(Side side, long d, const Rational& degZ) {
    if (d < 0) throw std::invalid_argument("distribution degree must be non-negative");
    if (degZ < Rational(1)) throw std::invalid_argument("degZ must be at least 1");
    Rational rd(d);
    InvariantTriple out;
    out.c1 = side == Side::Tangent ? Rational(2 - d) : Rational(-3 - d);
    out.c2 = (degz_cubic(side, rd) - degZ) / (Rational(2) * rd + Rational(1));
    out.pa = genus_numerator(side, rd, degZ) / genus_denominator(rd);
    return out;
}

InvariantTriple tangent_invariants(long d, const Rational& degZ) { return side_invariants(Side::Tangent, d, degZ); }
InvariantTriple conormal_invariants(long d, const Rational& degZ) {
    return side_invariants(Side::Conormal, d, degZ);
}

Rational invert_degZ(Side side, long d, const Rational& c2) {
    Rational z = invert_degZ_symbolic(side, Rational(d), c2);
    if (z.sign() <= 0) throw InvariantError("degZ = " + z.str() + " is not positive");
    return z;
}

Specialization theorem_specialization(Side side, long d) {
    QPoly z = QPoly::variable(1, 0);
    QPoly rd = QPoly(Rational(d));
    Rational den2 = Rational(2 * d + 1);
    QPoly c2 = (degz_cubic(side, rd) - z).scaled(Rational(1) / den2);
    QPoly pa = genus_numerator(side, rd, z).scaled(Rational(1) / genus_denominator(Rational(d)));
    return {c2, pa};
}

Specialization displayed_specialization(Side side, long d) {
    QPoly z = QPoly::variable(1, 0);
    auto lin = [&](long c, long m, long den) { return (QPoly(c) + z.scaled(Rational(m))).scaled(Rational(1, den)); };
    auto quad = [&](long a2, long a1, long a0, long den) {
        return (z.pow(2).scaled(Rational(a2)) + z.scaled(Rational(a1)) + QPoly(a0)).scaled(Rational(1, den));
    };
    if (side == Side::Tangent && d == 1) return {lin(4, -1, 3), quad(2, -7, -4, 18)};
    if (side == Side::Tangent && d == 2) return {lin(10, -1, 5), quad(1, 30, -250, 25)};
    if (side == Side::Conormal && d == 1) return {lin(14, -1, 3), quad(1, -1, -2, 9)};
    if (side == Side::Conormal && d == 2) return {lin(40, -1, 5), quad(2, 65, -500, 50)};
    throw UnsupportedDegree("displayed specializations exist for d = 1, 2");
}

const char* filter_status_name(FilterStatus s) {
    switch (s) {
        case FilterStatus::Pass: return "pass";
        case FilterStatus::Fail: return "fail";
        default: return "n/a";
    }
}

bool DistributionNumerics::feasible() const {
    return std::none_of(filters.begin(), filters.end(),
                        [](const FilterResult& f) { return f.status == FilterStatus::Fail; });
}

std::vector<std::string> DistributionNumerics::rejected_by() const {
    std::vector<std::string> out;
    for (const auto& f : filters)
        if (f.status == FilterStatus::Fail) out.push_back(f.name);
    return out;
}

namespace {

long normalization_twist_for(const Rational& c1) {
    long c = c1.to_long();
    return (c % 2 == 0) ? -c / 2 : -(c + 1) / 2;
}

DistributionNumerics make_candidate(Side side, long d, const Rational& z, const std::string& branch) {
    DistributionNumerics r;
    r.side = side;
    r.d = d;
    r.branch = branch;
    r.degZ = z;
    Rational rd(d);
    r.c1 = side == Side::Tangent ? Rational(2 - d) : Rational(-3 - d);
    r.c2 = (degz_cubic(side, rd) - z) / (Rational(2) * rd + Rational(1));
    r.pa = genus_numerator(side, rd, z) / genus_denominator(rd);
    r.normalization_twist = normalization_twist_for(r.c1);
    Rational t(r.normalization_twist);
    r.c1_normalized = r.c1 + Rational(2) * t;
    r.c2_normalized = r.c2 + t * r.c1 + t * t;
    r.provenance = side == Side::Tangent ? "tangent Chern and genus formulas" : "conormal Chern and genus formulas";
    return r;
}

void add_common_filters(DistributionNumerics& r) {
    r.filters.push_back({"c2-integral", r.c2.is_integer() ? FilterStatus::Pass : FilterStatus::Fail, "c2 = " + r.c2.str()});
    r.filters.push_back({"pa-integral", r.pa.is_integer() ? FilterStatus::Pass : FilterStatus::Fail, "pa = " + r.pa.str()});
    if (r.c2.is_integer()) {
        bool ok = schwarzenberger_s42(r.c1_normalized.to_integer(), r.c2_normalized.to_integer());
        r.filters.push_back({"schwarzenberger", ok ? FilterStatus::Pass : FilterStatus::Fail,
                             "S42 on (" + r.c1_normalized.str() + ", " + r.c2_normalized.str() + ")"});
    } else {
        r.filters.push_back({"schwarzenberger", FilterStatus::NotApplicable, "needs integral c2"});
    }
    r.filters.push_back({"singular-nonempty", r.degZ >= Rational(1) ? FilterStatus::Pass : FilterStatus::Fail,
                         "degZ = " + r.degZ.str()});
}

}  // namespace

Classification classify_numeric(Side side, long d) {
    if (d != 1 && d != 2) throw UnsupportedDegree("classify_numeric supports d = 1 and d = 2");
    Classification out{side, d, {}, {}};
    Rational rd(d);
    Rational slope = Rational(2 * d + 1);
    Rational c1 = side == Side::Tangent ? Rational(2 - d) : Rational(-3 - d);
    long tw = normalization_twist_for(c1);
    Rational t(tw);
    Rational c1n = c1 + Rational(2) * t;
    // c2 from the normalized c2: c2 = c2n - t c1 - t^2.
    auto z_from_c2n = [&](const Rational& c2n) { return degz_cubic(side, rd) - slope * (c2n - t * c1 - t * t); };

    if (side == Side::Tangent) {
        // T_F with a section of T_F(-1): T_F = O(1) + O(1-d).
        Rational c2 = Rational(1 - d);
        auto r = make_candidate(side, d, degz_cubic(side, rd) - slope * c2, "split");
        r.filters.push_back({"split-type", FilterStatus::Pass, "T_F = O(1) + O(" + std::to_string(1 - d) + ")"});
        add_common_filters(r);
        out.candidates.push_back(std::move(r));
    } else {
        // N*_F(2) with a section: c2 of the twist is non-negative.
        long zmax = floor(z_from_c2n(Rational(0))).get_si();
        for (long z = 0; z <= zmax; ++z) {
            auto r = make_candidate(side, d, Rational(z), "section");
            bool ok = r.c2_normalized.sign() >= 0;
            r.filters.push_back({"section-bound", ok ? FilterStatus::Pass : FilterStatus::Fail,
                                 "c2 of normalized twist = " + r.c2_normalized.str()});
            add_common_filters(r);
            out.candidates.push_back(std::move(r));
        }
    }
    // Normalized (semi)stable branch, window from c1n^2 - 4 c2n <= 0.
    bool even = c1n.is_zero();
    long zmax = floor(z_from_c2n(c1n * c1n / Rational(4))).get_si();
    for (long z = 0; z <= zmax; ++z) {
        auto r = make_candidate(side, d, Rational(z), even ? "semistable" : "stable");
        bool violated = even ? bogomolov_semistable_violated(r.c1_normalized, r.c2_normalized)
                             : bogomolov_violated(r.c1_normalized, r.c2_normalized);
        r.filters.push_back({even ? "bogomolov-semistable" : "bogomolov", violated ? FilterStatus::Fail : FilterStatus::Pass,
                             "c1^2 - 4c2 = " + (r.c1_normalized * r.c1_normalized - Rational(4) * r.c2_normalized).str()});
        add_common_filters(r);
        out.candidates.push_back(std::move(r));
    }
    std::set<long> s;
    for (const auto& c : out.candidates)
        if (c.feasible()) s.insert(c.degZ.to_long());
    out.survivors.assign(s.begin(), s.end());
    return out;
}

QPoly hm_degz_closed_form(bool intro) {
    QPoly a = QPoly::variable(1, 0);
    if (intro) return a.pow(3).scaled(4) + a.pow(2).scaled(33) + a.scaled(77) + QPoly(46);
    return a.pow(3).scaled(4) + a.pow(2).scaled(39) + a.scaled(113) + QPoly(92);
}

QPoly hm_genus_closed_form(bool intro) {
    QPoly a = QPoly::variable(1, 0);
    if (intro)
        return a.pow(4).scaled(9) + a.pow(3).scaled(89) + a.pow(2).scaled(Rational(553, 2)) +
               a.scaled(Rational(573, 2)) + QPoly(45);
    return a.pow(4).scaled(9) + a.pow(3).scaled(107) + a.pow(2).scaled(Rational(847, 2)) +
           a.scaled(Rational(1261, 2)) + QPoly(260);
}

HMInvariants hm_invariants(long a, bool intro) {
    if (a < 1) throw std::invalid_argument("hm_invariants: a must be >= 1");
    HMInvariants r;
    r.a = a;
    r.intro_variant = intro;
    r.degree = intro ? 2 * a + 5 : 2 * a + 6;
    SheafClass<Rational> conormal = twist(hm_bundle<Rational>(), Rational(-a - 7));
    r.c1 = conormal.c(1);
    r.c2 = conormal.c(2);
    std::vector<Rational> pt{Rational(a)};
    r.degZ_closed = hm_degz_closed_form(intro).evaluate(pt);
    r.pa_closed = hm_genus_closed_form(intro).evaluate(pt);
    r.degZ_theorem = invert_degZ_symbolic(Side::Conormal, Rational(r.degree), r.c2);
    r.pa_theorem = genus_numerator(Side::Conormal, Rational(r.degree), r.degZ_theorem) / genus_denominator(Rational(r.degree));
    auto [z, pa] = read_ideal_class(eagon_northcott_ideal_class(conormal, Side::Conormal), Rational(0));
    r.degZ_resolution = z;
    r.pa_resolution = pa;
    r.agree = r.degZ_closed == r.degZ_theorem && r.degZ_theorem == r.degZ_resolution && r.pa_closed == r.pa_theorem &&
              r.pa_theorem == r.pa_resolution;
    if (!intro && !r.agree)
        throw PathDisagreement("invariant paths disagree at a=" + std::to_string(a));
    return r;
}

SheafClass<QPoly> hm_conormal_symbolic() {
    QPoly a = QPoly::variable(1, 0);
    return twist(hm_bundle<QPoly>(), QPoly(-7) - a);
}

HMSymbolic hm_invariants_symbolic() {
    HMSymbolic s;
    QPoly a = QPoly::variable(1, 0);
    auto c = hm_conormal_symbolic();
    s.c1 = c.c(1);
    s.c2 = c.c(2);
    QPoly d = a.scaled(2) + QPoly(6);
    s.degZ_theorem = invert_degZ_symbolic(Side::Conormal, d, s.c2);
    auto [z, pa] = read_ideal_class(eagon_northcott_ideal_class(c, Side::Conormal), QPoly(0));
    s.degZ_resolution = z;
    s.pa_resolution = pa;
    QPoly degz_closed = hm_degz_closed_form(false);
    QPoly pa_closed = hm_genus_closed_form(false);
    s.degz_identity = degz_closed == s.degZ_theorem && s.degZ_theorem == s.degZ_resolution;
    s.genus_identity = pa_closed == s.pa_resolution &&
                       genus_denominator(d) * pa_closed == genus_numerator(Side::Conormal, d, s.degZ_theorem);
    return s;
}

QPoly hm_hilbert_polynomial(long a) {
    QPoly t = QPoly::variable(1, 0);
    return hrr(twist(hm_bundle<QPoly>(), QPoly(-a - 7) + t));
}

QPoly hm_hilbert_polynomial_symbolic() {
    QPoly a = QPoly::variable(2, 0), t = QPoly::variable(2, 1);
    return hrr(twist(hm_bundle<QPoly>(), QPoly(-7) - a + t));
}

QPoly hm_hilbert_display_symbolic() {
    QPoly a = QPoly::variable(2, 0), t = QPoly::variable(2, 1);
    QPoly da = a.scaled(2) + QPoly(6);
    QPoly c = a.pow(2) + a.scaled(9) + QPoly(24);
    QPoly x = QPoly(-3) - da + t.scaled(2);
    QPoly y = c - (a * t).scaled(2) + t.pow(2) - t.scaled(9);
    return QPoly(2) + x.scaled(Rational(25, 12)) + (x.pow(2) - y.scaled(2)).scaled(Rational(35, 24)) +
           (x.pow(3) - (x * y).scaled(3)).scaled(Rational(5, 12)) +
           (x.pow(4) - (x.pow(2) * y).scaled(4) + y.pow(2).scaled(2)).scaled(Rational(1, 24));
}

namespace {

Dim h3_tensor(long k) { return *hm_tensor_cohomology(k)[3]; }

/// h^2(Omega^1 (x) E(m)) when the vanishing lemmas kill every other group.
std::optional<Dim> certified_h2_omega(long m) {
    for (int i : {0, 1, 3, 4})
        if (!vanishing("omega-E", i, {1, m})) return std::nullopt;
    SheafClass<Rational> s = tensor(cotangent_bundle<Rational>(4), twist(hm_bundle<Rational>(), Rational(m)));
    s.genuine = true;
    Rational chi = hrr(s);
    if (chi.sign() < 0) throw VerificationFailure("certified h^2 would be negative");
    return static_cast<Dim>(chi.to_long());
}

}  // namespace

RaoTerm rao_h1(long a, long q) {
    if (a < 1) throw std::invalid_argument("rao_h1: a must be >= 1");
    RaoTerm r;
    r.a = a;
    r.q = q;
    std::vector<std::pair<std::string, Dim>> values;
    bool l1 = q != 2 * a + 4 && (q <= 3 * a + 2 || q >= 3 * a + 9);
    bool l2 = (q <= 4 * a + 2 || q >= 4 * a + 10) && (q <= 3 * a + 6 || q >= 3 * a + 13);
    bool l3 = q != 2 * a + 4 && (q <= 3 * a + 2 || q >= 3 * a + 7) && (q <= 4 * a + 7 || q >= 4 * a + 14);
    long kt = q - 4 * a - 18;
    if (l1) values.emplace_back("h1-equals-h3-tensor", h3_tensor(kt));
    if (l2) values.emplace_back("h1-vanishes", 0);
    if (l3) {
        if (auto h2 = certified_h2_omega(q - 3 * a - 11))
            values.emplace_back("h1-equals-h2-omega-plus-h3-tensor", *h2 + h3_tensor(kt));
        else
            r.detail = "h^2(Omega^1 (x) E(" + std::to_string(q - 3 * a - 11) + ")) not certified";
    }
    if (values.empty()) {
        if (r.detail.empty()) r.detail = "no lemma applies";
        return r;
    }
    for (const auto& [name, v] : values) {
        if (v != values.front().second)
            throw VerificationFailure("lemmas disagree at a=" + std::to_string(a) + ", q=" + std::to_string(q));
        r.lemmas.push_back(name);
    }
    r.value = values.front().second;
    return r;
}

RaoDimension rao_dimension(long a) {
    if (a < 1) throw std::invalid_argument("rao_dimension: a must be >= 1");
    RaoDimension out;
    out.a = a;
    // Outside this open window the vanishing lemma covers every q.
    out.q_min = std::min(4 * a + 2, 3 * a + 6) + 1;
    out.q_max = std::max(4 * a + 10, 3 * a + 13) - 1;
    for (long q = out.q_min; q <= out.q_max; ++q) {
        RaoTerm t = rao_h1(a, q);
        if (t.value)
            out.total += *t.value;
        else
            out.gaps.push_back(q);
        out.terms.push_back(std::move(t));
    }
    out.exact = out.gaps.empty();
    return out;
}

DegreeCheck degree_bound_check(long a, long d) {
    DegreeCheck c;
    c.d = d;
    CohVector b = bott(4, 2, d - 2 * a - 4);
    c.bott_ok = *b[0] == 0 && *b[1] == 0;
    c.omega_ok = vanishing("omega-E", 1, {1, d - 3 * a - 11}).value_or(false);
    // S^2 E is a direct summand of E (x) E.
    c.sym2_ok = vanishing("E-E", 2, {d - 4 * a - 18}).value_or(false);
    return c;
}

long degree_bound(long a) {
    if (a < 1) throw std::invalid_argument("degree_bound: a must be >= 1");
    for (long d = 1; d <= 2 * a + 5; ++d)
        if (!degree_bound_check(a, d).ok())
            throw VerificationFailure("vanishing check fails at d=" + std::to_string(d));
    return 2 * a + 5;
}

namespace {

Rational chi_hm(long k) { return hrr(twist(hm_bundle<Rational>(), Rational(k))); }

}  // namespace

QPoly hom_dimension_closed_form() {
    QPoly a = QPoly::variable(1, 0);
    return a.pow(4).scaled(Rational(1, 3)) + a.pow(3).scaled(Rational(23, 3)) + a.pow(2).scaled(Rational(343, 6)) +
           a.scaled(Rational(899, 6)) + QPoly(75);
}

QPoly moduli_dimension_closed_form(bool intro) {
    QPoly a = QPoly::variable(1, 0);
    if (intro)
        return a.pow(4).scaled(Rational(1, 3)) + a.pow(3).scaled(7) + a.pow(2).scaled(Rational(277, 6)) +
               a.scaled(Rational(199, 2)) + QPoly(43);
    return a.pow(4).scaled(Rational(1, 3)) + a.pow(3).scaled(Rational(23, 3)) + a.pow(2).scaled(Rational(343, 6)) +
           a.scaled(Rational(899, 6)) + QPoly(98);
}

QPoly hom_dimension_symbolic() {
    QPoly a = QPoly::variable(1, 0);
    auto e = hm_bundle<QPoly>();
    return hrr(twist(e, a + QPoly(1))).scaled(5) - hrr(twist(e, a + QPoly(2)));
}

Integer hom_dimension(long a) {
    if (a < 1) throw std::invalid_argument("hom_dimension: a must be >= 1");
    for (int i = 1; i <= 4; ++i)
        if (*hm_cohomology(a + 1)[static_cast<std::size_t>(i)] != 0)
            throw VerificationFailure("h^i(E(a+1)) != 0 for some i >= 1");
    for (int i = 2; i <= 4; ++i)
        if (*hm_cohomology(a + 2)[static_cast<std::size_t>(i)] != 0)
            throw VerificationFailure("h^i(E(a+2)) != 0 for some i >= 2");
    Rational h = Rational(5) * chi_hm(a + 1) - chi_hm(a + 2);
    Rational closed = hom_dimension_closed_form().evaluate({Rational(a)});
    if (h != closed) throw VerificationFailure("hom dimension disagrees with its closed form");
    return h.to_integer();
}

Integer moduli_dimension(long a) {
    Integer m = Integer(kHMModuliDimension) + hom_dimension(a) - 1;
    if (Rational(m) != moduli_dimension_closed_form(false).evaluate({Rational(a)}))
        throw VerificationFailure("moduli dimension disagrees with its closed form");
    return m;
}

}  // namespace hmdist

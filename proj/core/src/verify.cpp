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

#include "hmdist/verify.hpp"

#include <sstream>

#include "hmdist/intersection_ring.hpp"
#include "hmdist/poly_parse.hpp"

namespace hmdist {

namespace {

using QForm = PForm<Rational>;
using QVec = PolyMultiVector<Rational>;
using CVec = PolyMultiVector<Cyclo5>;

void settle(CheckResult& r, const std::string& expected, const std::string& computed) {
    r.expected = expected;
    r.computed = computed;
    r.status = expected == computed ? CheckStatus::Ok : CheckStatus::Mismatch;
}

const char* tf(bool b) { return b ? "true" : "false"; }

template <class S, class Tag>
std::string zero_word(const Alternating<S, Tag>& a) {
    return a.is_zero() ? "zero" : "nonzero";
}

/// Number of index tuples where a and b differ.
template <class S, class Tag>
int differing_components(const Alternating<S, Tag>& a, const Alternating<S, Tag>& b) {
    auto diff = a - b;
    return static_cast<int>(diff.coeffs().size());
}

template <class S, class Tag>
std::string compare_word(const Alternating<S, Tag>& a, const Alternating<S, Tag>& b) {
    int n = differing_components(a, b);
    return n == 0 ? "equal" : "differs in " + std::to_string(n) + " components";
}

/// Nonzero 1-forms with the same kernel.
bool same_kernel(const QForm& a, const QForm& b) { return !a.is_zero() && !b.is_zero() && wedge(a, b).is_zero(); }

std::string pair_str(const Rational& a, const Rational& b) { return "(" + a.str() + ", " + b.str() + ")"; }

std::pair<Rational, Rational> conormal_curve(long k1, long k2) {
    auto c = direct_sum(line_bundle<Rational>(4, Rational(k1)), line_bundle<Rational>(4, Rational(k2)));
    return read_ideal_class(eagon_northcott_ideal_class(c, Side::Conormal), Rational(0));
}

CVec rho_c(const FixtureSet& f) { return to_cyclotomic(f.get("pencil-rho").multivector()); }

CVec constant_at(const FixtureSet& f, const std::string& point) {
    auto p = f.get(point).point_c();
    return constant_pencil_bivector(p.at(0), p.at(1));
}

std::vector<CheckSpec> build_registry() {
    std::vector<CheckSpec> c;

    c.push_back({"engel-canonical-chart",
                 "printed 2-form of the canonical Engel example restricted to z0 = 1 equals "
                 "(dz4 - z3 dz1) ^ (dz3 - z2 dz1)",
                 {"canonical Engel example"},
                 {"engel-canonical-omega", "engel-chart-omega1", "engel-chart-omega2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto chart = affine_chart(f.get("engel-canonical-omega").form(), 0);
                     auto target = wedge(f.get("engel-chart-omega1").form(), f.get("engel-chart-omega2").form());
                     settle(r, "equal", compare_word(chart, target));
                 }});

    c.push_back({"engel-canonical-twisted",
                 "printed 2-form of the canonical Engel example is a degree 1 twisted 2-form",
                 {"canonical Engel example"},
                 {"engel-canonical-omega", "engel-canonical-omega-homogeneous"},
                 [](const FixtureSet& f, CheckResult& r) {
                     bool printed = validate_twisted_form(f.get("engel-canonical-omega").form(), 1);
                     bool fixed = validate_twisted_form(f.get("engel-canonical-omega-homogeneous").form(), 1);
                     settle(r, "true", tf(printed));
                     r.detail = std::string("with -z0*z2 dz4^dz1 in place of -z0^2*z2 dz4^dz1: ") + tf(fixed);
                 }});

    c.push_back({"engel-canonical-flags",
                 "canonical chart structure is Engel, from kernel fields and from the two 1-forms",
                 {"canonical Engel example"},
                 {"engel-chart-v1", "engel-chart-v2", "engel-chart-omega1", "engel-chart-omega2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto fv = engel_flags(f.get("engel-chart-v1").multivector(), f.get("engel-chart-v2").multivector());
                     auto fw = engel_flags(f.get("engel-chart-omega1").form(), f.get("engel-chart-omega2").form());
                     settle(r, "fields engel=true, forms engel=true",
                            std::string("fields engel=") + tf(fv.engel()) + ", forms engel=" + tf(fw.engel()));
                 }});

    c.push_back({"engel-canonical-derived",
                 "first derived distribution is ker(dz4 - z3 dz1) and d/dz2 spans its characteristic direction",
                 {"canonical Engel example"},
                 {"engel-chart-omega1", "engel-chart-omega2", "engel-chart-derived", "engel-chart-characteristic"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto fw = engel_flags(f.get("engel-chart-omega1").form(), f.get("engel-chart-omega2").form());
                     const QForm& theta = fw.form_chain.at(2);
                     bool kernel = same_kernel(theta, f.get("engel-chart-derived").form());
                     auto l = f.get("engel-chart-characteristic").multivector();
                     bool charac = contract(l, theta).is_zero() && wedge(theta, contract(l, ext_d(theta))).is_zero();
                     settle(r, "kernel=true, characteristic=true",
                            std::string("kernel=") + tf(kernel) + ", characteristic=" + tf(charac));
                     r.detail = "theta = " + theta.str(projective_vars());
                 }});

    c.push_back({"non-engel-chart",
                 "non-Engel example restricted to z0 = 1 equals dz2 ^ (dz1 + z3 dz4)",
                 {"non-Engel degree 1 example"},
                 {"non-engel-omega", "non-engel-chart-omega1", "non-engel-chart-omega2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto chart = affine_chart(f.get("non-engel-omega").form(), 0);
                     auto target =
                         wedge(f.get("non-engel-chart-omega1").form(), f.get("non-engel-chart-omega2").form());
                     settle(r, "equal", compare_word(chart, target));
                 }});

    c.push_back({"non-engel-flags",
                 "non-Engel example is non-integrable with integrable first derived distribution given by "
                 "z2 dz0 - z0 dz2",
                 {"non-Engel degree 1 example"},
                 {"non-engel-chart-omega1", "non-engel-chart-omega2", "non-engel-derived"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto fw =
                         engel_flags(f.get("non-engel-chart-omega1").form(), f.get("non-engel-chart-omega2").form());
                     bool kernel = fw.nonintegrable &&
                                   same_kernel(fw.form_chain.at(2), affine_chart(f.get("non-engel-derived").form(), 0));
                     settle(r, "nonintegrable=true, engel=false, derived kernel=true",
                            std::string("nonintegrable=") + tf(fw.nonintegrable) + ", engel=" + tf(fw.engel()) +
                                ", derived kernel=" + tf(kernel));
                 }});

    c.push_back({"lorentzian-bracket",
                 "[v2, v1] of the Lorentzian-type example equals 2 z2 d/dz1 - z1^2 d/dz2",
                 {"Lorentzian-type Engel example"},
                 {"lorentzian-v1", "lorentzian-v2", "lorentzian-v3"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto b = lie_bracket(f.get("lorentzian-v2").multivector(), f.get("lorentzian-v1").multivector());
                     settle(r, "equal", compare_word(b, f.get("lorentzian-v3").multivector()));
                     r.detail = "[v2, v1] = " + b.str(projective_vars());
                 }});

    c.push_back({"lorentzian-bivector",
                 "v1 ^ v2 of the Lorentzian-type example equals the displayed bivector",
                 {"Lorentzian-type Engel example"},
                 {"lorentzian-v1", "lorentzian-v2", "lorentzian-sigma"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w = wedge(f.get("lorentzian-v1").multivector(), f.get("lorentzian-v2").multivector());
                     settle(r, "equal", compare_word(w, f.get("lorentzian-sigma").multivector()));
                 }});

    c.push_back({"lorentzian-engel",
                 "Lorentzian-type example: v1, v2 span a non-integrable distribution",
                 {"Lorentzian-type Engel example"},
                 {"lorentzian-v1", "lorentzian-v2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto fl = engel_flags(f.get("lorentzian-v1").multivector(), f.get("lorentzian-v2").multivector());
                     settle(r, "nonintegrable=true", std::string("nonintegrable=") + tf(fl.nonintegrable));
                     r.detail = std::string("f1_nonintegrable=") + tf(fl.f1_nonintegrable);
                 }});

    c.push_back({"deg1-wedge",
                 "omega1 ^ omega2 of the degree 1 conic example reproduces the ten printed coefficients",
                 {"degree 1 example singular along a conic"},
                 {"deg1-omega1", "deg1-omega2", "deg1-wedge"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w = wedge(f.get("deg1-omega1").form(), f.get("deg1-omega2").form());
                     settle(r, "equal", compare_word(w, f.get("deg1-wedge").form()));
                 }});

    c.push_back({"deg1-integrability",
                 "degree 1 conic example: (w1^w2^dw1, w1^w2^dw2, w2^dw2) as displayed",
                 {"degree 1 example singular along a conic"},
                 {"deg1-omega1", "deg1-omega2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w1 = f.get("deg1-omega1").form(), w2 = f.get("deg1-omega2").form();
                     auto [a, b] = integrability_2form(w1, w2);
                     settle(r, "(zero, nonzero, nonzero)",
                            "(" + zero_word(a) + ", " + zero_word(b) + ", " + zero_word(frobenius_1form(w2)) + ")");
                     r.detail = "w1^w2^dw1 = " + a.str(projective_vars()) + "; w1^w2^dw2 = " + b.str(projective_vars());
                 }});

    c.push_back({"deg1-derived",
                 "degree 1 conic example: the first derived distribution is ker(omega2)",
                 {"degree 1 example singular along a conic"},
                 {"deg1-omega1", "deg1-omega2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w1 = f.get("deg1-omega1").form(), w2 = f.get("deg1-omega2").form();
                     auto fl = engel_flags(w1, w2);
                     const QForm& theta = fl.form_chain.at(2);
                     settle(r, "true", tf(same_kernel(theta, w2)));
                     r.detail = "theta = " + theta.str(projective_vars()) + "; engel=" + tf(fl.engel());
                 }});

    c.push_back({"deg1-singular",
                 "degree 1 conic example vanishes at a rational point of the conic",
                 {"degree 1 example singular along a conic"},
                 {"deg1-wedge", "deg1-conic-point"},
                 [](const FixtureSet& f, CheckResult& r) {
                     settle(r, "true",
                            tf(singular_point_check(f.get("deg1-wedge").form(), f.get("deg1-conic-point").point())));
                 }});

    c.push_back({"deg1-invariants",
                 "degree 1 conic example is a degree 1 twisted 2-form; conormal O(-2)+O(-2) gives (deg, p_a) = (2, 0)",
                 {"degree 1 example singular along a conic", "conormal Chern class formulas"},
                 {"deg1-wedge"},
                 [](const FixtureSet& f, CheckResult& r) {
                     bool tw = validate_twisted_form(f.get("deg1-wedge").form(), 1);
                     auto [deg, pa] = conormal_curve(-2, -2);
                     settle(r, "twisted=true, (2, 0)", std::string("twisted=") + tf(tw) + ", " + pair_str(deg, pa));
                 }});

    c.push_back({"deg2-wedge",
                 "omega1 ^ omega2 of the degree 2 Engel example reproduces the printed expansion",
                 {"degree 2 Engel example"},
                 {"deg2-omega1", "deg2-omega2", "deg2-wedge"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w = wedge(f.get("deg2-omega1").form(), f.get("deg2-omega2").form());
                     settle(r, "equal", compare_word(w, f.get("deg2-wedge").form()));
                 }});

    c.push_back({"deg2-engel",
                 "degree 2 example is Engel; omega1 is a contact form pulled back from P^3",
                 {"degree 2 Engel example"},
                 {"deg2-omega1", "deg2-omega2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w1 = f.get("deg2-omega1").form(), w2 = f.get("deg2-omega2").form();
                     auto fl = engel_flags(w1, w2);
                     QVec d4 = QVec::term(5, {4}, QPoly(1));
                     bool contact = !frobenius_1form(w1).is_zero() && contract(d4, w1).is_zero();
                     settle(r, "nonintegrable=true, engel=true, contact=true",
                            std::string("nonintegrable=") + tf(fl.nonintegrable) + ", engel=" + tf(fl.engel()) +
                                ", contact=" + tf(contact));
                 }});

    c.push_back({"deg2-singular",
                 "degree 2 Engel example vanishes at (0:0:1:0:0) and (1:0:1:0:0)",
                 {"degree 2 Engel example"},
                 {"deg2-wedge", "deg2-singular-point-a", "deg2-singular-point-b"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w = f.get("deg2-wedge").form();
                     bool a = singular_point_check(w, f.get("deg2-singular-point-a").point());
                     bool b = singular_point_check(w, f.get("deg2-singular-point-b").point());
                     settle(r, "true, true", std::string(tf(a)) + ", " + tf(b));
                 }});

    c.push_back({"deg2-invariants",
                 "degree 2 Engel example is a degree 2 twisted 2-form; conormal O(-2)+O(-3) gives (deg, p_a) = (10, 7)",
                 {"degree 2 Engel example", "conormal Chern class formulas"},
                 {"deg2-wedge"},
                 [](const FixtureSet& f, CheckResult& r) {
                     bool tw = validate_twisted_form(f.get("deg2-wedge").form(), 2);
                     auto [deg, pa] = conormal_curve(-2, -3);
                     settle(r, "twisted=true, (10, 7)", std::string("twisted=") + tf(tw) + ", " + pair_str(deg, pa));
                 }});

    c.push_back({"pencil-hyperplanes",
                 "intersection of two pencils of hyperplanes is integrable and annihilated by d/dz4",
                 {"intersection of pencils of hyperplanes"},
                 {"hyperplanes-omega1", "hyperplanes-omega2"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w1 = f.get("hyperplanes-omega1").form(), w2 = f.get("hyperplanes-omega2").form();
                     auto [a, b] = integrability_2form(w1, w2);
                     auto fl = engel_flags(w1, w2);
                     QVec d4 = QVec::term(5, {4}, QPoly(1));
                     bool i4 = contract(d4, wedge(w1, w2)).is_zero();
                     settle(r, "(zero, zero), nonintegrable=false, i_d4=zero",
                            "(" + zero_word(a) + ", " + zero_word(b) + "), nonintegrable=" + tf(fl.nonintegrable) +
                                ", i_d4=" + (i4 ? "zero" : "nonzero"));
                 }});

    c.push_back({"isolated-singular",
                 "isolated-singularity example vanishes at (1:0:0:0:0) and (0:1:0:-1:1)",
                 {"degree 2 example with isolated singularities"},
                 {"isolated-omega", "isolated-point-a", "isolated-point-b"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w = f.get("isolated-omega").form();
                     bool a = singular_point_check(w, f.get("isolated-point-a").point());
                     bool b = singular_point_check(w, f.get("isolated-point-b").point());
                     settle(r, "true, true", std::string(tf(a)) + ", " + tf(b));
                 }});

    c.push_back({"isolated-twisted",
                 "isolated-singularity example is a degree 2 twisted 2-form (cubic coefficients, i_R = 0)",
                 {"degree 2 example with isolated singularities"},
                 {"isolated-omega"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto w = f.get("isolated-omega").form();
                     settle(r, "true", tf(validate_twisted_form(w, 2)));
                     auto ir = contract(radial_field<Rational>(), w);
                     r.detail = "i_R omega has " + std::to_string(ir.coeffs().size()) + " nonzero components";
                 }});

    c.push_back({"aff-brackets",
                 "aff(C) + C example: [v1,v2] = z1 d/dz0 + z3 d/dz2, [v1,v3] = 0, [v3,v2] = v3",
                 {"non-integrable example with derived algebra aff(C) + C"},
                 {"aff-v1", "aff-v2", "aff-v3"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto v1 = f.get("aff-v1").multivector(), v2 = f.get("aff-v2").multivector();
                     auto v3 = f.get("aff-v3").multivector();
                     auto b12 = lie_bracket(v1, v2);
                     settle(r, "equal, zero, equal",
                            compare_word(b12, v3) + ", " + zero_word(lie_bracket(v1, v3)) + ", " +
                                compare_word(lie_bracket(v3, v2), v3));
                 }});

    c.push_back({"pencil-construction",
                 "library pencil bivector and scroll cubics agree with the transcribed display",
                 {"Heisenberg-invariant Poisson pencil"},
                 {"pencil-rho", "scroll-cubic-0", "scroll-cubic-1", "scroll-cubic-2", "scroll-cubic-3", "scroll-cubic-4"},
                 [](const FixtureSet& f, CheckResult& r) {
                     bool rho = pencil_bivector() == f.get("pencil-rho").multivector();
                     auto cubics = scroll_cubics();
                     int same = 0;
                     for (int i = 0; i < 5; ++i)
                         if (cubics[i] == f.get("scroll-cubic-" + std::to_string(i)).poly()) ++same;
                     settle(r, "rho=equal, cubics=5/5",
                            std::string("rho=") + (rho ? "equal" : "differs") + ", cubics=" + std::to_string(same) + "/5");
                 }});

    c.push_back({"pencil-poisson",
                 "[rho, rho] = 0 identically in the pencil parameters lambda, mu",
                 {"Heisenberg-invariant Poisson pencil"},
                 {"pencil-rho"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto rho = f.get("pencil-rho").multivector();
                     auto s = schouten(rho, rho);
                     settle(r, "zero", zero_word(s));
                     if (!s.is_zero()) {
                         std::size_t terms = 0;
                         for (const auto& [m, p] : s.coeffs()) terms += p.size();
                         r.detail = "[rho, rho] has " + std::to_string(s.coeffs().size()) + " nonzero components, " +
                                    std::to_string(terms) + " terms";
                     }
                 }});

    c.push_back({"pencil-decomposable",
                 "constant pencil bivector: sigma ^ sigma = 0 at [1 +- sqrt5 : 2], nonzero at [1 : 1]",
                 {"degree zero degeneration of the pencil"},
                 {"pencil-decomposable-plus", "pencil-decomposable-minus", "pencil-generic-point"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto sq = [&](const std::string& p) {
                         auto s = constant_at(f, p);
                         return zero_word(wedge(s, s));
                     };
                     auto g = f.get("pencil-generic-point").point();
                     auto sg = constant_pencil_bivector(Cyclo5(g.at(0)), Cyclo5(g.at(1)));
                     settle(r, "zero, zero, nonzero",
                            sq("pencil-decomposable-plus") + ", " + sq("pencil-decomposable-minus") + ", " +
                                zero_word(wedge(sg, sg)));
                 }});

    c.push_back({"pencil-sigma-invariance",
                 "rho is invariant under the index shift with invariance scalar 1",
                 {"Heisenberg-invariant Poisson pencil", "Heisenberg group action"},
                 {"pencil-rho"},
                 [](const FixtureSet& f, CheckResult& r) {
                     auto lam = invariance_scalar(rho_c(f), hm_sigma());
                     settle(r, "1", lam ? (lam->is_rational() ? (*lam)[0].str() : lam->str()) : "none");
                 }});

    c.push_back({"pencil-tau-orbit",
                 "the character twist fixes the scroll cubic f^0 and the index shift permutes the f^i",
                 {"Heisenberg-invariant Poisson pencil", "Heisenberg group action"},
                 {"scroll-cubic-0", "scroll-cubic-1", "scroll-cubic-2", "scroll-cubic-3", "scroll-cubic-4"},
                 [](const FixtureSet& f, CheckResult& r) {
                     std::vector<CPoly> fs;
                     for (int i = 0; i < 5; ++i) fs.push_back(to_cyclotomic(f.get("scroll-cubic-" + std::to_string(i)).poly()));
                     auto t0 = invariance_scalar(fs[0], hm_tau());
                     std::ostringstream shift;
                     auto sig = hm_sigma();
                     for (int i = 0; i < 5; ++i) {
                         CPoly p = linear_pullback(fs[i], sig);
                         int hit = -1;
                         for (int j = 0; j < 5; ++j)
                             if (p == fs[j]) hit = j;
                         shift << (i ? "," : "") << hit;
                     }
                     std::string tau = t0 ? (t0->is_rational() ? (*t0)[0].str() : t0->str()) : "none";
                     settle(r, "tau scalar=1, sigma images=4,0,1,2,3", "tau scalar=" + tau + ", sigma images=" + shift.str());
                 }});

    return c;
}

}  // namespace

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Ok: return "ok";
        case CheckStatus::Mismatch: return "mismatch";
        case CheckStatus::Error: return "error";
    }
    return "?";
}

const std::vector<CheckSpec>& verification_checks() {
    static const std::vector<CheckSpec> registry = build_registry();
    return registry;
}

const CheckSpec& find_check(const std::string& name) {
    for (const auto& c : verification_checks())
        if (c.name == name) return c;
    throw UnknownCheck("unknown check: " + name);
}

CheckResult run_check(const CheckSpec& spec, const FixtureSet& fixtures) {
    CheckResult r;
    r.name = spec.name;
    r.description = spec.description;
    r.provenance = spec.provenance;
    try {
        spec.run(fixtures, r);
    } catch (const std::exception& e) {
        r.status = CheckStatus::Error;
        r.detail = e.what();
    }
    return r;
}

std::vector<CheckResult> run_checks(const FixtureSet& fixtures, const std::optional<std::string>& only) {
    std::vector<CheckResult> out;
    if (only) {
        out.push_back(run_check(find_check(*only), fixtures));
        return out;
    }
    for (const auto& c : verification_checks()) out.push_back(run_check(c, fixtures));
    return out;
}

CheckStatus aggregate_status(const std::vector<CheckResult>& results) {
    CheckStatus s = CheckStatus::Ok;
    for (const auto& r : results) {
        if (r.status == CheckStatus::Error) return CheckStatus::Error;
        if (r.status == CheckStatus::Mismatch) s = CheckStatus::Mismatch;
    }
    return s;
}

}  // namespace hmdist

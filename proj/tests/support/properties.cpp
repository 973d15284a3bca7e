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

#include "properties.hpp"

#include <sstream>

#include "gen.hpp"
#include "hmdist/cohomology.hpp"

namespace hmdist::testing {

namespace {

template <class Fn>
PropertyResult run_property(const std::string& name, std::uint64_t seed, int count, Fn fn) {
    PropertyResult r;
    r.name = name;
    r.seed = seed;
    Gen g(seed);
    for (int i = 0; i < count; ++i) {
        ++r.instances;
        std::string why;
        bool ok = false;
        try {
            ok = fn(g, why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (!ok && r.failures++ == 0) r.first_failure = "instance " + std::to_string(i) + ": " + why;
    }
    return r;
}

using IC = IntersectionClass<Rational>;

IC adams(const IC& x, long k) {
    IC out = x;
    Rational kp(1);
    for (int i = 0; i <= x.n(); ++i) {
        out[i] = x[i] * kp;
        kp *= Rational(k);
    }
    return out;
}

SheafClass<Rational> from_character(const IC& ch) { return chern_from_character(CharacterVector<Rational>{ch.coeffs()}); }

bool same_class(const SheafClass<Rational>& a, const SheafClass<Rational>& b, const char* what, std::string& why) {
    if (a.rank == b.rank && a.chern == b.chern) return true;
    std::ostringstream os;
    os << what << ": rank " << a.rank << " vs " << b.rank << ", classes differ";
    why = os.str();
    return false;
}

}  // namespace

PropertyResult ring_laws(std::uint64_t seed, int count) {
    return run_property("ring-laws", seed, count, [](Gen& g, std::string& why) {
        int n = static_cast<int>(g.integer(1, 6));
        IC a = g.intersection_class(n, false), b = g.intersection_class(n, false), c = g.intersection_class(n, false);
        IC u = g.intersection_class(n, true);
        IC one = IC::one(n);
        if (!((a * b) * c == a * (b * c))) return why = "associativity", false;
        if (!(a * b == b * a)) return why = "commutativity", false;
        if (!(a * (b + c) == a * b + a * c)) return why = "distributivity", false;
        if (!(a * one == a)) return why = "unit", false;
        if (!(u * ic_inverse(u) == one)) return why = "inverse", false;
        if (!(ic_pow(a, 3) == a * a * a)) return why = "power", false;
        if (!(ic_exp(ic_log(u)) == u)) return why = "exp(log u) = u", false;
        IC nil = u - one;
        IC nil2 = g.intersection_class(n, true) - one;
        if (!(ic_exp(nil + nil2) == ic_exp(nil) * ic_exp(nil2))) return why = "exp additive", false;
        SheafClass<Rational> s = make_sheaf(static_cast<int>(g.integer(1, 4)), u, "S");
        long k1 = g.integer(-5, 5), k2 = g.integer(-5, 5);
        if (!(twist(twist(s, k1), k2).chern == twist(s, k1 + k2).chern)) return why = "twist composition", false;
        if (!(dual(dual(s)).chern == s.chern)) return why = "double dual", false;
        return true;
    });
}

PropertyResult splitting_equivalence(std::uint64_t seed, int count) {
    return run_property("splitting-equivalence", seed, count, [](Gen& g, std::string& why) {
        auto e = g.bundle(4, 4), f = g.bundle(4, 2);
        IC che = chern_character(e).as_class(), chf = chern_character(f).as_class();
        IC half(4), sixth(4);
        half[0] = Rational(1, 2);
        sixth[0] = Rational(1, 6);
        IC three(4), two(4);
        three[0] = Rational(3);
        two[0] = Rational(2);
        IC l2 = (che * che - adams(che, 2)) * half;
        IC s2 = (chf * chf + adams(chf, 2)) * half;
        IC l3 = (che * che * che - three * che * adams(che, 2) + two * adams(che, 3)) * sixth;
        return same_class(wedge2_rank4(e), from_character(l2), "wedge2_rank4", why) &&
               same_class(wedge3_rank4(e), from_character(l3), "wedge3_rank4", why) &&
               same_class(sym2_rank2(f), from_character(s2), "sym2_rank2", why) &&
               same_class(tensor_rank4_rank2(e, f), from_character(che * chf), "tensor_rank4_rank2", why);
    });
}

PropertyResult bott_serre_duality(std::uint64_t seed, int count) {
    return run_property("bott-serre-duality", seed, count, [](Gen& g, std::string& why) {
        int n = static_cast<int>(g.integer(1, 7));
        int p = static_cast<int>(g.integer(0, n));
        long k = g.integer(-12, 12);
        CohVector a = bott(n, p, k), b = bott(n, n - p, -k);
        for (int q = 0; q <= n; ++q)
            if (a[q] != b[n - q]) {
                why = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " k=" + std::to_string(k);
                return false;
            }
        return true;
    });
}

PropertyResult bott_vs_hrr(std::uint64_t seed, int count) {
    return run_property("bott-vs-hrr", seed, count, [](Gen& g, std::string& why) {
        int p = static_cast<int>(g.integer(0, 4));
        long k = g.integer(-25, 25);
        Rational chi = hrr(twist(omega_p4<Rational>(p), k));
        if (chi == Rational(bott(4, p, k).euler())) return true;
        why = "p=" + std::to_string(p) + " k=" + std::to_string(k) + ": hrr " + chi.str();
        return false;
    });
}

PropertyResult dd_zero(std::uint64_t seed, int count) {
    return run_property("d-squared-zero", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(2, 5));
        int p = static_cast<int>(g.integer(0, c));
        auto w = g.form(c, p);
        if (ext_d(ext_d(w)).is_zero()) return true;
        why = "d(d w) != 0 for w = " + w.str();
        return false;
    });
}

PropertyResult leibniz(std::uint64_t seed, int count) {
    return run_property("leibniz", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(2, 5));
        int p = static_cast<int>(g.integer(0, c));
        int q = static_cast<int>(g.integer(0, c - p));
        auto a = g.form(c, p), b = g.form(c, q);
        auto lhs = ext_d(wedge(a, b));
        auto t = wedge(a, ext_d(b));
        auto rhs = wedge(ext_d(a), b) + (p % 2 == 0 ? t : -t);
        if (lhs == rhs) return true;
        why = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        return false;
    });
}

PropertyResult jacobi(std::uint64_t seed, int count) {
    return run_property("jacobi", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(2, 5));
        auto u = g.field(c), v = g.field(c), w = g.field(c);
        auto sum = lie_bracket(u, lie_bracket(v, w)) + lie_bracket(v, lie_bracket(w, u)) + lie_bracket(w, lie_bracket(u, v));
        if (sum.is_zero()) return true;
        why = "cyclic sum " + sum.str();
        return false;
    });
}

PropertyResult cartan_euler(std::uint64_t seed, int count) {
    return run_property("cartan-euler", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(2, 5));
        int p = static_cast<int>(g.integer(0, c));
        int m = static_cast<int>(g.integer(0, 3));
        auto w = g.homogeneous_alternating<FormTag>(c, p, m, 3);
        auto r = radial_field<Rational>(c);
        PForm<Rational> lie(c, p);
        if (p < c) lie += contract(r, ext_d(w));
        if (p > 0) lie += ext_d(contract(r, w));
        if (lie == w.scaled(QPoly(Rational(m + p)))) return true;
        why = "p=" + std::to_string(p) + " m=" + std::to_string(m);
        return false;
    });
}

PropertyResult lie_antisymmetry(std::uint64_t seed, int count) {
    return run_property("lie-antisymmetry", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(1, 5));
        auto v = g.field(c), w = g.field(c);
        if (lie_bracket(v, w) == -lie_bracket(w, v)) return true;
        why = "[v,w] != -[w,v]";
        return false;
    });
}

PropertyResult schouten_symmetry(std::uint64_t seed, int count) {
    return run_property("schouten-symmetry", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(2, 5));
        int p = static_cast<int>(g.integer(1, 3)), q = static_cast<int>(g.integer(1, 3));
        if (p > c) p = c;
        if (q > c) q = c;
        if (p + q - 1 > c) q = c + 1 - p;
        auto P = g.multivector(c, p), Q = g.multivector(c, q);
        auto lhs = schouten(P, Q), rhs = schouten(Q, P);
        bool sym = ((p - 1) * (q - 1)) % 2 != 0;
        if (sym ? lhs == rhs : lhs == -rhs) return true;
        why = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        return false;
    });
}

PropertyResult schouten_leibniz(std::uint64_t seed, int count) {
    return run_property("schouten-leibniz", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(3, 5));
        int p = static_cast<int>(g.integer(1, 2));
        int q = static_cast<int>(g.integer(0, 1)), r = static_cast<int>(g.integer(0, 1));
        auto P = g.multivector(c, p), Q = g.multivector(c, q), R = g.multivector(c, r);
        auto lhs = schouten(P, wedge(Q, R));
        auto t = wedge(Q, schouten(P, R));
        auto rhs = wedge(schouten(P, Q), R) + (((p - 1) * q) % 2 == 0 ? t : -t);
        if (lhs == rhs) return true;
        why = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " r=" + std::to_string(r);
        return false;
    });
}

PropertyResult schouten_lie(std::uint64_t seed, int count) {
    return run_property("schouten-lie", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(1, 5));
        auto v = g.field(c), w = g.field(c);
        if (schouten(v, w) == lie_bracket(v, w)) return true;
        why = "schouten(v, w) != [v, w]";
        return false;
    });
}

PropertyResult engel_invariance(std::uint64_t seed, int count) {
    return run_property("engel-invariance", seed, count, [](Gen& g, std::string& why) {
        int c = static_cast<int>(g.integer(3, 5));
        auto v1 = g.field(c, 2, 3), v2 = g.field(c, 2, 3);
        auto m = g.invertible_matrix(2);
        auto w1 = v1.scaled(QPoly(m[0][0])) + v2.scaled(QPoly(m[0][1]));
        auto w2 = v1.scaled(QPoly(m[1][0])) + v2.scaled(QPoly(m[1][1]));
        Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        auto a = engel_flags(v1, v2), b = engel_flags(w1, w2);
        if (!(wedge(w1, w2) == wedge(v1, v2).scaled(QPoly(det)))) return why = "span bivector", false;
        if (a.nonintegrable != b.nonintegrable || a.f1_nonintegrable != b.f1_nonintegrable) return why = "flags differ", false;
        return true;
    });
}

PropertyResult cyclo_field_laws(std::uint64_t seed, int count) {
    return run_property("cyclotomic-field", seed, count, [](Gen& g, std::string& why) {
        Cyclo5 x = g.cyclo(), y = g.cyclo(), z = g.cyclo();
        if (!((x * y) * z == x * (y * z))) return why = "associativity", false;
        if (!(x * (y + z) == x * y + x * z)) return why = "distributivity", false;
        if (!(x * y == y * x)) return why = "commutativity", false;
        for (int k = 1; k <= 4; ++k)
            if (!((x * y).galois(k) == x.galois(k) * y.galois(k))) return why = "galois", false;
        if (!x.is_zero()) {
            if (!(x * x.inverse() == Cyclo5(1))) return why = "inverse", false;
            if (!((x * y).norm() == x.norm() * y.norm())) return why = "norm", false;
        }
        if (!(Cyclo5::sqrt5() * Cyclo5::sqrt5() == Cyclo5(5))) return why = "sqrt5", false;
        return true;
    });
}

PropertyResult poly_ring_laws(std::uint64_t seed, int count) {
    return run_property("polynomial-ring", seed, count, [](Gen& g, std::string& why) {
        std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
        QPoly a = g.poly(n, 3, 4), b = g.poly(n, 3, 4), c = g.poly(n, 3, 4);
        if (!((a * b) * c == a * (b * c))) return why = "associativity", false;
        if (!(a * (b + c) == a * b + a * c)) return why = "distributivity", false;
        if (!(a - a).is_zero()) return why = "a - a", false;
        std::size_t i = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
        if (!((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i))) return why = "derivative", false;
        std::vector<Rational> pt;
        for (std::size_t k = 0; k < n; ++k) pt.push_back(g.rational());
        if (!((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt))) return why = "evaluation", false;
        QPoly s = a.substitute(i, b);
        std::vector<QPoly> images;
        for (std::size_t k = 0; k < n; ++k) images.push_back(k == i ? b : QPoly::variable(n, k));
        if (!(s == a.compose(images))) return why = "compose vs substitute", false;
        return true;
    });
}

std::uint64_t property_seed(const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {
PropertySpec spec(const char* name, PropertyResult (*fn)(std::uint64_t, int)) { return {name, fn}; }
}  // namespace

const std::vector<PropertySpec>& acceptance_properties() {
    static const std::vector<PropertySpec> v{
        spec("ring-laws", ring_laws),         spec("splitting-equivalence", splitting_equivalence),
        spec("bott-serre-duality", bott_serre_duality), spec("bott-vs-hrr", bott_vs_hrr),
        spec("d-squared-zero", dd_zero),      spec("leibniz", leibniz),
        spec("jacobi", jacobi),               spec("cartan-euler", cartan_euler),
    };
    return v;
}

const std::vector<PropertySpec>& all_properties() {
    static const std::vector<PropertySpec> v = [] {
        std::vector<PropertySpec> out = acceptance_properties();
        out.push_back(spec("lie-antisymmetry", lie_antisymmetry));
        out.push_back(spec("schouten-symmetry", schouten_symmetry));
        out.push_back(spec("schouten-leibniz", schouten_leibniz));
        out.push_back(spec("schouten-lie", schouten_lie));
        out.push_back(spec("engel-invariance", engel_invariance));
        out.push_back(spec("cyclotomic-field", cyclo_field_laws));
        out.push_back(spec("polynomial-ring", poly_ring_laws));
        return out;
    }();
    return v;
}

}  // namespace hmdist::testing

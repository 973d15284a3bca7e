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
#include <utility>
#include <vector>

#include "hmdist/multipoly.hpp"
#include "hmdist/rational.hpp"

// Chern class calculus on P^n in the truncated ring R[h]/h^{n+1}. The
// coefficient ring R is Rational for numeric work or QPoly when Chern classes
// carry symbolic parameters.

namespace hmdist {

enum class Side { Tangent, Conormal };

inline const char* side_name(Side s) { return s == Side::Tangent ? "tangent" : "conormal"; }

class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class RankMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

template <class R>
std::string twist_label(const R& k) {
    return k.str();
}

template <class R = Rational>
class IntersectionClass {
   public:
    IntersectionClass() : IntersectionClass(4) {}
    explicit IntersectionClass(int n) : n_(n), c_(static_cast<std::size_t>(check_dim(n)) + 1, R(0)) {}
    IntersectionClass(int n, std::vector<R> coeffs) : IntersectionClass(n) {
        if (coeffs.size() > c_.size())
            throw DimensionMismatch("more than n+1 coefficients for P^" + std::to_string(n));
        for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    static IntersectionClass one(int n) {
        IntersectionClass out(n);
        out.c_[0] = R(1);
        return out;
    }
    /// a + b h.
    static IntersectionClass linear(int n, const R& a, const R& b) {
        IntersectionClass out(n);
        out.c_[0] = a;
        if (n >= 1) out.c_[1] = b;
        return out;
    }

    int n() const { return n_; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    R& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
    /// Coefficient of h^i, zero beyond the truncation.
    R coeff(int i) const { return (i < 0 || i > n_) ? R(0) : c_[static_cast<std::size_t>(i)]; }

    IntersectionClass& operator+=(const IntersectionClass& o) {
        check_same(o);
        for (int i = 0; i <= n_; ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    IntersectionClass& operator-=(const IntersectionClass& o) {
        check_same(o);
        for (int i = 0; i <= n_; ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }
    friend IntersectionClass operator+(IntersectionClass a, const IntersectionClass& b) { return a += b; }
    friend IntersectionClass operator-(IntersectionClass a, const IntersectionClass& b) { return a -= b; }
    friend IntersectionClass operator*(const IntersectionClass& a, const IntersectionClass& b) {
        a.check_same(b);
        IntersectionClass out(a.n_);
        for (int i = 0; i <= a.n_; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= a.n_; ++j) out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return out;
    }
    IntersectionClass scaled(const R& s) const {
        IntersectionClass out(n_);
        for (int i = 0; i <= n_; ++i) out.c_[i] = c_[i] * s;
        return out;
    }
    friend bool operator==(const IntersectionClass& a, const IntersectionClass& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    void check_same(const IntersectionClass& o) const {
        if (o.n_ != n_)
            throw DimensionMismatch("classes on P^" + std::to_string(n_) + " and P^" + std::to_string(o.n_));
    }

   private:
    static int check_dim(int n) {
        if (n < 1) throw DimensionMismatch("ambient dimension must be positive");
        return n;
    }

    int n_;
    std::vector<R> c_;
};

template <class R>
IntersectionClass<R> ic_mul(const IntersectionClass<R>& a, const IntersectionClass<R>& b) {
    return a * b;
}

template <class R>
IntersectionClass<R> ic_add(const IntersectionClass<R>& a, const IntersectionClass<R>& b) {
    return a + b;
}

template <class R>
IntersectionClass<R> ic_inverse(const IntersectionClass<R>& a) {
    if (!(a[0] == R(1))) throw ArithmeticError("ic_inverse: constant coefficient must be 1");
    // Solve a * b = 1 degree by degree.
    IntersectionClass<R> b(a.n());
    b[0] = R(1);
    for (int k = 1; k <= a.n(); ++k) {
        R s(0);
        for (int j = 1; j <= k; ++j) s = s + a[j] * b[k - j];
        b[k] = R(0) - s;
    }
    return b;
}

template <class R>
IntersectionClass<R> ic_pow(const IntersectionClass<R>& a, long e) {
    if (e < 0) return ic_pow(ic_inverse(a), -e);
    IntersectionClass<R> out = IntersectionClass<R>::one(a.n());
    for (long i = 0; i < e; ++i) out = out * a;
    return out;
}

/// exp(u) for u with zero constant term.
template <class R>
IntersectionClass<R> ic_exp(const IntersectionClass<R>& u) {
    if (!is_zero(u[0])) throw ArithmeticError("ic_exp: nonzero constant term");
    IntersectionClass<R> out = IntersectionClass<R>::one(u.n());
    IntersectionClass<R> term = out;
    for (int j = 1; j <= u.n(); ++j) {
        term = (term * u).scaled(R(Rational(1, j)));
        out += term;
    }
    return out;
}

/// log(a) for a with constant term 1.
template <class R>
IntersectionClass<R> ic_log(const IntersectionClass<R>& a) {
    if (!(a[0] == R(1))) throw ArithmeticError("ic_log: constant coefficient must be 1");
    IntersectionClass<R> u = a - IntersectionClass<R>::one(a.n());
    IntersectionClass<R> out(a.n());
    IntersectionClass<R> power = IntersectionClass<R>::one(a.n());
    for (int j = 1; j <= a.n(); ++j) {
        power = power * u;
        out += power.scaled(R(Rational(j % 2 == 1 ? 1 : -1, j)));
    }
    return out;
}

/// Formal sheaf: rank, total Chern class and a label. `genuine` marks classes
/// of actual coherent sheaves, for which Euler characteristics are integers.
template <class R = Rational>
struct SheafClass {
    int rank = 0;
    IntersectionClass<R> chern;
    std::string label;
    bool genuine = false;

    int n() const { return chern.n(); }
    R c(int i) const { return chern.coeff(i); }
};

template <class R>
SheafClass<R> make_sheaf(int rank, IntersectionClass<R> chern, std::string label, bool genuine = false) {
    if (!(chern[0] == R(1))) throw ArithmeticError("sheaf class must have c0 = 1");
    return SheafClass<R>{rank, std::move(chern), std::move(label), genuine};
}

/// A vector bundle: asserts c_i = 0 above the rank.
template <class R>
SheafClass<R> make_bundle(int rank, IntersectionClass<R> chern, std::string label) {
    if (rank < 0) throw RankMismatch("negative rank");
    for (int i = rank + 1; i <= chern.n(); ++i)
        if (!is_zero(chern[i])) throw RankMismatch("bundle '" + label + "' has c_" + std::to_string(i) + " != 0 above its rank");
    return make_sheaf(rank, std::move(chern), std::move(label), true);
}

template <class R = Rational>
SheafClass<R> line_bundle(int n, const R& k) {
    return make_bundle(1, IntersectionClass<R>::linear(n, R(1), k), "O(" + twist_label(k) + ")");
}

template <class R = Rational>
SheafClass<R> trivial_bundle(int n, int rank) {
    return make_bundle(rank, IntersectionClass<R>::one(n), "O^" + std::to_string(rank));
}


/// c_i(E(k)) = sum_{j<=i} C(rank-j, i-j) k^{i-j} c_j(E), with generalized
/// binomials so that formal classes (c_j != 0 beyond the rank) twist correctly.
template <class R>
SheafClass<R> twist(const SheafClass<R>& s, const R& k) {
    int n = s.n();
    IntersectionClass<R> out(n);
    std::vector<R> kp(static_cast<std::size_t>(n) + 1, R(1));
    for (int i = 1; i <= n; ++i) kp[i] = kp[i - 1] * k;
    for (int i = 0; i <= n; ++i) {
        R acc(0);
        for (int j = 0; j <= i; ++j) {
            if (is_zero(s.chern[j])) continue;
            Rational b = binomial<Rational>(Rational(s.rank - j), i - j);
            if (b.is_zero()) continue;
            acc = acc + s.chern[j] * kp[i - j] * R(b);
        }
        out[i] = acc;
    }
    return SheafClass<R>{s.rank, out, s.label + "(" + twist_label(k) + ")", s.genuine};
}

template <class R>
SheafClass<R> twist(const SheafClass<R>& s, long k) {
    return twist(s, R(Rational(k)));
}

template <class R>
SheafClass<R> dual(const SheafClass<R>& s) {
    IntersectionClass<R> out(s.n());
    for (int i = 0; i <= s.n(); ++i) out[i] = (i % 2 == 0) ? s.chern[i] : R(0) - s.chern[i];
    return SheafClass<R>{s.rank, out, s.label + "*", s.genuine};
}

template <class R>
SheafClass<R> direct_sum(const SheafClass<R>& a, const SheafClass<R>& b) {
    return SheafClass<R>{a.rank + b.rank, a.chern * b.chern, a.label + "+" + b.label, a.genuine && b.genuine};
}

template <class R>
SheafClass<R> multiple(const SheafClass<R>& a, int m) {
    SheafClass<R> out = make_sheaf(0, IntersectionClass<R>::one(a.n()), "0", true);
    for (int i = 0; i < m; ++i) out = direct_sum(out, a);
    out.label = a.label + "^" + std::to_string(m);
    out.genuine = a.genuine;
    return out;
}

/// Given two terms of 0 -> A -> B -> C -> 0, returns the missing one via
/// c(B) = c(A) c(C).
template <class R>
SheafClass<R> ses_third(const std::optional<SheafClass<R>>& a, const std::optional<SheafClass<R>>& b,
                        const std::optional<SheafClass<R>>& c, std::string label = "") {
    int known = int(a.has_value()) + int(b.has_value()) + int(c.has_value());
    if (known != 2) throw std::invalid_argument("ses_third needs exactly two known terms");
    if (!b) return SheafClass<R>{a->rank + c->rank, a->chern * c->chern, label, a->genuine && c->genuine};
    if (!c) return make_sheaf(b->rank - a->rank, b->chern * ic_inverse(a->chern), label);
    return make_sheaf(b->rank - c->rank, b->chern * ic_inverse(c->chern), label);
}

namespace detail {
template <class R>
void require_rank(const SheafClass<R>& s, int rank, const char* op) {
    if (s.rank != rank)
        throw RankMismatch(std::string(op) + ": expected rank " + std::to_string(rank) + ", got " + std::to_string(s.rank));
    if (s.n() > 4) throw DimensionMismatch(std::string(op) + ": closed formula valid on P^n with n <= 4");
}
template <class R>
IntersectionClass<R> from_list(int n, std::vector<R> v) {
    v.resize(std::max<std::size_t>(v.size(), static_cast<std::size_t>(n) + 1), R(0));
    v.resize(static_cast<std::size_t>(n) + 1);
    return IntersectionClass<R>(n, std::move(v));
}
}  // namespace detail

template <class R>
SheafClass<R> wedge2_rank4(const SheafClass<R>& s) {
    detail::require_rank(s, 4, "wedge2_rank4");
    R c1 = s.c(1), c2 = s.c(2), c3 = s.c(3), c4 = s.c(4);
    std::vector<R> v{R(1), R(3) * c1, R(3) * c1 * c1 + R(2) * c2, c1 * c1 * c1 + R(4) * c1 * c2,
                     R(2) * c1 * c1 * c2 + c2 * c2 + c1 * c3 - R(4) * c4};
    return SheafClass<R>{6, detail::from_list(s.n(), v), "L2(" + s.label + ")", s.genuine};
}

template <class R>
SheafClass<R> wedge3_rank4(const SheafClass<R>& s) {
    detail::require_rank(s, 4, "wedge3_rank4");
    R c1 = s.c(1), c2 = s.c(2), c3 = s.c(3), c4 = s.c(4);
    std::vector<R> v{R(1), R(3) * c1, R(3) * c1 * c1 + c2, c1 * c1 * c1 + R(2) * c1 * c2 - c3,
                     c1 * c1 * c2 - c1 * c3 + c4};
    return SheafClass<R>{4, detail::from_list(s.n(), v), "L3(" + s.label + ")", s.genuine};
}

template <class R>
SheafClass<R> sym2_rank2(const SheafClass<R>& s) {
    detail::require_rank(s, 2, "sym2_rank2");
    R c1 = s.c(1), c2 = s.c(2);
    std::vector<R> v{R(1), R(3) * c1, R(2) * c1 * c1 + R(4) * c2, R(4) * c1 * c2, R(0)};
    return SheafClass<R>{3, detail::from_list(s.n(), v), "S2(" + s.label + ")", s.genuine};
}

template <class R>
SheafClass<R> tensor_rank4_rank2(const SheafClass<R>& e, const SheafClass<R>& f) {
    detail::require_rank(e, 4, "tensor_rank4_rank2");
    detail::require_rank(f, 2, "tensor_rank4_rank2");
    e.chern.check_same(f.chern);
    R e1 = e.c(1), e2 = e.c(2), e3 = e.c(3), e4 = e.c(4);
    R f1 = f.c(1), f2 = f.c(2);
    std::vector<R> v{
        R(1),
        R(2) * e1 + R(4) * f1,
        e1 * e1 + R(7) * e1 * f1 + R(6) * f1 * f1 + R(2) * e2 + R(4) * f2,
        R(3) * e1 * e1 * f1 + R(9) * e1 * f1 * f1 + R(4) * f1 * f1 * f1 + R(2) * e1 * e2 + R(6) * e2 * f1 +
            R(6) * e1 * f2 + R(12) * f1 * f2 + R(2) * e3,
        R(3) * e1 * e1 * f1 * f1 + R(5) * e1 * f1 * f1 * f1 + f1 * f1 * f1 * f1 + R(5) * e1 * e2 * f1 +
            R(7) * e2 * f1 * f1 + R(3) * e1 * e1 * f2 + R(15) * e1 * f1 * f2 + R(12) * f1 * f1 * f2 + e2 * e2 +
            R(2) * e1 * e3 + R(5) * e3 * f1 + R(2) * e2 * f2 + R(6) * f2 * f2 + R(2) * e4};
    return SheafClass<R>{8, detail::from_list(e.n(), v), e.label + "x" + f.label, e.genuine && f.genuine};
}

/// ch_0..ch_n.
template <class R = Rational>
struct CharacterVector {
    std::vector<R> components;
    int n() const { return static_cast<int>(components.size()) - 1; }
    const R& operator[](int i) const { return components.at(static_cast<std::size_t>(i)); }
    IntersectionClass<R> as_class() const { return IntersectionClass<R>(n(), components); }
    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

/// Power sums p_1..p_n of the Chern roots (p_0 unused).
template <class R>
std::vector<R> power_sums(const IntersectionClass<R>& c) {
    int n = c.n();
    std::vector<R> p(static_cast<std::size_t>(n) + 1, R(0));
    for (int k = 1; k <= n; ++k) {
        R acc = c[k] * R(Rational(k % 2 == 1 ? k : -k));
        for (int i = 1; i < k; ++i) {
            R t = c[i] * p[k - i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        p[k] = acc;
    }
    return p;
}

template <class R>
CharacterVector<R> chern_character(const SheafClass<R>& s) {
    std::vector<R> p = power_sums(s.chern);
    CharacterVector<R> ch;
    ch.components.assign(p.size(), R(0));
    ch.components[0] = R(Rational(s.rank));
    Rational fact(1);
    for (int k = 1; k <= s.n(); ++k) {
        fact *= Rational(k);
        ch.components[k] = p[k] * R(Rational(1) / fact);
    }
    return ch;
}

/// Inverse of chern_character (Newton's identities backwards).
template <class R>
SheafClass<R> chern_from_character(const CharacterVector<R>& ch, std::string label = "") {
    int n = ch.n();
    std::vector<R> p(static_cast<std::size_t>(n) + 1, R(0));
    Rational fact(1);
    for (int k = 1; k <= n; ++k) {
        fact *= Rational(k);
        p[k] = ch[k] * R(fact);
    }
    IntersectionClass<R> c = IntersectionClass<R>::one(n);
    for (int k = 1; k <= n; ++k) {
        R acc(0);
        for (int i = 1; i <= k; ++i) {
            R t = c[k - i] * p[i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        c[k] = acc * R(Rational(1, k));
    }
    R r0 = ch[0];
    int rank;
    if constexpr (std::same_as<R, Rational>) {
        rank = static_cast<int>(r0.to_long());
    } else {
        if (!r0.is_constant()) throw ArithmeticError("symbolic rank");
        rank = static_cast<int>(r0.constant_term().to_long());
    }
    return SheafClass<R>{rank, c, std::move(label), false};
}

/// General tensor product through the multiplicativity of ch.
template <class R>
SheafClass<R> tensor(const SheafClass<R>& a, const SheafClass<R>& b) {
    CharacterVector<R> ca = chern_character(a), cb = chern_character(b);
    IntersectionClass<R> prod = ca.as_class() * cb.as_class();
    SheafClass<R> out = chern_from_character(CharacterVector<R>{prod.coeffs()}, a.label + "x" + b.label);
    out.genuine = a.genuine && b.genuine;
    return out;
}

namespace detail {
/// Coefficients a_k of log(x / (1 - e^{-x})) = sum a_k x^k, k = 1..n.
inline IntersectionClass<Rational> log_todd_series(int n) {
    IntersectionClass<Rational> q(n);
    Rational fact(1);
    for (int j = 0; j <= n; ++j) {
        fact *= Rational(j + 1);
        q[j] = Rational(j % 2 == 0 ? 1 : -1) / fact;
    }
    return ic_log(ic_inverse(q));
}
}  // namespace detail

/// Todd class of a bundle with total Chern class c.
template <class R>
IntersectionClass<R> todd_class(const IntersectionClass<R>& c) {
    int n = c.n();
    std::vector<R> p = power_sums(c);
    IntersectionClass<Rational> a = detail::log_todd_series(n);
    IntersectionClass<R> u(n);
    for (int k = 1; k <= n; ++k) u[k] = p[k] * R(a[k]);
    return ic_exp(u);
}

inline CharacterVector<Rational> todd_tangent(int n) {
    IntersectionClass<Rational> c = ic_pow(IntersectionClass<Rational>::linear(n, 1, 1), n + 1);
    return CharacterVector<Rational>{todd_class(c).coeffs()};
}

class NonIntegralEuler : public ArithmeticError {
   public:
    using ArithmeticError::ArithmeticError;
};

/// Hirzebruch-Riemann-Roch: the h^n coefficient of ch(s) td(TP^n).
template <class R>
R hrr(const SheafClass<R>& s) {
    CharacterVector<Rational> td = todd_tangent(s.n());
    CharacterVector<R> ch = chern_character(s);
    R chi(0);
    for (int i = 0; i <= s.n(); ++i) chi = chi + ch[i] * R(td[s.n() - i]);
    if constexpr (std::same_as<R, Rational>) {
        if (s.genuine && !chi.is_integer())
            throw NonIntegralEuler("chi(" + s.label + ") = " + chi.str() + " is not an integer");
    }
    return chi;
}

inline bool bogomolov_violated(const Rational& c1, const Rational& c2) { return (c1 * c1 - Rational(4) * c2).sign() >= 0; }

/// Variant for semistable sheaves, where c1^2 - 4 c2 <= 0 is allowed.
inline bool bogomolov_semistable_violated(const Rational& c1, const Rational& c2) {
    return (c1 * c1 - Rational(4) * c2).sign() > 0;
}

inline bool schwarzenberger_s42(const Integer& c1, const Integer& c2) {
    Integer v = c2 * (c2 + 1 - 3 * c1 - 2 * c1 * c1);
    Integer r = v % 12;
    return r == 0;
}

template <class R = Rational>
struct NormalizedRank2 {
    SheafClass<R> sheaf;
    long twist_amount;
};

inline NormalizedRank2<Rational> normalize_rank2(const SheafClass<Rational>& s) {
    if (s.rank != 2) throw RankMismatch("normalize_rank2: rank must be 2");
    long c = s.c(1).to_long();
    long t = (c % 2 == 0) ? -c / 2 : -(c + 1) / 2;
    return {twist(s, Rational(t)), t};
}

inline SheafClass<Rational> ideal_sheaf_class(const Integer& deg, const Integer& pa) {
    if (deg < 1) throw std::invalid_argument("ideal_sheaf_class: curve degree must be >= 1");
    IntersectionClass<Rational> c(4, {Rational(1), Rational(0), Rational(0), Rational(Integer(-2 * deg)),
                                      Rational(Integer(6 - 15 * deg - 6 * pa))});
    return make_sheaf(1, c, "I_Y", true);
}

/// Degree and arithmetic genus of a curve Y read from c(I_Y(t)).
template <class R>
std::pair<R, R> read_ideal_class(const IntersectionClass<R>& c_twisted, const R& t) {
    SheafClass<R> i = twist(SheafClass<R>{1, c_twisted, "I", false}, R(0) - t);
    R deg = i.chern[3] * R(Rational(-1, 2));
    R pa = (R(6) - R(15) * deg - i.chern[4]) * R(Rational(1, 6));
    return {deg, pa};
}

template <class R = Rational>
SheafClass<R> tangent_bundle(int n) {
    auto o = trivial_bundle<R>(n, 1);
    auto o1 = multiple(line_bundle<R>(n, R(1)), n + 1);
    SheafClass<R> t = ses_third<R>(o, o1, std::nullopt, "T");
    t.genuine = true;
    return t;
}

template <class R = Rational>
SheafClass<R> cotangent_bundle(int n) {
    SheafClass<R> o = dual(tangent_bundle<R>(n));
    o.label = "Omega1";
    return o;
}

/// Omega^p on P^4 via exterior powers of Omega^1.
template <class R = Rational>
SheafClass<R> omega_p4(int p) {
    switch (p) {
        case 0: return trivial_bundle<R>(4, 1);
        case 1: return cotangent_bundle<R>(4);
        case 2: {
            auto s = wedge2_rank4(cotangent_bundle<R>(4));
            s.label = "Omega2";
            return s;
        }
        case 3: {
            auto s = wedge3_rank4(cotangent_bundle<R>(4));
            s.label = "Omega3";
            return s;
        }
        case 4: {
            auto s = line_bundle<R>(4, R(-5));
            s.label = "Omega4";
            return s;
        }
        default: throw std::invalid_argument("omega_p4: p must be in [0,4]");
    }
}

/// The Horrocks-Mumford bundle class: rank 2, c = 1 + 5h + 10h^2.
template <class R = Rational>
SheafClass<R> hm_bundle() {
    return make_bundle(2, IntersectionClass<R>(4, {R(1), R(5), R(10)}), "E");
}

/// Chern class of the ideal sheaf term of the Eagon-Northcott resolution.
/// Tangent side (input T_F): returns c(I_Z(d-2)) from
///   0 -> S^2(T_F)(-5) -> Omega^3 (x) T_F -> Omega^2 -> I_Z(d-2) -> 0.
/// Conormal side (input N*_F = C, t = c_1(C) + 5): returns c(I_Z) from
///   0 -> S^2(C)(t) -> Omega^1 (x) C(t) -> Omega^2(t) -> I_Z -> 0.
template <class R>
IntersectionClass<R> eagon_northcott_ideal_class(const SheafClass<R>& tf, Side side) {
    if (tf.rank != 2) throw RankMismatch("eagon_northcott_ideal_class: rank must be 2");
    if (tf.n() != 4) throw DimensionMismatch("eagon_northcott_ideal_class: ambient must be P^4");
    auto om1 = cotangent_bundle<R>(4);
    auto om2 = wedge2_rank4(om1);
    if (side == Side::Tangent) {
        auto s2 = twist(sym2_rank2(tf), R(-5));
        auto mid = tensor_rank4_rank2(wedge3_rank4(om1), tf);
        return s2.chern * om2.chern * ic_inverse(mid.chern);
    }
    R t = tf.c(1) + R(5);
    auto s2 = twist(sym2_rank2(tf), t);
    auto mid = tensor_rank4_rank2(om1, twist(tf, t));
    return s2.chern * twist(om2, t).chern * ic_inverse(mid.chern);
}

}  // namespace hmdist

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

#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmdist/cyclotomic.hpp"
#include "hmdist/multipoly.hpp"
#include "hmdist/rational.hpp"

// Exterior calculus with polynomial coefficients. The first coords
// polynomial variables are the coordinates z_0..z_{coords-1}; any further
// variables are parameters (never differentiated).

namespace hmdist {

struct FormTag {};
struct VectorTag {};

using IndexMask = unsigned;

inline std::vector<int> mask_indices(IndexMask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1u)
        if (m & 1u) out.push_back(i);
    return out;
}

inline IndexMask indices_mask(const std::vector<int>& idx) {
    IndexMask m = 0;
    for (int i : idx) m |= (1u << i);
    return m;
}

/// Sign of concatenating the increasing tuples a and b into increasing order;
/// 0 if they overlap.
inline int merge_sign(IndexMask a, IndexMask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (IndexMask x = a; x; x &= x - 1) {
        int i = std::countr_zero(x);
        inversions += std::popcount(b & ((1u << i) - 1u));
    }
    return (inversions % 2) ? -1 : 1;
}

/// Sign that sorts an arbitrary index tuple; 0 on repeats.
inline int permutation_sign(const std::vector<int>& idx) {
    int s = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) s = -s;
        }
    return s;
}

class DegreeMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Homogeneous element of degree p of the exterior algebra on dz_i (FormTag)
/// or on d/dz_i (VectorTag), coefficients in S[z, params].
template <class S, class Tag>
class Alternating {
   public:
    using Poly = MultiPoly<S>;
    using Coeffs = std::map<IndexMask, Poly>;

    Alternating() = default;
    Alternating(int coords, int degree) : coords_(coords), degree_(degree) {
        if (coords < 1 || coords > 16) throw std::invalid_argument("coordinate count out of range");
        if (degree < 0 || degree > coords) throw DegreeMismatch("degree out of range");
    }

    /// f dz_{i1} ^ ... ^ dz_{ip} with arbitrary index order.
    static Alternating term(int coords, const std::vector<int>& idx, const Poly& f) {
        Alternating out(coords, static_cast<int>(idx.size()));
        int s = permutation_sign(idx);
        for (int i : idx)
            if (i < 0 || i >= coords) throw std::out_of_range("index out of range");
        if (s != 0) out.add(indices_mask(idx), s > 0 ? f : -f);
        return out;
    }
    static Alternating scalar(int coords, const Poly& f) { return term(coords, {}, f); }
    /// sum_i comps[i] dz_i (or d/dz_i).
    static Alternating one_form(const std::vector<Poly>& comps) {
        int n = static_cast<int>(comps.size());
        Alternating out(n, 1);
        for (int i = 0; i < n; ++i) out.add(1u << i, comps[i]);
        return out;
    }

    int coords() const { return coords_; }
    int degree() const { return degree_; }
    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Poly coefficient(IndexMask m) const {
        auto it = c_.find(m);
        return it == c_.end() ? Poly() : it->second;
    }
    Poly coefficient(const std::vector<int>& idx) const {
        int s = permutation_sign(idx);
        if (s == 0) return Poly();
        Poly p = coefficient(indices_mask(idx));
        return s > 0 ? p : -p;
    }
    /// Component along d/dz_i of a vector field.
    Poly component(int i) const { return coefficient(1u << i); }
    std::size_t nvars() const {
        std::size_t n = static_cast<std::size_t>(coords_);
        for (const auto& [m, p] : c_) n = std::max(n, p.nvars());
        return n;
    }

    void add(IndexMask m, const Poly& f) {
        if (std::popcount(m) != degree_) throw DegreeMismatch("component of the wrong degree");
        if (f.is_zero()) return;
        auto [it, ins] = c_.try_emplace(m, f);
        if (!ins) {
            it->second += f;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Alternating& operator+=(const Alternating& o) {
        check_same(o);
        for (const auto& [m, p] : o.c_) add(m, p);
        return *this;
    }
    Alternating& operator-=(const Alternating& o) {
        check_same(o);
        for (const auto& [m, p] : o.c_) add(m, -p);
        return *this;
    }
    friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
    friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }
    friend Alternating operator-(const Alternating& a) { return a.scaled(Poly(S(-1))); }
    Alternating scaled(const Poly& f) const {
        Alternating out(coords_, degree_);
        for (const auto& [m, p] : c_) out.add(m, p * f);
        return out;
    }
    friend bool operator==(const Alternating& a, const Alternating& b) {
        return a.coords_ == b.coords_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }

    /// Applies fn to every coefficient.
    template <class Fn>
    Alternating map(Fn fn) const {
        Alternating out(coords_, degree_);
        for (const auto& [m, p] : c_) out.add(m, fn(p));
        return out;
    }

    void check_same(const Alternating& o) const {
        if (o.coords_ != coords_ || o.degree_ != degree_) throw DegreeMismatch("incompatible operands");
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [m, p] : c_) {
            if (!out.empty()) out += " + ";
            out += "(" + p.str(names) + ")";
            for (int i : mask_indices(m)) {
                std::string zi = i < static_cast<int>(names.size()) ? names[i] : "z" + std::to_string(i);
                out += std::is_same_v<Tag, FormTag> ? " d" + zi : " D" + zi;
            }
        }
        return out;
    }

   private:
    int coords_ = 5;
    int degree_ = 0;
    Coeffs c_;
};

template <class S>
using PForm = Alternating<S, FormTag>;
template <class S>
using PolyMultiVector = Alternating<S, VectorTag>;
template <class S>
using VectorField = PolyMultiVector<S>;

template <class S, class Tag>
Alternating<S, Tag> wedge(const Alternating<S, Tag>& a, const Alternating<S, Tag>& b) {
    if (a.coords() != b.coords()) throw DegreeMismatch("wedge: coordinate counts differ");
    if (a.degree() + b.degree() > a.coords()) return Alternating<S, Tag>(a.coords(), a.coords());
    Alternating<S, Tag> out(a.coords(), a.degree() + b.degree());
    for (const auto& [ma, pa] : a.coeffs())
        for (const auto& [mb, pb] : b.coeffs()) {
            int s = merge_sign(ma, mb);
            if (s == 0) continue;
            MultiPoly<S> prod = pa * pb;
            out.add(ma | mb, s > 0 ? prod : -prod);
        }
    return out;
}

template <class S>
PForm<S> ext_d(const PForm<S>& a) {
    int n = a.coords();
    if (a.degree() == n) return PForm<S>(n, n);
    PForm<S> out(n, a.degree() + 1);
    for (const auto& [m, p] : a.coeffs())
        for (int i = 0; i < n; ++i) {
            if (m & (1u << i)) continue;
            MultiPoly<S> dp = p.derivative(static_cast<std::size_t>(i));
            if (dp.is_zero()) continue;
            int s = merge_sign(1u << i, m);
            out.add(m | (1u << i), s > 0 ? dp : -dp);
        }
    return out;
}

/// Interior product i_v a for a vector field v.
template <class S>
PForm<S> contract(const VectorField<S>& v, const PForm<S>& a) {
    if (v.degree() != 1) throw DegreeMismatch("contract: expects a vector field");
    if (v.coords() != a.coords()) throw DegreeMismatch("contract: coordinate counts differ");
    if (a.degree() == 0) return PForm<S>(a.coords(), 0);
    PForm<S> out(a.coords(), a.degree() - 1);
    for (const auto& [m, p] : a.coeffs()) {
        int pos = 0;
        for (int i : mask_indices(m)) {
            MultiPoly<S> vi = v.component(i);
            if (!vi.is_zero()) {
                MultiPoly<S> t = p * vi;
                out.add(m & ~(1u << i), pos % 2 == 0 ? t : -t);
            }
            ++pos;
        }
    }
    return out;
}

template <class S = Rational>
VectorField<S> radial_field(int coords = 5) {
    std::vector<MultiPoly<S>> comps;
    for (int i = 0; i < coords; ++i) comps.push_back(MultiPoly<S>::variable(static_cast<std::size_t>(coords), i));
    return VectorField<S>::one_form(comps);
}

/// Directional derivative v(f).
template <class S>
MultiPoly<S> apply_field(const VectorField<S>& v, const MultiPoly<S>& f) {
    MultiPoly<S> out;
    for (int i = 0; i < v.coords(); ++i) {
        MultiPoly<S> vi = v.component(i);
        if (!vi.is_zero()) out += vi * f.derivative(static_cast<std::size_t>(i));
    }
    return out;
}

template <class S>
VectorField<S> lie_bracket(const VectorField<S>& v, const VectorField<S>& w) {
    if (v.degree() != 1 || w.degree() != 1) throw DegreeMismatch("lie_bracket: expects vector fields");
    std::vector<MultiPoly<S>> comps;
    for (int k = 0; k < v.coords(); ++k) comps.push_back(apply_field(v, w.component(k)) - apply_field(w, v.component(k)));
    return VectorField<S>::one_form(comps);
}

namespace detail {
/// Right derivative with respect to the odd generator of d/dz_i.
template <class S>
PolyMultiVector<S> odd_derivative(const PolyMultiVector<S>& p, int i) {
    if (p.degree() == 0) return PolyMultiVector<S>(p.coords(), 0);
    PolyMultiVector<S> out(p.coords(), p.degree() - 1);
    for (const auto& [m, f] : p.coeffs()) {
        if (!(m & (1u << i))) continue;
        int after = std::popcount(m >> (i + 1));
        out.add(m & ~(1u << i), after % 2 == 0 ? f : -f);
    }
    return out;
}
template <class S>
PolyMultiVector<S> even_derivative(const PolyMultiVector<S>& p, int i) {
    return p.map([i](const MultiPoly<S>& f) { return f.derivative(static_cast<std::size_t>(i)); });
}
}  // namespace detail

/// Schouten-Nijenhuis bracket, degree p + q - 1; agrees with lie_bracket on
/// vector fields and gives [v ^ w, f] = w(f) v - v(f) w.
template <class S>
PolyMultiVector<S> schouten(const PolyMultiVector<S>& P, const PolyMultiVector<S>& Q) {
    if (P.coords() != Q.coords()) throw DegreeMismatch("schouten: coordinate counts differ");
    int n = P.coords(), p = P.degree(), q = Q.degree();
    int deg = p + q - 1;
    if (deg < 0) return PolyMultiVector<S>(n, 0);
    if (deg > n) return PolyMultiVector<S>(n, n);
    PolyMultiVector<S> out(n, deg);
    bool flip = ((p - 1) * (q - 1)) % 2 != 0;
    for (int i = 0; i < n; ++i) {
        if (p >= 1) out += wedge(detail::odd_derivative(P, i), detail::even_derivative(Q, i));
        if (q >= 1) {
            auto t = wedge(detail::odd_derivative(Q, i), detail::even_derivative(P, i));
            if (flip)
                out += t;
            else
                out -= t;
        }
    }
    return out;
}

template <class S>
PForm<S> frobenius_1form(const PForm<S>& a) {
    if (a.degree() != 1) throw DegreeMismatch("frobenius_1form: expects a 1-form");
    return wedge(a, ext_d(a));
}

template <class S>
std::pair<PForm<S>, PForm<S>> integrability_2form(const PForm<S>& w1, const PForm<S>& w2) {
    if (w1.degree() != 1 || w2.degree() != 1) throw DegreeMismatch("integrability_2form: expects 1-forms");
    PForm<S> w = wedge(w1, w2);
    return {wedge(w, ext_d(w1)), wedge(w, ext_d(w2))};
}

/// Generic-point Engel diagnostics.
template <class S>
struct EngelFlags {
    bool nonintegrable = false;
    bool f1_nonintegrable = false;
    bool engel() const { return nonintegrable && f1_nonintegrable; }
    /// Vector-field input: v1 ^ v2, v1 ^ v2 ^ v3, and the two 4-vectors.
    /// Form input: the two 4-forms w1 ^ w2 ^ dw_j, then theta ^ dtheta.
    std::vector<Alternating<S, VectorTag>> vector_chain;
    std::vector<Alternating<S, FormTag>> form_chain;
};

template <class S>
EngelFlags<S> engel_flags(const VectorField<S>& v1, const VectorField<S>& v2) {
    EngelFlags<S> f;
    VectorField<S> v3 = lie_bracket(v1, v2);
    auto w12 = wedge(v1, v2);
    auto w123 = wedge(w12, v3);
    f.vector_chain = {v3, w12, w123};
    f.nonintegrable = !w123.is_zero();
    if (f.nonintegrable) {
        for (const auto* vi : {&v1, &v2}) {
            auto w4 = wedge(w123, lie_bracket(*vi, v3));
            f.vector_chain.push_back(w4);
            if (!w4.is_zero()) f.f1_nonintegrable = true;
        }
    }
    return f;
}

class NotDecomposable : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Same diagnostics for F = ker w1 n ker w2. With (A, B) = w1 ^ w2 ^ (dw1, dw2),
/// F is non-integrable iff (A, B) != 0; F^[1] = ker theta with
/// theta = B_c w1 - A_c w2 for the first component c where (A,B) is nonzero.
template <class S>
EngelFlags<S> engel_flags(const PForm<S>& w1, const PForm<S>& w2) {
    EngelFlags<S> f;
    auto [A, B] = integrability_2form(w1, w2);
    f.form_chain = {A, B};
    f.nonintegrable = !(A.is_zero() && B.is_zero());
    if (!f.nonintegrable) return f;
    IndexMask c = 0;
    bool found = false;
    for (IndexMask m = 0; m < (1u << A.coords()) && !found; ++m) {
        if (std::popcount(m) != A.degree()) continue;
        if (!A.coefficient(m).is_zero() || !B.coefficient(m).is_zero()) {
            c = m;
            found = true;
        }
    }
    MultiPoly<S> ac = A.coefficient(c), bc = B.coefficient(c);
    if (!(A.scaled(bc) - B.scaled(ac)).is_zero())
        throw NotDecomposable("w1 ^ w2 ^ dw1 and w1 ^ w2 ^ dw2 are not proportional");
    PForm<S> theta = w1.scaled(bc) - w2.scaled(ac);
    PForm<S> tdt = frobenius_1form(theta);
    f.form_chain.push_back(theta);
    f.form_chain.push_back(tdt);
    f.f1_nonintegrable = !tdt.is_zero();
    return f;
}

/// True iff every coefficient is homogeneous of degree d+1 in the coordinates
/// and i_R w = 0.
template <class S>
bool validate_twisted_form(const PForm<S>& w, int d) {
    if (w.degree() != 2) throw DegreeMismatch("validate_twisted_form: expects a 2-form");
    for (const auto& [m, p] : w.coeffs()) {
        auto h = p.homogeneous_degree(0, static_cast<std::size_t>(w.coords()));
        if (!h || *h != d + 1) return false;
    }
    return contract(radial_field<S>(w.coords()), w).is_zero();
}

template <class S>
using Matrix = std::vector<std::vector<S>>;

class SingularMatrix : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

template <class S>
Matrix<S> identity_matrix(int n) {
    Matrix<S> m(static_cast<std::size_t>(n), std::vector<S>(static_cast<std::size_t>(n), S(0)));
    for (int i = 0; i < n; ++i) m[i][i] = S(1);
    return m;
}

template <class S>
Matrix<S> matrix_inverse(Matrix<S> a) {
    std::size_t n = a.size();
    Matrix<S> inv = identity_matrix<S>(static_cast<int>(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw SingularMatrix("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        S s = S(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            S f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace detail {
template <class S>
std::vector<MultiPoly<S>> linear_images(const Matrix<S>& m, std::size_t nvars) {
    std::vector<MultiPoly<S>> img;
    for (std::size_t i = 0; i < m.size(); ++i) {
        MultiPoly<S> p(nvars);
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!is_zero(m[i][j])) p += MultiPoly<S>::variable(nvars, j).scaled(m[i][j]);
        img.push_back(p);
    }
    return img;
}

template <class S, class Tag>
Alternating<S, Tag> transform(const Alternating<S, Tag>& a, const Matrix<S>& coeff_map, const Matrix<S>& basis_map) {
    int n = a.coords();
    if (static_cast<int>(coeff_map.size()) != n) throw DegreeMismatch("matrix size differs from coordinate count");
    std::size_t nv = a.nvars();
    auto img = linear_images(coeff_map, nv);
    // basis element e_i maps to sum_j basis_map[i][j] e_j
    std::vector<Alternating<S, Tag>> basis;
    for (int i = 0; i < n; ++i) {
        std::vector<MultiPoly<S>> comps;
        for (int j = 0; j < n; ++j) comps.push_back(MultiPoly<S>(basis_map[i][j]));
        basis.push_back(Alternating<S, Tag>::one_form(comps));
    }
    Alternating<S, Tag> out(n, a.degree());
    for (const auto& [m, p] : a.coeffs()) {
        Alternating<S, Tag> t = Alternating<S, Tag>::scalar(n, p.compose(img));
        for (int i : mask_indices(m)) t = wedge(t, basis[i]);
        out += t;
    }
    return out;
}
}  // namespace detail

/// Pullback along z -> M z: z_i -> sum_j M_ij z_j, dz_i -> sum_j M_ij dz_j.
template <class S>
PForm<S> linear_pullback(const PForm<S>& a, const Matrix<S>& m) {
    matrix_inverse(m);
    return detail::transform(a, m, m);
}

/// Pullback of a multivector along z -> M z: coefficients substituted as for
/// forms, d/dz_i -> sum_j (M^-1)_ji d/dz_j.
template <class S>
PolyMultiVector<S> linear_pullback(const PolyMultiVector<S>& a, const Matrix<S>& m) {
    Matrix<S> inv = matrix_inverse(m);
    Matrix<S> t(m.size(), std::vector<S>(m.size(), S(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = inv[j][i];
    return detail::transform(a, m, t);
}

template <class S>
MultiPoly<S> linear_pullback(const MultiPoly<S>& f, const Matrix<S>& m) {
    matrix_inverse(m);
    return f.compose(detail::linear_images(m, std::max(f.nvars(), m.size())));
}

namespace detail {
template <class S>
std::optional<S> ratio(const MultiPoly<S>& num, const MultiPoly<S>& den) {
    if (den.is_zero()) return num.is_zero() ? std::optional<S>(S(1)) : std::nullopt;
    const auto& [e, c] = *den.terms().begin();
    S lam = num.coefficient(e) / c;
    if (!(num == den.scaled(lam))) return std::nullopt;
    return lam;
}
}  // namespace detail

/// lambda with pullback(a) = lambda a, if such a scalar exists.
template <class S, class Tag>
std::optional<S> invariance_scalar(const Alternating<S, Tag>& a, const Matrix<S>& m) {
    Alternating<S, Tag> b = linear_pullback(a, m);
    if (a.is_zero()) return b.is_zero() ? std::optional<S>(S(1)) : std::nullopt;
    const auto& [mask, p] = *a.coeffs().begin();
    auto lam = detail::ratio(b.coefficient(mask), p);
    if (!lam) return std::nullopt;
    if (!(b == a.scaled(MultiPoly<S>(*lam)))) return std::nullopt;
    return lam;
}

template <class S>
std::optional<S> invariance_scalar(const MultiPoly<S>& f, const Matrix<S>& m) {
    return detail::ratio(linear_pullback(f, m), f);
}

/// Index shift z_k -> z_{k-1}.
Matrix<Cyclo5> hm_sigma();
/// Character twist z_k -> zeta^{-k} z_k.
Matrix<Cyclo5> hm_tau();

/// Variables z0..z4, lambda, mu.
const std::vector<std::string>& pencil_vars();

/// The H_5 pencil bivector with lambda, mu as ring parameters (variables 5, 6).
PolyMultiVector<Rational> pencil_bivector();
/// The same bivector specialized at numeric (lambda, mu).
PolyMultiVector<Cyclo5> pencil_bivector(const Cyclo5& lambda, const Cyclo5& mu);
/// sum_i (mu D_{i+2} ^ D_{i+3} + lambda D_{i+1} ^ D_{i+4}).
PolyMultiVector<Cyclo5> constant_pencil_bivector(const Cyclo5& lambda, const Cyclo5& mu);
PolyMultiVector<Rational> constant_pencil_bivector_symbolic();
/// The five cubics f^i with lambda, mu as parameters (variables 5, 6).
std::vector<QPoly> scroll_cubics();
std::vector<CPoly> scroll_cubics(const Cyclo5& lambda, const Cyclo5& mu);

class ZeroPoint : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

template <class S, class Tag>
bool singular_point_check(const Alternating<S, Tag>& w, const std::vector<S>& point) {
    bool nonzero = false;
    for (const auto& x : point)
        if (!is_zero(x)) nonzero = true;
    if (!nonzero) throw ZeroPoint("singular_point_check: the zero vector is not a projective point");
    for (const auto& [m, p] : w.coeffs())
        if (!is_zero(p.evaluate(point))) return false;
    return true;
}

/// Substitutes variable var := value in every coefficient.
template <class S, class Tag>
Alternating<S, Tag> specialize(const Alternating<S, Tag>& a, std::size_t var, const MultiPoly<S>& value) {
    return a.map([&](const MultiPoly<S>& p) { return p.substitute(var, value); });
}

/// Restriction to the chart z_i = 1: substitutes z_i = 1 and drops dz_i.
template <class S>
PForm<S> affine_chart(const PForm<S>& a, int i) {
    PForm<S> out(a.coords(), a.degree());
    for (const auto& [m, p] : a.coeffs()) {
        if (m & (1u << i)) continue;
        out.add(m, p.substitute(static_cast<std::size_t>(i), S(1)));
    }
    return out;
}

template <class Tag>
Alternating<Cyclo5, Tag> to_cyclotomic(const Alternating<Rational, Tag>& a) {
    Alternating<Cyclo5, Tag> out(a.coords(), a.degree());
    for (const auto& [m, p] : a.coeffs()) out.add(m, to_cyclotomic(p));
    return out;
}

}  // namespace hmdist

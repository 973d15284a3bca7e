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

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmdist/cyclotomic.hpp"
#include "hmdist/rational.hpp"

namespace hmdist {

using Exponent = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact coefficients in S (Rational or
/// Cyclo5). Terms are kept in a map keyed by exponent vector, so iteration
/// order is ascending lexicographic and no zero coefficient is ever stored.
/// Operands with different variable counts are widened by padding.
template <class S>
class MultiPoly {
   public:
    using Scalar = S;
    using Terms = std::map<Exponent, S>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
    MultiPoly(const S& c) { add_term(Exponent{}, c); }
    template <std::integral I>
    MultiPoly(I v) : MultiPoly(S(Rational(v))) {}
    MultiPoly(const Rational& r)
        requires(!std::same_as<S, Rational>)
        : MultiPoly(S(r)) {}

    static MultiPoly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw std::out_of_range("variable index out of range");
        Exponent e(nvars, 0);
        e[i] = 1;
        return monomial(e, S(1));
    }
    static MultiPoly monomial(const Exponent& e, const S& c) {
        MultiPoly p(e.size());
        p.add_term(e, c);
        return p;
    }
    static MultiPoly constant(std::size_t nvars, const S& c) { return monomial(Exponent(nvars, 0), c); }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    }
    S constant_term() const { return coefficient(Exponent(nvars_, 0)); }

    S coefficient(Exponent e) const {
        e.resize(std::max(e.size(), nvars_), 0);
        if (e.size() > nvars_) {
            for (std::size_t i = nvars_; i < e.size(); ++i)
                if (e[i] != 0) return S(0);
            e.resize(nvars_);
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    /// Adds c * x^e in place; e may be shorter than nvars.
    void add_term(Exponent e, const S& c) {
        if (is_zero_scalar(c)) return;
        if (e.size() > nvars_) widen_in_place(e.size());
        e.resize(nvars_, 0);
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (is_zero_scalar(it->second)) terms_.erase(it);
        }
    }

    MultiPoly widened(std::size_t n) const {
        MultiPoly out = *this;
        if (n > nvars_) out.widen_in_place(n);
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        if (o.nvars_ > nvars_) widen_in_place(o.nvars_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        if (o.nvars_ > nvars_) widen_in_place(o.nvars_);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly out(a.nvars_);
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        std::size_t n = std::max(a.nvars_, b.nvars_);
        MultiPoly out(n);
        if (a.is_zero() || b.is_zero()) return out;
        Exponent e(n, 0);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                std::fill(e.begin(), e.end(), 0u);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    MultiPoly scaled(const S& s) const {
        MultiPoly out(nvars_);
        if (is_zero_scalar(s)) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
        std::size_t n = std::max(a.nvars_, b.nvars_);
        return a.widened(n).terms_ == b.widened(n).terms_;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(nvars_, S(1));
        MultiPoly b = *this;
        while (k) {
            if (k & 1u) r *= b;
            k >>= 1u;
            if (k) b *= b;
        }
        return r;
    }

    MultiPoly derivative(std::size_t var) const {
        MultiPoly out(nvars_);
        if (var >= nvars_) return out;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent f = e;
            f[var] -= 1;
            out.add_term(f, c * S(Rational(static_cast<long>(e[var]))));
        }
        return out;
    }

    /// Total degree in the variables [begin, end); -1 for the zero polynomial.
    int degree(std::size_t begin = 0, std::size_t end = static_cast<std::size_t>(-1)) const {
        int best = -1;
        for (const auto& [e, c] : terms_) best = std::max(best, partial_degree(e, begin, end));
        return best;
    }

    /// The common degree in [begin, end) if every term has it, 0 for zero.
    std::optional<int> homogeneous_degree(std::size_t begin = 0,
                                          std::size_t end = static_cast<std::size_t>(-1)) const {
        if (terms_.empty()) return 0;
        int d = partial_degree(terms_.begin()->first, begin, end);
        for (const auto& [e, c] : terms_)
            if (partial_degree(e, begin, end) != d) return std::nullopt;
        return d;
    }

    /// Replaces variable var by the polynomial value.
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
        if (var >= nvars_) return *this;
        std::size_t n = std::max(nvars_, value.nvars_);
        MultiPoly out(n);
        std::map<unsigned, MultiPoly> powers;
        for (const auto& [e, c] : terms_) {
            Exponent rest = e;
            unsigned k = rest[var];
            rest[var] = 0;
            MultiPoly base = monomial(rest, c);
            if (k == 0) {
                out += base;
                continue;
            }
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
            out += base * it->second;
        }
        return out;
    }
    MultiPoly substitute(std::size_t var, const S& value) const {
        return substitute(var, constant(nvars_, value));
    }

    /// Simultaneous substitution x_i -> images[i] for i < images.size().
    MultiPoly compose(const std::vector<MultiPoly>& images) const {
        std::size_t n = nvars_;
        for (const auto& p : images) n = std::max(n, p.nvars_);
        MultiPoly out(n);
        std::vector<std::map<unsigned, MultiPoly>> cache(images.size());
        for (const auto& [e, c] : terms_) {
            Exponent rest = e;
            MultiPoly term(n);
            for (std::size_t i = 0; i < images.size() && i < rest.size(); ++i) rest[i] = 0;
            term = monomial(rest, c).widened(n);
            for (std::size_t i = 0; i < images.size() && i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = cache[i].find(e[i]);
                if (it == cache[i].end()) it = cache[i].emplace(e[i], images[i].pow(e[i])).first;
                term = term * it->second;
            }
            out += term;
        }
        return out;
    }

    S evaluate(const std::vector<S>& point) const {
        S total(0);
        for (const auto& [e, c] : terms_) {
            S t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (i >= point.size()) throw std::invalid_argument("evaluation point too short");
                S p(1);
                for (unsigned k = 0; k < e[i]; ++k) p *= point[i];
                t *= p;
            }
            total += t;
        }
        return total;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = scalar_str(c);
            bool neg = !cs.empty() && cs[0] == '-' && is_plain_rational(c);
            if (neg) cs = cs.substr(1);
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            bool unit = cs == "1";
            bool monic = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
            if (!unit || monic) os << cs;
            bool need_star = !unit || monic;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                need_star = true;
                os << (i < names.size() ? names[i] : "x" + std::to_string(i));
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

   private:
    static bool is_zero_scalar(const S& c) { return hmdist::is_zero(c); }
    static std::string scalar_str(const S& c) {
        if constexpr (std::same_as<S, Cyclo5>) {
            if (c.is_rational()) return c[0].str();
        }
        return c.str();
    }
    static bool is_plain_rational(const S& c) {
        if constexpr (std::same_as<S, Cyclo5>) return c.is_rational();
        return true;
    }
    static int partial_degree(const Exponent& e, std::size_t begin, std::size_t end) {
        int d = 0;
        for (std::size_t i = begin; i < e.size() && i < end; ++i) d += static_cast<int>(e[i]);
        return d;
    }
    void widen_in_place(std::size_t n) {
        Terms t;
        for (auto& [e, c] : terms_) {
            Exponent f = e;
            f.resize(n, 0);
            t.emplace(std::move(f), c);
        }
        terms_ = std::move(t);
        nvars_ = n;
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

template <class S>
bool is_zero(const MultiPoly<S>& p) {
    return p.is_zero();
}

using QPoly = MultiPoly<Rational>;
using CPoly = MultiPoly<Cyclo5>;

/// Coefficient-wise image of a rational polynomial in Q(zeta5).
inline CPoly to_cyclotomic(const QPoly& p) {
    CPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, Cyclo5(c));
    return out;
}

}  // namespace hmdist

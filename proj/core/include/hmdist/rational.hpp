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

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hmdist {

using Integer = mpz_class;

class ArithmeticError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Exact rational number, always kept in lowest terms.
class Rational {
   public:
    Rational() = default;
    template <std::integral I>
    Rational(I v) : q_(static_cast<long>(v)) {}
    template <std::integral I, std::integral J>
    Rational(I num, J den) {
        if (den == 0) throw ArithmeticError("zero denominator");
        q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q_.canonicalize();
    }
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw ArithmeticError("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "n", "-n" or "n/d".
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(s, 10));
            return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }

    const mpq_class& raw() const { return q_; }
    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Numerator when integral; throws otherwise.
    Integer to_integer() const {
        if (!is_integer()) throw ArithmeticError("not an integer: " + str());
        return q_.get_num();
    }
    long to_long() const {
        Integer z = to_integer();
        if (!z.fits_slong_p()) throw ArithmeticError("integer out of range: " + str());
        return z.get_si();
    }

    std::string str() const { return q_.get_str(10); }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ArithmeticError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

   private:
    mpq_class q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational pow(const Rational& base, unsigned e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

/// Floor and ceiling of an exact rational.
inline Integer floor(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}
inline Integer ceil(const Rational& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

/// Generalized binomial coefficient C(top, k) for any rational top and k >= 0;
/// zero for k < 0.
template <class R>
R binomial(const R& top, long k) {
    if (k < 0) return R(0);
    R out(1);
    for (long i = 0; i < k; ++i) {
        out = out * (top - R(i));
        out = out * R(Rational(1, i + 1));
    }
    return out;
}

inline Integer binomial_int(long top, long k) {
    return binomial<Rational>(Rational(top), k).to_integer();
}

}  // namespace hmdist

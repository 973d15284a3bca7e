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

#include <array>
#include <ostream>
#include <string>

#include "hmdist/rational.hpp"

namespace hmdist {

/// Element of Q(zeta), zeta a primitive 5th root of unity, stored in the basis
/// 1, zeta, zeta^2, zeta^3 modulo 1 + zeta + zeta^2 + zeta^3 + zeta^4.
class Cyclo5 {
   public:
    using Coeffs = std::array<Rational, 4>;

    Cyclo5() = default;
    template <std::integral I>
    Cyclo5(I v) : c_{Rational(v), 0, 0, 0} {}
    Cyclo5(const Rational& r) : c_{r, 0, 0, 0} {}
    explicit Cyclo5(const Coeffs& c) : c_(c) {}

    static Cyclo5 zeta() { return Cyclo5(Coeffs{0, 1, 0, 0}); }
    /// zeta^k for any integer k.
    static Cyclo5 zeta_pow(long k) { return from_power_coeffs(((k % 5) + 5) % 5, Rational(1)); }
    /// 1 + 2 zeta + 2 zeta^4, whose square is 5.
    static Cyclo5 sqrt5() { return Cyclo5(1) + Cyclo5(2) * zeta() + Cyclo5(2) * zeta_pow(4); }

    const Coeffs& coeffs() const { return c_; }
    const Rational& operator[](int i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& r : c_)
            if (!r.is_zero()) return false;
        return true;
    }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    Cyclo5& operator+=(const Cyclo5& o) {
        for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclo5& operator-=(const Cyclo5& o) {
        for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Cyclo5& operator*=(const Cyclo5& o) {
        std::array<Rational, 7> prod{};
        for (int i = 0; i < 4; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; j < 4; ++j) prod[i + j] += c_[i] * o.c_[j];
        }
        Cyclo5 out;
        for (int e = 0; e < 7; ++e) out += from_power_coeffs(e % 5, prod[e]);
        *this = out;
        return *this;
    }
    Cyclo5& operator/=(const Cyclo5& o) { return *this *= o.inverse(); }

    friend Cyclo5 operator+(Cyclo5 a, const Cyclo5& b) { return a += b; }
    friend Cyclo5 operator-(Cyclo5 a, const Cyclo5& b) { return a -= b; }
    friend Cyclo5 operator*(Cyclo5 a, const Cyclo5& b) { return a *= b; }
    friend Cyclo5 operator/(Cyclo5 a, const Cyclo5& b) { return a /= b; }
    friend Cyclo5 operator-(const Cyclo5& a) { return Cyclo5(0) - a; }
    friend bool operator==(const Cyclo5& a, const Cyclo5& b) { return a.c_ == b.c_; }

    /// Galois automorphism zeta -> zeta^k, k coprime to 5.
    Cyclo5 galois(int k) const {
        Cyclo5 out;
        for (int i = 0; i < 4; ++i) out += from_power_coeffs((i * k) % 5, c_[i]);
        return out;
    }

    Rational norm() const {
        Cyclo5 n = *this * galois(2) * galois(3) * galois(4);
        if (!n.is_rational()) throw ArithmeticError("norm not rational");
        return n.c_[0];
    }

    Cyclo5 inverse() const {
        if (is_zero()) throw ArithmeticError("division by zero in Q(zeta5)");
        Cyclo5 rest = galois(2) * galois(3) * galois(4);
        Rational n = (*this * rest).c_[0];
        for (auto& r : rest.c_) r /= n;
        return rest;
    }

    std::string str() const {
        return "[" + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + "," + c_[3].str() + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const Cyclo5& x) { return os << x.str(); }

   private:
    // r * zeta^e for 0 <= e < 5.
    static Cyclo5 from_power_coeffs(long e, const Rational& r) {
        Cyclo5 out;
        if (e < 4) {
            out.c_[e] = r;
        } else {
            for (auto& x : out.c_) x = -r;
        }
        return out;
    }

    Coeffs c_{};
};

inline bool is_zero(const Cyclo5& x) { return x.is_zero(); }

}  // namespace hmdist

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

#include <cstdint>
#include <random>
#include <vector>

#include "hmdist/form_algebra.hpp"
#include "hmdist/intersection_ring.hpp"

namespace hmdist::testing {

/// Seeded generator of small random exact objects.
class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long bound = 5, long den = 3) {
        return Rational(integer(-bound, bound), integer(1, den));
    }
    Rational nonzero_rational(long bound = 5, long den = 3) {
        Rational r;
        do r = rational(bound, den);
        while (r.is_zero());
        return r;
    }
    Cyclo5 cyclo(long bound = 3) {
        return Cyclo5(Cyclo5::Coeffs{rational(bound, 2), rational(bound, 2), rational(bound, 2), rational(bound, 2)});
    }

    Exponent exponent(std::size_t nvars, int total) {
        Exponent e(nvars, 0);
        for (int k = 0; k < total; ++k) e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))] += 1;
        return e;
    }
    QPoly poly(std::size_t nvars, int max_deg, int max_terms) {
        QPoly p(nvars);
        int t = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < t; ++i) p.add_term(exponent(nvars, static_cast<int>(integer(0, max_deg))), nonzero_rational());
        return p;
    }
    QPoly homogeneous(std::size_t nvars, int deg, int max_terms) {
        QPoly p(nvars);
        int t = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < t; ++i) p.add_term(exponent(nvars, deg), nonzero_rational());
        return p;
    }

    template <class Tag>
    Alternating<Rational, Tag> alternating(int coords, int p, int max_deg, int max_terms) {
        Alternating<Rational, Tag> out(coords, p);
        std::vector<IndexMask> masks = masks_of_degree(coords, p);
        for (IndexMask m : masks)
            if (coin()) out.add(m, poly(static_cast<std::size_t>(coords), max_deg, max_terms));
        if (out.is_zero()) out.add(masks[static_cast<std::size_t>(integer(0, static_cast<long>(masks.size()) - 1))],
                                   poly(static_cast<std::size_t>(coords), max_deg, max_terms));
        return out;
    }
    template <class Tag>
    Alternating<Rational, Tag> homogeneous_alternating(int coords, int p, int deg, int max_terms) {
        Alternating<Rational, Tag> out(coords, p);
        std::vector<IndexMask> masks = masks_of_degree(coords, p);
        for (IndexMask m : masks)
            if (coin()) out.add(m, homogeneous(static_cast<std::size_t>(coords), deg, max_terms));
        if (out.is_zero()) out.add(masks.front(), homogeneous(static_cast<std::size_t>(coords), deg, 1));
        return out;
    }
    PForm<Rational> form(int coords, int p, int max_deg = 3, int max_terms = 3) {
        return alternating<FormTag>(coords, p, max_deg, max_terms);
    }
    PolyMultiVector<Rational> multivector(int coords, int p, int max_deg = 2, int max_terms = 2) {
        return alternating<VectorTag>(coords, p, max_deg, max_terms);
    }
    VectorField<Rational> field(int coords, int max_deg = 2, int max_terms = 2) {
        return multivector(coords, 1, max_deg, max_terms);
    }

    /// Class on P^n with integer entries; constant term 1 if unit.
    IntersectionClass<Rational> intersection_class(int n, bool unit, long bound = 6) {
        IntersectionClass<Rational> c(n);
        for (int i = 0; i <= n; ++i) c[i] = Rational(integer(-bound, bound));
        if (unit) c[0] = Rational(1);
        return c;
    }
    SheafClass<Rational> bundle(int n, int rank, long bound = 6) {
        IntersectionClass<Rational> c = intersection_class(n, true, bound);
        for (int i = rank + 1; i <= n; ++i) c[i] = Rational(0);
        return make_sheaf(rank, c, "F");
    }

    Matrix<Rational> invertible_matrix(int n, long bound = 3) {
        for (;;) {
            Matrix<Rational> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
            for (auto& row : m)
                for (auto& x : row) x = Rational(integer(-bound, bound));
            try {
                matrix_inverse(m);
                return m;
            } catch (const SingularMatrix&) {
            }
        }
    }

   private:
    static std::vector<IndexMask> masks_of_degree(int coords, int p) {
        std::vector<IndexMask> out;
        for (IndexMask m = 0; m < (1u << coords); ++m)
            if (std::popcount(m) == p) out.push_back(m);
        return out;
    }

    std::mt19937_64 rng_;
};

}  // namespace hmdist::testing

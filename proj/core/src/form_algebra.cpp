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

#include "hmdist/form_algebra.hpp"

namespace hmdist {

namespace {

constexpr std::size_t kPencilVars = 7;
constexpr std::size_t kLambda = 5;
constexpr std::size_t kMu = 6;

template <class S>
MultiPoly<S> zv(std::size_t nv, int i) {
    return MultiPoly<S>::variable(nv, static_cast<std::size_t>(((i % 5) + 5) % 5));
}

int mod5(int i) { return ((i % 5) + 5) % 5; }

template <class S>
PolyMultiVector<S> pencil_generic(const MultiPoly<S>& lam, const MultiPoly<S>& mu, std::size_t nv, bool constant) {
    PolyMultiVector<S> out(5, 2);
    for (int i = 0; i < 5; ++i) {
        MultiPoly<S> f = constant ? MultiPoly<S>::constant(nv, S(1))
                                  : lam * mu * zv<S>(nv, i).pow(2) + mu.pow(2) * zv<S>(nv, i + 1).pow(2) * zv<S>(nv, i + 4) -
                                        lam.pow(2) * zv<S>(nv, i + 2) * zv<S>(nv, i + 3).pow(2);
        out += PolyMultiVector<S>::term(5, {mod5(i + 2), mod5(i + 3)}, f * mu);
        out += PolyMultiVector<S>::term(5, {mod5(i + 1), mod5(i + 4)}, f * lam);
    }
    return out;
}

template <class S>
std::vector<MultiPoly<S>> cubics_generic(const MultiPoly<S>& l, const MultiPoly<S>& m, std::size_t nv) {
    std::vector<MultiPoly<S>> out;
    for (int i = 0; i < 5; ++i) {
        auto z = [&](int k) { return zv<S>(nv, i + k); };
        out.push_back(l.pow(2) * m.pow(2) * z(0).pow(3) +
                      l.pow(3) * m * (z(1).pow(2) * z(3) + z(2) * z(4).pow(2)) -
                      l * m.pow(3) * (z(1) * z(2).pow(2) + z(3).pow(2) * z(4)) - l.pow(4) * z(0) * z(1) * z(4) -
                      m.pow(4) * z(0) * z(2) * z(3));
    }
    return out;
}

}  // namespace

Matrix<Cyclo5> hm_sigma() {
    Matrix<Cyclo5> m(5, std::vector<Cyclo5>(5, Cyclo5(0)));
    for (int k = 0; k < 5; ++k) m[k][mod5(k - 1)] = Cyclo5(1);
    return m;
}

Matrix<Cyclo5> hm_tau() {
    Matrix<Cyclo5> m(5, std::vector<Cyclo5>(5, Cyclo5(0)));
    for (int k = 0; k < 5; ++k) m[k][k] = Cyclo5::zeta_pow(-k);
    return m;
}

const std::vector<std::string>& pencil_vars() {
    static const std::vector<std::string> v{"z0", "z1", "z2", "z3", "z4", "lambda", "mu"};
    return v;
}

PolyMultiVector<Rational> pencil_bivector() {
    return pencil_generic<Rational>(QPoly::variable(kPencilVars, kLambda), QPoly::variable(kPencilVars, kMu), kPencilVars,
                                    false);
}

PolyMultiVector<Cyclo5> pencil_bivector(const Cyclo5& lambda, const Cyclo5& mu) {
    return pencil_generic<Cyclo5>(CPoly::constant(5, lambda), CPoly::constant(5, mu), 5, false);
}

PolyMultiVector<Cyclo5> constant_pencil_bivector(const Cyclo5& lambda, const Cyclo5& mu) {
    return pencil_generic<Cyclo5>(CPoly::constant(5, lambda), CPoly::constant(5, mu), 5, true);
}

PolyMultiVector<Rational> constant_pencil_bivector_symbolic() {
    return pencil_generic<Rational>(QPoly::variable(kPencilVars, kLambda), QPoly::variable(kPencilVars, kMu), kPencilVars,
                                    true);
}

std::vector<QPoly> scroll_cubics() {
    return cubics_generic<Rational>(QPoly::variable(kPencilVars, kLambda), QPoly::variable(kPencilVars, kMu),
                                    kPencilVars);
}

std::vector<CPoly> scroll_cubics(const Cyclo5& lambda, const Cyclo5& mu) {
    return cubics_generic<Cyclo5>(CPoly::constant(5, lambda), CPoly::constant(5, mu), 5);
}

}  // namespace hmdist

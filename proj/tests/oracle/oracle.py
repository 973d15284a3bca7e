#!/usr/bin/env python3
# Copyright 2026 The hmdist Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent sympy oracle for values the C++ tests compare against.

Writes derived.json next to this script (or to the path given as argv[1]).
Nothing here imports or shells out to the C++ library.
"""

import itertools
import json
import os
import sys

import sympy as sp
from sympy.polys.polyfuncs import symmetrize

h = sp.Symbol("h")
E = sp.symbols("e1:5")
F = sp.symbols("f1:3")


def elementary(vs, k):
    return sum(sp.prod(c) for c in itertools.combinations(vs, k))


def total_chern(roots, top=4):
    p = sp.expand(sp.prod([1 + r * h for r in roots]))
    return [sp.expand(p.coeff(h, k)) for k in range(top + 1)]


def to_elementary(expr, roots, names):
    sym, rest, defs = symmetrize(sp.expand(expr), roots, formal=True)
    assert rest == 0
    return sp.expand(sym.subs({s: n for (s, _), n in zip(defs, names)}))


def splitting_formulas():
    a = sp.symbols("a0:4")
    b = sp.symbols("b0:2")
    cases = {
        "wedge2_rank4": ([x + y for x, y in itertools.combinations(a, 2)], [a]),
        "wedge3_rank4": ([x + y + w for x, y, w in itertools.combinations(a, 3)], [a]),
        "sym2_rank2": ([b[0] + b[0], b[0] + b[1], b[1] + b[1]], [b]),
        "tensor_rank4_rank2": ([x + y for x in a for y in b], [a, b]),
    }
    out = {}
    for name, (roots, groups) in cases.items():
        coeffs = []
        for c in total_chern(roots)[1:]:
            expr = c
            if a in groups:
                expr = to_elementary(expr, a, E)
            if b in groups:
                expr = to_elementary(expr, b, F)
            coeffs.append(str(expr).replace("**", "^"))
        out[name] = coeffs
    return out


# Intersection ring of P^4 by truncated power series in h.
def trunc(p):
    p = sp.expand(p)
    return sum(p.coeff(h, k) * h ** k for k in range(5))


def chern_total(roots):
    return trunc(sp.prod([1 + r * h for r in roots]))


def ch(roots):
    return trunc(sum(sp.exp(r * h).series(h, 0, 5).removeO() for r in roots))


def todd_p4():
    x = h
    t = (x / (1 - sp.exp(-x))).series(x, 0, 5).removeO()
    return trunc(t ** 5)


TODD = todd_p4()


def chi(roots):
    return sp.expand(trunc(ch(roots) * TODD)).coeff(h, 4)


# Chern roots of Omega^1 on P^4 are not available; use Euler sequence
# 0 -> Omega^1 -> O(-1)^5 -> O -> 0, so ch(Omega^p) from exterior powers of
# O(-1)^5 with alternating subtraction: ch(Omega^p) = sum_j (-1)^j ch(L^{p-j} O(-1)^5).
def ch_omega(p):
    total = 0
    for j in range(p + 1):
        total += (-1) ** j * sp.binomial(5, p - j) * sp.exp(-(p - j) * h).series(h, 0, 5).removeO()
    return trunc(total)


def euler_omega():
    out = {}
    for p in range(5):
        row = {}
        for k in range(-10, 11):
            val = sp.expand(trunc(ch_omega(p) * sp.exp(k * h).series(h, 0, 5).removeO() * TODD)).coeff(h, 4)
            assert val.is_integer
            row[str(k)] = int(val)
        out[str(p)] = row
    return out


def chern_from_ch(chv, rank):
    # Newton identities: c from power sums p_k = k! ch_k.
    pk = [sp.factorial(k) * sp.expand(chv).coeff(h, k) for k in range(5)]
    c = [sp.Integer(1)]
    for k in range(1, 5):
        s = sum((-1) ** (i - 1) * c[k - i] * pk[i] for i in range(1, k + 1))
        c.append(sp.expand(s / k))
    return trunc(sum(c[k] * h ** k for k in range(5)))


def curve_invariants(ideal_ch):
    c = chern_from_ch(ideal_ch, 1)
    c3 = sp.expand(c).coeff(h, 3)
    c4 = sp.expand(c).coeff(h, 4)
    deg = -c3 / 2
    pa = (6 - 15 * deg - c4) / 6
    return deg, pa


def conormal_curve(k1, k2):
    # 0 -> S^2 C(t) -> Omega^1 (x) C(t) -> Omega^2(t) -> I_Z -> 0, t = c1(C) + 5
    t = k1 + k2 + 5
    e = lambda k: sp.exp(k * h).series(h, 0, 5).removeO()
    chC = e(k1) + e(k2)
    chS2 = e(2 * k1) + e(k1 + k2) + e(2 * k2)
    ideal = ch_omega(2) * e(t) - ch_omega(1) * chC * e(t) + chS2 * e(t)
    return curve_invariants(trunc(ideal))


def tangent_curve(k1, k2, d):
    # 0 -> S^2 T(-5) -> Omega^3 (x) T -> Omega^2 -> I_Z(d-2) -> 0
    e = lambda k: sp.exp(k * h).series(h, 0, 5).removeO()
    chT = e(k1) + e(k2)
    chS2 = e(2 * k1) + e(k1 + k2) + e(2 * k2)
    twisted = ch_omega(2) - ch_omega(3) * chT + chS2 * e(-5)
    return curve_invariants(trunc(twisted * e(-(d - 2))))


# --- exterior calculus, independent dict-based implementation ---
z = sp.symbols("z0:5")


def clean(a):
    return {k: v for k, v in ((k, sp.expand(v)) for k, v in a.items()) if v != 0}


def f_add(a, b):
    r = dict(a)
    for k, v in b.items():
        r[k] = r.get(k, 0) + v
    return clean(r)


def f_wedge(a, b):
    out = {}
    for ia, ca in a.items():
        for ib, cb in b.items():
            idx = ia + ib
            if len(set(idx)) < len(idx):
                continue
            inv = sum(1 for x, y in itertools.combinations(idx, 2) if x > y)
            key = tuple(sorted(idx))
            out[key] = out.get(key, 0) + (-1) ** inv * ca * cb
    return clean(out)


def f_d(a):
    out = {}
    for ia, ca in a.items():
        for l in range(5):
            out = f_add(out, f_wedge({(l,): sp.diff(ca, z[l])}, {ia: 1}))
    return out


def f_contract_radial(a):
    out = {}
    for ia, ca in a.items():
        for pos, i in enumerate(ia):
            key = ia[:pos] + ia[pos + 1:]
            out[key] = out.get(key, 0) + (-1) ** pos * z[i] * ca
    return clean(out)


def jacobi_failures(P):
    def p(i, j):
        if i == j:
            return 0
        return P.get((i, j), 0) if i < j else -P.get((j, i), 0)

    bad = 0
    for i, j, k in itertools.combinations(range(5), 3):
        s = sum(p(i, l) * sp.diff(p(j, k), z[l]) + p(j, l) * sp.diff(p(k, i), z[l]) + p(k, l) * sp.diff(p(i, j), z[l])
                for l in range(5))
        if sp.expand(s) != 0:
            bad += 1
    return bad


def pencil(fn):
    lam, mu = sp.symbols("lambda mu")
    P = {}
    for i in range(5):
        f = fn(i, lam, mu)
        for (a, b), c in [(((i + 2) % 5, (i + 3) % 5), mu), (((i + 1) % 5, (i + 4) % 5), lam)]:
            if a > b:
                a, b, c = b, a, -c
            P[(a, b)] = P.get((a, b), 0) + c * f
    return clean(P)


def Z(k):
    return z[k % 5]


def forms_values():
    z0, z1, z2, z3, z4 = z
    w1 = {(0,): z2 - z4, (1,): z3, (2,): -z0, (3,): -z1, (4,): z0}
    w2 = {(0,): z3, (1,): 2 * z2 - z4, (2,): -2 * z1, (3,): -z0, (4,): z1}
    w = f_wedge(w1, w2)
    triple = [len(f_wedge(w, f_d(w1))) > 0, len(f_wedge(w, f_d(w2))) > 0, len(f_wedge(w2, f_d(w2))) > 0]
    iso = {(0, 1): z4 ** 3 + (z1 * z2 + z3 * z4) * z2 + z1 ** 2 * z3,
           (0, 2): z3 ** 3 - (z1 * z2 + z3 * z4) * z1 + z0 ** 2 * z4,
           (0, 3): -(z1 ** 3 - (z1 * z2 - z3 * z4) * z4 + z3 ** 2 * z0),
           (0, 4): -(z2 ** 3 + (z1 * z2 - z3 * z4) * z3 + z4 ** 2 * z1),
           (1, 2): (z1 * z2 + z3 * z4) * z0, (3, 4): (z1 * z2 - z3 * z4) * z0,
           (1, 3): z1 ** 2 * z0, (1, 4): z4 ** 2 * z0, (2, 3): z3 ** 2 * z0, (2, 4): z2 ** 2 * z0}
    printed = pencil(lambda i, l, m: l * m * Z(i) ** 2 + m ** 2 * Z(i + 1) ** 2 * Z(i + 4) - l ** 2 * Z(i + 2) * Z(i + 3) ** 2)
    quadratic = pencil(lambda i, l, m: l * m * Z(i) ** 2 + m ** 2 * Z(i + 1) * Z(i + 4) - l ** 2 * Z(i + 2) * Z(i + 3))
    return {
        "deg1_triple_nonzero": triple,
        "deg1_w_dw1_terms": {",".join(map(str, k)): str(v).replace("**", "^") for k, v in sorted(f_wedge(w, f_d(w1)).items())},
        "isolated_radial_components": len(f_contract_radial(clean(iso))),
        "pencil_jacobi_failures_printed": jacobi_failures(printed),
        "pencil_jacobi_failures_quadratic": jacobi_failures(quadratic),
    }


def conic_point(bound=3):
    # smallest-height point of {z0 = z1 = 0, 2 z2^2 - z3^2 - 3 z2 z4 + z4^2 = 0}
    rng = range(-bound, bound + 1)
    cands = sorted(itertools.product(rng, rng, rng), key=lambda v: (max(map(abs, v)), [abs(x) for x in v], v))
    for a, b, c in cands:
        if (a, b, c) == (0, 0, 0):
            continue
        if 2 * a * a - b * b - 3 * a * c + c * c == 0:
            return [0, 0, a, b, c]
    return None


def main():
    out = {
        "splitting": splitting_formulas(),
        "euler_omega": euler_omega(),
        "conormal_curves": [],
        "tangent_curves": [],
        "forms": forms_values(),
        "conic_point": conic_point(),
    }
    for k1, k2 in [(-2, -2), (-2, -3), (-3, -3), (-2, -4), (-1, -3)]:
        deg, pa = conormal_curve(k1, k2)
        out["conormal_curves"].append({"summands": [k1, k2], "deg": str(deg), "pa": str(pa)})
    for k1, k2, d in [(1, 0, 1), (1, -1, 2), (0, 0, 2), (1, -2, 3)]:
        deg, pa = tangent_curve(k1, k2, d)
        out["tangent_curves"].append({"summands": [k1, k2], "d": d, "deg": str(deg), "pa": str(pa)})
    path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(os.path.abspath(__file__)), "derived.json")
    with open(path, "w") as f:
        json.dump(out, f, indent=1, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()

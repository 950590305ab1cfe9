#!/usr/bin/env python3
"""Regenerate tests/golden/*.json with sympy and exact fractions.

Everything here is computed independently of the C++ library: R_n symbolically
in a, V_n from derivatives of tanh, Eulerian numbers from the alternating-sum
formula, walk laws by enumerating all step sequences.
"""

import itertools
import json
import pathlib
from fractions import Fraction
from math import comb

import sympy as sp

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
A_GRID = ["-1", "-1/2", "0", "1/4", "1/2", "1", "2"]
MAX_N = 10

x, a, t = sp.symbols("x a t")


def coeffs(expr, var=x):
    poly = sp.Poly(sp.expand(expr), var)
    cs = [str(sp.nsimplify(c)) for c in reversed(poly.all_coeffs())]
    while len(cs) > 1 and cs[-1] == "0":
        cs.pop()
    return [] if cs == ["0"] else cs


def symbolic_R(max_n):
    r = [None, x]
    for n in range(1, max_n):
        r.append(sp.expand(x * r[n] - a / n * (1 - x**2) * sp.diff(r[n], x)))
    return r


def r_polys():
    rs = symbolic_R(MAX_N)
    return {av: {str(n): coeffs(rs[n].subs(a, sp.Rational(av))) for n in range(1, MAX_N + 1)} for av in A_GRID}


def v_polys(max_n=8):
    out = {}
    for n in range(max_n + 1):
        d = sp.diff(sp.tanh(t), t, n) if n else sp.tanh(t)
        out[str(n)] = coeffs(d.subs(sp.tanh(t), x), x)
    return out


def eulerian_rows(max_n=10):
    def entry(n, k):
        return sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))

    return {str(n): [str(entry(n, k)) for k in range(1, n + 1)] for n in range(1, max_n + 1)}


def walk_law(n, av):
    a_ = Fraction(av)
    law = {}
    for first in (1, -1):
        for rest in itertools.product((1, -1), repeat=n - 1):
            steps = (first,) + rest
            prob = Fraction(1, 2)
            for m in range(1, n):
                prev = steps[:m]
                same = sum(1 for s in prev if s == steps[m])
                # copy a uniformly chosen past step with prob p, flip it otherwise
                p = (a_ + 1) / 2
                prob *= (p * same + (1 - p) * (m - same)) / m
            k = sum(steps)
            law[k] = law.get(k, 0) + prob
    return {str(k): f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
            for k, v in sorted(law.items()) if v != 0}


def distributions():
    grid = ["-1", "-1/2", "0", "3/5", "1"]
    return {av: {str(n): walk_law(n, av) for n in range(1, MAX_N + 1)} for av in grid}


def derivative_at_one():
    rs = symbolic_R(MAX_N)
    return {av: [str(sp.diff(rs[n], x).subs({x: 1, a: sp.Rational(av)})) for n in range(1, MAX_N + 1)]
            for av in A_GRID}


def resultant():
    rs = symbolic_R(4)
    f = sp.expand(rs[4] - (a + 1) * x * rs[3])
    res = sp.factor(sp.resultant(f, rs[2], x))
    return {"expression": str(res), "coeffs_in_a": coeffs(res, a)}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    files = {
        "R_polys.json": r_polys(),
        "V_polys.json": v_polys(),
        "eulerian_rows.json": eulerian_rows(),
        "distributions.json": distributions(),
        "derivative_at_one.json": derivative_at_one(),
        "resultant.json": resultant(),
    }
    for name, data in files.items():
        (OUT / name).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
        print("wrote", OUT / name)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate the offline OEIS b-file fixtures under data/oeis/.

The sandbox these fixtures were produced in had no route to oeis.org, so the
terms are computed here from each sequence's defining formula using plain
Python integers and fractions. This code shares nothing with the C++ library.
Run `prodtri oeis <id> --refresh` with network access to replace a fixture
with the downloaded b-file.
"""
import argparse
import os
from fractions import Fraction
from math import comb, factorial

HEADER = "# {id} (offset {offset}), reconstructed from its defining formula.\n"


def factorials_shifted(n):
    return [factorial(k + 1) for k in range(n)]


def a003319(n):
    # Connected permutations: a(0)=1, a(n) = n! - sum_{k=1}^{n-1} k! a(n-k).
    a = [1]
    for m in range(1, n):
        a.append(factorial(m) - sum(factorial(k) * a[m - k] for k in range(1, m)))
    return a


def binomial_transform(seq, r):
    return [sum(comb(n, k) * r ** (n - k) * seq[k] for k in range(n + 1)) for n in range(len(seq))]


def unit_lower_inverse(m):
    n = len(m)
    x = [[0] * n for _ in range(n)]
    for k in range(n):
        x[k][k] = 1
        for i in range(k + 1, n):
            x[i][k] = -sum(m[i][j] * x[j][k] for j in range(k, i))
    return x


def stieltjes(c, n):
    # Bottom-up evaluation of 1/(1 - c1 x/(1 - c2 x/...)) over Fractions.
    t = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for ci in reversed(c[: n]):
        d = [Fraction(0)] * n  # d = 1 - ci x t
        d[0] = Fraction(1)
        for i in range(1, n):
            d[i] = -ci * t[i - 1]
        inv = [Fraction(0)] * n
        inv[0] = Fraction(1)
        for i in range(1, n):
            inv[i] = -sum(d[j] * inv[i - j] for j in range(1, i + 1))
        t = inv
    assert all(v.denominator == 1 for v in t)
    return [int(v) for v in t]


def motzkin_moments(a, b, n):
    # Moments of a J-fraction as weighted Motzkin path counts.
    h = min(len(a), len(b) + 1)
    cur = [0] * h
    cur[0] = 1
    res = []
    for _ in range(n):
        res.append(cur[0])
        nxt = [0] * h
        for k in range(h):
            if cur[k] == 0:
                continue
            nxt[k] += cur[k] * a[k]
            if k + 1 < h:
                nxt[k + 1] += cur[k]
            if k > 0:
                nxt[k - 1] += cur[k] * b[k - 1]
        cur = nxt
    return res


def almost_triangle(a, n):
    b = [1] + [-v for v in a[: n - 1]]
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(i + 1):
            m[i][k] = b[i - k]
        if i >= 2:
            m[i][i - 1] += -(i - 1)
    return unit_lower_inverse(m)


def hanna_a(r, n):
    c = []
    for k in range(n):
        c.append(r + k)
        c.append(2 + k)
    return stieltjes(c, n)


def hanna_column(r, n):
    m = [1]
    for k in range(1, n):
        m.append((k - r) * m[k - 1] + r * sum(m[i] * m[k - 1 - i] for i in range(k)))
    return m


def flatten(tri):
    return [tri[i][k] for i in range(len(tri)) for k in range(i + 1)]


def deleham(rw, sw, n):
    # x-series of y-polynomials (lists), bottom-up 1/(1 - (r + s y) x t).
    def pmul(p, q):
        out = [0] * (len(p) + len(q) - 1) if p and q else []
        for i, u in enumerate(p):
            for j, v in enumerate(q):
                out[i + j] += u * v
        return out

    def padd(p, q):
        out = [0] * max(len(p), len(q))
        for i, v in enumerate(p):
            out[i] += v
        for i, v in enumerate(q):
            out[i] += v
        return out

    t = [[1]] + [[] for _ in range(n - 1)]
    for level in reversed(range(n)):
        w = [rw[level], sw[level]]
        d = [[1]] + [pmul([-v for v in w], t[i - 1]) for i in range(1, n)]
        inv = [[1]] + [[] for _ in range(n - 1)]
        for i in range(1, n):
            acc = []
            for j in range(1, i + 1):
                acc = padd(acc, pmul(d[j], inv[i - j]))
            inv[i] = [-v for v in acc]
        t = inv
    return [[(t[i][k] if k < len(t[i]) else 0) for k in range(i + 1)] for i in range(n)]


def a132159_rows(n):
    # Rows n >= 1 of T(n,k) = C(n-1,k) (n-k)!, k = 0..n-1.
    return [[comb(m - 1, k) * factorial(m - k) for k in range(m)] for m in range(1, n + 1)]


def build(terms_seq=30, rows_tri=20):
    out = {}
    out["A003319"] = (0, a003319(terms_seq))
    out["A001339"] = (0, binomial_transform(factorials_shifted(terms_seq), 1))
    out["A081923"] = (0, binomial_transform(factorials_shifted(terms_seq), 2))
    out["A094587"] = (0, flatten([[factorial(i) // factorial(k) for k in range(i + 1)] for i in range(rows_tri)]))
    out["A104980"] = (0, flatten(almost_triangle(hanna_a(1, rows_tri), rows_tri)))
    out["A111536"] = (0, flatten(almost_triangle(hanna_a(2, rows_tri), rows_tri)))
    out["A111544"] = (0, flatten(almost_triangle(hanna_a(3, rows_tri), rows_tri)))
    out["A111553"] = (0, flatten(almost_triangle(hanna_a(4, rows_tri), rows_tri)))
    out["A111529"] = (0, hanna_column(2, terms_seq))
    out["A111530"] = (0, hanna_column(3, terms_seq))
    out["A111531"] = (0, hanna_column(4, terms_seq))
    # [0,2,1,3,2,4,3,5,...]: even positions 0,1,2,...; odd positions 2,3,4,...
    rw = [(k // 2) if k % 2 == 0 else (k // 2 + 2) for k in range(rows_tri)]
    sw = [1 if k % 2 == 0 else 0 for k in range(rows_tri)]
    out["A111184"] = (0, flatten(deleham(rw, sw, rows_tri)))
    out["A132159"] = (1, [v for row in a132159_rows(rows_tri) for v in row])
    return out


def self_checks():
    # Cross-checks of the displayed data and the posited continued fractions.
    a = a003319(12)[1:]
    assert a[:7] == [1, 1, 3, 13, 71, 461, 3447]
    assert stieltjes([1, 2, 2, 3, 3, 4, 4, 5, 5, 6], 10) == a[:10]
    assert motzkin_moments([3, 5, 7, 9, 11, 13], [2, 6, 12, 20, 30], 10)[:6] == [1, 3, 11, 49, 261, 1631]
    assert hanna_a(1, 10) == a[:10]
    for r in range(0, 6):
        col = [row[0] for row in almost_triangle(hanna_a(r, 14), 14)]
        assert col == hanna_column(r, 14), r
    # Posited S-form for Martin-Kearney sequences.
    import random
    rng = random.Random(11)
    for _ in range(50):
        al, be, ga = rng.randint(1, 4), rng.randint(-2, 3), rng.randint(1, 4)
        u = [None, 1]
        for k in range(2, 15):
            u.append((al * k + be) * u[k - 1] + ga * sum(u[j] * u[k - j] for j in range(1, k)))
        c = []
        for k in range(14):
            c.append((k + 2) * al + be + ga)
            c.append((k + 1) * al + ga)
        assert stieltjes(c, 14) == u[1:15], (al, be, ga)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "oeis"))
    args = ap.parse_args()
    self_checks()
    os.makedirs(args.out, exist_ok=True)
    for ident, (offset, terms) in sorted(build().items()):
        path = os.path.join(args.out, "b" + ident[1:] + ".txt")
        with open(path, "w") as fh:
            fh.write(HEADER.format(id=ident, offset=offset))
            for i, v in enumerate(terms):
                fh.write(f"{offset + i} {v}\n")
        print(path, len(terms))


if __name__ == "__main__":
    main()

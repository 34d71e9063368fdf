"""Independent brute-force derivation of the frozen values used in the C++ tests.

Works directly from the definitions (points of the dilated polytope, coordinatewise
order, Möbius recursion, multichains) with sympy for exact interpolation. Nothing
here shares code with the C++ library.

    python3 tests/oracles/derive_expected.py
"""
import itertools
from fractions import Fraction

import sympy as sp

u, X, Y = sp.symbols("u X Y")


def points(constraints, n, dil=1):
    out = []
    for x in itertools.product(range(dil * n + 1), repeat=n):
        if all(sum(x[i - 1] for i in sup) <= dil * b for sup, b in constraints):
            out.append(x)
    return out


def tn_constraints(n):
    return [([i], 1) for i in range(2, n + 1)] + [(list(range(1, n + 1)), n)]


def leq(a, b):
    return all(p <= q for p, q in zip(a, b))


def mobius_triangle(P):
    P = sorted(P)
    M = 0
    for a in P:
        mu = {}
        ups = [b for b in P if leq(a, b)]
        ups.sort(key=sum)
        for b in ups:
            if b == a:
                mu[b] = 1
            else:
                mu[b] = -sum(mu[e] for e in mu if leq(e, b) and e != b)
            M += mu[b] * X ** sum(a) * Y ** sum(b)
    return sp.expand(M)


def k_sum(P):
    return sp.expand(sum(X ** sum(1 for c in a if c) * Y ** sum(a) for a in P))


def multichains(P, m):
    # m-1 elements e_1 <= ... <= e_{m-1}, weight X^{ht(e_{m-1})}
    total = 0
    for chain in itertools.product(P, repeat=m - 1):
        if all(leq(chain[i], chain[i + 1]) for i in range(len(chain) - 1)):
            total += X ** sum(chain[-1])
    return sp.expand(total)


def zeta_interp(P, n):
    samples = {m: multichains(P, m) for m in range(2, n + 4)}
    Z = 0
    for j in range(n + 1):
        pts = [(m, sp.Poly(samples[m], X).coeff_monomial(X ** j)) for m in samples]
        Z += sp.expand(sp.interpolate(pts, u)) * X ** j
    return sp.expand(Z)


if __name__ == "__main__":
    for n in (1, 2):
        P = points(tn_constraints(n), n)
        print(f"t{n}: |P|={len(P)}")
        print("  K =", k_sum(P))
        print("  M =", mobius_triangle(P))
        print("  Z =", sp.factor(zeta_interp(P, n)), "|  Z(u,1) =", sp.factor(zeta_interp(P, n).subs(X, 1)))
    P3 = points(tn_constraints(3), 3)
    print("t3: |P| =", len(P3))
    print("  M =", mobius_triangle(P3))
    print("  Z(u,1) =", sp.expand(zeta_interp(P3, 3).subs(X, 1)))
    print("  E(m) for m=0..4:", [len(points(tn_constraints(3), 3, m)) for m in range(5)])
    print("t2 counts m=0..3:", [len(points(tn_constraints(2), 2, m)) for m in range(4)])
    # single vertex {1,2}: Q = {x1+x2 <= 2}
    Pv = points([([1, 2], 2)], 2)
    print("{1,2}: K =", k_sum(Pv), " Z =", zeta_interp(Pv, 2))
    # {1}({2,3}) : x2+x3<=2, total <= 3
    c = [([2, 3], 2), ([1, 2, 3], 3)]
    Pm = points(c, 3)
    print("{1}({2,3}): |P|=", len(Pm), " K =", k_sum(Pm))
    print("  M =", mobius_triangle(Pm))
    print("  E counts m=0..4:", [len(points(c, 3, m)) for m in range(5)])
    print("  E =", sp.expand(sp.interpolate([(m, len(points(c, 3, m))) for m in range(5)], u)))
    # eight-label arbor
    fig = [([8], 1), ([6, 7], 2), ([3, 6, 7, 8], 4), ([4, 5], 2), (list(range(1, 9)), 8)]
    Pf = []
    for x in itertools.product(range(9), repeat=8):
        if all(sum(x[i - 1] for i in sup) <= b for sup, b in fig):
            Pf.append(x)
    print("eight-label arbor: |P| =", len(Pf))
    print("  K(X,Y) =", k_sum(Pf))

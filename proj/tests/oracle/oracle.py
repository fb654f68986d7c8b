"""Independent brute-force oracle used to produce the frozen values in the C++ tests.

Pure Python, exact Fractions, no shared code with the library:
  * rank/centrality by Gaussian elimination over Q
  * coboundary and Tutte polynomials from the subset sums
  * point counts over F_q by enumerating F_q^n

Run: python3 tests/oracle/oracle.py
"""
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb
import sympy as sp


def rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def central(sub):
    if not sub:
        return True
    return rank([h[0] for h in sub]) == rank([h[0] + [h[1]] for h in sub])


def rk(sub):
    return rank([h[0] for h in sub]) if sub else 0


def normalize(coeffs, rhs):
    coeffs = [Fraction(c) for c in coeffs]
    lead = next(c for c in coeffs if c != 0)
    return (tuple(c / lead for c in coeffs), Fraction(rhs) / lead)


def orbit_arr(n, reps):
    out = set()
    for coeffs, rhs in reps:
        full = list(coeffs) + [0] * (n - len(coeffs))
        for p in permutations(range(n)):
            v = [0] * n
            for i in range(n):
                v[p[i]] = full[i]
            out.add(normalize(v, rhs))
    return [(list(c), r) for c, r in sorted(out)]


FAMILIES = {
    "weyl-a": [((1, -1), 0)],
    "catalan": [((1, -1), 0), ((1, -1), 1)],
    "shi-threshold": [((1, 1), 0), ((1, 1), 1)],
    "i-arrangement": [((1,), 0), ((1,), 1), ((1, 1), 1)],
}

q, t, x, y = sp.symbols("q t x y")


def coboundary(arr):
    r = rk(arr)
    total = 0
    for k in range(len(arr) + 1):
        for sub in combinations(arr, k):
            if central(list(sub)):
                total += q ** (r - rk(list(sub))) * (t - 1) ** k
    return sp.expand(total), r


def tutte(arr):
    r = rk(arr)
    total = 0
    for k in range(len(arr) + 1):
        for sub in combinations(arr, k):
            if central(list(sub)):
                rb = rk(list(sub))
                total += (x - 1) ** (r - rb) * (y - 1) ** (k - rb)
    return sp.expand(total)


def point_poly(arr, p):
    n = len(arr[0][0])
    ints = []
    for coeffs, rhs in arr:
        den = 1
        for v in list(coeffs) + [rhs]:
            den = den * Fraction(v).denominator // __import__("math").gcd(den, Fraction(v).denominator)
        ints.append(([int(Fraction(c) * den) % p for c in coeffs], int(Fraction(rhs) * den) % p))
    hist = {}
    for pt in product(range(p), repeat=n):
        h = sum(1 for a, b in ints if sum(ai * xi for ai, xi in zip(a, pt)) % p == b)
        hist[h] = hist.get(h, 0) + 1
    return sp.expand(sum(c * t ** h for h, c in hist.items()))


if __name__ == "__main__":
    single = [([1, -1], 0)]
    a2 = orbit_arr(3, FAMILIES["weyl-a"])
    print("single coboundary", coboundary(single)[0], "tutte", tutte(single))
    print("A_2 coboundary", coboundary(a2)[0], "tutte", tutte(a2))
    for name, reps in FAMILIES.items():
        for n in (2, 3, 4):
            arr = orbit_arr(n, reps)
            if len(arr) > 16:
                continue
            cb, r = coboundary(arr)
            chi = sp.expand(q ** (n - r) * cb.subs(t, 0))
            print(f"{name} n={n} |A|={len(arr)} r={r}")
            print("   coboundary", cb)
            print("   chi", sp.factor(chi), "=", chi)
            print("   regions", (-1) ** n * chi.subs(q, -1), "bounded", (-1) ** r * chi.subs(q, 1))
            if len(arr) <= 10:
                print("   tutte", tutte(arr))
            for p in (5, 7, 11):
                if n <= 3 or p <= 7:
                    pp = point_poly(arr, p)
                    print(f"   points q={p}:", pp, " closed at q:", sp.expand(q ** (n - r) * cb).subs(q, p) == pp)

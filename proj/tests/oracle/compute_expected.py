#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen values in the C++ tests.

SYT counts come from counting linear extensions by corner removal, not the
hook-length formula; permutation sums use itertools and a quadratic LIS.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial


def partitions(n, mx=None):
    mx = n if mx is None else mx
    if n == 0:
        yield ()
        return
    for k in range(min(n, mx), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


@lru_cache(None)
def syt(shape):
    if sum(shape) == 0:
        return 1
    total = 0
    for i, part in enumerate(shape):
        nxt = shape[i + 1] if i + 1 < len(shape) else 0
        if part > nxt:
            s = list(shape)
            s[i] -= 1
            total += syt(tuple(x for x in s if x))
    return total


def hooks(shape):
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    return [shape[i] - j - 1 + conj[j] - i - 1 + 1 for i in range(len(shape)) for j in range(shape[i])]


def esym(vals, j):
    e = [Fraction(1)] + [Fraction(0)] * len(vals)
    for v in vals:
        for k in range(len(vals), 0, -1):
            e[k] += e[k - 1] * v
    return e[j] if j <= len(vals) else Fraction(0)


def phi(F, n):
    return sum(Fraction(syt(l) ** 2) * F([h * h for h in hooks(l)]) for l in partitions(n)) / factorial(n)


def q(r):
    def f(sq):
        s = 0
        for x in sq:
            p = 1
            for i in range(1, r + 1):
                p *= x - i * i
            s += p
        return Fraction(s)
    return f


def p(k):
    return lambda sq: Fraction(sum(x ** k for x in sq))


def pmu(mu):
    def f(sq):
        out = Fraction(1)
        for m in mu:
            out *= sum(x ** m for x in sq)
        return out
    return f


def lis(w):
    best = [1] * len(w)
    for i in range(len(w)):
        for j in range(i):
            if w[j] < w[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best)


def main():
    print("p(12) =", len(list(partitions(12))))
    print("phi p1 n=3:", phi(p(1), 3), " p2 n=2:", phi(p(2), 2), " p2 n=3:", phi(p(2), 3))
    print("phi e2 n=2:", phi(lambda s: esym(s, 2), 2), " q2 n=3:", phi(q(2), 3))
    print("R_1 n=1..6:", [str(phi(p(1), n)) for n in range(1, 7)])
    print("P_2 n=1..7:", [str(phi(q(2), n)) for n in range(1, 8)])
    print("q1 n=1..4:", [str(phi(q(1), n)) for n in range(1, 5)])
    print("pmu(1,1) n=1..8:", [str(phi(pmu((1, 1)), n)) for n in range(1, 9)])
    print("pmu(2,1) n=1..9:", [str(phi(pmu((2, 1)), n)) for n in range(1, 10)])
    for n in range(0, 5):
        print("e_j n=%d:" % n, [str(phi(lambda s, j=j: esym(s, j), n)) for j in range(n + 1)])
    print("syt (3,2):", syt((3, 2)), " (2,2):", syt((2, 2)), " (4,3,2,1):", syt((4, 3, 2, 1)))
    for n in (3, 4):
        tot = 0
        for w in permutations(range(1, n + 1)):
            tot += 1
        print("S_%d size" % n, tot)
    s4 = sum(lis(w) for w in permutations(range(1, 5)))
    print("sum is(w) over S_4:", s4, " exact mean is/2:", Fraction(s4, 48))
    for n in range(1, 8):
        print("n=%d sum is^2:" % n, sum(lis(w) ** 2 for w in permutations(range(1, n + 1))),
              " sum is^4:", sum(lis(w) ** 4 for w in permutations(range(1, n + 1))))


if __name__ == "__main__":
    main()


def tau(m):
    return sum(1 for d in range(1, m + 1) if m % d == 0)


def compositions(q, p):
    if p == 0:
        if q == 0:
            yield ()
        return
    for first in range(1, q - p + 2):
        for rest in compositions(q - first, p - 1):
            yield (first,) + rest


def phi_ej_tau(j, n):
    total = 0
    for q in range(j + 1):
        inner = 0
        for p in range(q + 1):
            s = 0
            for b in compositions(q, p):
                prod = 1
                for x in b:
                    prod *= tau(x + 1)
                s += prod
            inner += comb(n - q, p) * s
        total += factorial(j) // factorial(j - q) * inner
    return comb(n, j) * total


if __name__ == "__main__":
    for n in range(0, 5):
        print("tau-weighted e_j n=%d:" % n, [phi_ej_tau(j, n) for j in range(n + 1)])

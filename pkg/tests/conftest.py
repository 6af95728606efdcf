"""Shared randomized-sweep helpers for the test suite.

Every generator draws from a seeded ``random.Random`` so reruns are
reproducible.  Sets are retried until they are generic for their dimension
class: pairwise distinct, nonzero, and with the relevant degeneracy
predicates nonvanishing (degenerate behaviour is covered by fixed fixtures,
not by the sweep).
"""

from fractions import Fraction
from itertools import combinations
import random

SWEEP_SEED = 20260814

_NUMS = [n for n in range(-9, 10) if n != 0]
_DENS = [1, 1, 1, 2, 3, 4]


def rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NUMS), rng.choice(_DENS))


def distinct_nonzero(rng: random.Random, n: int) -> list:
    while True:
        vals = [rand_fraction(rng) for _ in range(n)]
        if len(set(vals)) == n:
            return vals


def _e(vals, k):
    total = Fraction(0)
    for combo in combinations(vals, k):
        prod = Fraction(1)
        for v in combo:
            prod *= v
        total += prod
    return total


def _level2_ok(x):
    return x[0] ** 2 - x[0] * x[1] + x[1] ** 2 != 0


def _level3_ok(x):
    return all(x[i] ** 2 + x[j] * x[k] != 0
               for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)))


def _level4_ok(x):
    # Quantified over both square roots of e4: resultant surrogates.
    e4 = _e(x, 4)
    if any(v ** 4 - e4 == 0 for v in x):
        return False
    pairings = ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2))
    return all((x[a] * x[b] + x[c] * x[d]) ** 2 - e4 != 0
               for a, b, c, d in pairings)


def _level5_ok(x):
    # Quantified over all fifth roots of e5.
    e5 = _e(x, 5)
    if any(v ** 10 + v ** 5 * e5 + e5 ** 2 == 0 for v in x):
        return False
    return all((x[i] * x[j]) ** 5 + e5 ** 2 != 0
               for i, j in combinations(range(5), 2))


def _level6_ok(x):
    e5 = _e(x, 5)
    if any(e5 + v ** 5 == 0 for v in x):
        return False
    if any(e5 - x[i] ** 3 * x[j] ** 2 == 0
           for i in range(5) for j in range(5) if i != j):
        return False
    for i in range(5):
        rest = [r for r in range(5) if r != i]
        j = rest[0]
        for k, l, m in ((rest[1], rest[2], rest[3]),
                        (rest[2], rest[1], rest[3]),
                        (rest[3], rest[1], rest[2])):
            if x[j] * x[k] + x[l] * x[m] == 0:
                return False
    return True


def gen_set_dim1(rng):
    return {"dim": 1, "values": [rand_fraction(rng)]}


def gen_set_dim2(rng):
    while True:
        vals = distinct_nonzero(rng, 2)
        if _level2_ok(vals):
            return {"dim": 2, "values": vals}


def gen_set_dim3(rng):
    while True:
        vals = distinct_nonzero(rng, 3)
        if _level3_ok(vals):
            return {"dim": 3, "values": vals}


def gen_set_dim4(rng):
    """x4 is solved from a rational h so that e4 = h^2 stays rational."""
    while True:
        x123 = distinct_nonzero(rng, 3)
        h = rand_fraction(rng)
        x4 = h ** 2 / (x123[0] * x123[1] * x123[2])
        vals = x123 + [x4]
        if x4 == 0 or len(set(vals)) != 4:
            continue
        if _level4_ok(vals):
            return {"dim": 4, "values": vals, "h": h}


def gen_set_dim5(rng):
    """x5 is solved from a rational f so that e5 = f^5 stays rational."""
    while True:
        x1234 = distinct_nonzero(rng, 4)
        f = rand_fraction(rng)
        prod = x1234[0] * x1234[1] * x1234[2] * x1234[3]
        x5 = f ** 5 / prod
        vals = x1234 + [x5]
        if x5 == 0 or len(set(vals)) != 5:
            continue
        if _level5_ok(vals) and _level6_ok(vals):
            return {"dim": 5, "values": vals, "f": f}


def gen_set_dim6(rng, variant):
    while True:
        vals = distinct_nonzero(rng, 5)
        if _level6_ok(vals):
            return {"dim": 6, "values": vals, "variant": variant}


def sweep_plans(per_class: int, seed: int = SWEEP_SEED):
    """Build plans for every dimension class; dim-6 cycles the variant."""
    rng = random.Random(seed)
    plans = []
    for _ in range(per_class):
        plans.append(gen_set_dim1(rng))
        plans.append(gen_set_dim2(rng))
        plans.append(gen_set_dim3(rng))
        plans.append(gen_set_dim4(rng))
        plans.append(gen_set_dim5(rng))
    for k in range(per_class):
        plans.append(gen_set_dim6(rng, 1 + k % 5))
    return plans

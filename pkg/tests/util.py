"""Shared generators for the test suite (seeded, deterministic)."""

from __future__ import annotations

import random
from fractions import Fraction

from assoc2 import (
    ASSOCIATIVE_LABELS,
    Algebra,
    LinearMap,
    Polynomial,
    RationalFunction,
    canonical_algebra,
)


def rand_fraction(rng: random.Random, lo=-5, hi=5, max_den=1) -> Fraction:
    den = rng.randint(1, max_den) if max_den > 1 else 1
    return Fraction(rng.randint(lo, hi), den)


def rand_invertible(rng: random.Random, n=2, lo=-5, hi=5) -> LinearMap:
    while True:
        m = LinearMap([[Fraction(rng.randint(lo, hi)) for _ in range(n)]
                       for _ in range(n)])
        if m.is_invertible:
            return m


def random_law2(rng: random.Random, lo=-3, hi=3, max_den=2) -> Algebra:
    """Arbitrary (usually non-associative) 2-dim law."""
    rows = [[rand_fraction(rng, lo, hi, max_den) for _ in range(2)]
            for _ in range(4)]
    return Algebra.from_matrix2(rows)


def random_associative2(rng: random.Random):
    """(label, algebra): a random basis change of a random canonical law."""
    label = rng.choice(ASSOCIATIVE_LABELS)
    return label, canonical_algebra(label).change_basis(rand_invertible(rng))


def random_poly(rng: random.Random, max_deg=3) -> Polynomial:
    deg = rng.randint(0, max_deg)
    return Polynomial([rand_fraction(rng, -4, 4, 2) for _ in range(deg + 1)])


def random_rf(rng: random.Random) -> RationalFunction:
    num = random_poly(rng)
    while True:
        den = random_poly(rng, 2)
        if not den.is_zero():
            return RationalFunction(num, den)

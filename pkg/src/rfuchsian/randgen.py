"""Seeded random objects shared by the self-check and the test suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .exactnum import Field, FieldElement
from .hermitian import HeisenbergPoint, MatK, heisenberg_dilation, heisenberg_translation
from .orbit import GeneratorSet


def integral_element(F: Field, rng: random.Random, bound: int = 10, nonzero: bool = True) -> FieldElement:
    while True:
        z = F.from_integral(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if not (nonzero and z.is_zero):
            return z


def rational(rng: random.Random, bound: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound * 4, bound * 4), rng.randint(1, 4))


def rational_element(F: Field, rng: random.Random, bound: int = 6, nonzero: bool = False) -> FieldElement:
    while True:
        z = F(rational(rng, bound), rational(rng, bound))
        if not (nonzero and z.is_zero):
            return z


def word(gens: GeneratorSet, rng: random.Random, max_length: int) -> tuple[list[str], MatK]:
    glist = list(gens)
    n = rng.randint(0, max_length)
    M = MatK.identity(gens.field)
    names = []
    for _ in range(n):
        g = rng.choice(glist)
        M = M * g.matrix
        names.append(g.name)
    return names, M


def heisenberg_similarity(F: Field, rng: random.Random) -> MatK:
    """A random K-rational translation times a random K-rational dilation."""
    p = HeisenbergPoint(rational_element(F, rng), rational(rng))
    lam = rational_element(F, rng, nonzero=True)
    return heisenberg_translation(p) * heisenberg_dilation(lam)

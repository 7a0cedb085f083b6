from __future__ import annotations

import random
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rfuchsian.errors import InvariantViolation
from rfuchsian.exactnum import factorize, is_prime, squarefree_part
from rfuchsian.symbols import (
    PrimeSplitting,
    QuaternionAlgebraQ,
    RamificationSet,
    algebras_isomorphic,
    hilbert_symbol,
    hilbert_symbol_real,
    jacobi,
    legendre,
    prime_splitting,
    ramification_set,
)

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def legendre_brute(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


@lru_cache(maxsize=None)
def hilbert_brute(a: int, b: int, p: int) -> int:
    """Search for a primitive solution of z^2 = a x^2 + b y^2 modulo a power of p.

    a and b are reduced to squarefree parts first; then a primitive solution
    modulo p^2 (odd p, exponent 3 for p = 3) or 2^6 lifts to Q_p.
    """
    a, b = squarefree_part(a), squarefree_part(b)
    k = 6 if p == 2 else (3 if p == 3 else 2)
    m = p**k
    r = np.arange(m, dtype=np.int64)
    sq = (r * r) % m
    lhs = (sq[:, None, None] - a * sq[None, :, None] - b * sq[None, None, :]) % m  # z, x, y
    prim = (r % p != 0)
    ok = (lhs == 0) & (prim[:, None, None] | prim[None, :, None] | prim[None, None, :])
    return 1 if ok.any() else -1


def test_legendre_matches_brute_force():
    for p in ODD_PRIMES:
        for a in range(-30, 30):
            assert legendre(a, p) == legendre_brute(a, p)


def test_legendre_rejects_non_odd_primes():
    for p in (2, 9, 1, 0):
        with pytest.raises(ValueError):
            legendre(3, p)


def test_jacobi_is_product_of_legendre():
    for n in range(1, 200, 2):
        for a in range(-20, 20):
            expected = 1
            for p, e in factorize(n).factors:
                expected *= legendre(a, p) ** e
            assert jacobi(a, n) == expected


def test_jacobi_rejects_even():
    with pytest.raises(ValueError):
        jacobi(3, 10)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_hilbert_symbol_matches_brute_force(p):
    vals = [-30, -15, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 26]
    for a in vals:
        for b in vals:
            assert hilbert_symbol(a, b, p) == hilbert_brute(a, b, p), (a, b, p)


def test_hilbert_known_values():
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(2, 3, 2) == -1 and hilbert_symbol(2, 3, 3) == -1
    assert hilbert_symbol(6, 5, 2) == -1 and hilbert_symbol(6, 5, 3) == -1 and hilbert_symbol(6, 5, 5) == 1
    assert hilbert_symbol_real(-1, -1) == -1 and hilbert_symbol_real(-1, 2) == 1


nonzero = st.integers(-10**4, 10**4).filter(lambda x: x != 0)


@given(nonzero, nonzero)
def test_product_formula(a, b):
    prod = hilbert_symbol_real(a, b)
    for p in factorize(2 * a * b).primes():
        prod *= hilbert_symbol(a, b, p)
    assert prod == 1


@given(nonzero, nonzero, nonzero, st.sampled_from([2, 3, 5, 7, 11]))
def test_bimultiplicative_and_symmetric(a, b, c, p):
    assert hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p)
    assert hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p)
    assert hilbert_symbol(a, -a, p) == 1
    if a != 1:
        assert hilbert_symbol(a, 1 - a, p) == 1


def test_hilbert_accepts_rationals():
    from fractions import Fraction

    assert hilbert_symbol(Fraction(2, 3), 5, 5) == hilbert_symbol(6, 5, 5)


# -- algebras --------------------------------------------------------------------------


def test_ramification_sets():
    assert ramification_set(QuaternionAlgebraQ(-1, -1)) == RamificationSet((2,), True)
    assert ramification_set(QuaternionAlgebraQ.normalized(24, 720)) == RamificationSet((2, 3), False)
    assert ramification_set(QuaternionAlgebraQ(2, 3)) == RamificationSet((2, 3), False)
    assert ramification_set(QuaternionAlgebraQ(1, 5)).is_empty


def test_normalization_strips_squares():
    assert QuaternionAlgebraQ.normalized(8, 180) == QuaternionAlgebraQ(2, 5)
    assert algebras_isomorphic(QuaternionAlgebraQ(7, 3), QuaternionAlgebraQ.normalized(7 * 4, 3 * 49))


def test_ramification_set_validation():
    with pytest.raises(InvariantViolation):
        RamificationSet((2,), False)
    with pytest.raises(ValueError):
        RamificationSet((3, 2), False)
    assert str(RamificationSet.of([3, 2])) == "{2, 3}"


def test_random_ramification_sets_are_even():
    rng = random.Random(7)
    for _ in range(300):
        a, b = rng.randint(-999, 999) or 1, rng.randint(-999, 999) or 1
        r = ramification_set(QuaternionAlgebraQ.normalized(a, b))
        assert (len(r.finite_places) + r.infinite_place) % 2 == 0


# -- splitting in real quadratic fields ---------------------------------------------


def splitting_brute(p: int, d: int) -> PrimeSplitting:
    """Factor the minimal polynomial of the ring generator modulo p."""
    if d % 4 == 1:
        # x^2 - x - (d-1)/4, discriminant d
        c = (d - 1) // 4
        roots = [x for x in range(p) if (x * x - x - c) % p == 0]
        disc = d
    else:
        roots = [x for x in range(p) if (x * x - d) % p == 0]
        disc = 4 * d
    if disc % p == 0:
        return PrimeSplitting.RAMIFIED
    return PrimeSplitting.SPLIT if roots else PrimeSplitting.INERT


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7, 10, 13, 17])
def test_prime_splitting_matches_polynomial_factorization(d):
    for p in [q for q in range(2, 60) if is_prime(q)]:
        assert prime_splitting(p, d) == splitting_brute(p, d), (p, d)


def test_prime_splitting_examples():
    assert prime_splitting(11, 5) is PrimeSplitting.SPLIT
    assert [prime_splitting(p, 5) for p in (2, 3, 5, 7)] == [
        PrimeSplitting.INERT,
        PrimeSplitting.INERT,
        PrimeSplitting.RAMIFIED,
        PrimeSplitting.INERT,
    ]
    with pytest.raises(ValueError):
        prime_splitting(3, 1)

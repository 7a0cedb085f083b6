from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rfuchsian.exactnum import (
    Field,
    canonical_key,
    divisors,
    factorize,
    integer_cbrt,
    is_prime,
    is_square,
    is_squarefree,
    rational_sqrt,
    squarefree_delta,
    squarefree_part,
)
from rfuchsian.pell import fundamental_solution, pell_solutions

fields = st.sampled_from([1, 2, 3, 5, 6, 7, 11, 15])
small = st.integers(-40, 40)


def _elem(F, a, b):
    return F.from_integral(a, b)


# -- integers ------------------------------------------------------------------


def test_factorize_against_trial_division():
    for n in range(1, 3000):
        f = factorize(n)
        assert f.value() == n
        assert all(is_prime(p) for p in f.primes())
    assert factorize(-12).value() == -12


def test_is_prime_small_table():
    sieve = [p for p in range(2, 200) if all(p % q for q in range(2, int(p**0.5) + 1))]
    assert [p for p in range(200) if is_prime(p)] == sieve


def test_squarefree_helpers():
    assert squarefree_part(72) == 2
    assert squarefree_part(-45) == -5
    assert is_squarefree(30) and not is_squarefree(12)
    assert is_square(49) and not is_square(50)
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert integer_cbrt(27) == 3 and integer_cbrt(26) is None
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


# -- the field -------------------------------------------------------------------


def test_field_rejects_bad_d():
    for d in (0, -1, 4, 12):
        with pytest.raises(ValueError):
            Field(d)


def test_discriminants():
    assert [Field(d).discriminant for d in (1, 2, 3, 5, 7)] == [-4, -8, -3, -20, -7]


@given(fields, small, small, small, small)
def test_arithmetic_matches_complex(d, a, b, c, e):
    F = Field(d)
    x, y = _elem(F, a, b), _elem(F, c, e)
    for exact, approx in ((x + y, x.to_complex() + y.to_complex()), (x * y, x.to_complex() * y.to_complex())):
        assert abs(exact.to_complex() - approx) < 1e-9 * (1 + abs(approx))
    if not y.is_zero:
        q = x / y
        assert abs(q.to_complex() - x.to_complex() / y.to_complex()) < 1e-9 * (1 + abs(q.to_complex()))
        assert q * y == x


@given(fields, small, small)
def test_norm_trace_conj(d, a, b):
    F = Field(d)
    x = _elem(F, a, b)
    assert x * x.conj() == x.norm()
    assert x + x.conj() == x.trace()
    assert F.is_integer(x)
    assert math.isclose(float(x.norm()), abs(x.to_complex()) ** 2, rel_tol=1e-9, abs_tol=1e-9)


@given(fields, small, small, st.integers(1, 9))
def test_literal_round_trip(d, a, b, n):
    F = Field(d)
    x = _elem(F, a, b) / n
    assert F.parse(x.literal()) == x


def test_parse_examples():
    F = Field(3)
    assert F.parse("-1/2+3/2*sqrt(-3)") == F(Fraction(-1, 2), Fraction(3, 2))
    assert Field(5).parse("sqrt(-5)") == Field(5).sqrt_minus_d
    assert Field(5).parse("2 - 3*sqrt(-5)/2") == Field(5)(2, Fraction(-3, 2))
    with pytest.raises(ValueError):
        Field(5).parse("sqrt(-3)")
    with pytest.raises(ValueError):
        Field(5).parse("abc")


def test_half_integer_ring():
    F = Field(3)
    w = F.ring_generator
    assert F.is_integer(w) and not Field(5).is_integer(Field(5)(Fraction(1, 2), Fraction(1, 2)))
    assert w * w - w + 1 == 0
    assert len(F.units) == 6 and len(Field(1).units) == 4 and len(Field(5).units) == 2


@given(fields, small, small)
def test_sqrt_of_squares(d, a, b):
    F = Field(d)
    x = _elem(F, a, b)
    r = F.sqrt(x * x)
    assert r is not None and r * r == x * x


def test_sqrt_non_square():
    assert Field(1).sqrt(Field(1)(2)) is None
    F = Field(5)
    assert F.sqrt(F(-5)) in (F.sqrt_minus_d, -F.sqrt_minus_d)


def test_elements_of_norm():
    F = Field(1)
    assert {str(z) for z in F.elements_of_norm(5)} == {"2+sqrt(-1)", "2-sqrt(-1)", "-2+sqrt(-1)", "-2-sqrt(-1)", "1+2*sqrt(-1)", "1-2*sqrt(-1)", "-1+2*sqrt(-1)", "-1-2*sqrt(-1)"}
    assert Field(5).elements_of_norm(2) == []


# -- squarefree representatives ---------------------------------------------------


@pytest.mark.parametrize(
    "d,delta,expected",
    [(5, 12, "3"), (5, 6, "6"), (1, 2, "sqrt(-1)"), (1, 4, "1"), (3, 4, "1"), (2, "9*sqrt(-2)", "sqrt(-2)"), (3, 3, "1/2+1/2*sqrt(-3)")],
)
def test_squarefree_delta_examples(d, delta, expected):
    F = Field(d)
    z = F.parse(str(delta))
    assert squarefree_delta(z).literal() == expected


@settings(max_examples=150)
@given(fields, small, small, small, small)
def test_squarefree_delta_is_a_class_function(d, a, b, c, e):
    F = Field(d)
    x, m = _elem(F, a, b), _elem(F, c, e)
    if x.is_zero or m.is_zero:
        return
    s = squarefree_delta(x)
    assert F.is_integer(s)
    assert F.is_square(x / s)
    assert squarefree_delta(x * m * m) == s
    assert squarefree_delta(s) == s


def test_canonical_key_prefers_large_real_part():
    F = Field(1)
    assert min(F.units, key=canonical_key) == F.one


# -- ideals -------------------------------------------------------------------------


def test_ideal_principality():
    F = Field(5)
    non_principal = F.ideal([F(2), F(1, 1)])
    assert non_principal.norm() == 2 and non_principal.generator() is None
    scaled = F.ideal([F(6), F(2, 4)])  # 2 * (3, 1 + 2 sqrt(-5))
    assert scaled.norm() == 12 and scaled.generator() is None
    J = F.ideal([F(3, 1)])
    assert J.norm() == 14 and J.generator() is not None
    assert Field(1).ideal([Field(1)(1, 1), Field(1)(2)]).norm() == 2


# -- Pell ------------------------------------------------------------------------------


@pytest.mark.parametrize("N", [2, 3, 5, 7, 8, 13, 27, 108])
def test_pell_solutions(N):
    x, y = fundamental_solution(N)
    brute = next((a, b) for b in range(1, 10**6) for a in [math.isqrt(1 + N * b * b)] if a * a - N * b * b == 1)
    assert (x, y) == brute
    sols = [s for _, s in zip(range(4), pell_solutions(N))]
    assert all(a * a - N * b * b == 1 for a, b in sols)
    assert [b for _, b in sols] == sorted(b for _, b in sols)


def test_pell_large_fundamental_solution():
    x, y = fundamental_solution(61)
    assert (x, y) == (1766319049, 226153980)


def test_pell_rejects_squares():
    with pytest.raises(ValueError):
        fundamental_solution(9)

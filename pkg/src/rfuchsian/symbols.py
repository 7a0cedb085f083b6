"""Legendre, Jacobi and Hilbert symbols, and quaternion algebras over Q."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .exactnum import factorize, is_prime, is_squarefree, squarefree_part


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, by reciprocity."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd n >= 1, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _split_valuation(a: int, p: int) -> tuple[int, int]:
    k = 0
    while a % p == 0:
        a //= p
        k += 1
    return k, a


def hilbert_symbol(a: int | Fraction, b: int | Fraction, p: int) -> int:
    """The p-adic Hilbert symbol (a, b)_p for a finite prime p.

    p = 2 uses the closed form with a = 2^alpha u, b = 2^beta v.  For odd p,
    with a = p^alpha u and b = p^beta v, bimultiplicativity together with
    (u, v)_p = 1, (u, p)_p = (u/p) and (p, p)_p = (p, -1)_p gives
    (-1)^(alpha beta (p-1)/2) (u/p)^beta (v/p)^alpha.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a, b = _to_integer_class(a), _to_integer_class(b)
    alpha, u = _split_valuation(a, p)
    beta, v = _split_valuation(b, p)
    if p == 2:
        e = ((u - 1) // 2) * ((v - 1) // 2) + alpha * ((v * v - 1) // 8) + beta * ((u * u - 1) // 8)
        return -1 if e % 2 else 1
    eps = (p - 1) // 2
    s = -1 if (alpha * beta * eps) % 2 else 1
    if beta % 2:
        s *= legendre(u, p)
    if alpha % 2:
        s *= legendre(v, p)
    return s


def hilbert_symbol_real(a: int | Fraction, b: int | Fraction) -> int:
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol of 0")
    return -1 if (a < 0 and b < 0) else 1


def _to_integer_class(x: int | Fraction) -> int:
    """An integer in the same square class as the nonzero rational x."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("Hilbert symbol of 0")
    return x.numerator * x.denominator


@dataclass(frozen=True)
class RamificationSet:
    finite_places: tuple[int, ...]
    infinite_place: bool

    def __post_init__(self):
        if list(self.finite_places) != sorted(set(self.finite_places)):
            raise ValueError("finite places must be sorted and distinct")
        if (len(self.finite_places) + self.infinite_place) % 2:
            raise InvariantViolation(f"ramification set {self} has odd cardinality")

    @classmethod
    def of(cls, primes, infinite: bool = False) -> RamificationSet:
        return cls(tuple(sorted(set(int(p) for p in primes))), bool(infinite))

    @property
    def is_empty(self) -> bool:
        return not self.finite_places and not self.infinite_place

    def __str__(self):
        items = [str(p) for p in self.finite_places] + (["inf"] if self.infinite_place else [])
        return "{" + ", ".join(items) + "}"


@dataclass(frozen=True)
class QuaternionAlgebraQ:
    """The algebra (a, b)/Q, with a and b reduced to their squarefree parts."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("Hilbert symbol entries must be nonzero")

    @classmethod
    def normalized(cls, a: int | Fraction, b: int | Fraction) -> QuaternionAlgebraQ:
        return cls(squarefree_part(_to_integer_class(a)), squarefree_part(_to_integer_class(b)))

    @property
    def is_indefinite(self) -> bool:
        return hilbert_symbol_real(self.a, self.b) == 1

    def __str__(self):
        return f"({self.a}, {self.b})/Q"


def ramification_set(A: QuaternionAlgebraQ) -> RamificationSet:
    places = sorted(set(factorize(2 * A.a * A.b).primes()))
    ram = [p for p in places if hilbert_symbol(A.a, A.b, p) == -1]
    real = hilbert_symbol_real(A.a, A.b) == -1
    if (len(ram) + real) % 2:
        raise InvariantViolation(f"product formula fails for {A}")
    return RamificationSet(tuple(ram), real)


def algebras_isomorphic(A: QuaternionAlgebraQ, B: QuaternionAlgebraQ) -> bool:
    return ramification_set(A) == ramification_set(B)


class PrimeSplitting(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


def prime_splitting(p: int, d: int) -> PrimeSplitting:
    """Behaviour of the prime p in the real quadratic field Q(sqrt(d))."""
    if d <= 1 or not is_squarefree(d):
        raise ValueError(f"d must be squarefree and > 1, got {d}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        if d % 4 in (2, 3):
            return PrimeSplitting.RAMIFIED
        return PrimeSplitting.SPLIT if d % 8 == 1 else PrimeSplitting.INERT
    if d % p == 0:
        return PrimeSplitting.RAMIFIED
    return PrimeSplitting.SPLIT if legendre(d, p) == 1 else PrimeSplitting.INERT

"""Exact arithmetic in Q and in imaginary quadratic fields K = Q(i sqrt(d)).

Elements are stored as ``(a + b*i*sqrt(d)) / n`` with integers ``a, b`` and a
positive integer ``n``, reduced so that ``gcd(a, b, n) = 1``.  Keeping a single
common denominator makes matrix arithmetic an order of magnitude faster than
using a pair of :class:`fractions.Fraction` coordinates.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Union

Rational = Fraction
Number = Union[int, Fraction, "FieldElement"]


# ---------------------------------------------------------------------------
# integers


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n).factors)


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self) -> str:
        body = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        body = body or "1"
        return ("-" if self.sign < 0 else "") + body


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return Factorization(sign, tuple(out))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    p = 5
    while p * p <= n:
        if n % p == 0 or n % (p + 2) == 0:
            return False
        p += 6
    return True


def primes_from(start: int) -> Iterator[int]:
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


def squarefree_part(n: int) -> int:
    """The squarefree integer s with n = s * m**2, sign kept."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    f = factorize(n)
    out = f.sign
    for p, e in f.factors:
        if e % 2:
            out *= p
    return out


def square_part_root(n: int) -> int:
    """Largest m with m**2 dividing n."""
    out = 1
    for p, e in factorize(n).factors:
        out *= p ** (e // 2)
    return out


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def rational_sqrt(q: Fraction) -> Fraction | None:
    q = Fraction(q)
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def integer_cbrt(n: int) -> int | None:
    if n < 0:
        r = integer_cbrt(-n)
        return None if r is None else -r
    r = round(n ** (1.0 / 3.0)) if n else 0
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**3 == n:
            return c
    # float rounding can be off for very large n
    lo, hi = 0, 1 << (n.bit_length() // 3 + 2)
    while lo <= hi:
        mid = (lo + hi) // 2
        m3 = mid**3
        if m3 == n:
            return mid
        if m3 < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def divisors(n: int) -> list[int]:
    n = abs(n)
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


# ---------------------------------------------------------------------------
# the field


@dataclass(frozen=True)
class Field:
    """K = Q(i sqrt(d)) for a squarefree positive integer d."""

    d: int

    def __post_init__(self):
        if self.d < 1 or not is_squarefree(self.d):
            raise ValueError(f"d must be a squarefree positive integer, got {self.d}")

    @property
    def half_integer_ring(self) -> bool:
        return self.d % 4 == 3

    @property
    def discriminant(self) -> int:
        return -self.d if self.half_integer_ring else -4 * self.d

    @property
    def abs_disc(self) -> int:
        return -self.discriminant

    # element constructors -------------------------------------------------

    def __call__(self, re: int | Fraction = 0, im: int | Fraction = 0) -> FieldElement:
        re, im = Fraction(re), Fraction(im)
        n = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        return FieldElement(self, int(re * n), int(im * n), n)

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0, 0, 1)

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(self, 1, 0, 1)

    @cached_property
    def sqrt_minus_d(self) -> FieldElement:
        """The element i*sqrt(d)."""
        return FieldElement(self, 0, 1, 1)

    @cached_property
    def ring_generator(self) -> FieldElement:
        """omega with O_K = Z[omega]."""
        if self.half_integer_ring:
            return FieldElement(self, 1, 1, 2)
        return self.sqrt_minus_d

    def coerce(self, x: Number) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field.d != self.d:
                raise ValueError("elements of different fields")
            return x
        if isinstance(x, (int, Fraction)):
            return self(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def from_integral(self, A: int, B: int) -> FieldElement:
        """A + B*omega in the integral basis."""
        return self(A) + self.ring_generator * B

    # ring of integers -----------------------------------------------------

    def integral_coords(self, z: FieldElement) -> tuple[Fraction, Fraction]:
        """Coordinates (A, B) of z = A + B*omega."""
        re, im = z.re, z.im
        if self.half_integer_ring:
            return re - im, 2 * im
        return re, im

    def is_integer(self, z: FieldElement) -> bool:
        A, B = self.integral_coords(z)
        return A.denominator == 1 and B.denominator == 1

    def is_unit(self, z: FieldElement) -> bool:
        return self.is_integer(z) and z.norm() == 1

    @cached_property
    def units(self) -> tuple[FieldElement, ...]:
        return tuple(self.elements_of_norm(1))

    @cached_property
    def unit_squares(self) -> tuple[FieldElement, ...]:
        out = []
        for u in self.units:
            s = u * u
            if s not in out:
                out.append(s)
        return tuple(out)

    def elements_of_norm(self, n: int) -> list[FieldElement]:
        """All z in O_K with N(z) = n, in a fixed order."""
        out = []
        if n < 0:
            return out
        if n == 0:
            return [self.zero]
        d = self.d
        if self.half_integer_ring:
            # z = (A + B i sqrt d)/2 with A = B mod 2 and A^2 + d B^2 = 4n
            m = 4 * n
            for B in range(0, math.isqrt(m // d) + 1):
                r = m - d * B * B
                if r < 0:
                    break
                A = math.isqrt(r)
                if A * A != r or (A - B) % 2:
                    continue
                for sa in {A, -A}:
                    for sb in {B, -B}:
                        out.append(self(Fraction(sa, 2), Fraction(sb, 2)))
        else:
            for B in range(0, math.isqrt(n // d) + 1):
                r = n - d * B * B
                if r < 0:
                    break
                A = math.isqrt(r)
                if A * A != r:
                    continue
                for sa in {A, -A}:
                    for sb in {B, -B}:
                        out.append(self(sa, sb))
        return sorted(set(out), key=lambda z: (-z.re, -z.im))

    def ideal(self, gens: Iterable[FieldElement]) -> IntegralIdeal:
        """The O_K-ideal generated by integral elements, as a Z-lattice in Hermite normal form."""
        w = self.ring_generator
        vecs = []
        for g in gens:
            for h in (g, g * w):
                A, B = self.integral_coords(h)
                if A.denominator != 1 or B.denominator != 1:
                    raise ValueError(f"{g} is not in O_K")
                vecs.append((int(A), int(B)))
        a, b = 0, 0  # (a, b) row with the gcd of first coordinates
        c = 0  # gcd of second coordinates of the remaining rows
        for x, y in vecs:
            if x == 0:
                c = math.gcd(c, y)
                continue
            if a == 0:
                a, b = x, y
                continue
            g, s, t = _xgcd(a, x)
            # unimodular change: (a,b),(x,y) -> (g, s b + t y), (0, (x b - a y)/g)
            nb = s * b + t * y
            c = math.gcd(c, (x * b - a * y) // g)
            a, b = g, nb
        if a == 0 or c == 0:
            raise ValueError("the zero ideal has no Hermite form")
        if a < 0:
            a, b = -a, -b
        return IntegralIdeal(self, a, b % c, abs(c))

    def sqrt(self, z: FieldElement) -> FieldElement | None:
        """An exact square root of z in K, or None."""
        if z.is_zero:
            return self.zero
        n = rational_sqrt(z.norm())
        if n is None:
            return None
        x2 = (z.re + n) / 2
        y2 = (n - z.re) / (2 * self.d)
        x, y = rational_sqrt(x2), rational_sqrt(y2)
        if x is None or y is None:
            return None
        for sy in (y, -y):
            w = self(x, sy)
            if w * w == z:
                return w
        return None

    def is_square(self, z: FieldElement) -> bool:
        return self.sqrt(z) is not None

    # literals --------------------------------------------------------------

    _TERM = re.compile(
        r"^(?:(?P<c>\d+(?:/\d+)?)\*?)?sqrt\(-(?P<d>\d+)\)(?:/(?P<q>\d+))?$"
        r"|^(?P<r>\d+(?:/\d+)?)$"
    )

    def parse(self, text: str) -> FieldElement:
        """Parse literals such as ``-1/2+3/2*sqrt(-3)`` or ``sqrt(-5)``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty field element literal")
        terms, depth, start = [], 0, 0
        for k, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and depth == 0 and k > start:
                terms.append(s[start:k])
                start = k
        terms.append(s[start:])
        total = self.zero
        for t in terms:
            sign = 1
            while t and t[0] in "+-":
                sign = -sign if t[0] == "-" else sign
                t = t[1:]
            m = self._TERM.match(t)
            if m is None:
                raise ValueError(f"cannot parse term {t!r} in {text!r}")
            if m.group("r") is not None:
                total = total + self(sign * Fraction(m.group("r")))
                continue
            if int(m.group("d")) != self.d:
                raise ValueError(f"literal uses sqrt(-{m.group('d')}) but the field has d={self.d}")
            c = Fraction(m.group("c") or 1)
            if m.group("q"):
                c /= int(m.group("q"))
            total = total + self(0, sign * c)
        return total

    def __str__(self) -> str:
        return f"Q(sqrt(-{self.d}))"


class FieldElement:
    """(a + b*i*sqrt(d)) / n, immutable."""

    __slots__ = ("field", "a", "b", "n")

    def __init__(self, field: Field, a: int, b: int, n: int = 1):
        if n == 0:
            raise ZeroDivisionError("zero denominator")
        if n < 0:
            a, b, n = -a, -b, -n
        g = math.gcd(math.gcd(a, b), n)
        if g > 1:
            a, b, n = a // g, b // g, n // g
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.n)

    @property
    def im(self) -> Fraction:
        """Coefficient of i*sqrt(d)."""
        return Fraction(self.b, self.n)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_real(self) -> bool:
        return self.b == 0

    def _lift(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field.d != self.field.d:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, other, 0, 1)
        if isinstance(other, Fraction):
            return FieldElement(self.field, other.numerator, 0, other.denominator)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.n == o.n:
            return FieldElement(self.field, self.a + o.a, self.b + o.b, self.n)
        return FieldElement(self.field, self.a * o.n + o.a * self.n, self.b * o.n + o.b * self.n, self.n * o.n)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.a, -self.b, self.n)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self.field.d
        return FieldElement(
            self.field,
            self.a * o.a - d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.n * o.n,
        )

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero:
            raise ZeroDivisionError("inverse of 0 in K")
        # 1/z = n * conj(a + b s) / (a^2 + d b^2)
        nm = self.a * self.a + self.field.d * self.b * self.b
        return FieldElement(self.field, self.a * self.n, -self.b * self.n, nm)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = FieldElement(self.field, 1, 0, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> FieldElement:
        return FieldElement(self.field, self.a, -self.b, self.n)

    def trace(self) -> Fraction:
        return Fraction(2 * self.a, self.n)

    def norm(self) -> Fraction:
        return Fraction(self.a * self.a + self.field.d * self.b * self.b, self.n * self.n)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.d == other.field.d and (self.a, self.b, self.n) == (other.a, other.b, other.n)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.n) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.n))
        return hash((self.field.d, self.a, self.b, self.n))

    def __bool__(self):
        return not self.is_zero

    def to_complex(self) -> complex:
        return complex(self.a / self.n, self.b * math.sqrt(self.field.d) / self.n)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def literal(self) -> str:
        """Inverse of :meth:`Field.parse`."""
        re_, im = self.re, self.im
        parts = []
        if re_ != 0 or im == 0:
            parts.append(str(re_))
        if im != 0:
            mag = abs(im)
            coef = "" if mag == 1 else f"{mag}*"
            sign = "-" if im < 0 else ("+" if parts else "")
            parts.append(f"{sign}{coef}sqrt(-{self.field.d})")
        return "".join(parts)

    def __repr__(self):
        return f"FieldElement({self.literal()})"

    __str__ = literal


# ---------------------------------------------------------------------------
# free-function surface


def conj(z: FieldElement) -> FieldElement:
    return z.conj()


def trace(z: FieldElement) -> Fraction:
    return z.trace()


def norm(z: FieldElement) -> Fraction:
    return z.norm()


def is_integer(z: FieldElement) -> bool:
    return z.field.is_integer(z)


def is_unit(z: FieldElement) -> bool:
    return z.field.is_unit(z)


def integral_content(z: FieldElement) -> int:
    """gcd of the integral-basis coordinates of z in O_K."""
    A, B = z.field.integral_coords(z)
    if A.denominator != 1 or B.denominator != 1:
        raise ValueError(f"{z} is not in O_K")
    return math.gcd(int(A), int(B))


def canonical_key(z: FieldElement) -> tuple:
    """Total order used to pick class representatives: largest real part, then largest imaginary part."""
    return (-z.re, -z.im)


def squarefree_delta(delta: FieldElement) -> FieldElement:
    """Canonical squarefree representative of the class delta * (K^x)^2 in O_K.

    The representative is the element of minimal norm in the class, ties broken
    by :func:`canonical_key`.  Such an element is divisible by no square of a
    non-unit.  When O_K is a UFD this is the usual squarefree part, defined up
    to unit squares.
    """
    K = delta.field
    if delta.is_zero:
        raise ValueError("squarefree_delta of 0")
    if not K.is_integer(delta):
        raise ValueError(f"{delta} is not in O_K")
    # rational square factors
    g = integral_content(delta)
    m = square_part_root(g)
    if m > 1:
        delta = delta / (m * m)
    # element square factors detected through the norm
    changed = True
    while changed:
        changed = False
        N = int(delta.norm())
        root = square_part_root(N)
        for n in divisors(root)[1:]:
            for pi in K.elements_of_norm(n):
                q = delta / (pi * pi)
                if K.is_integer(q):
                    delta = q
                    changed = True
                    break
            if changed:
                break
    # minimal norm in the square class
    N = int(delta.norm())
    s = squarefree_part(N)
    k = 1
    while s * k * k <= N:
        found = [x for x in K.elements_of_norm(s * k * k) if K.is_square(x * delta)]
        if found:
            return min(found, key=canonical_key)
        k += 1
    raise AssertionError("square class search did not reach delta itself")


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s a + t b = g = gcd(a, b)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


@dataclass(frozen=True)
class IntegralIdeal:
    """Z-basis {a + b*omega, c*omega} of an ideal of O_K, with a, c > 0 and 0 <= b < c."""

    field: Field
    a: int
    b: int
    c: int

    def norm(self) -> int:
        return self.a * self.c

    def __contains__(self, z: FieldElement) -> bool:
        A, B = self.field.integral_coords(z)
        if A.denominator != 1 or B.denominator != 1:
            return False
        A, B = int(A), int(B)
        if A % self.a:
            return False
        return (B - (A // self.a) * self.b) % self.c == 0

    def generator(self) -> FieldElement | None:
        """A generator if the ideal is principal, else None."""
        for z in self.field.elements_of_norm(self.norm()):
            if z in self:
                return z
        return None

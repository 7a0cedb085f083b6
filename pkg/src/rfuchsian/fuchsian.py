"""Quaternion algebras attached to the stabilizers of the circles C_Delta.

Two routes compute the algebra of Delta: the closed Hilbert symbol
(2 Tr Delta, N(Delta)|D_K|), and the restriction of h to the real fixed space of
z -> Y_Delta conj(z), diagonalized and converted to an algebra.  They are
checked against each other on every call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from typing import Iterable, Iterator, Sequence

from .errors import InvariantViolation
from .exactnum import Field, FieldElement, factorize, is_prime, is_square, primes_from, rational_sqrt, squarefree_delta
from .hermitian import MatK, ProjMatK
from .pell import pell_solutions
from .symbols import (
    PrimeSplitting,
    QuaternionAlgebraQ,
    RamificationSet,
    algebras_isomorphic,
    jacobi,
    legendre,
    prime_splitting,
    ramification_set,
)

Gram = tuple[tuple[Fraction, Fraction, Fraction], ...]


# ---------------------------------------------------------------------------
# ternary forms


@dataclass(frozen=True)
class TernaryForm:
    gram: Gram

    def __post_init__(self):
        g = self.gram
        if any(g[i][j] != g[j][i] for i in range(3) for j in range(3)):
            raise ValueError("Gram matrix must be symmetric")

    @classmethod
    def diagonal(cls, a, b, c) -> TernaryForm:
        z = Fraction(0)
        return cls(((Fraction(a), z, z), (z, Fraction(b), z), (z, z, Fraction(c))))

    def __call__(self, x: Sequence) -> Fraction:
        g = self.gram
        return sum(g[i][j] * x[i] * x[j] for i in range(3) for j in range(3))

    def det(self) -> Fraction:
        (a, b, c), (d, e, f), (g, h, i) = self.gram
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    @property
    def is_diagonal(self) -> bool:
        return all(self.gram[i][j] == 0 for i in range(3) for j in range(3) if i != j)

    def transform(self, P: Sequence[Sequence], scale=1) -> TernaryForm:
        """scale * P^T G P, i.e. the form x -> scale * q(P x)."""
        G = self.gram
        s = Fraction(scale)
        out = [[s * sum(P[k][i] * G[k][l] * P[l][j] for k in range(3) for l in range(3)) for j in range(3)] for i in range(3)]
        return TernaryForm(tuple(tuple(Fraction(x) for x in row) for row in out))

    def signature(self) -> tuple[int, int]:
        """(positive, negative) counts by exact symmetric elimination."""
        G = [list(r) for r in self.gram]
        pos = neg = 0
        n = 3
        idx = list(range(n))
        while idx:
            piv = next((k for k in idx if G[k][k] != 0), None)
            if piv is None:
                # all remaining diagonal entries vanish: use x_k + x_l to create a pivot
                pair = next(((k, l) for k in idx for l in idx if k < l and G[k][l] != 0), None)
                if pair is None:
                    break
                k, l = pair
                for m in range(n):
                    G[k][m] += G[l][m]
                for m in range(n):
                    G[m][k] += G[m][l]
                continue
            p = G[piv][piv]
            pos += p > 0
            neg += p < 0
            idx.remove(piv)
            for k in idx:
                f = G[k][piv] / p
                for m in range(n):
                    G[k][m] -= f * G[piv][m]
            for k in idx:
                G[k][piv] = G[piv][k] = Fraction(0)
        return pos, neg

    @property
    def is_indefinite(self) -> bool:
        pos, neg = self.signature()
        return pos > 0 and neg > 0


def _u_v(delta: FieldElement) -> tuple[Fraction, Fraction]:
    """Delta = u + i sqrt(|D_K|) v."""
    K = delta.field
    if K.half_integer_ring:
        return delta.re, delta.im
    return delta.re, delta.im / 2


def restricted_form(delta: FieldElement) -> TernaryForm:
    """h restricted to the real fixed space of z -> Y_Delta conj(z), in variables (x0, y0, x1).

    q = -u x0^2 + u|D_K| y0^2 - 2|D_K| v x0 y0 + x1^2.
    """
    if delta.is_zero:
        raise ValueError("restricted_form needs Delta != 0")
    DK = delta.field.abs_disc
    u, v = _u_v(delta)
    z = Fraction(0)
    return TernaryForm(((-u, -DK * v, z), (-DK * v, u * DK, z), (z, z, Fraction(1))))


def diagonalize_restricted_form(delta: FieldElement) -> tuple[TernaryForm, list[list[Fraction]], Fraction]:
    """(q', P, s) with q' diagonal (-a, -b, c), abc a square and q'(X) = s q(P X).

    Uses the two explicit rewritings of q: for u = 0,
    q = -(-x1^2 - (|D_K|v/2)(x0 - y0)^2 + (|D_K|v/2)(x0 + y0)^2); for u != 0,
    q = -(1/(u^2 w))(-u^2 w x1^2 - u w^2 y0^2 + u w (u x0 + |D_K| v y0)^2).
    """
    DK = delta.field.abs_disc
    u, v = _u_v(delta)
    w = delta.norm() * DK
    q = restricted_form(delta)
    F = Fraction
    if u == 0:
        k = DK * v / 2
        target = TernaryForm.diagonal(-1, -k, k)
        # (X1, X2, X3) = (x1, x0 - y0, x0 + y0)
        Q = [[0, 1, 1], [0, -1, 1], [1, 0, 0]]
        P = [[F(x, 2) for x in row] for row in Q]
        P[2] = [F(1), F(0), F(0)]
        scale = F(-1)
    else:
        target = TernaryForm.diagonal(-u * w * w, -w * u * u, u * w)
        # (X1, X2, X3) = (y0, x1, u x0 + |D_K| v y0); P is the inverse substitution
        P = [[-DK * v / u, F(0), 1 / u], [F(1), F(0), F(0)], [F(0), F(1), F(0)]]
        scale = -u * u * w
    if q.transform(P, scale) != target:
        raise InvariantViolation(f"diagonalization of the restricted form failed for Delta = {delta}")
    return target, P, F(scale)


def form_to_algebra(q: TernaryForm) -> QuaternionAlgebraQ:
    """The algebra (a, b) for the diagonal form -a X1^2 - b X2^2 + c X3^2 with abc a square."""
    if not q.is_diagonal:
        raise ValueError("form_to_algebra needs a diagonal form")
    a, b, c = -q.gram[0][0], -q.gram[1][1], q.gram[2][2]
    if a * b * c == 0:
        raise ValueError("degenerate form")
    prod = a * b * c
    if rational_sqrt(prod) is None:
        raise ValueError(f"discriminant {prod} is not a rational square")
    if not q.is_indefinite:
        raise ValueError("definite form: the algebra does not split over R")
    return QuaternionAlgebraQ.normalized(a, b)


# ---------------------------------------------------------------------------
# the algebra of Delta


def closed_form_algebra(delta: FieldElement) -> QuaternionAlgebraQ:
    tr = delta.trace()
    if tr == 0:
        return QuaternionAlgebraQ(1, 1)
    return QuaternionAlgebraQ.normalized(2 * tr, delta.norm() * delta.field.abs_disc)


def delta_algebra(delta: FieldElement) -> QuaternionAlgebraQ:
    K = delta.field
    if delta.is_zero:
        raise ValueError("Delta must be nonzero")
    if not K.is_integer(delta):
        raise ValueError(f"Delta = {delta} is not in O_K")
    A = closed_form_algebra(delta)
    B = form_to_algebra(diagonalize_restricted_form(delta)[0])
    if not algebras_isomorphic(A, B):
        raise InvariantViolation(f"closed form {A} and form route {B} disagree for Delta = {delta}")
    if not A.is_indefinite:
        raise InvariantViolation(f"{A} is definite")
    return A


def natural_delta_algebra(delta: int, K: Field) -> QuaternionAlgebraQ:
    if delta <= 0:
        raise ValueError("Delta must be a positive integer")
    return QuaternionAlgebraQ.normalized(delta, K.abs_disc)


def commensurable(delta1: FieldElement, delta2: FieldElement) -> bool:
    """Same wide commensurability class; trace-zero Delta use the split algebra (1, 1)."""
    return algebras_isomorphic(delta_algebra(delta1), delta_algebra(delta2))


@dataclass(frozen=True)
class FuchsianClass:
    field: Field
    delta: FieldElement
    algebra: QuaternionAlgebraQ
    ram: RamificationSet


def classify(delta: FieldElement) -> FuchsianClass:
    K = delta.field
    A = delta_algebra(delta)
    ram = ramification_set(A)
    if delta.is_real and delta.re > 0 and K.d > 1:
        for p in ram.finite_places:
            if prime_splitting(p, K.d) is PrimeSplitting.SPLIT:
                raise InvariantViolation(f"{p} splits in Q(sqrt {K.d}) yet ramifies in {A}")
    return FuchsianClass(K, squarefree_delta(delta), A, ram)


# ---------------------------------------------------------------------------
# quaternions and the explicit embedding of Delta in N


@dataclass(frozen=True)
class Quaternion:
    """x0 + x1 i + x2 j + x3 k with i^2 = D, j^2 = -Dp, k = ij."""

    x0: Fraction
    x1: Fraction
    x2: Fraction
    x3: Fraction
    D: int
    Dp: int

    @classmethod
    def of(cls, D, Dp, x0=0, x1=0, x2=0, x3=0) -> Quaternion:
        return cls(Fraction(x0), Fraction(x1), Fraction(x2), Fraction(x3), D, Dp)

    def norm(self) -> Fraction:
        D, Dp = self.D, self.Dp
        return self.x0**2 - D * self.x1**2 + Dp * self.x2**2 - D * Dp * self.x3**2

    def trace(self) -> Fraction:
        return 2 * self.x0

    def conj(self) -> Quaternion:
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3, self.D, self.Dp)

    def __mul__(self, o: Quaternion) -> Quaternion:
        if (self.D, self.Dp) != (o.D, o.Dp):
            raise ValueError("quaternions from different algebras")
        al, be = self.D, -self.Dp
        a0, a1, a2, a3 = self.x0, self.x1, self.x2, self.x3
        b0, b1, b2, b3 = o.x0, o.x1, o.x2, o.x3
        return Quaternion(
            a0 * b0 + al * a1 * b1 + be * a2 * b2 - al * be * a3 * b3,
            a0 * b1 + a1 * b0 - be * a2 * b3 + be * a3 * b2,
            a0 * b2 + a2 * b0 + al * a1 * b3 - al * a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
            self.D,
            self.Dp,
        )

    def in_order(self) -> bool:
        """Membership in Z + D Z i + D Z j + D Z k."""
        xs = (self.x0, self.x1, self.x2, self.x3)
        if any(x.denominator != 1 for x in xs):
            return False
        return all(int(x) % self.D == 0 for x in xs[1:])

    def in_integral_suborder(self, delta: int) -> bool:
        """The order with additionally x1 = 0 mod lcm(D, Delta).

        The embedded (1,3) entry carries 2 x0 x1 i sqrt(D) / Delta, so this is
        the condition under which every embedded entry is in O_K.
        """
        return self.in_order() and int(self.x1) % math.lcm(self.D, delta) == 0


def embedding_parameters(delta: int, K: Field) -> tuple[int, int]:
    """(D, D') with D = |D_K|/4 or |D_K| and D' = D Delta; in both cases D = d."""
    DK = K.abs_disc
    D = DK // 4 if DK % 4 == 0 else DK
    return D, D * delta


def embed_quaternion(x: Quaternion, delta: int, K: Field) -> ProjMatK:
    """Image of a norm-one order element in the stabilizer of [Y_Delta], i.e. gamma0 Theta(sigma(x)) gamma0^-1.

    Entries a(x), b(x), c(x), d(x) with the radicals eliminated through
    sqrt(D D')/sqrt(Delta) = D and sqrt(D D' Delta) = D Delta.  The middle
    entry is the (2,2) entry of Theta, x0^2 - D x1^2 - D' x2^2 + D D' x3^2,
    and the bottom-middle entry is Delta conj(b(x)); both checked against
    the floating-point conjugation in the tests.
    """
    D, Dp = embedding_parameters(delta, K)
    if (x.D, x.Dp) != (D, Dp):
        raise ValueError(f"quaternion must live in ({D}, -{Dp})")
    if x.norm() != 1:
        raise ValueError(f"n(x) = {x.norm()} != 1")
    if not x.in_order():
        raise ValueError("x is not in the order x1, x2, x3 = 0 mod D")
    return ProjMatK(embedding_matrix(x, delta, K))


def embedding_matrix(x: Quaternion, delta: int, K: Field) -> MatK:
    """The representative of :func:`embed_quaternion` with (1,1) entry a(x); no preconditions checked."""
    D, Dp = x.D, x.Dp
    s = K.sqrt_minus_d  # i sqrt(D)
    x0, x1, x2, x3 = x.x0, x.x1, x.x2, x.x3
    a = K(x0 * x0 + D * x1 * x1) + s * (2 * Dp * x2 * x3)
    b = (K(x1 * x2 + x0 * x3) + s * (x1 * x3 + x0 * x2 / D)) * (2 * D)
    c = K(D * Dp * x3 * x3 + Dp * x2 * x2) + s * (2 * x0 * x1)
    dd = K(x0 * x3 - x1 * x2) + s * (x0 * x2 / D - x1 * x3)
    mid = x0 * x0 - D * x1 * x1 - Dp * x2 * x2 + D * Dp * x3 * x3
    return MatK(
        K,
        [
            a, b, c / delta,
            dd * (D * delta), mid, dd.conj() * D,
            c.conj() * delta, b.conj() * delta, a.conj(),
        ],
    )


def theta(g: Sequence[Sequence], field: Field | None = None) -> MatK:
    """The exceptional isomorphism PSL_2(R) -> SO_0(1, 2), on rational matrices of det 1.

    The image is a real matrix; ``field`` only chooses the ambient K (default Q(i)).
    """
    (a, b), (c, d) = [[Fraction(x) for x in row] for row in g]
    if a * d - b * c != 1:
        raise ValueError("theta needs det g = 1")
    K = field if field is not None else Field(1)
    return MatK(K, [a * a, 2 * a * b, b * b, a * c, a * d + b * c, b * d, c * c, 2 * c * d, d * d])


def _pell_family(D: int, Dp: int, N: int, step: int, slot: int, count: int) -> list[Quaternion]:
    """x0 + step*y*e with x0^2 - N y^2 = 1, e = i (slot 1) or k (slot 3); empty if N is a square."""
    if is_square(N):
        return []
    out = []
    for x0, y in islice(pell_solutions(N), count):
        coords = [x0, 0, 0, 0]
        coords[slot] = step * y
        out.append(Quaternion.of(D, Dp, *coords))
    return out


def pell_order_elements(delta: int, K: Field, count: int) -> list[Quaternion]:
    """``count`` distinct norm-one elements of the integral suborder (see Quaternion.in_integral_suborder).

    Supply: Pell solutions in the i direction (x0^2 - D L^2 y^2 = 1 with
    L = lcm(D, Delta)) and the k direction (x0^2 - D^4 Delta y^2 = 1), their
    conjugates, and products of an i-element with a k-element, which also
    populate the j coordinate.  Further powers are taken if that is not enough.
    """
    D, Dp = embedding_parameters(delta, K)
    L = math.lcm(D, delta)
    fam_i = _pell_family(D, Dp, D * L * L, L, 1, 3)
    fam_k = _pell_family(D, Dp, D**4 * delta, D, 3, 3)
    basic = fam_i + fam_k
    if not basic:
        raise ValueError(f"no Pell family for d = {K.d}, Delta = {delta}: both Pell parameters are squares")
    pool = basic + [q.conj() for q in basic]
    pool += [p * q for p in fam_i for q in fam_k] + [q * p for p in fam_i for q in fam_k]
    level = list(basic)
    seen: set[Quaternion] = set()
    out: list[Quaternion] = []
    while True:
        for q in pool:
            if q not in seen:
                seen.add(q)
                out.append(q)
                if len(out) == count:
                    for x in out:
                        if x.norm() != 1 or not x.in_integral_suborder(delta):
                            raise InvariantViolation(f"Pell element {x} is not a norm-one suborder element")
                    return out
        level = [q * basic[0] for q in level]
        pool = level


# ---------------------------------------------------------------------------
# realizing ramification sets


def _delta_realizes(delta: int, K: Field, target: RamificationSet) -> bool:
    return ramification_set(natural_delta_algebra(delta, K)) == target


def as_target(target: RamificationSet | Iterable[int], K: Field) -> RamificationSet:
    """Validate a requested ramification set; plain prime lists are accepted so that
    split primes and odd cardinality are reported as input errors."""
    if isinstance(target, RamificationSet):
        if target.infinite_place:
            raise ValueError("target must be indefinite (no infinite place)")
        primes = list(target.finite_places)
    else:
        primes = sorted(int(p) for p in target)
        if len(set(primes)) != len(primes):
            raise ValueError("target lists a prime twice")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    if K.d == 1:
        if primes:
            raise ValueError("d = 1: only the empty target is realizable")
        return RamificationSet((), False)
    for p in primes:
        if prime_splitting(p, K.d) is PrimeSplitting.SPLIT:
            raise SplitPrimeError(p, K.d)
    if len(primes) % 2:
        raise ValueError(f"target {{{', '.join(map(str, primes))}}} has odd cardinality")
    return RamificationSet(tuple(primes), False)


class SplitPrimeError(ValueError):
    def __init__(self, p: int, d: int):
        super().__init__(f"{p} splits in Q(sqrt({d}))")
        self.p = p
        self.d = d


@dataclass(frozen=True)
class Recipe:
    delta: int
    q: int
    inert: tuple[int, ...]
    ramified: tuple[int, ...]
    unramified_divisors: tuple[int, ...]


def recipe_delta(target: RamificationSet | Iterable[int], K: Field, search_limit: int = 10**6) -> Recipe:
    """Delta = p_1...p_r q, with q an odd prime chosen by congruence and Legendre conditions.

    The p_i are the inert primes of the target, r_i the ramified ones, s_i the
    prime divisors of d not in the target.  When 2 is an inert target prime no
    congruence on q mod 8 is imposed.  The returned Delta is verified directly.
    """
    target = as_target(target, K)
    d = K.d
    if not target.finite_places:
        return Recipe(1, 1, (), (), ())
    inert = tuple(p for p in target.finite_places if prime_splitting(p, d) is PrimeSplitting.INERT)
    ram = tuple(p for p in target.finite_places if prime_splitting(p, d) is PrimeSplitting.RAMIFIED)
    s_list = tuple(p for p in factorize(d).primes() if p not in ram)
    P = 1
    for p in inert:
        P *= p
    if 2 in inert:
        residues = None
    elif 2 in ram:
        residues = {(5 if d % 4 == 2 else 3) * P % 8}
    else:
        residues = {P % 8}
    excluded = set(inert) | set(ram) | set(s_list)
    for q in primes_from(3):
        if q > search_limit:
            break
        if q in excluded:
            continue
        if residues is not None and q % 8 not in residues:
            continue
        if any(legendre(q, r) != -legendre(P, r) for r in ram if r != 2):
            continue
        if any(legendre(q, s) != legendre(P, s) for s in s_list if s != 2):
            continue
        if jacobi(d, q) != 1:
            raise InvariantViolation(f"recipe q = {q} has (d/q) != 1")
        delta = P * q
        if not _delta_realizes(delta, K, target):
            raise InvariantViolation(f"recipe Delta = {delta} does not realize {target}")
        return Recipe(delta, q, inert, ram, s_list)
    raise ValueError(f"no recipe prime q below {search_limit}")


def construct_delta(target: RamificationSet | Iterable[int], K: Field, method: str = "search") -> int:
    """A positive integer Delta whose algebra (Delta, |D_K|) ramifies exactly at target.

    ``search`` returns the smallest such Delta, bounded by the recipe value;
    ``recipe`` returns the recipe value itself.
    """
    target = as_target(target, K)
    if not target.finite_places:
        return 1
    rec = recipe_delta(target, K)
    if method == "recipe":
        return rec.delta
    if method != "search":
        raise ValueError(f"unknown method {method!r}")
    for delta in range(1, rec.delta + 1):
        if _delta_realizes(delta, K, target):
            return delta
    raise InvariantViolation("search did not reach the recipe value")


def inert_primes(d: int) -> Iterator[int]:
    for p in primes_from(2):
        if prime_splitting(p, d) is PrimeSplitting.INERT:
            yield p


def enumerate_classes(K: Field, n: int) -> list[FuchsianClass]:
    """n pairwise non-commensurable classes: the split one, then pairs of inert primes."""
    if K.d == 1:
        raise ValueError("d = 1 has no inert primes in Q(sqrt 1)")
    if n < 1:
        raise ValueError("n >= 1")
    targets = [RamificationSet.of([])]
    primes: list[int] = []
    gen = inert_primes(K.d)
    while len(targets) < n:
        q = next(gen)
        for p in primes:
            if len(targets) >= n:
                break
            targets.append(RamificationSet.of([p, q]))
        primes.append(q)
    out = []
    for t in targets:
        delta = construct_delta(t, K)
        cls = classify(K(delta))
        if cls.ram != t:
            raise InvariantViolation(f"class for {t} has ramification {cls.ram}")
        out.append(cls)
    for A, B in combinations(out, 2):
        if algebras_isomorphic(A.algebra, B.algebra):
            raise InvariantViolation("enumerated classes are not distinct")
    return out

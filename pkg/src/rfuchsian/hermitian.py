"""3x3 matrices over K, the Hermitian form h of signature (1, 2) and the Heisenberg group.

The form is h(z) = z* I12 z = -Re(z0 conj(z2)) + |z1|^2 with I12 antidiagonal
(-1/2, 1, -1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import Field, FieldElement, Number


class MatK:
    """Exact 3x3 matrix over K, stored row-major."""

    __slots__ = ("field", "e")

    def __init__(self, field: Field, entries: Iterable[Number]):
        e = tuple(field.coerce(x) for x in entries)
        if len(e) != 9:
            raise ValueError("MatK needs 9 entries")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("MatK is immutable")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Number]]) -> MatK:
        return cls(field, [x for row in rows for x in row])

    @classmethod
    def identity(cls, field: Field) -> MatK:
        return cls(field, [1, 0, 0, 0, 1, 0, 0, 0, 1])

    @classmethod
    def diag(cls, field: Field, x, y, z) -> MatK:
        return cls(field, [x, 0, 0, 0, y, 0, 0, 0, z])

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.e[3 * i + j]

    def rows(self) -> list[list[FieldElement]]:
        return [list(self.e[3 * i : 3 * i + 3]) for i in range(3)]

    def __mul__(self, other):
        if isinstance(other, MatK):
            A, B = self.e, other.e
            out = []
            for i in range(3):
                a0, a1, a2 = A[3 * i], A[3 * i + 1], A[3 * i + 2]
                for j in range(3):
                    out.append(a0 * B[j] + a1 * B[3 + j] + a2 * B[6 + j])
            return MatK(self.field, out)
        s = self.field.coerce(other)
        return MatK(self.field, [x * s for x in self.e])

    def __rmul__(self, other):
        s = self.field.coerce(other)
        return MatK(self.field, [s * x for x in self.e])

    def __add__(self, other: MatK) -> MatK:
        return MatK(self.field, [x + y for x, y in zip(self.e, other.e)])

    def __sub__(self, other: MatK) -> MatK:
        return MatK(self.field, [x - y for x, y in zip(self.e, other.e)])

    def apply(self, v: Sequence[Number]) -> tuple[FieldElement, ...]:
        v = [self.field.coerce(x) for x in v]
        return tuple(self[i, 0] * v[0] + self[i, 1] * v[1] + self[i, 2] * v[2] for i in range(3))

    def conj(self) -> MatK:
        return MatK(self.field, [x.conj() for x in self.e])

    def transpose(self) -> MatK:
        e = self.e
        return MatK(self.field, [e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]])

    def star(self) -> MatK:
        return self.conj().transpose()

    def det(self) -> FieldElement:
        a, b, c, d, e, f, g, h, i = self.e
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def adjugate(self) -> MatK:
        a, b, c, d, e, f, g, h, i = self.e
        return MatK(
            self.field,
            [
                e * i - f * h, c * h - b * i, b * f - c * e,
                f * g - d * i, a * i - c * g, c * d - a * f,
                d * h - e * g, b * g - a * h, a * e - b * d,
            ],
        )

    def inverse(self) -> MatK:
        det = self.det()
        if det.is_zero:
            raise ZeroDivisionError("singular matrix")
        return self.adjugate() * det.inverse()

    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.e)

    def __eq__(self, other):
        if not isinstance(other, MatK):
            return NotImplemented
        return self.field.d == other.field.d and self.e == other.e

    def __hash__(self):
        return hash(self.e)

    def key(self) -> tuple:
        return tuple((x.a, x.b, x.n) for x in self.e)

    def to_complex(self):
        import numpy as np

        return np.array([x.to_complex() for x in self.e], dtype=complex).reshape(3, 3)

    def __repr__(self):
        rows = "; ".join(", ".join(x.literal() for x in r) for r in self.rows())
        return f"MatK[{rows}]"


class ProjMatK:
    """Projective class of an invertible MatK, modulo scalars in K^x.

    The canonical representative has its first nonzero entry (row-major) equal to 1.
    """

    __slots__ = ("representative", "canonical")

    def __init__(self, representative: MatK):
        first = next((x for x in representative.e if not x.is_zero), None)
        if first is None:
            raise ValueError("zero matrix has no projective class")
        object.__setattr__(self, "representative", representative)
        object.__setattr__(self, "canonical", representative * first.inverse())

    def __setattr__(self, name, value):
        raise AttributeError("ProjMatK is immutable")

    def __eq__(self, other):
        if isinstance(other, MatK):
            other = ProjMatK(other)
        if not isinstance(other, ProjMatK):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __mul__(self, other: ProjMatK) -> ProjMatK:
        return ProjMatK(self.representative * other.representative)

    def inverse(self) -> ProjMatK:
        return ProjMatK(self.representative.inverse())

    def key(self) -> tuple:
        return self.canonical.key()

    def __repr__(self):
        return f"ProjMatK({self.canonical!r})"


def projectively_equal(X: MatK, Y: MatK) -> bool:
    return ProjMatK(X) == ProjMatK(Y)


# ---------------------------------------------------------------------------
# the Hermitian form


def I12(field: Field) -> MatK:
    h = Fraction(-1, 2)
    return MatK(field, [0, 0, h, 0, 1, 0, h, 0, 0])


def I12_inv(field: Field) -> MatK:
    return MatK(field, [0, 0, -2, 0, 1, 0, -2, 0, 0])


def h_form(z: Sequence[FieldElement]) -> Fraction:
    z0, z1, z2 = z
    return -(z0 * z2.conj()).re + z1.norm()


def h_pairing(z: Sequence[FieldElement], w: Sequence[FieldElement]) -> FieldElement:
    """Sesquilinear form <z, w> = w* I12 z."""
    return (-(z[0] * w[2].conj()) - z[2] * w[0].conj()) / 2 + z[1] * w[1].conj()


def hermitian_adjoint(X: MatK) -> MatK:
    """I12^{-1} X* I12, which equals X^{-1} exactly when X is unitary."""
    F = X.field
    return I12_inv(F) * X.star() * I12(F)


def unitarity_equations(X: MatK) -> list[tuple[str, FieldElement, int]]:
    """The six entry identities (lhs, expected value) equivalent to X being unitary.

    X is written [[a, conj(gamma), b], [alpha, A, beta], [c, conj(delta), d]].
    """
    a, gb, b, alpha, A, beta, c, db, d = X.e
    gamma, delta = gb.conj(), db.conj()
    cj = lambda z: z.conj()  # noqa: E731
    return [
        ("a*conj(d) + b*conj(c) - delta*conj(gamma)/2 = 1", a * cj(d) + b * cj(c) - delta * gb / 2, 1),
        ("conj(d)*alpha + conj(c)*beta - A*delta/2 = 0", cj(d) * alpha + cj(c) * beta - A * delta / 2, 0),
        ("c*conj(d) + d*conj(c) - |delta|^2/2 = 0", c * cj(d) + d * cj(c) - delta * db / 2, 0),
        ("A*conj(A) - 2*alpha*conj(beta) - 2*beta*conj(alpha) = 1", A * cj(A) - 2 * alpha * cj(beta) - 2 * beta * cj(alpha), 1),
        ("a*conj(b) + b*conj(a) - |gamma|^2/2 = 0", a * cj(b) + b * cj(a) - gamma * gb / 2, 0),
        ("conj(b)*alpha + conj(a)*beta - A*gamma/2 = 0", cj(b) * alpha + cj(a) * beta - A * gamma / 2, 0),
    ]


def unitarity_failures(X: MatK) -> list[str]:
    return [name for name, lhs, rhs in unitarity_equations(X) if lhs != rhs]


def is_unitary(X: MatK) -> bool:
    return X * hermitian_adjoint(X) == MatK.identity(X.field)


def unitary_scale(X: MatK) -> Fraction | None:
    """s > 0 with X* I12 X = s I12, if X is a scalar multiple of a unitary matrix."""
    F = X.field
    G = X.star() * I12(F) * X
    s = G[1, 1]
    if s.is_zero or not s.is_real or s.re <= 0 or G != I12(F) * s:
        return None
    return s.re


# ---------------------------------------------------------------------------
# Picard group membership


def is_picard(X: MatK | ProjMatK) -> bool:
    """Whether [X] lies in PU(1,2) intersected with PGL_3(O_K).

    Z is cleared of rational denominators; a representative in GL_3(O_K) exists
    iff the ideal generated by the entries of Z is principal, (pi) say, and
    Z/pi has unit determinant.
    """
    if isinstance(X, ProjMatK):
        X = X.representative
    if unitary_scale(X) is None:
        raise ValueError("is_picard needs a (projectively) unitary matrix")
    F = X.field
    Z = ProjMatK(X).canonical
    for W in (X, _clear_rational(Z)):
        if _integral_with_unit_det(W):
            return True
    # Any integral representative with unit determinant is W/pi, where (pi) is the
    # ideal generated by the entries of W; so that ideal must be principal of norm
    # N(det W)^(1/3).
    W = _clear_rational(Z)
    J = F.ideal(x for x in W.e if not x.is_zero)
    if W.det().norm() != J.norm() ** 3:
        return False
    pi = J.generator()
    return pi is not None and _integral_with_unit_det(W * pi.inverse())


def _integral_with_unit_det(W: MatK) -> bool:
    F = W.field
    return all(F.is_integer(x) for x in W.e) and F.is_unit(W.det())


def _clear_rational(Z: MatK) -> MatK:
    """Z times the rational scalar making its integral coordinates coprime integers."""
    F = Z.field
    coords = [c for x in Z.e for c in F.integral_coords(x)]
    L = math.lcm(*(c.denominator for c in coords))
    g = math.gcd(*(int(c * L) for c in coords))
    return Z * Fraction(L, g)


# ---------------------------------------------------------------------------
# Heisenberg group


@dataclass(frozen=True)
class HeisenbergPoint:
    """(zeta, v) with v = t*sqrt(d), so that the null point [|zeta|^2 + i t sqrt(d) : zeta : 1] is K-rational."""

    zeta: FieldElement
    t: Fraction

    @classmethod
    def of(cls, field: Field, zeta: Number = 0, t: int | Fraction = 0) -> HeisenbergPoint:
        return cls(field.coerce(zeta), Fraction(t))

    @property
    def field(self) -> Field:
        return self.zeta.field

    def w0(self) -> FieldElement:
        return self.zeta.norm() + self.field.sqrt_minus_d * self.t

    def null_vector(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return (self.w0(), self.zeta, self.field.one)

    def inverse(self) -> HeisenbergPoint:
        return HeisenbergPoint(-self.zeta, -self.t)

    def vertical(self) -> float:
        return float(self.t) * self.field.d**0.5


def heisenberg_translation(p: HeisenbergPoint) -> MatK:
    F = p.field
    z = p.zeta
    return MatK(F, [1, 2 * z.conj(), p.w0(), 0, 1, z, 0, 0, 1])


def heisenberg_dilation(lam: FieldElement) -> MatK:
    if lam.is_zero:
        raise ValueError("dilation factor must be nonzero")
    return MatK.diag(lam.field, lam, 1, lam.conj().inverse())


def heisenberg_compose(p: HeisenbergPoint, q: HeisenbergPoint) -> HeisenbergPoint:
    """The point whose translation is the product of the two translations.

    Reading off the (1,3) entry of the product gives
    t'' = t + t' + 2 (x y' - y x') for zeta = x + y i sqrt(d).
    """
    x, y = p.zeta.re, p.zeta.im
    x2, y2 = q.zeta.re, q.zeta.im
    return HeisenbergPoint(p.zeta + q.zeta, p.t + q.t + 2 * (x * y2 - y * x2))


def point_from_matrix(T: MatK) -> HeisenbergPoint:
    """Inverse of :func:`heisenberg_translation` (T normalized with T[2,2] = 1)."""
    T = T * T[2, 2].inverse()
    zeta = T[1, 2]
    return HeisenbergPoint(zeta, (T[0, 2] - zeta.norm()).im)


def antidiagonal(field: Field) -> MatK:
    """The involution [z0:z1:z2] -> [z2:z1:z0]; it lies in the Picard group."""
    return MatK(field, [0, 0, 1, 0, 1, 0, 1, 0, 0])

"""R-circles as unitary-symmetric matrices: action, center, radius and the normal form Y_Delta."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvariantViolation
from .exactnum import Field, FieldElement, integral_content, squarefree_delta
from .hermitian import (
    HeisenbergPoint,
    I12,
    MatK,
    ProjMatK,
    antidiagonal,
    heisenberg_dilation,
    heisenberg_translation,
    unitarity_failures,
    unitary_scale,
)


class UnitarySymmetric:
    """Y with Y* I12 Y = I12 and Y conj(Y) = I; encodes the involution z -> Y conj(z)."""

    __slots__ = ("Y",)

    def __init__(self, Y: MatK):
        bad = unitary_symmetric_failures(Y)
        if bad:
            raise ValueError("not unitary-symmetric: " + "; ".join(bad))
        object.__setattr__(self, "Y", Y)

    def __setattr__(self, name, value):
        raise AttributeError("UnitarySymmetric is immutable")

    @property
    def field(self) -> Field:
        return self.Y.field

    def projective(self) -> ProjMatK:
        return ProjMatK(self.Y)

    def key(self) -> tuple:
        return self.projective().key()

    def same_circle(self, other: UnitarySymmetric) -> bool:
        return self.projective() == other.projective()

    def __eq__(self, other):
        if not isinstance(other, UnitarySymmetric):
            return NotImplemented
        return self.Y == other.Y

    def __hash__(self):
        return hash(self.Y)

    def __repr__(self):
        return f"UnitarySymmetric({self.Y!r})"


def unitary_symmetric_failures(Y: MatK) -> list[str]:
    F = Y.field
    out = []
    if Y.star() * I12(F) * Y != I12(F):
        out.extend(f"unitarity identity fails: {name}" for name in unitarity_failures(Y))
        if len(out) == 0:
            out.append("Y* I12 Y != I12")
    if Y * Y.conj() != MatK.identity(F):
        out.append("Y conj(Y) != I")
    if not out and Y.det().norm() != 1:
        out.append("|det Y| != 1")
    return out


def make_Y_delta(delta: FieldElement) -> UnitarySymmetric:
    if delta.is_zero:
        raise ValueError("Y_Delta needs Delta != 0")
    F = delta.field
    return UnitarySymmetric(MatK(F, [0, 0, delta.conj().inverse(), 0, 1, 0, delta, 0, 0]))


def standard_infinite(field: Field) -> UnitarySymmetric:
    return UnitarySymmetric(MatK.identity(field))


def act(X: MatK, Y: UnitarySymmetric) -> UnitarySymmetric:
    """X Y conj(X)^{-1}.  X may be any scalar multiple of a unitary matrix."""
    if unitary_scale(X) is None:
        raise ValueError("act needs a (projectively) unitary matrix")
    return UnitarySymmetric(X * Y.Y * X.conj().inverse())


@dataclass(frozen=True)
class RCircleData:
    finite: bool
    center: tuple[FieldElement, FieldElement, FieldElement] | None = None
    radius: FieldElement | None = None
    delta: FieldElement | None = None

    def center_point(self) -> HeisenbergPoint:
        if not self.finite:
            raise ValueError("an infinite circle has no center")
        w0, zeta, _ = self.center
        return HeisenbergPoint(zeta, w0.im)


def radius_formulas(Y: MatK) -> tuple[FieldElement, FieldElement]:
    """The two expressions for the radius of a finite circle."""
    A, alpha, c = Y[1, 1], Y[1, 0], Y[2, 0]
    delta = Y[2, 1].conj()
    cb = c.conj()
    r1 = ((A * c).conj() - alpha.conj() * delta) / (cb * cb)
    r2 = -(c / (cb * cb)) * Y.det().conj()
    return r1, r2


def delta_from_radius(radius: FieldElement) -> FieldElement:
    """Canonical Delta in O_K with Delta in conj(radius)^{-1} (K^x)^2."""
    D = radius.conj().inverse()
    m = D.n  # D * n^2 lies in Z[i sqrt d]
    return squarefree_delta(D * (m * m))


def circle_data(Y: UnitarySymmetric) -> RCircleData:
    M = Y.Y
    c = M[2, 0]
    if c.is_zero:
        return RCircleData(False)
    r1, r2 = radius_formulas(M)
    if r1 != r2:
        raise InvariantViolation(f"radius formulas disagree: {r1} vs {r2}")
    if r1.norm() * c.norm() != 1:
        raise InvariantViolation("|rad| != 1/|c|")
    center = (M[0, 0] / c, M[1, 0] / c, M.field.one)
    return RCircleData(True, center, r1, delta_from_radius(r1))


def _finite_making_ladder(F: Field):
    w = F.ring_generator
    for zeta, t in [(0, 0), (1, 0), (w, 0), (w + 1, 0), (0, 1), (1, 1), (w, 1), (w + 1, 1)]:
        yield antidiagonal(F) * heisenberg_translation(HeisenbergPoint.of(F, zeta, t))


def reduce_to_delta(Y: UnitarySymmetric) -> tuple[FieldElement, ProjMatK]:
    """(Delta, g) with g in PU(1,2;K) and [g Y conj(g)^{-1}] = [Y_Delta], Delta canonical squarefree."""
    F = Y.field
    M = Y.Y
    g = MatK.identity(F)
    if M[2, 0].is_zero:
        for P in _finite_making_ladder(F):
            Z = act(P, Y)
            if not Z.Y[2, 0].is_zero:
                g, M = P, Z.Y
                break
        else:
            raise InvariantViolation("no ladder element made the circle finite")
    c = M[2, 0]
    zeta = M[1, 0] / c
    t = (M[0, 0] / c).im
    X_inv = heisenberg_translation(HeisenbergPoint(-zeta, -t))
    g = X_inv * g
    N = (X_inv * M * X_inv.conj().inverse())
    if any(not N[i, j].is_zero for i, j in [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)]):
        raise InvariantViolation("translated matrix is not antidiagonal")
    D = N[2, 0] / N[1, 1]
    m = D.n
    delta = squarefree_delta(D * (m * m))
    r = F.sqrt(delta / D)
    if r is None:
        raise InvariantViolation(f"{delta} and {D} are not in the same square class")
    # dil_lambda [Y_D] conj(dil_lambda)^{-1} = [Y_{D conj(lambda)^{-2}}]
    lam = r.conj().inverse()
    g = heisenberg_dilation(lam) * g
    if ProjMatK(act(g, Y).Y) != ProjMatK(make_Y_delta(delta).Y):
        raise InvariantViolation("conjugator does not reach Y_Delta")
    return delta, ProjMatK(g)


def hilbert90(z: FieldElement) -> FieldElement:
    """w in O_K - {0} with w / conj(w) = z, for N(z) = 1."""
    F = z.field
    if z.norm() != 1:
        raise ValueError(f"hilbert90 needs norm 1, got N({z}) = {z.norm()}")
    w = F.sqrt_minus_d if z == -1 else 1 + z
    A, B = F.integral_coords(w)
    m = A.denominator * B.denominator // math.gcd(A.denominator, B.denominator)
    w = w * m
    w = w / integral_content(w)
    if w / w.conj() != z:
        raise InvariantViolation("hilbert90 witness is wrong")
    return w

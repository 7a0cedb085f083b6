"""Word balls of Picard-group images of an R-circle, and float samples of the circles.

The generator set used here is a convenient finite supply of Picard elements
(translations, unit dilations and the antidiagonal involution Y_1); nothing
is claimed about the subgroup it generates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvariantViolation
from .exactnum import Field
from .hermitian import (
    HeisenbergPoint,
    MatK,
    ProjMatK,
    antidiagonal,
    heisenberg_dilation,
    heisenberg_translation,
    is_picard,
)
from .rcircle import UnitarySymmetric, act, circle_data, unitary_symmetric_failures

POINT_TOLERANCE = 1e-9


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class Generator:
    name: str
    matrix: MatK

    def projective(self) -> ProjMatK:
        return ProjMatK(self.matrix)


@dataclass(frozen=True)
class GeneratorSet:
    field: Field
    generators: tuple[Generator, ...]

    def __post_init__(self):
        for g in self.generators:
            if not is_picard(g.matrix):
                raise ValueError(f"generator {g.name} is not in the Picard group")
        keys = {g.projective() for g in self.generators}
        for g in self.generators:
            if g.projective().inverse() not in keys:
                raise ValueError(f"the inverse of {g.name} is missing")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def names(self) -> list[str]:
        return [g.name for g in self.generators]


def _unit_dilation_factor(F: Field):
    if F.d == 1:
        return F.sqrt_minus_d, "i"
    if F.d == 3:
        return F.ring_generator - 1, "omega"  # a primitive cube root of unity
    return F(-1), "-1"


def admissible_heights(F: Field, zeta, bound: int = 1) -> list[int]:
    """Heights t in [-bound, bound] with t(zeta, t) integral.

    For zeta in O_K both 2 conj(zeta) and |zeta|^2 + i t sqrt(d) are integral
    for every integer t, so the check only rejects non-integral zeta.
    """
    out = []
    for t in range(-bound, bound + 1):
        M = heisenberg_translation(HeisenbergPoint.of(F, zeta, t))
        if all(F.is_integer(x) for x in M.e):
            out.append(t)
    return out


def picard_generators(F: Field, depth_hint: int = 1) -> GeneratorSet:
    """Translations t(zeta, 0) and t(0, 1), a unit dilation, Y_1, and the inverses.

    zeta runs over 1 and omega; ``depth_hint`` k > 1 adds a + b*omega with
    |a|, |b| < k.
    """
    if depth_hint < 1:
        raise ValueError("depth_hint >= 1")
    w = F.ring_generator
    gens: list[Generator] = []
    zetas = [F(1), w]
    for a in range(-depth_hint + 1, depth_hint):
        for b in range(0, depth_hint):
            z = F(a) + w * b
            if (b, a) > (0, 0) and z not in zetas:
                zetas.append(z)
    for z in zetas:
        if 0 not in admissible_heights(F, z):
            raise InvariantViolation(f"t({z}, 0) is not integral")
        p = HeisenbergPoint.of(F, z, 0)
        gens.append(Generator(f"t({z},0)", heisenberg_translation(p)))
        gens.append(Generator(f"t({z},0)^-1", heisenberg_translation(p.inverse())))
    p = HeisenbergPoint.of(F, 0, 1)
    gens.append(Generator("t(0,1)", heisenberg_translation(p)))
    gens.append(Generator("t(0,1)^-1", heisenberg_translation(p.inverse())))
    u, uname = _unit_dilation_factor(F)
    gens.append(Generator(f"dil({uname})", heisenberg_dilation(u)))
    if u != -1:
        gens.append(Generator(f"dil({uname})^-1", heisenberg_dilation(u.inverse())))
    gens.append(Generator("Y1", antidiagonal(F)))
    return GeneratorSet(F, tuple(gens))


# ---------------------------------------------------------------------------
# word balls


def orbit_circles(Y0: UnitarySymmetric, gens: GeneratorSet | Iterable[Generator], radius: int) -> list[UnitarySymmetric]:
    """{act(w, Y0) : |w| <= radius}, deduplicated projectively and sorted by canonical key.

    Breadth-first: level r is obtained by acting with every generator on level r - 1.
    """
    if radius < 0:
        raise ValueError("radius >= 0")
    glist = list(gens)
    seen = {Y0.key(): Y0}
    frontier = [Y0]
    for _ in range(radius):
        nxt = []
        for Y in frontier:
            for g in glist:
                Z = act(g.matrix, Y)
                k = Z.key()
                if k not in seen:
                    seen[k] = Z
                    nxt.append(Z)
        frontier = nxt
    for Z in seen.values():
        bad = unitary_symmetric_failures(Z.Y)
        if bad:
            raise InvariantViolation("orbit left the unitary-symmetric matrices: " + "; ".join(bad))
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# sampling


@dataclass(frozen=True)
class CircleSample:
    """Heisenberg points (Re zeta, Im zeta, v); closed for finite circles."""

    source: UnitarySymmetric
    points: tuple[tuple[float, float, float], ...]
    closed: bool


def standard_lemniscate_point(theta: float, lobe: int) -> tuple[complex, float]:
    """Point of C_1 with z0 = e^{i theta}, x1 = lobe * sqrt(cos 2 theta), as (zeta, v)."""
    x1 = lobe * math.sqrt(max(0.0, math.cos(2 * theta)))
    # [z0 : x1 : conj(z0)] -> w = x1 / conj(z0), w0 = z0 / conj(z0)
    z0 = cmath.exp(1j * theta)
    zeta = x1 / z0.conjugate()
    w0 = z0 / z0.conjugate()
    return zeta, w0.imag


def _lobe_parameters(n: int) -> tuple[list[float], list[float]]:
    m = n // 2
    if m % 2 == 0:
        m += 1  # odd count so that theta = 0 and theta = pi are sampled
    first = [-math.pi / 4 + (math.pi / 2) * k / (m - 1) for k in range(m)]
    second = [5 * math.pi / 4 - (math.pi / 2) * k / (m - 1) for k in range(1, m - 1)]
    return first, second


def heisenberg_to_vector(zeta: complex, v: float) -> np.ndarray:
    return np.array([abs(zeta) ** 2 + 1j * v, zeta, 1.0], dtype=complex)


def _complex_point(p: HeisenbergPoint) -> tuple[complex, float]:
    return p.zeta.to_complex(), p.vertical()


def sample_circle(Y: UnitarySymmetric, n: int) -> CircleSample:
    """Float sample of a finite circle: dilate and translate the standard lemniscate C_1."""
    if n < 8:
        raise ValueError("n >= 8")
    data = circle_data(Y)
    if not data.finite:
        raise ValueError("sample_circle needs a finite circle; use sample_infinite_circle")
    zeta0, v0 = _complex_point(data.center_point())
    lam = cmath.sqrt(data.radius.to_complex())  # principal branch
    first, second = _lobe_parameters(n)
    pts = []
    for thetas in (first, second):
        for th in thetas:
            zeta, v = standard_lemniscate_point(th, 1)
            zeta, v = lam.conjugate() * zeta, abs(lam) ** 2 * v
            # translation by the center: (zeta, v) -> (zeta + zeta0, v + v0 + 2 Im(conj(zeta0) zeta))
            pts.append((zeta + zeta0, v + v0 + 2 * (zeta0.conjugate() * zeta).imag))
    sample = CircleSample(Y, tuple((z.real, z.imag, v) for z, v in pts), True)
    verify_sample(sample)
    return sample


def _fixed_null_vectors(Y: UnitarySymmetric) -> list[np.ndarray]:
    """Two independent null vectors of the real fixed space of z -> Y conj(z), with z2 != 0."""
    M = Y.Y.to_complex()
    basis = []
    for k in range(3):
        for s in (1.0, 1j):
            e = np.zeros(3, dtype=complex)
            e[k] = s
            basis.append(e + M @ e.conj())
    R = np.array([np.concatenate([b.real, b.imag]) for b in basis])
    _, sv, vt = np.linalg.svd(R)
    V = [vt[k, :3] + 1j * vt[k, 3:] for k in range(3)]
    H = np.array([[-0.5 * (V[i][0] * V[j][2].conjugate() + V[i][2] * V[j][0].conjugate()).real
                   + (V[i][1] * V[j][1].conjugate()).real for j in range(3)] for i in range(3)])
    evals, U = np.linalg.eigh(H)
    odd = 0 if np.sum(evals > 0) == 1 else 2  # the eigenvalue of the lone sign
    others = [k for k in range(3) if k != odd]
    out = []
    for phi in (0.3, 1.9, 3.7):
        y = np.zeros(3)
        y[odd] = 1 / math.sqrt(abs(evals[odd]))
        y[others[0]] = math.cos(phi) / math.sqrt(abs(evals[others[0]]))
        y[others[1]] = math.sin(phi) / math.sqrt(abs(evals[others[1]]))
        z = sum(y[k] * sum(U[j, k] * V[j] for j in range(3)) for k in range(3))
        if abs(z[2]) > 1e-6 * np.linalg.norm(z):
            out.append(z / z[2])
    return out[:2]


def sample_infinite_circle(Y: UnitarySymmetric, n: int, extent: float = 4.0) -> CircleSample:
    """Sample of an infinite circle, a straight line in (zeta, v) coordinates.

    Two finite points are found on the null conic of the fixed space, and the
    line through them is sampled with |zeta - zeta_p| <= extent.
    """
    if n < 2:
        raise ValueError("n >= 2")
    if circle_data(Y).finite:
        raise ValueError("circle is finite")
    p, q = _fixed_null_vectors(Y)
    zp, vp = p[1], p[0].imag
    zq, vq = q[1], q[0].imag
    dz, dv = zq - zp, vq - vp
    scale = extent / max(abs(dz), 1e-12)
    pts = []
    for k in range(n):
        s = scale * (2 * k / (n - 1) - 1)
        z = zp + s * dz
        pts.append((z.real, z.imag, vp + s * dv))
    sample = CircleSample(Y, tuple(pts), False)
    verify_sample(sample)
    return sample


def sample(Y: UnitarySymmetric, n: int) -> CircleSample:
    return sample_circle(Y, n) if circle_data(Y).finite else sample_infinite_circle(Y, n)


def point_residuals(Y: UnitarySymmetric, point: Sequence[float]) -> tuple[float, float]:
    """(|h(z)|, distance of Y conj(z) from the line of z), for z the unit null vector of the point."""
    zeta = complex(point[0], point[1])
    z = heisenberg_to_vector(zeta, point[2])
    z = z / np.linalg.norm(z)
    h = -(z[0] * z[2].conjugate()).real + abs(z[1]) ** 2
    w = Y.Y.to_complex() @ z.conj()
    mu = np.vdot(z, w)
    return abs(h), float(np.linalg.norm(w - mu * z))


def verify_sample(s: CircleSample, tol: float = POINT_TOLERANCE) -> None:
    for pt in s.points:
        h, fix = point_residuals(s.source, pt)
        if h > tol or fix > 1e3 * tol:
            raise InvariantViolation(f"sampled point {pt} is off its circle: |h| = {h:.3g}, fixed-point residual {fix:.3g}")


def vertical_projection(s: CircleSample) -> list[tuple[float, float]]:
    """(zeta, v) -> zeta."""
    return [(x, y) for x, y, _ in s.points]

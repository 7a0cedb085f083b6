"""Seeded invariant suites over all modules, as run by ``rfuchsian selfcheck``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .exactnum import Field, factorize, squarefree_delta
from .fuchsian import (
    closed_form_algebra,
    delta_algebra,
    diagonalize_restricted_form,
    embed_quaternion,
    form_to_algebra,
    natural_delta_algebra,
    pell_order_elements,
    restricted_form,
)
from .hermitian import MatK, ProjMatK, is_picard, unitarity_failures
from .orbit import orbit_circles, picard_generators, sample
from .randgen import heisenberg_similarity, integral_element, word
from .rcircle import act, circle_data, make_Y_delta, radius_formulas, reduce_to_delta, standard_infinite
from .errors import InvariantViolation
from .symbols import algebras_isomorphic, hilbert_symbol, hilbert_symbol_real

TEST_FIELDS = (1, 2, 3, 5, 7)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: str) -> None:
        self.cases += 1
        if not cond:
            self.failures.append(what)


def suite_exactnum(rng: random.Random, corrupt: bool) -> SuiteResult:
    r = SuiteResult("exactnum")
    for d in TEST_FIELDS:
        F = Field(d)
        for _ in range(40):
            x, y, z = (integral_element(F, rng, 20) for _ in range(3))
            r.check((x * y) * z == x * (y * z), f"associativity d={d}")
            r.check(x * (y + z) == x * y + x * z, f"distributivity d={d}")
            r.check((x * y).norm() == x.norm() * y.norm(), f"norm multiplicative d={d}")
            r.check(x * x.inverse() == 1, f"inverse d={d}")
            s = squarefree_delta(x)
            r.check(F.is_square(x / s), f"squarefree_delta class d={d} x={x}")
            r.check(F.parse(x.literal()) == x, f"literal round trip d={d} x={x}")
    return r


def suite_symbols(rng: random.Random, corrupt: bool) -> SuiteResult:
    r = SuiteResult("symbols")
    for _ in range(200):
        a = rng.choice([-1, 1]) * rng.randint(1, 10**4)
        b = rng.choice([-1, 1]) * rng.randint(1, 10**4)
        prod = hilbert_symbol_real(a, b)
        for p in factorize(2 * a * b).primes():
            prod *= hilbert_symbol(a, b, p)
        r.check(prod == 1, f"product formula ({a},{b})")
        p = rng.choice([2, 3, 5, 7, 11, 13])
        r.check(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p), f"symmetry ({a},{b})_{p}")
        r.check(hilbert_symbol(a, -a, p) == 1, f"(a,-a)_{p} for a={a}")
    return r


def suite_hermitian(rng: random.Random, corrupt: bool) -> SuiteResult:
    r = SuiteResult("hermitian")
    for d in (1, 2, 3, 5):
        F = Field(d)
        gens = picard_generators(F)
        for _ in range(25):
            names, M = word(gens, rng, 6)
            if corrupt:
                e = list(M.e)
                e[1] = e[1] + 1
                M = MatK(F, e)
            r.check(not unitarity_failures(M), f"unitarity of {'*'.join(names) or 'I'} over d={d}")
            r.check(corrupt or is_picard(M), f"Picard membership of a word over d={d}")
    return r


def suite_rcircle(rng: random.Random, corrupt: bool) -> SuiteResult:
    r = SuiteResult("rcircle")
    for d in TEST_FIELDS:
        F = Field(d)
        for _ in range(8):
            delta = squarefree_delta(integral_element(F, rng, 10))
            g = heisenberg_similarity(F, rng)
            Y = act(g, make_Y_delta(delta))
            r1, r2 = radius_formulas(Y.Y)
            r.check(r1 == r2, f"radius formulas d={d}")
            r.check(r1.norm() * Y.Y[2, 0].norm() == 1, f"|rad| = 1/|c| d={d}")
            out, _ = reduce_to_delta(Y)
            r.check(out == delta, f"reduction round trip d={d} delta={delta}")
    return r


def suite_fuchsian(rng: random.Random, corrupt: bool) -> SuiteResult:
    r = SuiteResult("fuchsian")
    for d in TEST_FIELDS:
        F = Field(d)
        DK = F.abs_disc
        for _ in range(10):
            delta = integral_element(F, rng, 10)
            q = restricted_form(delta)
            r.check(q.det() == -delta.norm() * DK, f"det q d={d}")
            r.check(q.is_indefinite, f"q indefinite d={d}")
            qq = form_to_algebra(diagonalize_restricted_form(delta)[0])
            r.check(algebras_isomorphic(qq, closed_form_algebra(delta)), f"form route d={d} delta={delta}")
        for n in range(1, 21):
            r.check(algebras_isomorphic(natural_delta_algebra(n, F), delta_algebra(F(n))), f"natural Delta={n} d={d}")
        Y = make_Y_delta(F(3))
        for x in pell_order_elements(3, F, 5):
            g = embed_quaternion(x, 3, F)
            r.check(is_picard(g), f"embedding Picard d={d}")
            r.check(ProjMatK(act(g.representative, Y).Y) == Y.projective(), f"embedding fixes Y_3 d={d}")
    return r


def suite_orbit(rng: random.Random, corrupt: bool) -> SuiteResult:
    r = SuiteResult("orbit")
    for d in (1, 3):
        F = Field(d)
        orb = orbit_circles(standard_infinite(F), picard_generators(F), 2)
        for Y in orb:
            data = circle_data(Y)
            if data.finite:
                r.check(data.radius.norm() * Y.Y[2, 0].norm() == 1, f"|rad| = 1/|c| in orbit d={d}")
            try:
                sample(Y, 16)
                r.check(True, "sample")
            except InvariantViolation as exc:
                r.check(False, str(exc))
    return r


SUITES: tuple[Callable[[random.Random, bool], SuiteResult], ...] = (
    suite_exactnum,
    suite_symbols,
    suite_hermitian,
    suite_rcircle,
    suite_fuchsian,
    suite_orbit,
)


def run_selfcheck(seed: int = 0, corrupt: bool = False) -> list[SuiteResult]:
    results = []
    for suite in SUITES:
        rng = random.Random(f"{seed}:{suite.__name__}")
        results.append(suite(rng, corrupt))
    return results

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rfuchsian.exactnum import Field
from rfuchsian.hermitian import (
    HeisenbergPoint,
    I12,
    MatK,
    ProjMatK,
    antidiagonal,
    h_form,
    h_pairing,
    heisenberg_compose,
    heisenberg_dilation,
    heisenberg_translation,
    is_picard,
    is_unitary,
    point_from_matrix,
    unitarity_equations,
    unitarity_failures,
    unitary_scale,
)
from rfuchsian.orbit import picard_generators
from rfuchsian.randgen import integral_element, rational, rational_element, word


def random_point(F: Field, rng: random.Random) -> HeisenbergPoint:
    return HeisenbergPoint(rational_element(F, rng), rational(rng))


# -- matrices -----------------------------------------------------------------------


def test_matrix_basics(field):
    rng = random.Random(1)
    for _ in range(20):
        M = MatK(field, [integral_element(field, rng, 5, nonzero=False) for _ in range(9)])
        if M.det().is_zero:
            continue
        assert M * M.inverse() == MatK.identity(field)
        assert (M * M).det() == M.det() * M.det()
        assert M.star() == M.conj().transpose()
        assert np.allclose(M.to_complex() @ M.inverse().to_complex(), np.eye(3))


def test_matrices_are_immutable():
    M = MatK.identity(Field(1))
    with pytest.raises(AttributeError):
        M.e = ()


def test_projective_equality():
    F = Field(2)
    M = heisenberg_translation(HeisenbergPoint.of(F, F(1, 1), 3))
    s = F(2, -5)
    assert ProjMatK(M) == ProjMatK(M * s)
    assert hash(ProjMatK(M)) == hash(ProjMatK(M * s))
    assert ProjMatK(M) != ProjMatK(MatK.identity(F))


# -- the Hermitian form and unitarity ----------------------------------------------


def test_h_form_matches_pairing(field):
    rng = random.Random(2)
    for _ in range(50):
        z = [rational_element(field, rng) for _ in range(3)]
        assert h_pairing(z, z) == h_form(z)


def test_unitarity_equations_agree_with_matrix_test(field):
    rng = random.Random(3)
    gens = picard_generators(field)
    for _ in range(40):
        _, M = word(gens, rng, 5)
        assert is_unitary(M) and not unitarity_failures(M)
        G = M.star() * I12(field) * M
        assert G == I12(field)
        # the six identities and the matrix test agree on perturbed matrices too
        k = rng.randrange(9)
        e = list(M.e)
        e[k] = e[k] + integral_element(field, rng, 3)
        bad = MatK(field, e)
        assert (not unitarity_failures(bad)) == is_unitary(bad)


def test_six_identities_are_named():
    F = Field(1)
    names = [n for n, _, _ in unitarity_equations(MatK.identity(F))]
    assert len(names) == 6 and len(set(names)) == 6


def test_unitary_scale():
    F = Field(5)
    M = heisenberg_translation(HeisenbergPoint.of(F, 1, 0))
    assert unitary_scale(M) == 1
    assert unitary_scale(M * F(1, 1)) == 6
    assert unitary_scale(MatK.diag(F, 2, 1, 1)) is None


# -- Heisenberg group -------------------------------------------------------------


def test_translations_are_unitary_and_move_the_origin(field):
    rng = random.Random(4)
    for _ in range(30):
        p = random_point(field, rng)
        T = heisenberg_translation(p)
        assert is_unitary(T)
        image = T.apply([field.zero, field.zero, field.one])
        assert image == p.null_vector()
        assert h_form(p.null_vector()) == 0
        assert point_from_matrix(T) == p


@given(st.sampled_from([1, 2, 3, 5, 7]), st.integers(0, 10**6))
def test_composition_matches_matrix_product(d, seed):
    F = Field(d)
    rng = random.Random(seed)
    p, q = random_point(F, rng), random_point(F, rng)
    assert heisenberg_translation(heisenberg_compose(p, q)) == heisenberg_translation(p) * heisenberg_translation(q)
    assert heisenberg_compose(p, p.inverse()) == HeisenbergPoint.of(F, 0, 0)


def test_dilation_conjugates_translations(field):
    rng = random.Random(5)
    for _ in range(20):
        lam = rational_element(field, rng, nonzero=True)
        p = random_point(field, rng)
        Dl = heisenberg_dilation(lam)
        assert is_unitary(Dl)
        q = point_from_matrix(Dl * heisenberg_translation(p) * Dl.inverse())
        assert q == HeisenbergPoint(lam.conj() * p.zeta, p.t * lam.norm())


def test_dilation_rejects_zero():
    with pytest.raises(ValueError):
        heisenberg_dilation(Field(1).zero)


# -- Picard membership ----------------------------------------------------------------


def test_generators_are_picard(field):
    gens = picard_generators(field, depth_hint=2)
    assert all(is_picard(g.matrix) for g in gens)
    assert is_picard(antidiagonal(field))


def test_is_picard_examples():
    F = Field(1)
    assert is_picard(heisenberg_translation(HeisenbergPoint.of(F, F(1, 1), 1)))
    assert not is_picard(heisenberg_translation(HeisenbergPoint.of(F, Fraction(1, 2), 0)))
    assert not is_picard(heisenberg_dilation(F(2)))
    # scalar multiples of Picard elements are still Picard
    assert is_picard(heisenberg_translation(HeisenbergPoint.of(F, 1, 0)) * F(3, 7))


def test_is_picard_non_principal_scalar():
    """Scalar multiples are detected even when the scalar is not a rational integer."""
    F = Field(5)
    T = heisenberg_translation(HeisenbergPoint.of(F, F(1, 1), 2))
    assert is_picard(T * F(2))
    assert is_picard(T * F(1, 1))
    assert not is_picard(heisenberg_dilation(F(1, 1)))


def test_is_picard_rejects_non_unitary():
    with pytest.raises(ValueError):
        is_picard(MatK.diag(Field(1), 2, 1, 1))


def test_words_are_picard_over_random_fields():
    rng = random.Random(6)
    for d in (1, 2, 3, 5):
        F = Field(d)
        gens = picard_generators(F)
        for _ in range(30):
            _, M = word(gens, rng, 6)
            assert is_picard(M) and is_picard(ProjMatK(M * F(2, 1)))

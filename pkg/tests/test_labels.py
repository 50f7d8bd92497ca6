"""Label invariants: weights, flow, duals, covers, composition series."""

from fractions import Fraction
from random import Random

import pytest

from gl11kl.errors import NotDeterminedError
from gl11kl.labels import (
    AtypicalA,
    FormalSum,
    ProjectiveP,
    TypicalV,
    VermaV0,
    contragredient,
    delta,
    epsilon,
    epsilon2,
    k_decompose,
    parse_label,
    projective_cover,
    render_label,
    spectral_flow,
    top_dim,
)

import _draws

F = Fraction


def test_typical_requires_nonintegral_ehat():
    with pytest.raises(ValueError):
        TypicalV(0, 2)


def test_delta_examples():
    assert delta(TypicalV(1, F(1, 2))) == F(5, 8)
    assert delta(AtypicalA(5, 0)) == 0
    assert delta(AtypicalA(F(-1, 2), 1)) == 0


def test_delta_projective_uses_minimal_constituent():
    # constituents of P(n;l) are the Vermas at n and n - 2 eps(l)
    for n, ell in ((F(1, 3), 2), (F(-5, 4), -3), (F(0), 1)):
        label = ProjectiveP(n, ell)
        deltas = [delta(VermaV0(n, ell)), delta(VermaV0(n - 2 * epsilon(ell), ell))]
        assert delta(label) == min(deltas)


def test_epsilon_values():
    assert epsilon(3) == F(1, 2)
    assert epsilon(0) == 0
    assert epsilon(-2) == F(-1, 2)
    assert epsilon2(1, -1) == 0
    assert epsilon2(1, 1) == F(1, 2)


def test_epsilon2_symmetric_and_unital():
    for ell in range(-6, 7):
        assert epsilon2(ell, 0) == 0
        for ell2 in range(-6, 7):
            assert epsilon2(ell, ell2) == epsilon2(ell2, ell)


def test_spectral_flow_identity():
    for label in (VermaV0(F(1, 3), 0), AtypicalA(2, 0), ProjectiveP(F(-1, 2), 0)):
        assert spectral_flow(label, 0) == label


def test_spectral_flow_examples():
    assert spectral_flow(ProjectiveP(F(1, 4), 0), -1) == ProjectiveP(F(3, 4), -1)
    assert spectral_flow(VermaV0(F(1, 4), 0), -1) == VermaV0(F(5, 4), -1)
    assert spectral_flow(VermaV0(0, 0), 2) == VermaV0(-2, 2)
    assert spectral_flow(AtypicalA(1, 0), -2) == AtypicalA(F(5, 2), -2)
    # positive flow composes with conjugation, as for the projective covers
    assert spectral_flow(ProjectiveP(F(1, 4), 0), 2) == ProjectiveP(F(-7, 4), 2)
    assert spectral_flow(AtypicalA(1, 0), 2) == AtypicalA(F(-5, 2), 2)


def test_spectral_flow_round_trip_on_vermas():
    rng = Random(2)
    for _ in range(50):
        n = _draws.rational(rng)
        ell = rng.randint(-4, 4)
        src = VermaV0(n, 0)
        assert spectral_flow(spectral_flow(src, ell), -ell) == src


def test_spectral_flow_rejects_unsupported_sources():
    with pytest.raises(NotDeterminedError):
        spectral_flow(TypicalV(0, F(1, 2)), 1)
    with pytest.raises(NotDeterminedError):
        spectral_flow(AtypicalA(0, 1), 1)
    with pytest.raises(NotDeterminedError):
        spectral_flow(VermaV0(0, 2), 1)  # only the inverse flow is defined


def test_contragredient_examples():
    assert contragredient(AtypicalA(0, 0)) == AtypicalA(0, 0)
    got = contragredient(TypicalV(F(1, 4), F(1, 2)))
    assert (got.n, got.ehat, got.parity_flip) == (F(-1, 4), F(-1, 2), True)
    assert contragredient(ProjectiveP(2, 0)) == ProjectiveP(-2, 0)


def test_contragredient_involution_and_delta_fixed():
    rng = Random(9)
    for _ in range(100):
        label = rng.choice(
            (_draws.typical(rng), _draws.atypical(rng), ProjectiveP(_draws.rational(rng), 0))
        )
        dual = contragredient(label)
        assert contragredient(dual) == label
        assert delta(dual) == delta(label)


def test_contragredient_rejects_undetermined():
    with pytest.raises(NotDeterminedError):
        contragredient(ProjectiveP(0, 1))
    with pytest.raises(NotDeterminedError):
        contragredient(VermaV0(0, 0))


def test_projective_cover():
    v = TypicalV(1, F(1, 3))
    assert projective_cover(v) == v
    assert projective_cover(AtypicalA(F(1, 2), -2)) == ProjectiveP(F(1, 2), -2)
    assert projective_cover(AtypicalA(3, 0)) == ProjectiveP(3, 0)
    with pytest.raises(ValueError):
        projective_cover(ProjectiveP(0, 0))


def test_k_decompose_cases():
    assert k_decompose(VermaV0(0, 0)) == FormalSum(
        [AtypicalA(F(-1, 2), 0), AtypicalA(F(1, 2), 0)]
    )
    n = F(2, 3)
    assert k_decompose(VermaV0(n, 1)) == FormalSum([AtypicalA(n, 1), AtypicalA(n + 1, 1)])
    assert k_decompose(VermaV0(n, -2)) == FormalSum([AtypicalA(n, -2), AtypicalA(n - 1, -2)])
    assert k_decompose(ProjectiveP(n, 0)) == FormalSum(
        [(AtypicalA(n, 0), 2), (AtypicalA(n + 1, 0), 1), (AtypicalA(n - 1, 0), 1)]
    )
    assert k_decompose(ProjectiveP(n, 3)) == FormalSum(
        [(AtypicalA(n, 3), 2), (AtypicalA(n + 1, 3), 1), (AtypicalA(n - 1, 3), 1)]
    )
    v = TypicalV(n, F(1, 2))
    assert k_decompose(v) == FormalSum(v)


def test_k_decompose_multiplicity_and_top_dims():
    rng = Random(4)
    for _ in range(60):
        label = rng.choice(
            (
                _draws.typical(rng),
                _draws.atypical(rng),
                _draws.projective(rng),
                VermaV0(_draws.rational(rng), rng.randint(-3, 3)),
            )
        )
        parts = k_decompose(label)
        expected_total = {TypicalV: 1, AtypicalA: 1, VermaV0: 2, ProjectiveP: 4}[type(label)]
        assert parts.total() == expected_total
        assert sum(top_dim(l) * m for l, m in parts.items()) >= top_dim(label)


def test_top_dim_values():
    assert top_dim(AtypicalA(3, 0)) == 1
    assert top_dim(AtypicalA(0, 2)) == 2
    assert top_dim(TypicalV(0, F(1, 2))) == 2
    assert top_dim(VermaV0(0, 0)) == 2
    assert top_dim(ProjectiveP(0, 0)) == 4
    assert top_dim(ProjectiveP(0, -1)) == 2


def test_render_parse_round_trip():
    rng = Random(17)
    for _ in range(100):
        label = rng.choice(
            (
                _draws.typical(rng),
                _draws.atypical(rng),
                _draws.projective(rng),
                VermaV0(_draws.rational(rng), rng.randint(-3, 3)),
            )
        )
        assert parse_label(render_label(label)) == label


def test_parse_examples():
    assert parse_label("V(1/4;1/2)") == TypicalV(F(1, 4), F(1, 2))
    assert parse_label("A(-1/2;1)") == AtypicalA(F(-1, 2), 1)
    assert parse_label("p(0;0)") == ProjectiveP(0, 0)
    with pytest.raises(ValueError):
        parse_label("V(0;2)")
    with pytest.raises(ValueError):
        parse_label("A(0;1/2)")
    with pytest.raises(ValueError):
        parse_label("Q(0;0)")


def test_weight_data_bundle():
    from gl11kl.labels import WeightData, weight_data

    wd = weight_data(AtypicalA(F(-1, 2), 1))
    assert wd == WeightData(delta=F(0), epsilon=F(1, 2), top_dim=2)
    wd = weight_data(TypicalV(1, F(1, 2)))
    assert (wd.delta, wd.epsilon, wd.top_dim) == (F(5, 8), 0, 2)
    wd = weight_data(ProjectiveP(0, 0))
    assert (wd.delta, wd.epsilon, wd.top_dim) == (0, 0, 4)
    with pytest.raises(ValueError):
        WeightData(delta=F(0), epsilon=F(1, 3), top_dim=1)
    with pytest.raises(ValueError):
        WeightData(delta=F(0), epsilon=F(0), top_dim=0)


def test_formal_sum_algebra():
    a, b = AtypicalA(1, 0), AtypicalA(2, 0)
    s = FormalSum([a, b]) + FormalSum(a)
    assert s.multiplicity(a) == 2 and s.multiplicity(b) == 1
    assert (2 * s).total() == 6
    with pytest.raises(ValueError):
        FormalSum([(a, -1)])
    with pytest.raises(ValueError):
        s.single()

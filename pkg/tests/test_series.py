"""Truncated three-variable series arithmetic."""

from fractions import Fraction
from random import Random

import pytest

from gl11kl.series import JacobiSeries, jacobi_equal_to_cutoff, jacobi_mul


def S(terms, cutoff=None):
    return JacobiSeries(terms, cutoff)


def test_mul_truncates_to_window():
    one_plus_q = S({(0, 0, 0): 1, (1, 0, 0): 1}, cutoff=1)
    one_minus_q = S({(0, 0, 0): 1, (1, 0, 0): -1}, cutoff=1)
    got = jacobi_mul(one_plus_q, one_minus_q)
    assert got.terms == {(Fraction(0), Fraction(0), Fraction(0)): 1}  # q^2 truncated
    assert got.q_cutoff == 1


def test_mul_adds_fractional_exponents():
    a = S({(Fraction(1, 2), 1, 0): 1})
    b = S({(Fraction(1, 2), -1, 0): 1})
    got = jacobi_mul(a, b)
    assert got.terms == {(Fraction(1), Fraction(0), Fraction(0)): 1}


def test_mul_by_zero_annihilates():
    a = S({(0, 0, 0): 3, (2, 1, 1): -1}, cutoff=5)
    assert jacobi_mul(a, JacobiSeries.zero()).is_zero


def test_equality_reflexive():
    a = S({(0, 0, 0): 1, (1, 0, 0): 1}, cutoff=3)
    assert jacobi_equal_to_cutoff(a, a, 3)


def test_equality_detects_mismatch():
    a = S({(0, 0, 0): 1, (1, 0, 0): 1}, cutoff=1)
    b = S({(0, 0, 0): 1, (1, 0, 0): 2}, cutoff=1)
    assert not jacobi_equal_to_cutoff(a, b, 1)


def test_equality_ignores_terms_beyond_window():
    a = S({(0, 0, 0): 1, (1, 0, 0): 1}, cutoff=3)
    b = S({(0, 0, 0): 1, (1, 0, 0): 1, (3, 0, 0): 5}, cutoff=3)
    assert jacobi_equal_to_cutoff(a, b, 2)
    assert not jacobi_equal_to_cutoff(a, b, 3)


def test_window_beyond_cutoff_rejected():
    a = S({(0, 0, 0): 1}, cutoff=1)
    with pytest.raises(ValueError):
        jacobi_equal_to_cutoff(a, a, 2)


def test_addition_shrinks_to_reliable_window():
    # a known to q<=2 from 0, b known to q<=2 from 1: sum reliable to q<=2
    a = S({(0, 0, 0): 1, (2, 0, 0): 7}, cutoff=2)
    b = S({(1, 0, 0): 1, (3, 0, 0): 9}, cutoff=2)
    got = a + b
    assert got.coefficient(2, 0, 0) == 7
    assert got.coefficient(3, 0, 0) == 0  # beyond the shared window
    assert got.min_q() == 0 and got.q_cutoff == 2


def _random_series(rng: Random, cutoff) -> JacobiSeries:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        q = Fraction(rng.randint(0, 4), rng.choice((1, 2)))
        z = Fraction(rng.randint(-3, 3))
        y = Fraction(rng.randint(-1, 1))
        terms[(q, z, y)] = rng.randint(-3, 3)
    return JacobiSeries(terms, cutoff)


def test_mul_commutative_and_associative_up_to_window():
    rng = Random(7)
    for _ in range(60):
        cut = Fraction(rng.randint(2, 5))
        a, b, c = (_random_series(rng, cut) for _ in range(3))
        ab = jacobi_mul(a, b)
        assert ab == jacobi_mul(b, a)
        left = jacobi_mul(ab, c)
        right = jacobi_mul(a, jacobi_mul(b, c))
        window = min(w for w in (left.q_cutoff, right.q_cutoff) if w is not None)
        assert jacobi_equal_to_cutoff(left, right, window)


def test_restrict_z_window():
    a = S({(0, -2, 0): 1, (0, 0, 0): 2, (0, 3, 0): 4})
    got = a.restrict_z(-1, 3)
    assert got.terms == {
        (Fraction(0), Fraction(0), Fraction(0)): 2,
        (Fraction(0), Fraction(3), Fraction(0)): 4,
    }
    with pytest.raises(ValueError):
        a.restrict_z(2, 1)

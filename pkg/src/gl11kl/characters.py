"""Jacobi-variable characters: Verma product formula and derived series.

The Verma character is q^Delta y^ehat z^n times a universal three-variable
product that does not depend on the label, so the product expansion is
computed once per truncation depth and cached.  Atypical ell = 0 characters
are alternating telescoping sums of Verma characters; the induced-module
character identity is verified by expanding both of its sides over a window
on which both are complete.

The z-normalization follows the product formula as printed: the q^0 slice of
a Verma character is z^n (1 + 1/z).  The internal matrix conventions place
the two top N-eigenvalues at n +- 1/2; the two normalizations differ by a
global factor z^(1/2) and are never mixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotDeterminedError
from .labels import AtypicalA, ModuleLabel, TypicalV, VermaV0, ehat
from .series import JacobiSeries, jacobi_equal_to_cutoff, jacobi_mul


def _f(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def conformal_weight(n, ehat) -> Fraction:
    """Delta = ehat * (n + ehat/2)."""
    n, ehat = _f(n), _f(ehat)
    return ehat * (n + ehat / 2)


@dataclass(frozen=True)
class CharacterRequest:
    """A validated request for the expansion of one label's character."""

    label: ModuleLabel
    q_cutoff: Fraction
    z_window: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "q_cutoff", _f(self.q_cutoff))
        if self.q_cutoff < 0:
            raise ValueError("q_cutoff must be nonnegative")
        if self.z_window is not None:
            lo, hi = self.z_window
            object.__setattr__(self, "z_window", (_f(lo), _f(hi)))
            if _f(lo) > _f(hi):
                raise ValueError("empty z window")

    def expand(self) -> JacobiSeries:
        label = self.label
        if isinstance(label, (TypicalV, VermaV0)):
            return char_verma(label.n, ehat(label), self.q_cutoff)
        if isinstance(label, AtypicalA) and label.ell == 0:
            if self.z_window is None:
                raise ValueError("atypical characters need a z window")
            return char_atypical0(label.n, self.q_cutoff, self.z_window)
        raise NotDeterminedError(
            "characters are available for Verma labels and atypicals at ell = 0"
        )


@lru_cache(maxsize=None)
def _universal_product(depth: int) -> JacobiSeries:
    """Expansion of prod_{i>=0} (1+z q^{i+1})(1+q^i/z) / (1-q^{i+1})^2.

    Exact integer coefficients up to and including q^depth; exponents are
    integers (stored as Fractions).  Factors with no support below q^depth
    are skipped.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    cutoff = Fraction(depth)
    out = JacobiSeries.monomial(1, 0, 0, 0, q_cutoff=cutoff)
    for i in range(0, depth + 1):
        if i >= 1:
            out = jacobi_mul(
                out, JacobiSeries({(0, 0, 0): 1, (Fraction(i), Fraction(-1), 0): 1}, cutoff)
            )
        if i + 1 <= depth:
            out = jacobi_mul(
                out, JacobiSeries({(0, 0, 0): 1, (Fraction(i + 1), Fraction(1), 0): 1}, cutoff)
            )
            geom = {
                (Fraction(m * (i + 1)), Fraction(0), Fraction(0)): m + 1
                for m in range(0, depth // (i + 1) + 1)
            }
            out = jacobi_mul(out, JacobiSeries(geom, cutoff))
    # the i = 0 factor (1 + 1/z) has no q-power; apply it once
    out = jacobi_mul(out, JacobiSeries({(0, 0, 0): 1, (0, Fraction(-1), 0): 1}, cutoff))
    return out


def char_verma(n, ehat, q_cutoff) -> JacobiSeries:
    """Character of the Verma at (n, ehat), truncated q_cutoff above Delta.

    Valid for every ehat: this is the Verma character whether or not the
    module is irreducible.
    """
    n, ehat, q_cutoff = _f(n), _f(ehat), _f(q_cutoff)
    if q_cutoff < 0:
        raise ValueError("q_cutoff must be nonnegative")
    base = _universal_product(int(q_cutoff))
    dq = conformal_weight(n, ehat)
    shifted = JacobiSeries(
        {(q + dq, z + n, y + ehat): c for (q, z, y), c in base.terms.items()},
        q_cutoff,
    )
    return shifted


def char_atypical0(n, q_cutoff, z_window) -> JacobiSeries:
    """Character of the atypical simple at (n, 0) on a finite z-window.

    Computed as the alternating sum over m >= 0 of the Verma characters at
    (n - 1/2 - m, 0); each (q, z) coefficient receives finitely many
    contributions because the q^j slice of the Verma character has relative
    z-degrees within [-j - 1, j].  Terms are restricted to z_window at the
    end, so the window must cover every exponent the caller needs.
    """
    n, q_cutoff = _f(n), _f(q_cutoff)
    z_lo, z_hi = (_f(z_window[0]), _f(z_window[1]))
    if z_lo > z_hi:
        raise ValueError("empty z window")
    acc: dict = {}
    m = 0
    while True:
        base = n - Fraction(1, 2) - m
        # highest z-exponent this summand can reach within the q window
        if base + q_cutoff < z_lo:
            break
        sign = 1 if m % 2 == 0 else -1
        for key, coeff in char_verma(base, 0, q_cutoff).terms.items():
            val = acc.get(key, 0) + sign * coeff
            if val:
                acc[key] = val
            else:
                acc.pop(key, None)
        m += 1
    series = JacobiSeries(acc, q_cutoff)
    return series.restrict_z(z_lo, z_hi)


def char_induced_typical(n, ehat, m_range: int, q_cutoff) -> tuple[JacobiSeries, JacobiSeries]:
    """Both sides of the induced-module character identity, truncated alike.

    Left side: the sum over |m| <= m_range of the Verma characters at
    (n + m, ehat - 2m).  Right side: the Verma character at (n, ehat) times
    the finite sum of q^{-m(2n+ehat)} y^{-2m} z^m.  Uses the level-1
    normalization (ehat = e).  Both sides are complete on a window of size
    q_cutoff above the base weight; the summand offsets are absorbed by
    expanding m_range*|2n+ehat| deeper.
    """
    n, ehat, q_cutoff = _f(n), _f(ehat), _f(q_cutoff)
    if m_range < 1:
        raise ValueError("m_range must be at least 1")
    shift = 2 * n + ehat
    depth = q_cutoff + m_range * abs(shift)
    lhs = JacobiSeries.zero(depth)
    for m in range(-m_range, m_range + 1):
        lhs = lhs + char_verma(n + m, ehat - 2 * m, depth)
    comb = JacobiSeries(
        {
            (-m * shift, Fraction(m), Fraction(-2 * m)): 1
            for m in range(-m_range, m_range + 1)
        },
        None,
    )
    rhs = jacobi_mul(char_verma(n, ehat, depth), comb)
    return lhs, rhs


def induced_window(n, ehat, m_range: int, q_cutoff) -> Fraction:
    """Comparison window on which both sides of the identity are complete."""
    shift = 2 * _f(n) + _f(ehat)
    return _f(q_cutoff) + m_range * abs(shift)


def verify_induced_identity(n, ehat, m_range: int, q_cutoff) -> bool:
    """Exact coefficientwise equality of the two sides on the shared window."""
    lhs, rhs = char_induced_typical(n, ehat, m_range, q_cutoff)
    return jacobi_equal_to_cutoff(lhs, rhs, induced_window(n, ehat, m_range, q_cutoff))

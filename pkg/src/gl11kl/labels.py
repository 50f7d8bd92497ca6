"""Names and exact invariants of the simple, Verma and projective modules.

Labels carry the pair (n, e/k): the level enters every formula only through
the ratio ehat = e/k, so k itself is display metadata.  Atypical directions
are indexed by the integer ell with ehat = ell; typical labels require a
non-integral ehat.  ``parity_flip`` marks the parity-reversed partner; it is
cosmetic except for contragredients of typical labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotDeterminedError


def _f(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _int(v) -> int:
    f = _f(v)
    if f.denominator != 1:
        raise ValueError(f"expected an integer, got {f}")
    return int(f)


class ModuleLabel:
    """Base class of the label tagged union."""

    __slots__ = ()


@dataclass(frozen=True)
class TypicalV(ModuleLabel):
    """Simple typical Verma module with ehat = e/k not an integer."""

    n: Fraction
    ehat: Fraction
    parity_flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "n", _f(self.n))
        object.__setattr__(self, "ehat", _f(self.ehat))
        if self.ehat.denominator == 1:
            raise ValueError("typical label requires ehat not an integer")


@dataclass(frozen=True)
class AtypicalA(ModuleLabel):
    """Simple atypical module at ehat = ell, an integer."""

    n: Fraction
    ell: int
    parity_flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "n", _f(self.n))
        object.__setattr__(self, "ell", _int(self.ell))


@dataclass(frozen=True)
class VermaV0(ModuleLabel):
    """Reducible (length-2) Verma module at ehat = ell, an integer."""

    n: Fraction
    ell: int
    parity_flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "n", _f(self.n))
        object.__setattr__(self, "ell", _int(self.ell))


@dataclass(frozen=True)
class ProjectiveP(ModuleLabel):
    """Length-4 projective cover of the atypical simple at (n, ell)."""

    n: Fraction
    ell: int
    parity_flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "n", _f(self.n))
        object.__setattr__(self, "ell", _int(self.ell))


def is_simple(label: ModuleLabel) -> bool:
    return isinstance(label, (TypicalV, AtypicalA))


def strip_parity(label: ModuleLabel) -> ModuleLabel:
    if not label.parity_flip:
        return label
    return type(label)(label.n, _ehat_or_ell(label), parity_flip=False)


def _ehat_or_ell(label: ModuleLabel):
    return label.ehat if isinstance(label, TypicalV) else label.ell


def ehat(label: ModuleLabel) -> Fraction:
    """The ratio e/k of the label, as an exact rational."""
    return _f(_ehat_or_ell(label))


# ---------------------------------------------------------------------------
# scalar invariants
# ---------------------------------------------------------------------------


def epsilon(ell: int) -> Fraction:
    """The half-integer step function: 1/2, 0, -1/2 for ell >, =, < 0."""
    if ell > 0:
        return Fraction(1, 2)
    if ell < 0:
        return Fraction(-1, 2)
    return Fraction(0)


def epsilon2(ell: int, ell2: int) -> Fraction:
    """epsilon(l) + epsilon(l') - epsilon(l + l')."""
    return epsilon(ell) + epsilon(ell2) - epsilon(ell + ell2)


def delta(label: ModuleLabel) -> Fraction:
    """Lowest conformal weight: ehat*(n + ehat/2), minimized over constituents.

    For a projective label with ell != 0 the minimum over its two Verma
    constituents is Delta_{n - 2*eps(ell), ell}; at ell = 0 the weight is 0.
    """
    e = ehat(label)
    if isinstance(label, ProjectiveP) and label.ell != 0:
        n_min = label.n - 2 * epsilon(label.ell)
        return e * (n_min + e / 2)
    return e * (label.n + e / 2)


def top_dim(label: ModuleLabel) -> int:
    """Dimension of the lowest conformal weight space."""
    if isinstance(label, AtypicalA):
        return 1 if label.ell == 0 else 2
    if isinstance(label, (TypicalV, VermaV0)):
        return 2
    if isinstance(label, ProjectiveP):
        return 4 if label.ell == 0 else 2
    raise TypeError(f"unknown label {label!r}")


@dataclass(frozen=True)
class WeightData:
    """Scalar invariants of a label: lowest weight, step scalar, top dimension."""

    delta: Fraction
    epsilon: Fraction
    top_dim: int

    def __post_init__(self):
        if self.epsilon not in (Fraction(-1, 2), Fraction(0), Fraction(1, 2)):
            raise ValueError("epsilon must be one of -1/2, 0, 1/2")
        if self.top_dim < 1:
            raise ValueError("top_dim must be positive")


def weight_data(label: ModuleLabel) -> WeightData:
    """Bundle (delta, epsilon, top_dim); typicals sit off the integer lattice
    and carry epsilon = 0."""
    ell = 0 if isinstance(label, TypicalV) else label.ell
    return WeightData(delta=delta(label), epsilon=epsilon(ell), top_dim=top_dim(label))


# ---------------------------------------------------------------------------
# functors on labels
# ---------------------------------------------------------------------------


def spectral_flow(label: ModuleLabel, ell: int) -> ModuleLabel:
    """Flow a label by ell units along the atypical direction.

    Supported sources are the ehat = 0 labels; positive flows of atypical and
    projective labels compose with the conjugation automorphism, matching the
    definition of the flowed projective covers.  A reducible Verma away from
    ehat = 0 may only be flowed straight back to ehat = 0 (the inverse flow);
    anything else is rejected as undetermined.
    """
    ell = _int(ell)
    if ell == 0:
        return label
    half = Fraction(1, 2)
    if isinstance(label, VermaV0):
        if label.ell == 0:
            return VermaV0(label.n - ell, ell, label.parity_flip)
        if ell == -label.ell:
            return VermaV0(label.n + label.ell, 0, label.parity_flip)
        raise NotDeterminedError("spectral flow from ehat != 0 is only defined back to ehat = 0")
    if isinstance(label, AtypicalA):
        if label.ell != 0:
            raise NotDeterminedError("spectral flow of an atypical label requires ehat = 0")
        if ell < 0:
            return AtypicalA(label.n - ell - half, ell, label.parity_flip)
        return AtypicalA(-label.n - ell + half, ell, label.parity_flip)
    if isinstance(label, ProjectiveP):
        if label.ell != 0:
            raise NotDeterminedError("spectral flow of a projective label requires ehat = 0")
        if ell < 0:
            return ProjectiveP(label.n - ell - half, ell, label.parity_flip)
        return ProjectiveP(-label.n - ell + half, ell, label.parity_flip)
    raise NotDeterminedError("spectral flow of a typical label is not defined here")


def contragredient(label: ModuleLabel) -> ModuleLabel:
    """Graded dual: (n, e) -> (-n, -e); typical duals flip parity."""
    if isinstance(label, AtypicalA):
        return AtypicalA(-label.n, -label.ell, label.parity_flip)
    if isinstance(label, TypicalV):
        return TypicalV(-label.n, -label.ehat, not label.parity_flip)
    if isinstance(label, ProjectiveP) and label.ell == 0:
        return ProjectiveP(-label.n, 0, label.parity_flip)
    raise NotDeterminedError(
        "contragredient is only defined for simples and ell = 0 projectives"
    )


def projective_cover(label: ModuleLabel) -> ModuleLabel:
    """Typicals cover themselves; the atypical at (n, ell) is covered at (n, ell)."""
    if isinstance(label, TypicalV):
        return label
    if isinstance(label, AtypicalA):
        return ProjectiveP(label.n, label.ell, label.parity_flip)
    raise ValueError("projective cover is defined for simple labels only")


# ---------------------------------------------------------------------------
# formal sums and composition series
# ---------------------------------------------------------------------------


class FormalSum:
    """Multiset of labels with positive integer multiplicities."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict[ModuleLabel, int] = {}
        if isinstance(terms, ModuleLabel):
            acc[terms] = 1
        elif isinstance(terms, FormalSum):
            acc = dict(terms._terms)
        elif terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for entry in items:
                if isinstance(entry, ModuleLabel):
                    label, mult = entry, 1
                else:
                    label, mult = entry
                mult = int(mult)
                if mult < 0:
                    raise ValueError("multiplicities must be nonnegative")
                if mult:
                    acc[label] = acc.get(label, 0) + mult
        self._terms = acc

    def items(self):
        return self._terms.items()

    def labels(self):
        return self._terms.keys()

    def multiplicity(self, label: ModuleLabel) -> int:
        return self._terms.get(label, 0)

    def total(self) -> int:
        return sum(self._terms.values())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def single(self) -> ModuleLabel:
        """The unique label of a singleton sum; raises otherwise."""
        if len(self._terms) != 1:
            raise ValueError("formal sum is not a single label")
        (label, mult), = self._terms.items()
        if mult != 1:
            raise ValueError("formal sum is not multiplicity-free")
        return label

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self._terms)
        for lbl, m in other._terms.items():
            out[lbl] = out.get(lbl, 0) + m
        return FormalSum(out)

    def __rmul__(self, s: int) -> "FormalSum":
        s = int(s)
        if s < 0:
            raise ValueError("scaling must be nonnegative")
        if s == 0:
            return FormalSum()
        return FormalSum({lbl: m * s for lbl, m in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: label_sort_key(kv[0]))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            (f"{m}*" if m != 1 else "") + render_label(lbl) for lbl, m in self.sorted_items()
        )


def k_decompose(label: ModuleLabel) -> FormalSum:
    """Composition factors with multiplicity, as a sum of simple labels.

    Simples map to themselves.  A reducible Verma has two atypical factors;
    a projective label has the atypical at its own (n, ell) twice plus the
    two neighbours n +- 1.
    """
    label = strip_parity(label)
    if is_simple(label):
        return FormalSum(label)
    if isinstance(label, VermaV0):
        if label.ell == 0:
            half = Fraction(1, 2)
            return FormalSum([AtypicalA(label.n - half, 0), AtypicalA(label.n + half, 0)])
        shift = 1 if label.ell > 0 else -1
        return FormalSum(
            [AtypicalA(label.n, label.ell), AtypicalA(label.n + shift, label.ell)]
        )
    if isinstance(label, ProjectiveP):
        return FormalSum(
            [
                (AtypicalA(label.n, label.ell), 2),
                (AtypicalA(label.n + 1, label.ell), 1),
                (AtypicalA(label.n - 1, label.ell), 1),
            ]
        )
    raise TypeError(f"unknown label {label!r}")


def k_decompose_sum(s: FormalSum) -> FormalSum:
    """Linear extension of :func:`k_decompose` to formal sums."""
    out = FormalSum()
    for label, mult in s.items():
        out = out + mult * k_decompose(label)
    return out


# ---------------------------------------------------------------------------
# rendering and parsing
# ---------------------------------------------------------------------------

_KIND_NAMES = {TypicalV: "V", AtypicalA: "A", ProjectiveP: "P", VermaV0: "Verma0"}
_KIND_ORDER = {AtypicalA: 0, TypicalV: 1, VermaV0: 2, ProjectiveP: 3}


def render_label(label: ModuleLabel) -> str:
    """Canonical text form, e.g. ``V(1/4;1/2)``; parity flips prefix ``Pi``."""
    kind = _KIND_NAMES[type(label)]
    body = f"{kind}({label.n};{_ehat_or_ell(label)})"
    return ("Pi" + body) if label.parity_flip else body


def label_sort_key(label: ModuleLabel):
    return (_KIND_ORDER[type(label)], ehat(label), label.n, label.parity_flip)


_LABEL_RE = re.compile(
    r"^\s*(Verma0|V|A|P)\s*\(\s*(-?\d+(?:/\d+)?)\s*;\s*(-?\d+(?:/\d+)?)\s*\)\s*$"
)


def parse_label(text: str) -> ModuleLabel:
    """Parse ``KIND(n;ehat-or-ell)`` with KIND in V/A/P/Verma0 (case-insensitive).

    Typicality is enforced: ``V`` with an integer second argument is rejected,
    as are A/P/Verma0 with a non-integer one.
    """
    normalized = text.strip()
    if normalized[:1] in "vap" and not normalized.startswith("Verma0"):
        normalized = normalized[:1].upper() + normalized[1:]
    m = _LABEL_RE.match(normalized)
    if not m:
        raise ValueError(f"cannot parse label {text!r}")
    kind, n_text, second_text = m.groups()
    n = Fraction(n_text)
    second = Fraction(second_text)
    if kind == "V":
        if second.denominator == 1:
            raise ValueError(f"{text!r}: integer ehat is not typical; use A, P or Verma0")
        return TypicalV(n, second)
    if second.denominator != 1:
        raise ValueError(f"{text!r}: {kind} labels need an integer ell")
    ell = int(second)
    if kind == "A":
        return AtypicalA(n, ell)
    if kind == "P":
        return ProjectiveP(n, ell)
    return VermaV0(n, ell)

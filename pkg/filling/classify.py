"""
Which pairs of filling slopes on the magic manifold give knot complements in
the 3-sphere, and of which type.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from farey import INFINITY, Slope


class NotAKnotFilling(ValueError):
    """Raised when a slope pair matches none of the knot types."""


class ExceptionalPrimary(ValueError):
    """Raised when a family is asked for with an exceptional primary slope."""


EXCEPTIONAL = frozenset({INFINITY, Slope(-3, 1), Slope(-2, 1), Slope(-1, 1), Slope(0, 1)})


class KnotKind(Enum):
    A = 'A'
    B = 'B'
    C = 'C'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class KnotType:
    """The type of a knot filling. `k` is set for types B and C."""
    kind: KnotKind
    k: Optional[int] = None
    primary: Optional[Slope] = None
    secondary: Optional[Slope] = None

    def __str__(self) -> str:
        return f"Type {self.kind}" if self.k is None else f"Type {self.kind} (k = {self.k})"


def exceptional(s: Slope) -> bool:
    return s in EXCEPTIONAL


def _parameter(primary: Slope, shift: int) -> Optional[int]:
    """k with primary = -shift + 1/k, or None."""
    denominator = primary.p + shift * primary.q
    if denominator == 0 or primary.q % denominator:
        return None
    return primary.q // denominator


def type_bc_parameter(primary: Slope, kind: KnotKind) -> Optional[int]:
    """k for type B (primary = -2 + 1/k) or type C (primary = -3 + 1/k)."""
    if primary.is_infinite or kind is KnotKind.A:
        return None
    return _parameter(primary, 2 if kind is KnotKind.B else 3)


def identity_value(kind: KnotKind, primary: Slope, secondary: Slope,
                   k: Optional[int] = None) -> int:
    """The linear form that must be +-1 for the pair to be a knot of this type."""
    r, s, t, u = primary.p, primary.q, secondary.p, secondary.q
    if kind is KnotKind.A:
        return t * r - u * s
    if kind is KnotKind.B:
        return (3 * k - 2) * t + (6 * k - 1) * u
    return (2 * k - 1) * t + (6 * k - 1) * u


def _match(primary: Slope, secondary: Slope) -> Optional[KnotType]:
    if abs(identity_value(KnotKind.A, primary, secondary)) == 1:
        return KnotType(KnotKind.A, None, primary, secondary)
    for kind in (KnotKind.B, KnotKind.C):
        k = type_bc_parameter(primary, kind)
        if k is not None and abs(identity_value(kind, primary, secondary, k)) == 1:
            return KnotType(kind, k, primary, secondary)
    return None


def classify_pair(rs: Slope, tu: Slope) -> Optional[KnotType]:
    """
    The knot type of the filling (rs, tu), trying rs as the primary slope
    first, or None if neither order is a knot filling.
    """
    if exceptional(rs) or exceptional(tu):
        return None
    return _match(rs, tu) or _match(tu, rs)


def seed_class(rs: Slope) -> int:
    """
    The five-way split of primary slopes used to pick a seed: non-integer in
    (-2, 0) is 1, non-integer below -2 is 2, non-integer above 0 is 3,
    positive integer is 4, negative integer is 5.
    """
    if exceptional(rs):
        raise ExceptionalPrimary(f"{rs} is exceptional")
    v = rs.value
    if rs.is_integer:
        return 4 if v > 0 else 5
    if -2 < v < 0:
        return 1
    return 2 if v < -2 else 3


_EXCEPTIONAL_LABELS = {
    INFINITY: "T(0,1)",
    Slope(0, 1): "T(2,3)",
    Slope(-1, 1): "torus",
    Slope(-2, 1): "torus",
    Slope(-3, 1): "satellite",
}


def exceptional_label(secondary: Slope) -> Optional[str]:
    """What an exceptional secondary slope gives instead of a hyperbolic knot."""
    return _EXCEPTIONAL_LABELS.get(secondary)

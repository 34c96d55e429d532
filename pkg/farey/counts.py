"""
Boundary slope classes and the closed-form tetrahedron counts for
layered solid tori and layered chains.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .continued_fraction import norm
from .paths import FareyTriple, farey_path
from .slope import INFINITY, InfiniteSlope, Slope


class UnrealizableSlope(ValueError):
    """Raised when a layered solid torus or chain cannot realise the requested slope."""


class WrongBoundaryKind(ValueError):
    """Raised when a one-vertex operation gets a permissible boundary or vice versa."""


@dataclass(frozen=True)
class PermissibleData:
    """Slope data {alpha, beta; sign} of a two-vertex permissible boundary."""
    alpha: Slope
    beta: Slope
    sign: int

    def pure_fold_vector(self) -> Tuple[int, int]:
        """Slope killed by closing the chain with no layered tetrahedra."""
        return (self.beta.p + self.sign * self.alpha.p,
                self.beta.q + self.sign * self.alpha.q)

    def shift_for(self, s: Slope) -> int:
        """
        Signed number of layerings j with s = +-(K0 + j*alpha), where K0 is the
        pure fold vector.

        Raises:
            UnrealizableSlope: If s is not of that form.
        """
        k1, k2 = self.pure_fold_vector()
        a1, a2 = self.alpha.p, self.alpha.q
        det = a1 * k2 - a2 * k1
        if abs(det) != 1:
            raise UnrealizableSlope(f"degenerate chain data {self}")
        # Coordinates of (p, q) in the basis alpha, K0.
        x = (s.p * k2 - s.q * k1) * det
        y = (a1 * s.q - a2 * s.p) * det
        if abs(y) != 1:
            raise UnrealizableSlope(
                f"slope {s} is not realisable by a layered chain on {self}")
        return x * y


class BoundaryClass(Enum):
    """The six kinds of boundary slope data carried by the seed triangulations."""
    P = 'P'
    Q = 'Q'
    R = 'R'
    RP = 'Rp'
    UHAT = 'Uhat'
    VHAT = 'Vhat'

    @classmethod
    def from_tag(cls, tag: str) -> 'BoundaryClass':
        """Look up a class by tag; accepts the short spellings Uh and Vh."""
        key = tag.strip().lower()
        key = {'uh': 'uhat', 'vh': 'vhat', 'rprime': 'rp'}.get(key, key)
        for member in cls:
            if member.value.lower() == key:
                return member
        raise ValueError(f"unknown boundary class '{tag}'")

    @property
    def is_permissible(self) -> bool:
        return self in (BoundaryClass.UHAT, BoundaryClass.VHAT)

    @property
    def triple(self) -> FareyTriple:
        if self.is_permissible:
            raise WrongBoundaryKind(f"{self.value} is a permissible boundary")
        return _TRIPLES[self]

    @property
    def permissible(self) -> PermissibleData:
        if not self.is_permissible:
            raise WrongBoundaryKind(f"{self.value} is a one-vertex boundary")
        return _PERMISSIBLE[self]

    def __str__(self) -> str:
        return self.value


_TRIPLES = {
    BoundaryClass.P: FareyTriple.of(INFINITY, Slope(-1, 1), Slope(-2, 1)),
    BoundaryClass.Q: FareyTriple.of(INFINITY, Slope(-2, 1), Slope(-3, 1)),
    BoundaryClass.R: FareyTriple.of(INFINITY, Slope(1, 1), Slope(0, 1)),
    BoundaryClass.RP: FareyTriple.of(INFINITY, Slope(-1, 1), Slope(0, 1)),
}

_PERMISSIBLE = {
    BoundaryClass.UHAT: PermissibleData(INFINITY, Slope(-5, 1), +1),
    BoundaryClass.VHAT: PermissibleData(INFINITY, Slope(1, 1), -1),
}

# Offsets added to the norm, by interval (-inf,-2), (-2,-1), (-1,0), (0,inf).
_LST_OFFSETS = {
    BoundaryClass.R: (-1, -1, -1, -2),
    BoundaryClass.RP: (-2, -2, -2, -1),
    BoundaryClass.P: (-3, -3, -1, 0),
    BoundaryClass.Q: (-4, -2, 0, 1),
}


INTERVAL_LABELS = ('(-inf,-2)', '(-2,-1)', '(-1,0)', '(0,inf)')


def _interval(s: Slope) -> Optional[int]:
    v = s.value
    if v < -2:
        return 0
    if -2 < v < -1:
        return 1
    if -1 < v < 0:
        return 2
    if v > 0:
        return 3
    return None


def lst_tet_count(b: BoundaryClass, s: Slope) -> int:
    """
    Tetrahedra needed by a layered solid torus on boundary `b` to fill slope `s`.

    Raises:
        InfiniteSlope: If s is 1/0.
        WrongBoundaryKind: If b is a permissible boundary.
    """
    if s.is_infinite:
        raise InfiniteSlope("1/0 cannot be filled by a layered solid torus here")
    triple = b.triple
    if s in triple:
        return 0
    index = _interval(s)
    if index is None:
        return max(len(farey_path(triple, s)) - 1, 0)
    return norm(s) + _LST_OFFSETS[b][index]


def chain_tet_count(b: BoundaryClass, s: Slope) -> int:
    """
    Tetrahedra layered onto the chain of a permissible boundary to fill `s`.

    Raises:
        UnrealizableSlope: If s is not an integer slope.
    """
    data = b.permissible
    if not s.is_integer:
        raise UnrealizableSlope(
            f"layered chains only realise integer slopes, got {s}")
    return abs(data.shift_for(s))


def interval_of(s: Slope) -> Optional[str]:
    """Label of the open interval holding s, or None at -2, -1, 0 and 1/0."""
    if s.is_infinite:
        return None
    index = _interval(s)
    return None if index is None else INTERVAL_LABELS[index]

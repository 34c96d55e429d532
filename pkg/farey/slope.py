"""
Slopes on a torus cusp, stored as reduced fractions with infinity as 1/0.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple


class ZeroSlopePair(ValueError):
    """Raised when both coordinates of a slope are zero."""


class InfiniteSlope(ValueError):
    """Raised when an operation needs a finite slope and receives 1/0."""


class SlopeParseError(ValueError):
    """Raised when a slope string cannot be parsed."""


@dataclass(frozen=True, order=True)
class Slope:
    """A slope p/q in canonical form: reduced, q >= 0, infinity is 1/0."""
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise ZeroSlopePair("slope (0, 0) is undefined")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    @classmethod
    def parse(cls, text: str) -> 'Slope':
        """Parse "p/q", "p" or "inf"."""
        raw = text.strip()
        if raw.lower() in ('inf', 'infinity', '∞'):
            return cls(1, 0)
        try:
            if '/' in raw:
                num, den = raw.split('/', 1)
                return cls(int(num), int(den))
            return cls(int(raw), 1)
        except ValueError as e:
            if isinstance(e, ZeroSlopePair):
                raise
            raise SlopeParseError(f"cannot parse slope '{text}'") from None

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_integer(self) -> bool:
        return self.q == 1

    @property
    def value(self) -> Fraction:
        """Exact value of a finite slope."""
        if self.is_infinite:
            raise InfiniteSlope("1/0 has no finite value")
        return Fraction(self.p, self.q)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def order_key(self) -> Tuple[int, Fraction]:
        """Key placing the finite slopes in numeric order with 1/0 last."""
        if self.is_infinite:
            return (1, Fraction(0))
        return (0, Fraction(self.p, self.q))

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


INFINITY = Slope(1, 0)


def make_slope(p: int, q: int) -> Slope:
    """Build the canonical slope for the pair (p, q)."""
    return Slope(p, q)

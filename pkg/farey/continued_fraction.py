"""
Positive continued fractions and the norm of a slope.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .slope import InfiniteSlope, Slope


@dataclass(frozen=True)
class PositiveCF:
    """The continued fraction [a0; a1, ..., am] of a non-negative rational."""
    coefficients: Tuple[int, ...]

    def evaluate(self) -> Fraction:
        """Evaluate the nested fraction from the innermost term outwards."""
        value = Fraction(self.coefficients[-1])
        for a in reversed(self.coefficients[:-1]):
            value = a + 1 / value
        return value

    @property
    def norm(self) -> int:
        return sum(abs(a) for a in self.coefficients)

    def is_canonical(self) -> bool:
        """Check a0 >= 0, middle terms >= 1 and a last term >= 2 when m >= 1."""
        a = self.coefficients
        if not a or a[0] < 0:
            return False
        if any(x < 1 for x in a[1:]):
            return False
        return len(a) == 1 or a[-1] >= 2

    def __str__(self) -> str:
        head, tail = self.coefficients[0], self.coefficients[1:]
        if not tail:
            return f"[{head}]"
        return f"[{head};{','.join(str(a) for a in tail)}]"


def positive_cf(s: Slope) -> PositiveCF:
    """Continued fraction of |p/q| by the Euclidean algorithm."""
    if s.is_infinite:
        raise InfiniteSlope("the continued fraction of 1/0 is undefined")
    p, q = abs(s.p), s.q
    coefficients: List[int] = []
    while q:
        coefficients.append(p // q)
        p, q = q, p % q
    return PositiveCF(tuple(coefficients))


def norm(s: Slope) -> int:
    """Sum of the positive continued fraction coefficients of |p/q|."""
    return positive_cf(s).norm


def convergents(cf: PositiveCF) -> List[Tuple[int, int]]:
    """
    Convergents h_i/k_i of a continued fraction.

    Returns:
        List of (h_i, k_i) pairs, the last one equal to the full value.
    """
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    result = []
    for a in cf.coefficients:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        result.append((h, k))
    return result

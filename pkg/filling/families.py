"""
Families of knot fillings: the secondary slopes that pair with a fixed
primary slope, indexed by an integer n.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from farey import Slope, convergents, positive_cf

from .classify import (ExceptionalPrimary, KnotKind, NotAKnotFilling,
                       exceptional, type_bc_parameter)
from .planner import plan_filling


class UnknownFamily(LookupError):
    """Raised when no family has the requested primary slope and type."""


Generator = Tuple[int, int, int, int]


def type_a_generator(primary: Slope) -> Generator:
    """
    (t0, t1, u0, u1) with t_n = t0 + t1*n and u_n = u0 + u1*n, indexed the way
    the family tables are. The offset (t0, u0) comes from the penultimate
    convergent of |r|/s.

    Raises:
        ExceptionalPrimary: If primary is exceptional.
    """
    if exceptional(primary):
        raise ExceptionalPrimary(f"{primary} is exceptional")
    r, s = primary.p, primary.q
    sign = 1 if r > 0 else -1
    if (r, s) == (1, 1):
        s0, r0 = 0, 1
    elif s == 1:
        s0, r0 = 1, r - sign
    else:
        s0 = s - convergents(positive_cf(primary))[-2][1]
        options = [(r * s0 - e) // s for e in (1, -1) if (r * s0 - e) % s == 0]
        r0 = max(options, key=abs)
    if r < 0:
        return (-s0, -s, -r0, -r)
    return (s0, s, r0, r)


def _bc_generator(kind: KnotKind, primary: Slope) -> Generator:
    k = type_bc_parameter(primary, kind)
    if k is None:
        raise NotAKnotFilling(f"{primary} is not a type {kind} primary slope")
    if kind is KnotKind.B:
        return (-4 * k, -(6 * k - 1), 2 * k - 1, 3 * k - 2)
    return (3 * k - 2, 6 * k - 1, 1 - k, -(2 * k - 1))


def generator_for(kind: KnotKind, primary: Slope) -> Generator:
    """
    The closed-form generator of a family, before any table reindexing.

    Raises:
        ExceptionalPrimary: If primary is exceptional.
        NotAKnotFilling: If primary has no type B or C parameter.
    """
    if exceptional(primary):
        raise ExceptionalPrimary(f"{primary} is exceptional")
    if kind is KnotKind.A:
        return type_a_generator(primary)
    return _bc_generator(kind, primary)


def evaluate(generator: Generator, n: int) -> Slope:
    """(t0 + t1*n) / (u0 + u1*n), canonicalised."""
    t0, t1, u0, u1 = generator
    return Slope(t0 + t1 * n, u0 + u1 * n)


def secondary_slope(kind: KnotKind, primary: Slope, n: int) -> Slope:
    """
    The n-th secondary slope of the family with this primary slope and type.

    Raises:
        ExceptionalPrimary: If primary is exceptional.
        NotAKnotFilling: If primary has no type B or C parameter.
    """
    return evaluate(generator_for(kind, primary), n)


@dataclass(frozen=True)
class FamilyGenerator:
    """A family as tabulated: primary slope, type, generator and growth edges."""
    primary: Slope
    kind: KnotKind
    generator: Generator
    breadth: Optional[int] = None
    nine_edges: Optional[Tuple[int, int]] = None

    def secondary(self, n: int) -> Slope:
        return evaluate(self.generator, n)

    @property
    def edges(self) -> Tuple[int, int]:
        """Indices where each direction reaches nine tetrahedra: (-x, x-1) from the breadth."""
        if self.breadth is not None:
            return (-self.breadth, self.breadth - 1)
        if self.nine_edges is None:
            raise UnknownFamily(f"family {self} has neither a breadth nor edges")
        return self.nine_edges

    def __str__(self) -> str:
        return f"({self.primary.p},{self.primary.q})_{self.kind}"


def family_extension(family: FamilyGenerator, j: int) -> Tuple[int, int]:
    """The two indices j steps beyond the family's nine-tetrahedron edges."""
    low, high = family.edges
    return (low - j, high + j)


def predicted_total(family: FamilyGenerator, index: int) -> int:
    """
    Predicted tetrahedra for the family member at `index`.

    Raises:
        NotAKnotFilling: If the member is not a knot filling.
    """
    return plan_filling(family.primary, family.secondary(index)).total

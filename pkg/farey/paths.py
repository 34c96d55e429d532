"""
Farey neighbours, triples and paths in the dual tree of the Farey tessellation.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .slope import Slope


class NotAFareyTriple(ValueError):
    """Raised when three slopes are not pairwise Farey neighbours."""


class NotNeighbours(ValueError):
    """Raised when a mediant is requested for slopes that are not neighbours."""


def is_farey_neighbor(a: Slope, b: Slope) -> bool:
    """Two slopes are neighbours when |p q' - p' q| = 1."""
    return abs(a.p * b.q - b.p * a.q) == 1


def farey_neighbors(a: Slope, b: Slope) -> Tuple[Slope, Slope]:
    """The two slopes completing the neighbours a, b to a Farey triple."""
    if not is_farey_neighbor(a, b):
        raise NotNeighbours(f"{a} and {b} are not Farey neighbours")
    return Slope(a.p + b.p, a.q + b.q), Slope(a.p - b.p, a.q - b.q)


@dataclass(frozen=True)
class FareyTriple:
    """Three pairwise neighbouring slopes: the vertices of a Farey triangle."""
    slopes: FrozenSet[Slope]

    def __post_init__(self):
        items = list(self.slopes)
        if len(items) != 3:
            raise NotAFareyTriple("a Farey triple needs three distinct slopes")
        for i in range(3):
            for j in range(i + 1, 3):
                if not is_farey_neighbor(items[i], items[j]):
                    raise NotAFareyTriple(
                        f"{items[i]} and {items[j]} are not Farey neighbours")

    @classmethod
    def of(cls, a: Slope, b: Slope, c: Slope) -> 'FareyTriple':
        return cls(frozenset((a, b, c)))

    def __contains__(self, s: Slope) -> bool:
        return s in self.slopes

    def others(self, s: Slope) -> Tuple[Slope, Slope]:
        """The two slopes of the triple other than s, in a fixed order."""
        rest = sorted(self.slopes - {s})
        return rest[0], rest[1]

    def flipped(self, s: Slope) -> Slope:
        """The slope replacing s when the edge opposite s is crossed."""
        a, b = self.others(s)
        for candidate in farey_neighbors(a, b):
            if candidate != s:
                return candidate
        raise NotAFareyTriple(f"{s} does not close a triangle with {a}, {b}")

    def flip(self, s: Slope) -> 'FareyTriple':
        """The neighbouring triple across the edge opposite s."""
        a, b = self.others(s)
        return FareyTriple.of(a, b, self.flipped(s))

    def sorted(self) -> List[Slope]:
        return sorted(self.slopes, key=Slope.order_key)

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.sorted()) + "}"


@dataclass(frozen=True)
class FareyStep:
    """One crossing of a Farey edge: `leave` exits the triple, `enter` joins it."""
    leave: Slope
    enter: Slope


@dataclass(frozen=True)
class FareyPath:
    """A path of triangles from a start triple to one containing the target."""
    start: FareyTriple
    target: Slope
    steps: Tuple[FareyStep, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.steps)

    def triples(self) -> List[FareyTriple]:
        result = [self.start]
        for step in self.steps:
            result.append(result[-1].flip(step.leave))
        return result

    @property
    def end(self) -> FareyTriple:
        return self.triples()[-1]


def _between(t: Slope, x: Slope, y: Slope) -> bool:
    """True when t lies strictly inside the interval from min(x, y) to max(x, y), 1/0 counted as largest."""
    lo, hi = sorted((x.order_key(), y.order_key()))
    return lo < t.order_key() < hi


def _edge_towards(triple: FareyTriple, target: Slope) -> Slope:
    """The vertex whose opposite edge separates the triangle from the target."""
    for z in triple.slopes:
        x, y = triple.others(z)
        if _between(target, x, y) != _between(z, x, y):
            return z
    raise NotAFareyTriple(f"no edge of {triple} faces {target}")


def farey_path(start: FareyTriple, target: Slope) -> FareyPath:
    """
    Shortest path in the dual tree from `start` to the nearest triple containing
    `target`. The dual graph is a tree so steering across the one edge facing
    the target at every triangle yields the geodesic.
    """
    steps: List[FareyStep] = []
    current = start
    while target not in current:
        leave = _edge_towards(current, target)
        enter = current.flipped(leave)
        steps.append(FareyStep(leave, enter))
        current = current.flip(leave)
    return FareyPath(start, target, tuple(steps))


def _size(s: Slope) -> int:
    return max(abs(s.p), s.q)


def bfs_distances(start: FareyTriple, bound: int) -> Dict[Slope, int]:
    """
    Breadth-first search over the dual tree restricted to triples whose slopes
    have |p|, q <= bound.

    Returns:
        Map from every slope seen to the length of the shortest path reaching
        a triple that contains it.
    """
    bound = max(bound, max(_size(s) for s in start.slopes))
    distances: Dict[Slope, int] = {s: 0 for s in start.slopes}
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        triple, depth = queue.popleft()
        for s in triple.slopes:
            enter = triple.flipped(s)
            if _size(enter) > bound:
                continue
            nxt = triple.flip(s)
            if nxt in seen:
                continue
            seen.add(nxt)
            distances.setdefault(enter, depth + 1)
            queue.append((nxt, depth + 1))
    return distances


def bfs_path_length(start: FareyTriple, target: Slope,
                    bound: Optional[int] = None) -> int:
    """Path length to `target` found by breadth-first search."""
    if bound is None:
        bound = max(_size(target), 3)
    return bfs_distances(start, bound)[target]


def slopes_in_box(limit: int) -> Iterable[Slope]:
    """Every finite slope with |p|, q <= limit, each once."""
    seen = set()
    for q in range(1, limit + 1):
        for p in range(-limit, limit + 1):
            s = Slope(p, q)
            if _size(s) <= limit and s not in seen:
                seen.add(s)
                yield s


def farey_distance(start: FareyTriple, target: Slope) -> int:
    """Length of the shortest path to `target`, by breadth-first search."""
    if target in start:
        return 0
    return bfs_path_length(start, target)

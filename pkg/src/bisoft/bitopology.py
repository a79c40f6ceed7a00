"""Classical bitopological spaces and pairwise separation axioms.

The T0 axiom quantifies unordered pairs and accepts a separating open
from either topology in either direction; T1 and T2 quantify ordered
pairs, with the first topology responsible for the first point and the
second topology for the second point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .topology import PointTopology


@dataclass(frozen=True)
class Bitopology:
    points: tuple[str, ...]
    p: PointTopology
    q: PointTopology

    def __post_init__(self):
        if self.p.points != self.points or self.q.points != self.points:
            raise ValueError("both topologies must live on the same point set")


def pw_t0(b: Bitopology) -> bool:
    """Some open of either topology contains exactly one of each pair."""
    opens = b.p.opens + b.q.opens
    for i, j in combinations(range(len(b.points)), 2):
        x, y = 1 << i, 1 << j
        if not any(bool(o & x) != bool(o & y) for o in opens):
            return False
    return True


def pw_t1(b: Bitopology) -> bool:
    for i, j in permutations(range(len(b.points)), 2):
        x, y = 1 << i, 1 << j
        if not any(o & x and not o & y for o in b.p.opens):
            return False
        if not any(o & y and not o & x for o in b.q.opens):
            return False
    return True


def pw_t2(b: Bitopology) -> bool:
    for i, j in permutations(range(len(b.points)), 2):
        x, y = 1 << i, 1 << j
        if not any(
            u & x and v & y and not u & v for u in b.p.opens for v in b.q.opens
        ):
            return False
    return True

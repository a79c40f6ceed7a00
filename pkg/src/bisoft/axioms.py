"""Decision procedures for soft and pairwise soft separation axioms.

Membership throughout is the strong soft membership: a point belongs to a
soft set only when it lies in the subset at every parameter, and fails to
belong as soon as one parameter leaves it out.  That asymmetry is exactly
why pairwise soft T0 need not survive parameterization, so these checkers
never fall back to pointwise reasoning.

Quantification conventions: soft/pairwise T0 ranges over unordered pairs
and accepts a separating member from either topology in either direction
(a strict fixed-orientation variant is available for comparison); T1 and
T2 range over ordered pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import NamedTuple, Optional

from .bitopology import pw_t0, pw_t1, pw_t2
from .errors import UnknownElementError
from .softset import SoftSet
from .space import BiSoftSpace, slice_space, sup_topology
from .topology import SoftTopology, soft_closure


def _rows(t: SoftTopology) -> list[tuple[str, int]]:
    ctx = t.context
    return [(x, ctx.row(x)) for x in ctx.universe.elements]


def _sep(masks, rx: int, ry: int) -> bool:
    """Some member strongly contains x while not strongly containing y."""
    return any(m & rx == rx and m & ry != ry for m in masks)


def _strong_sep(masks, rx: int, ry: int) -> bool:
    """Some member strongly contains x with y in its complement everywhere."""
    return any(m & rx == rx and m & ry == 0 for m in masks)


def soft_t0(t: SoftTopology) -> bool:
    masks = t.masks()
    rows = _rows(t)
    for (_, rx), (_, ry) in combinations(rows, 2):
        if not (_sep(masks, rx, ry) or _sep(masks, ry, rx)):
            return False
    return True


def soft_t1(t: SoftTopology) -> bool:
    masks = t.masks()
    rows = _rows(t)
    for (_, rx), (_, ry) in permutations(rows, 2):
        if not _sep(masks, rx, ry):
            return False
    return True


def soft_t2(t: SoftTopology) -> bool:
    masks = t.masks()
    rows = _rows(t)
    for (_, rx), (_, ry) in combinations(rows, 2):
        if not any(
            f & rx == rx and g & ry == ry and f & g == 0
            for f in masks
            for g in masks
        ):
            return False
    return True


def pairwise_soft_t0(s: BiSoftSpace, strict_orientation: bool = False) -> bool:
    """Every distinct pair is separated by a member of either topology.

    The default symmetric reading lets either topology separate in either
    direction.  The strict variant fixes the roles: for each ordered pair
    (x, y), either a first-topology member around x avoiding y, or a
    second-topology member around y avoiding x.
    """
    m1, m2 = s.t1.masks(), s.t2.masks()
    rows = _rows(s.t1)
    if strict_orientation:
        pairs = permutations(rows, 2)
    else:
        pairs = combinations(rows, 2)
    for (_, rx), (_, ry) in pairs:
        if strict_orientation:
            if not (_sep(m1, rx, ry) or _sep(m2, ry, rx)):
                return False
        else:
            if not (
                _sep(m1, rx, ry)
                or _sep(m1, ry, rx)
                or _sep(m2, rx, ry)
                or _sep(m2, ry, rx)
            ):
                return False
    return True


def pairwise_soft_t1(s: BiSoftSpace) -> bool:
    m1, m2 = s.t1.masks(), s.t2.masks()
    rows = _rows(s.t1)
    for (_, rx), (_, ry) in permutations(rows, 2):
        if not (_sep(m1, rx, ry) and _sep(m2, ry, rx)):
            return False
    return True


def pairwise_soft_t2(s: BiSoftSpace) -> bool:
    m1, m2 = s.t1.masks(), s.t2.masks()
    rows = _rows(s.t1)
    for (_, rx), (_, ry) in permutations(rows, 2):
        if not any(
            f & rx == rx and g & ry == ry and f & g == 0 for f in m1 for g in m2
        ):
            return False
    return True


def strong_t0(s: BiSoftSpace) -> bool:
    """Pairwise T0 with non-membership strengthened to complement membership."""
    m1, m2 = s.t1.masks(), s.t2.masks()
    rows = _rows(s.t1)
    for (_, rx), (_, ry) in combinations(rows, 2):
        if not (
            _strong_sep(m1, rx, ry)
            or _strong_sep(m1, ry, rx)
            or _strong_sep(m2, rx, ry)
            or _strong_sep(m2, ry, rx)
        ):
            return False
    return True


def strong_t1(s: BiSoftSpace) -> bool:
    m1, m2 = s.t1.masks(), s.t2.masks()
    rows = _rows(s.t1)
    for (_, rx), (_, ry) in permutations(rows, 2):
        if not (_strong_sep(m1, rx, ry) and _strong_sep(m2, ry, rx)):
            return False
    return True


def hausdorff_char(s: BiSoftSpace) -> bool:
    """Closure characterization of the pairwise Hausdorff property.

    For each ordered pair (x, y): some first-topology member contains x
    while y strongly avoids its closure taken in the second topology.
    """
    rows = _rows(s.t1)
    closures = [
        (m.mask, soft_closure(s.t2, m).mask) for m in s.t1.members
    ]
    for (_, rx), (_, ry) in permutations(rows, 2):
        if not any(m & rx == rx and cl & ry == 0 for m, cl in closures):
            return False
    return True


class PointClosure(NamedTuple):
    """Result of the point closure intersection; ``vacuous`` flags an
    empty member family, in which case the value is the absolute set."""

    value: SoftSet
    vacuous: bool


def point_closure_intersection(s: BiSoftSpace, element: str) -> PointClosure:
    """Intersect second-topology closures of first-topology members around x.

    The empty intersection convention returns the absolute soft set with
    a diagnostic flag; with a well-formed first topology the absolute
    member always contains x, so the flag only fires on raw families.
    """
    ctx = s.context
    if element not in ctx.universe.elements:
        raise UnknownElementError(element)
    rx = ctx.row(element)
    acc = ctx.full_mask
    found = False
    for m in s.t1.members:
        if m.mask & rx == rx:
            found = True
            acc &= soft_closure(s.t2, m).mask
    return PointClosure(SoftSet(ctx, acc if found else ctx.full_mask), not found)


def _first_failing_pair(names, pred) -> Optional[tuple[str, str]]:
    for x, y in pred(names):
        return (x, y)
    return None


@dataclass(frozen=True)
class AxiomReport:
    """All axiom verdicts for one bi-soft space.

    Witnesses, when collected, map an axiom key to one failing pair of
    points; re-running the matching checker on that pair reproduces the
    failure.
    """

    soft1: dict[str, bool]
    soft2: dict[str, bool]
    pairwise: dict[str, bool]
    strong: dict[str, bool]
    hausdorff: bool
    sup: dict[str, bool]
    slices: dict[str, dict[str, bool]]
    strict_pairwise_t0: Optional[bool] = None
    witnesses: dict = field(default_factory=dict)


def _axiom_witnesses(s: BiSoftSpace, report_bools: dict) -> dict:
    """Failing point pair per false pairwise axiom, for diagnostics."""
    m1, m2 = s.t1.masks(), s.t2.masks()
    rows = _rows(s.t1)
    out = {}
    if not report_bools["t0"]:
        for (x, rx), (y, ry) in combinations(rows, 2):
            if not (
                _sep(m1, rx, ry)
                or _sep(m1, ry, rx)
                or _sep(m2, rx, ry)
                or _sep(m2, ry, rx)
            ):
                out["pairwise_t0"] = (x, y)
                break
    if not report_bools["t1"]:
        for (x, rx), (y, ry) in permutations(rows, 2):
            if not (_sep(m1, rx, ry) and _sep(m2, ry, rx)):
                out["pairwise_t1"] = (x, y)
                break
    if not report_bools["t2"]:
        for (x, rx), (y, ry) in permutations(rows, 2):
            if not any(
                f & rx == rx and g & ry == ry and f & g == 0
                for f in m1
                for g in m2
            ):
                out["pairwise_t2"] = (x, y)
                break
    return out


def axiom_report(
    s: BiSoftSpace,
    strict_orientation: bool = False,
    collect_witnesses: bool = False,
) -> AxiomReport:
    """Evaluate every axiom this package knows about on one space."""
    sup = sup_topology(s)
    pairwise = {
        "t0": pairwise_soft_t0(s),
        "t1": pairwise_soft_t1(s),
        "t2": pairwise_soft_t2(s),
    }
    slices = {}
    for e in s.context.parameters.parameters:
        b = slice_space(s, e)
        slices[e] = {"t0": pw_t0(b), "t1": pw_t1(b), "t2": pw_t2(b)}
    return AxiomReport(
        soft1={"t0": soft_t0(s.t1), "t1": soft_t1(s.t1), "t2": soft_t2(s.t1)},
        soft2={"t0": soft_t0(s.t2), "t1": soft_t1(s.t2), "t2": soft_t2(s.t2)},
        pairwise=pairwise,
        strong={"t0": strong_t0(s), "t1": strong_t1(s)},
        hausdorff=hausdorff_char(s),
        sup={"t0": soft_t0(sup), "t1": soft_t1(sup), "t2": soft_t2(sup)},
        slices=slices,
        strict_pairwise_t0=(
            pairwise_soft_t0(s, strict_orientation=True)
            if strict_orientation
            else None
        ),
        witnesses=_axiom_witnesses(s, pairwise) if collect_witnesses else {},
    )

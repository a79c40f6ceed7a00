"""Rough approximation of a soft set inside a bi-soft topological space.

Approximations are computed slice-wise: at each parameter the target's
subset is approximated in the two classical slice topologies, taking the
intersection of interiors below and the union of closures above.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatchError
from .softset import SoftSet
from .space import BiSoftSpace
from .topology import parameterize, pt_closure, pt_interior


@dataclass(frozen=True)
class RoughResult:
    lower: SoftSet
    upper: SoftSet
    pos: SoftSet
    neg: SoftSet
    bnd: SoftSet
    definable: bool


def _check(s: BiSoftSpace, a: SoftSet) -> None:
    if a.context != s.context:
        raise ContextMismatchError("target lives over a different context")


def lower_approx(s: BiSoftSpace, a: SoftSet) -> SoftSet:
    """Per parameter: intersection of the two slice interiors."""
    _check(s, a)
    ctx = s.context
    mask = 0
    for e, pname in enumerate(ctx.parameters.parameters):
        block = (a.mask >> (e * ctx.nx)) & ctx.block_mask
        i1 = pt_interior(parameterize(s.t1, pname), block)
        i2 = pt_interior(parameterize(s.t2, pname), block)
        mask |= (i1 & i2) << (e * ctx.nx)
    return SoftSet(ctx, mask)


def upper_approx(s: BiSoftSpace, a: SoftSet) -> SoftSet:
    """Per parameter: union of the two slice closures."""
    _check(s, a)
    ctx = s.context
    mask = 0
    for e, pname in enumerate(ctx.parameters.parameters):
        block = (a.mask >> (e * ctx.nx)) & ctx.block_mask
        c1 = pt_closure(parameterize(s.t1, pname), block)
        c2 = pt_closure(parameterize(s.t2, pname), block)
        mask |= (c1 | c2) << (e * ctx.nx)
    return SoftSet(ctx, mask)


def rough_regions(s: BiSoftSpace, a: SoftSet) -> RoughResult:
    """Lower/upper approximations with the derived regions.

    The positive region is the lower approximation, the negative region
    the complement of the upper one, the boundary their difference; the
    target is definable exactly when lower and upper coincide.
    """
    lower = lower_approx(s, a)
    upper = upper_approx(s, a)
    ctx = s.context
    return RoughResult(
        lower=lower,
        upper=upper,
        pos=lower,
        neg=SoftSet(ctx, ctx.full_mask & ~upper.mask),
        bnd=SoftSet(ctx, upper.mask & ~lower.mask),
        definable=lower.mask == upper.mask,
    )

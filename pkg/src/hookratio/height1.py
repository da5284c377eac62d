"""Complete decision procedure for balanced parameters of height 1, with
the additive combinatorics toolkit (sumsets, stabilizers, the Kneser
inequality) over the cyclic group of the period.

At height 1 with the one-row check passing, f only takes the values 0 and
1 over its period P. The level sets A0 and A1 each fill half the period,
and the drop set Y collects the residues where f steps from 1 down to 0.
A hook shape witness (arm a, leg l) exists exactly when f(a) = f(l) = 0,
f(a+l) = 1 and f(a+l+1) = 0, i.e. when a + l lands in Y and splits over
A0 + A0; the sumset covers all but at most one residue, so the scan can
only come up empty for the single exceptional parameter shape
((x), (2x, 2x)). Any other empty scan would contradict the classification
and raises a diagnostic instead of returning a verdict.

The decision itself is the exhaustive (a, l) scan; the sumset machinery is
kept as an independently testable sanity layer, never as a shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .integral import (
    STATUS_INTEGRAL,
    Verdict,
    _verified_fails,
    counts_signature,
)
from .partition import Partition, construct_hook_partition
from .ratio import RatioParams, build_ftable


class Height1ContradictionError(RuntimeError):
    """No witness and not the canonical exception: impossible at height 1."""


@dataclass(frozen=True)
class PeriodSets:
    """Level sets of f over one period, plus the drop set.

    Only defined when f takes values in {0, 1}: A0 and A1 are the residues
    where f is 0 and 1, each of cardinality P/2, and Y holds the residues y
    with f(y) = 1 and f(y+1) = 0 cyclically (P - 1 always qualifies).
    """

    P: int
    A0: frozenset[int]
    A1: frozenset[int]
    Y: frozenset[int]


@dataclass(frozen=True)
class SumsetReport:
    """A + B over Z/P together with the stabilizer of the sumset and both
    sides of the Kneser inequality |A+B| >= |A+S| + |B+S| - |S|."""

    modulus: int
    sumset: frozenset[int]
    stabilizer: frozenset[int]
    kneser_lhs: int
    kneser_rhs: int


def _as_mask(values: Iterable[int], P: int) -> int:
    mask = 0
    for v in values:
        mask |= 1 << (v % P)
    return mask


def _rotate(mask: int, g: int, P: int) -> int:
    g %= P
    full = (1 << P) - 1
    return ((mask << g) | (mask >> (P - g))) & full if g else mask


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def sumset(A: Iterable[int], B: Iterable[int], P: int) -> SumsetReport:
    """Full report on A + B inside Z/P, elements reduced mod P."""
    if P < 1:
        raise ValueError("modulus must be positive")
    a_mask = _as_mask(A, P)
    b_mask = _as_mask(B, P)
    if not a_mask or not b_mask:
        raise ValueError("sumsets of empty sets are not defined here")
    s_mask = 0
    b_elems = [i for i in range(P) if b_mask >> i & 1]
    for b in b_elems:
        s_mask |= _rotate(a_mask, b, P)
    stab_mask = 0
    for g in range(P):
        if _rotate(s_mask, g, P) == s_mask:
            stab_mask |= 1 << g
    a_stab = 0
    b_stab = 0
    for g in range(P):
        if stab_mask >> g & 1:
            a_stab |= _rotate(a_mask, g, P)
            b_stab |= _rotate(b_mask, g, P)
    lhs = s_mask.bit_count()
    rhs = a_stab.bit_count() + b_stab.bit_count() - stab_mask.bit_count()
    return SumsetReport(
        P, _mask_to_set(s_mask), _mask_to_set(stab_mask), lhs, rhs
    )


def _require_height1(params: RatioParams) -> None:
    if params.height != 1:
        raise ValueError(f"expected height 1, got height {params.height}")


def period_sets(params: RatioParams) -> PeriodSets:
    """A0, A1 and Y for height 1 parameters passing the one-row check."""
    _require_height1(params)
    table = build_ftable(params)
    if table.min < 0:
        raise ValueError(
            f"{params} fails the one-row check; the level sets are undefined"
        )
    P = table.period
    vals = table.values[:P]
    A0 = frozenset(x for x in range(P) if vals[x] == 0)
    A1 = frozenset(x for x in range(P) if vals[x] == 1)
    Y = frozenset(
        y for y in range(P) if vals[y] == 1 and vals[(y + 1) % P] == 0
    )
    assert A0 | A1 == frozenset(range(P))
    assert len(A0) == len(A1) == P // 2 and P % 2 == 0
    assert P - 1 in Y
    return PeriodSets(P, A0, A1, Y)


def is_canonical_exception(params: RatioParams) -> bool:
    """True for the single integral height 1 shape: one gamma, two equal
    deltas, each twice the gamma."""
    return (
        params.K == 1
        and params.L == 2
        and params.deltas[0] == params.deltas[1] == 2 * params.gammas[0]
    )


def find_hook_witness(params: RatioParams) -> tuple[int, int] | None:
    """First (arm, leg) with f(a) = f(l) = 0, f(a+l) = 1, f(a+l+1) = 0,
    ordered by (a + l, a); None when no solution exists over the period
    grid. f is evaluated at the true integers a + l and a + l + 1."""
    _require_height1(params)
    table = build_ftable(params)
    P = table.period
    for s in range(0, 2 * P - 1):
        for a in range(max(0, s - P + 1), min(s, P - 1) + 1):
            if (
                table.f(a) == 0
                and table.f(s - a) == 0
                and table.f(s) == 1
                and table.f(s + 1) == 0
            ):
                return (a, s - a)
    return None


def decide_height1(params: RatioParams) -> Verdict:
    """Complete decision at height 1.

    A failing one-row check immediately yields a one-row witness. Otherwise
    the (a, l) grid is scanned for a hook shape witness; each hit has
    counts signature exactly -1 and is inflated to a verified failing
    partition. An empty scan must mean the canonical exception
    ((x), (2x, 2x)); anything else raises Height1ContradictionError.
    """
    _require_height1(params)
    table = build_ftable(params)
    if table.min < 0:
        x = min(x for x in range(table.M) if table.values[x] < 0)
        return _verified_fails(params, Partition((x,)), None)
    found = find_hook_witness(params)
    if found is not None:
        mu = construct_hook_partition(*found)
        assert counts_signature(mu, params) == -1
        return _verified_fails(params, mu, None)
    if is_canonical_exception(params):
        return Verdict(params, STATUS_INTEGRAL)
    raise Height1ContradictionError(
        f"no hook witness for non-exceptional height 1 parameters {params}; "
        "this contradicts the height 1 classification"
    )

"""Shared fixtures and independent oracles.

The oracles here are deliberately written against the definitions, not
against the library internals: hook lengths by literal box counting,
factorization by fresh trial division, partition counts by the coin
recurrence, and tableau counts by corner removal.
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from hookratio import RatioParams, enumerate_partitions


def oracle_hooks(parts):
    """Hook lengths by counting boxes to the right, below, plus the box."""
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    out = []
    for (i, j) in cells:
        arm = sum(1 for (a, b) in cells if a == i and b > j)
        leg = sum(1 for (a, b) in cells if b == j and a > i)
        out.append(arm + leg + 1)
    return sorted(out)


def oracle_factorize(n):
    f = Counter()
    d = 2
    while d * d <= n:
        while n % d == 0:
            f[d] += 1
            n //= d
        d += 1
    if n > 1:
        f[n] += 1
    return dict(f)


def oracle_partition_count(n):
    """p(n) by the bounded-part recurrence."""
    dp = [1] + [0] * n
    for part in range(1, n + 1):
        for s in range(part, n + 1):
            dp[s] += dp[s - part]
    return dp[n]


def syt_count(parts):
    """Standard tableaux by removing the largest entry from a corner."""
    if sum(parts) <= 1:
        return 1
    total = 0
    for i in range(len(parts)):
        if i == len(parts) - 1 or parts[i] > parts[i + 1]:
            smaller = list(parts)
            smaller[i] -= 1
            if smaller[-1] == 0:
                smaller.pop()
            total += syt_count(tuple(smaller))
    return total


def boundary_hook_pairs(b):
    """Multiset {j - i : entry 1 at i, entry 0 at j, i < j} of a boundary
    sequence, straight from the window."""
    pairs = Counter()
    zeros = b.zero_positions()
    for s in zeros:
        for i in range(b.offset, s):
            if b.value(i) == 1:
                pairs[s - i] += 1
    return pairs


def exact_ratio_value(lam, gammas, deltas):
    """The ratio as an exact Fraction of restricted hook products."""
    from hookratio import restricted_hooks

    num = den = 1
    for g in gammas:
        for h, c in restricted_hooks(lam, g).items():
            num *= h**c
    for d in deltas:
        for h, c in restricted_hooks(lam, d).items():
            den *= h**c
    return Fraction(num, den)


def balanced_parameter_grid(max_entry=8, max_len=4):
    """Every ordered pair of disjoint multisets from {1..max_entry} with
    equal reciprocal sums (entries as vectors, sizes 1..max_len)."""
    by_sum = {}
    for r in range(1, max_len + 1):
        for ms in combinations_with_replacement(range(1, max_entry + 1), r):
            by_sum.setdefault(sum(Fraction(1, v) for v in ms), []).append(ms)
    grid = []
    for group in by_sum.values():
        for a in group:
            for b in group:
                if a != b and not (set(a) & set(b)):
                    grid.append(RatioParams(a, b))
    return sorted(set(grid), key=lambda p: (p.gammas, p.deltas))


@pytest.fixture(scope="session")
def partitions_by_size():
    return {n: list(enumerate_partitions(n)) for n in range(13)}


@pytest.fixture(scope="session")
def balanced_grid():
    return balanced_parameter_grid()


def all_partitions_through(partitions_by_size, n):
    for k in range(n + 1):
        yield from partitions_by_size[k]

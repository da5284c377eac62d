"""Parameter vectors and the floor-sum step function they induce.

A pair of vectors (gammas, deltas) of positive integers defines the step
function f(x) = sum_k floor(x / gamma_k) - sum_l floor(x / delta_l) and the
divisor indicator g(y) whose prefix sums reproduce f. Under the balancing
condition (the reciprocal sums agree) f is periodic with period dividing
the lcm M of all entries, and one period of values decides one-row
integrality (the classical criterion). All breakpoints of f are integers,
so every statement made "for small enough epsilon" is evaluated here at
integer arguments only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@dataclass(frozen=True)
class RatioParams:
    """The (gammas, deltas) pair defining a hook product ratio.

    No entry may appear on both sides (a shared entry would cancel from the
    ratio identically; use :meth:`normalized` to cancel first). Height is
    the excess of denominator factors, L - K. Balance is tested in exact
    rational arithmetic; no decision path here touches floating point.
    """

    gammas: tuple[int, ...]
    deltas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(int(g) for g in self.gammas))
        object.__setattr__(self, "deltas", tuple(int(d) for d in self.deltas))
        if not self.gammas or not self.deltas:
            raise ValueError("parameter vectors must be nonempty")
        if min(self.gammas + self.deltas) < 1:
            raise ValueError("parameters must be positive integers")
        shared = set(self.gammas) & set(self.deltas)
        if shared:
            raise ValueError(
                f"gammas and deltas must be disjoint, both contain {sorted(shared)}"
            )

    @classmethod
    def normalized(cls, gammas, deltas) -> "RatioParams":
        """Build params after cancelling entries common to both sides
        (with multiplicity)."""
        g = list(gammas)
        d = list(deltas)
        for v in list(g):
            if v in d:
                g.remove(v)
                d.remove(v)
        return cls(tuple(g), tuple(d))

    @property
    def K(self) -> int:
        return len(self.gammas)

    @property
    def L(self) -> int:
        return len(self.deltas)

    @property
    def height(self) -> int:
        return self.L - self.K

    @property
    def modulus(self) -> int:
        """M, the lcm of all entries."""
        return lcm(*self.gammas, *self.deltas)

    @property
    def is_balanced(self) -> bool:
        return sum(Fraction(1, g) for g in self.gammas) == sum(
            Fraction(1, d) for d in self.deltas
        )

    def __str__(self) -> str:
        g = ",".join(map(str, self.gammas))
        d = ",".join(map(str, self.deltas))
        return f"(({g}),({d}))"


def f_value(x: int, params: RatioParams) -> int:
    """sum floor(x / gamma_k) - sum floor(x / delta_l)."""
    return sum(x // g for g in params.gammas) - sum(x // d for d in params.deltas)


def g_value(y: int, params: RatioParams) -> int:
    """Signed count of parameters dividing y; prefix sums give f."""
    if y < 1:
        raise ValueError(f"g is defined on positive integers, got {y}")
    return sum(1 for g in params.gammas if y % g == 0) - sum(
        1 for d in params.deltas if y % d == 0
    )


@dataclass(frozen=True)
class FTable:
    """One full period window of f for balanced parameters."""

    params: RatioParams
    M: int
    values: tuple[int, ...]
    period: int

    def f(self, x: int) -> int:
        """f at any integer >= 0, via periodicity."""
        return self.values[x % self.M]

    @property
    def min(self) -> int:
        return min(self.values)

    @property
    def max(self) -> int:
        return max(self.values)

    def to_json_dict(self) -> dict:
        return {
            "M": self.M,
            "P": self.period,
            "values": list(self.values),
            "min": self.min,
            "max": self.max,
        }


@lru_cache(maxsize=None)
def build_ftable(params: RatioParams) -> FTable:
    """Tabulate f over [0, M) and find the minimal period P dividing M.

    Raises for unbalanced parameters, where f is unbounded and has no
    period. The reflection identity f(x) + f(M-1-x) = L - K and its corner
    case f(P-1) = L - K hold for every balanced pair and are asserted here.
    """
    if not params.is_balanced:
        raise ValueError(
            f"parameters {params} are not balanced; the period is undefined"
        )
    M = params.modulus
    values = tuple(f_value(x, params) for x in range(M))
    period = M
    for P in sorted(d for d in range(1, M + 1) if M % d == 0):
        if all(values[x] == values[x % P] for x in range(M)):
            period = P
            break
    height = params.height
    assert all(values[x] + values[M - 1 - x] == height for x in range(M))
    assert values[period - 1] == height
    return FTable(params, M, values, period)


def landau_one_row_check(params: RatioParams) -> bool:
    """One-row integrality criterion: f nonnegative on a full period."""
    return build_ftable(params).min >= 0


def phi_bijection(params: RatioParams) -> RatioParams:
    """Map (mu, nu) to ((M/mu_k), (M/nu_l)) with M the lcm of all entries.

    Involutive whenever the gcd of all entries is 1. Carries sum-balanced
    vectors to reciprocal-balanced vectors and back.
    """
    M = params.modulus
    return RatioParams(
        tuple(M // g for g in params.gammas),
        tuple(M // d for d in params.deltas),
    )


def bober_families(x: int, y: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The three infinite families of height 1 integral factorial ratio
    parameters, instantiated at coprime (x, y).

    Returns raw (alpha, beta) vectors; the second family needs x > y and is
    omitted otherwise. Instances where alpha and beta share an entry are
    still emitted verbatim (callers that need disjoint vectors must filter
    or cancel).
    """
    if gcd(x, y) != 1:
        raise ValueError(f"(x, y) must be coprime, got ({x}, {y})")
    if x < 1 or y < 1:
        raise ValueError("x and y must be positive")
    families = [((x + y,), (x, y))]
    if x > y:
        families.append(((2 * x, y), (x, 2 * y, x - y)))
    families.append(((2 * x, 2 * y), (x, y, x + y)))
    return families


def check_size_bound(params: RatioParams) -> bool:
    """Explicit bound K + L <= 287 * (L - K)**3.44 for positive height."""
    if params.height < 1:
        raise ValueError("the size bound is stated only for height >= 1")
    return params.K + params.L <= 287 * params.height**3.44

"""Run-length statistics of compositions from closed-form series.

A run is a maximal block of equal adjacent parts.  Carlitz compositions
are those whose runs all have length 1 (no two equal adjacent parts); more
generally C(n, k, r) counts compositions of n into k parts with every run
shorter than r.  Both generating functions are reciprocals of explicit
denominators; the infinite sums over part values truncate exactly, because
the j-th summand cannot contribute below x-degree 2j (Carlitz) or rj
(bounded runs).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import Series

__all__ = [
    "RunDistribution",
    "carlitz_series",
    "bounded_run_series",
    "bounded_run_count",
    "longest_run_distribution",
]


@lru_cache(maxsize=None)
def carlitz_series(max_weight: int) -> Series:
    """Generating function of Carlitz compositions, truncated at ``max_weight``.

    Coefficient (n, k) counts compositions of n into k parts with no two
    equal adjacent parts.
    """
    bound = max_weight
    denom = Series.one(bound) - Series.monomial(bound, 1, 1, 1) * Series.geom_x(bound)
    total = Series.zero(bound)
    for j in range(1, bound // 2 + 1):
        block = Series.one(bound) + Series.monomial(bound, 1, j, 1)  # 1 + q x^j
        total = total + Series.monomial(bound, 1, 2 * j, 0) * block.invert()
    return (denom + Series.monomial(bound, 1, 0, 2) * total).invert()


@lru_cache(maxsize=None)
def bounded_run_series(r: int, max_weight: int) -> Series:
    """Generating function of compositions whose runs are all shorter than ``r``.

    Coefficient (n, k) is C(n, k, r).  With r = 1 only the empty
    composition survives and the series collapses to 1.
    """
    if r < 1:
        raise ValueError(f"run bound must be >= 1, got {r}")
    bound = max_weight
    denom = Series.one(bound) - Series.monomial(bound, 1, 1, 1) * Series.geom_x(bound)
    total = Series.zero(bound)
    for j in range(1, bound // r + 1):
        numer = Series.monomial(bound, 1, r * j, 0) * (
            Series.one(bound) - Series.monomial(bound, 1, j, 1))  # x^{rj} (1 - q x^j)
        geom = Series.one(bound) - Series.monomial(bound, 1, r * j, r)  # 1 - q^r x^{rj}
        total = total + numer * geom.invert()
    return (denom + Series.monomial(bound, 1, 0, r) * total).invert()


def bounded_run_count(n: int, k: int, r: int) -> int:
    """C(n, k, r): compositions of n into k parts, every run shorter than r."""
    if n < 0 or k < 0:
        raise ValueError(f"weight and parts must be nonnegative, got ({n}, {k})")
    return bounded_run_series(r, n).coefficient(n, k)


@dataclass(frozen=True)
class RunDistribution:
    """Exact distribution of the longest run length over compositions of n.

    ``counts[L]`` is the number of compositions whose longest run has
    length exactly L; lengths that occur zero times are omitted.  ``total``
    is 2^(n-1) and ``mean`` the exact rational average of L.
    """

    n: int
    counts: dict[int, int]
    total: int
    mean: Fraction


def longest_run_distribution(n: int) -> RunDistribution:
    """Tally compositions of n by the length of their longest run.

    The count at length L is the number of compositions with all runs
    shorter than L+1 minus those with all runs shorter than L.
    """
    if n < 1:
        raise ValueError(f"weight must be >= 1, got {n}")

    def admitted(r: int) -> int:
        s = bounded_run_series(r, n)
        return sum(s.coefficient(n, k) for k in range(n + 1))

    counts: dict[int, int] = {}
    below = admitted(1)
    for length in range(1, n + 1):
        at_or_below = admitted(length + 1)
        if at_or_below != below:
            counts[length] = at_or_below - below
        below = at_or_below
    total = 2 ** (n - 1)
    mean = Fraction(sum(length * c for length, c in counts.items()), total)
    return RunDistribution(n, counts, total, mean)

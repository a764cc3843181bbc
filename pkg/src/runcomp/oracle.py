"""Brute-force enumeration of compositions.

The trust anchor for every generating-function result: compositions are
listed exhaustively and filtered by direct inspection, with no shared code
or algebra from the series side.  Enumeration is exponential (2^(n-1)
compositions of n), so counting refuses weights above ``ENUMERATION_CAP``
unless forced.
"""

from dataclasses import dataclass
from typing import Iterator

from .errors import EnumerationCapError
from .words import ForbiddenList, Word

__all__ = [
    "ENUMERATION_CAP",
    "CompositionFilter",
    "enumerate_compositions",
    "oracle_count",
    "count_by_parts",
    "max_run_length",
]

ENUMERATION_CAP = 24  # ~8.4M compositions; past this the closed forms are the practical route


def _parts_stream(n: int) -> Iterator[tuple[int, ...]]:
    # Lexicographic by parts: (1,1,1) before (1,2) before (2,1) before (3).
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _parts_stream(n - first):
            yield (first, *rest)


def enumerate_compositions(n: int) -> Iterator[Word]:
    """Yield the 2^(n-1) compositions of n once each, lexicographic by parts."""
    if n < 1:
        raise ValueError(f"weight must be >= 1, got {n}")
    return (Word(parts) for parts in _parts_stream(n))


def max_run_length(parts: tuple[int, ...]) -> int:
    """Length of the longest block of equal adjacent parts; 0 for the empty tuple."""
    best = run = 0
    prev = None
    for a in parts:
        run = run + 1 if a == prev else 1
        prev = a
        if run > best:
            best = run
    return best


def _contains_factor(parts: tuple[int, ...], letters: tuple[int, ...]) -> bool:
    m = len(letters)
    return any(parts[i:i + m] == letters for i in range(len(parts) - m + 1))


@dataclass(frozen=True)
class CompositionFilter:
    """Predicate over compositions: everything, factor avoidance, or a run cap."""

    forbidden: ForbiddenList | None = None
    run_bound: int | None = None

    def __post_init__(self) -> None:
        if self.forbidden is not None and self.run_bound is not None:
            raise ValueError("choose either factor avoidance or a run bound, not both")
        if self.run_bound is not None and self.run_bound < 1:
            raise ValueError(f"run bound must be >= 1, got {self.run_bound}")

    @classmethod
    def all(cls) -> "CompositionFilter":
        return cls()

    @classmethod
    def avoid_factors(cls, forbidden: ForbiddenList) -> "CompositionFilter":
        return cls(forbidden=forbidden)

    @classmethod
    def max_run_below(cls, r: int) -> "CompositionFilter":
        return cls(run_bound=r)

    def accepts(self, parts: tuple[int, ...]) -> bool:
        if self.run_bound is not None:
            return max_run_length(parts) < self.run_bound
        if self.forbidden is not None:
            return not any(_contains_factor(parts, w.letters) for w in self.forbidden)
        return True


def _check_cap(n: int, force: bool) -> None:
    if n > ENUMERATION_CAP and not force:
        raise EnumerationCapError(
            f"enumerating compositions of {n} means 2^{n - 1} cases, above the cap "
            f"of {ENUMERATION_CAP}; pass force=True (--force) to proceed anyway")


def oracle_count(n: int, k: int | None = None,
                 filt: CompositionFilter | None = None, force: bool = False) -> int:
    """Count compositions of n (with k parts, or any k) accepted by the filter."""
    if n < 1:
        raise ValueError(f"weight must be >= 1, got {n}")
    _check_cap(n, force)
    if filt is None:
        filt = CompositionFilter.all()
    total = 0
    for parts in _parts_stream(n):
        if (k is None or len(parts) == k) and filt.accepts(parts):
            total += 1
    return total


def count_by_parts(n: int, filt: CompositionFilter | None = None,
                   force: bool = False) -> dict[int, int]:
    """Accepted compositions of n tallied by number of parts."""
    if n < 1:
        raise ValueError(f"weight must be >= 1, got {n}")
    _check_cap(n, force)
    if filt is None:
        filt = CompositionFilter.all()
    tally: dict[int, int] = {}
    for parts in _parts_stream(n):
        if filt.accepts(parts):
            tally[len(parts)] = tally.get(len(parts), 0) + 1
    return tally

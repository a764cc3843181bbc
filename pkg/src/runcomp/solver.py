"""Avoidance generating functions from a linear system over the series ring.

For a reduced forbidden list with k words, the generating function of all
compositions avoiding every listed factor is the first unknown of a
(k+1) x (k+1) linear system whose entries are built from correlation
polynomials.  The system is solved exactly by Gaussian elimination in the
truncated series ring, dividing only by unit pivots (constant term +1 or
-1).  When all cross-correlations vanish ("easy case") the matrix is
sparse and the solution collapses to an explicit reciprocal, evaluated by
:func:`easy_case_series`.
"""

from dataclasses import dataclass

from .errors import NotEasyCaseError, PivotError
from .series import Series
from .words import ForbiddenList, correlation_polynomial

__all__ = [
    "AvoidanceSystem",
    "build_system",
    "avoidance_series",
    "easy_case_series",
    "determinant_solve",
]


@dataclass(frozen=True)
class AvoidanceSystem:
    """Matrix and right-hand side whose first solution component counts avoiders.

    Row 0 couples the unknowns through the alphabet of all positive
    integers; row i >= 1 belongs to the i-th forbidden word, carrying its
    weight/length monomial and the negated correlation polynomials against
    every listed word.  Diagonal entries below row 0 have constant term -1
    (a word fully overlaps itself), so they are always invertible.
    """

    forbidden: ForbiddenList
    matrix: tuple[tuple[Series, ...], ...]
    rhs: tuple[Series, ...]
    max_weight: int


def build_system(forbidden: ForbiddenList, max_weight: int) -> AvoidanceSystem:
    bound = max_weight
    one = Series.one(bound)
    x = Series.monomial(bound, 1, 1, 0)
    xq = Series.monomial(bound, 1, 1, 1)
    rows = [tuple([one - x - xq] + [one - x] * len(forbidden))]
    for s in forbidden:
        row = [Series.monomial(bound, 1, s.weight, s.length)]
        row.extend(-correlation_polynomial(s, t, bound) for t in forbidden)
        rows.append(tuple(row))
    rhs = tuple([one - x] + [Series.zero(bound)] * len(forbidden))
    return AvoidanceSystem(forbidden, tuple(rows), rhs, bound)


def _is_unit(s: Series) -> bool:
    return s.coeffs.get((0, 0), 0) in (1, -1)


def avoidance_series(system: AvoidanceSystem) -> Series:
    """First unknown of the system: sum of x^weight q^parts over avoiders.

    Elimination is deterministic: columns are processed in order and the
    first row offering a unit pivot is chosen.  Rows are never reordered
    for any other reason, so results are reproducible.
    """
    size = len(system.matrix)
    rows = [list(row) for row in system.matrix]
    rhs = list(system.rhs)
    for col in range(size):
        pivot = next((r for r in range(col, size) if _is_unit(rows[r][col])), None)
        if pivot is None:
            raise PivotError(
                f"no unit pivot available in column {col}; "
                "the avoidance system cannot be solved exactly")
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = rows[col][col].invert()
        rows[col] = [entry * inv for entry in rows[col]]
        rhs[col] = rhs[col] * inv
        for r in range(col + 1, size):
            factor = rows[r][col]
            if factor.is_zero():
                continue
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
            rhs[r] = rhs[r] - factor * rhs[col]
    solution = [Series.zero(system.max_weight)] * size
    for col in range(size - 1, -1, -1):
        acc = rhs[col]
        for j in range(col + 1, size):
            acc = acc - rows[col][j] * solution[j]
        solution[col] = acc
    return solution[0]


def easy_case_series(forbidden: ForbiddenList, max_weight: int) -> Series:
    """Closed form for lists whose cross-correlations all vanish.

    The avoidance series is the reciprocal of
    1 - qx/(1-x) + sum over words of x^weight q^length / autocorrelation,
    evaluated entirely in the truncated ring.
    """
    if not forbidden.easy_case:
        raise NotEasyCaseError(
            "list has a nonzero cross-correlation between distinct words; "
            "use the general solver")
    bound = max_weight
    denom = Series.one(bound) - Series.monomial(bound, 1, 1, 1) * Series.geom_x(bound)
    for s in forbidden:
        auto = correlation_polynomial(s, s, bound)
        denom = denom + Series.monomial(bound, 1, s.weight, s.length) * auto.invert()
    return denom.invert()


def determinant_solve(system: AvoidanceSystem) -> Series:
    """Cramer-style reference solution: det(A with column 0 replaced) / det(A).

    Cofactor expansion costs factorially in the list size; this exists to
    cross-check the elimination path on small lists, not to scale.
    """
    matrix = [list(row) for row in system.matrix]
    replaced = [[system.rhs[i] if j == 0 else entry
                 for j, entry in enumerate(row)] for i, row in enumerate(matrix)]
    return _determinant(replaced) * _determinant(matrix).invert()


def _determinant(matrix: list[list[Series]]) -> Series:
    if len(matrix) == 1:
        return matrix[0][0]
    total = Series.zero(matrix[0][0].max_weight)
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total

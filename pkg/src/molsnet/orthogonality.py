"""Superimposition of Latin squares and the t-orthogonality decision.

Stacking t same-order squares turns each cell into an ordered t-tuple;
the stack is t-orthogonal when all n^2 tuples are pairwise distinct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .squares import LatinSquare, MolsSet

Cell = tuple[int, int]            # (row, column), 1-based
SymbolTuple = tuple[int, ...]


@dataclass(frozen=True)
class TupleArray:
    """n x n grid of ordered t-tuples obtained by stacking t squares.

    source records which 1-based positions of an owning set the squares
    came from; it is bookkeeping only and ignored by equality.
    """

    order: int
    arity: int
    grid: tuple[tuple[SymbolTuple, ...], ...]
    source: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n, t = self.order, self.arity
        if t < 2:
            raise ValueError(f"arity must be at least 2, got {t}")
        if len(self.grid) != n or any(len(row) != n for row in self.grid):
            raise ValueError(f"grid must be {n}x{n}")
        for row in self.grid:
            for entry in row:
                if len(entry) != t:
                    raise ValueError(f"every entry must have {t} symbols, got {entry!r}")
                if any(not 1 <= s <= n for s in entry):
                    raise ValueError(f"symbols must lie in 1..{n}, got {entry!r}")

    def tuple_at(self, i: int, j: int) -> SymbolTuple:
        """Tuple in row i, column j (1-based)."""
        return self.grid[i - 1][j - 1]


def superimpose(squares: Sequence[LatinSquare],
                source: Sequence[int] | None = None) -> TupleArray:
    """Stack squares cell by cell into a tuple array.

    source defaults to positions 1..t.
    """
    if len(squares) < 2:
        raise ValueError(f"need at least 2 squares to superimpose, got {len(squares)}")
    orders = {square.order for square in squares}
    if len(orders) != 1:
        raise ValueError(f"cannot superimpose squares of mixed orders {sorted(orders)}")
    n = squares[0].order
    grid = tuple(
        tuple(tuple(square.cells[i][j] for square in squares) for j in range(n))
        for i in range(n)
    )
    src = tuple(source) if source is not None else tuple(range(1, len(squares) + 1))
    if len(src) != len(squares):
        raise ValueError("source must name one position per square")
    return TupleArray(n, len(squares), grid, src)


@dataclass(frozen=True)
class OrthogonalityReport:
    is_orthogonal: bool
    distinct_count: int
    first_collision: tuple[Cell, Cell] | None = None


def is_t_orthogonal(array: TupleArray) -> OrthogonalityReport:
    """Decide whether all n^2 tuples are pairwise distinct.

    On failure, first_collision is the smallest colliding cell pair in
    row-major order.
    """
    occurrences: dict[SymbolTuple, list[Cell]] = {}
    for i, row in enumerate(array.grid, start=1):
        for j, entry in enumerate(row, start=1):
            occurrences.setdefault(entry, []).append((i, j))
    collisions = [(cells[0], cells[1]) for cells in occurrences.values() if len(cells) > 1]
    first = min(collisions) if collisions else None
    return OrthogonalityReport(first is None, len(occurrences), first)


def distinct_tuple_count(array: TupleArray) -> int:
    """Number of distinct tuples; n^2 exactly when the array is orthogonal."""
    return len({entry for row in array.grid for entry in row})


@dataclass(frozen=True)
class SubsetVerdict:
    indices: tuple[int, ...]      # 1-based positions within the set
    report: OrthogonalityReport


@dataclass(frozen=True)
class SetOrthogonalityReport:
    order: int
    t: int
    verdicts: tuple[SubsetVerdict, ...]

    @property
    def all_orthogonal(self) -> bool:
        return all(v.report.is_orthogonal for v in self.verdicts)

    @property
    def failures(self) -> tuple[SubsetVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.report.is_orthogonal)


def verify_set_orthogonality(mols: MolsSet, t: int) -> SetOrthogonalityReport:
    """Check every t-subset of the set, in index order."""
    size = len(mols.squares)
    if not 2 <= t <= size:
        raise ValueError(f"t must be between 2 and the set size {size}, got {t}")
    verdicts = []
    for combo in itertools.combinations(range(size), t):
        indices = tuple(i + 1 for i in combo)
        array = superimpose([mols.squares[i] for i in combo], indices)
        verdicts.append(SubsetVerdict(indices, is_t_orthogonal(array)))
    return SetOrthogonalityReport(mols.order, t, tuple(verdicts))

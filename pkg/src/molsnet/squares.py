"""Latin squares over symbols 1..n and the two prime-based families.

A multiplicative square exists when n+1 is prime: cell (i, j) holds
(i*j) mod (n+1).  Cycling its rows upward gives the shift family of n
squares.  An additive square exists when n itself is prime: cell (i, j)
holds (i + h*j) mod n for a slope h in 1..n-1, with residue 0 written as
the symbol n.  Row and column indices are 1-based throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import ConstructionError

Row = tuple[int, ...]
Grid = tuple[Row, ...]

ADDITIVE_PRIME = "additive-prime"
SHIFT_FAMILY = "shift-family"
EXTERNAL = "external"


def is_prime(n: int) -> bool:
    """Trial division; the orders used here are small."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class LatinSquare:
    """An n x n grid intended to hold each of 1..n once per row and column.

    The constructor checks shape only, so that broken grids can still be
    built and handed to validate_latin for a diagnosis.  provenance records
    how the square was made and is ignored by equality.
    """

    order: int
    cells: Grid
    provenance: str = field(default=EXTERNAL, compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be at least 1, got {self.order}")
        if len(self.cells) != self.order or any(len(row) != self.order for row in self.cells):
            raise ValueError(f"cells must form a {self.order}x{self.order} grid")

    def at(self, i: int, j: int) -> int:
        """Symbol in row i, column j (1-based)."""
        return self.cells[i - 1][j - 1]


@dataclass(frozen=True)
class LatinViolation:
    axis: str        # "row" or "column"
    index: int       # 1-based
    symbol: int
    problem: str     # "duplicate" or "missing"

    def describe(self) -> str:
        verb = "duplicates" if self.problem == "duplicate" else "is missing"
        return f"{self.axis} {self.index} {verb} symbol {self.symbol}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[LatinViolation, ...] = ()


def validate_latin(square: LatinSquare) -> ValidationReport:
    """Report every duplicated or missing symbol, rows first, then columns."""
    n = square.order
    lanes = [("row", i + 1, square.cells[i]) for i in range(n)]
    lanes += [("column", j + 1, tuple(square.cells[i][j] for i in range(n))) for j in range(n)]
    violations = []
    for axis, index, lane in lanes:
        counts = Counter(lane)
        for symbol in range(1, n + 1):
            seen = counts.get(symbol, 0)
            if seen > 1:
                violations.append(LatinViolation(axis, index, symbol, "duplicate"))
            elif seen == 0:
                violations.append(LatinViolation(axis, index, symbol, "missing"))
    return ValidationReport(not violations, tuple(violations))


@dataclass(frozen=True)
class MolsSet:
    """Latin squares of one order, kept in construction order.

    Members must pass validate_latin.  Duplicate members are allowed so a
    defective set can still be loaded and verified; the generated families
    are pairwise distinct.  family_kind is ignored by equality.
    """

    order: int
    squares: tuple[LatinSquare, ...]
    family_kind: str = field(default=EXTERNAL, compare=False)

    def __post_init__(self):
        if not self.squares:
            raise ValueError("a square set cannot be empty")
        for position, square in enumerate(self.squares, start=1):
            if square.order != self.order:
                raise ValueError(
                    f"square {position} has order {square.order}, expected {self.order}")
            report = validate_latin(square)
            if not report.ok:
                first = report.violations[0]
                raise ValueError(f"square {position} is not Latin: {first.describe()}")

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)

    def __getitem__(self, index: int) -> LatinSquare:
        return self.squares[index]


def make_multiplicative_square(n: int) -> LatinSquare:
    """Square with cell (i, j) = (i*j) mod (n+1), for n+1 prime.

    The symbols 1..n are exactly the nonzero residues mod n+1, so each row
    and column is a permutation.
    """
    if n < 2:
        raise ConstructionError(f"order must be at least 2, got {n}")
    if not is_prime(n + 1):
        raise ConstructionError(f"multiplicative square needs {n}+1 prime; {n + 1} is not")
    p = n + 1
    cells = tuple(tuple(i * j % p for j in range(1, n + 1)) for i in range(1, n + 1))
    return LatinSquare(n, cells, "multiplicative")


def apply_row_shift(square: LatinSquare, k: int) -> LatinSquare:
    """Cycle rows upward by k: output row i is input row ((i-1+k) mod n)+1."""
    n = square.order
    if not 0 <= k < n:
        raise ValueError(f"shift must be in 0..{n - 1}, got {k}")
    cells = tuple(square.cells[(i + k) % n] for i in range(n))
    return LatinSquare(n, cells, f"shifted(k={k})")


def make_additive_square(n: int, h: int) -> LatinSquare:
    """Square with cell (i, j) = (i + h*j) mod n, residue 0 written as n.

    Needs n prime so that every slope h in 1..n-1 is invertible, which makes
    each row and column a permutation.
    """
    if not is_prime(n):
        raise ConstructionError(f"additive square needs a prime order; {n} is not prime")
    if not 1 <= h <= n - 1:
        raise ConstructionError(f"slope must be in 1..{n - 1}, got {h}")
    cells = tuple(
        tuple((i + h * j - 1) % n + 1 for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return LatinSquare(n, cells, f"additive(h={h})")


def make_mols_family(n: int, method: str = "auto") -> MolsSet:
    """Build the standard family for order n.

    n prime gives the n-1 additive squares (h = 1..n-1); n+1 prime gives
    the multiplicative square and its n row shifts (k = 0..n-1).  When both
    routes exist (only n = 2) the additive one wins; pass method="additive"
    or method="shift" to force a route.
    """
    if method not in ("auto", "additive", "shift"):
        raise ValueError(f"method must be auto, additive or shift, got {method!r}")
    if method == "auto":
        if is_prime(n):
            method = "additive"
        elif is_prime(n + 1):
            method = "shift"
        else:
            raise ConstructionError(
                f"no construction available for order {n}: neither {n} nor {n + 1} is prime")
    if method == "additive":
        if not is_prime(n):
            raise ConstructionError(f"additive family needs a prime order; {n} is not prime")
        squares = tuple(make_additive_square(n, h) for h in range(1, n))
        return MolsSet(n, squares, ADDITIVE_PRIME)
    base = make_multiplicative_square(n)
    squares = tuple(apply_row_shift(base, k) for k in range(n))
    return MolsSet(n, squares, SHIFT_FAMILY)

"""Board geometry for straight 1xk tiles.

Cells are addressed ``(row, col)``, 0-based, row 0 at the top. Lattice
vertices are addressed ``(vx, vy)`` where ``vx`` counts column boundaries
from the left and ``vy`` counts row boundaries from the top.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

Cell = tuple[int, int]


class Orientation(enum.Enum):
    HORIZONTAL = "H"
    VERTICAL = "V"


class TilingError(ValueError):
    """Base class for malformed tilings."""


class OutOfBoundsError(TilingError):
    def __init__(self, placement: "Placement") -> None:
        super().__init__(f"placement {placement} leaves the board")
        self.placement = placement


class OverlapError(TilingError):
    def __init__(self, cell: Cell) -> None:
        super().__init__(f"cell {cell} is covered twice")
        self.cell = cell


class CoverageError(TilingError):
    def __init__(self, cell: Cell) -> None:
        super().__init__(f"cell {cell} is not covered")
        self.cell = cell


@dataclass(frozen=True)
class BoardSpec:
    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1:
            raise ValueError(f"rows must be >= 1, got {self.rows}")
        if self.cols < 0:
            raise ValueError(f"cols must be >= 0, got {self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def cells(self) -> Iterator[Cell]:
        for r in range(self.rows):
            for c in range(self.cols):
                yield (r, c)

    def transposed(self) -> "BoardSpec":
        return BoardSpec(self.cols, self.rows) if self.cols else self


@dataclass(frozen=True)
class Placement:
    """A straight tile anchored at its topmost/leftmost cell.

    Length-1 tiles are normalised to horizontal so that equal coverings
    compare equal.
    """

    row: int
    col: int
    orient: Orientation
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"tile length must be >= 1, got {self.length}")
        if self.row < 0 or self.col < 0:
            raise ValueError(f"negative anchor {(self.row, self.col)}")
        if self.length == 1 and self.orient is Orientation.VERTICAL:
            object.__setattr__(self, "orient", Orientation.HORIZONTAL)

    def cells(self) -> list[Cell]:
        if self.orient is Orientation.HORIZONTAL:
            return [(self.row, self.col + i) for i in range(self.length)]
        return [(self.row + i, self.col) for i in range(self.length)]

    def fits(self, board: BoardSpec) -> bool:
        if self.orient is Orientation.HORIZONTAL:
            return self.row < board.rows and self.col + self.length <= board.cols
        return self.col < board.cols and self.row + self.length <= board.rows

    def __str__(self) -> str:
        return f"{self.orient.value}{self.length}@({self.row},{self.col})"


def horizontal(row: int, col: int, length: int = 2) -> Placement:
    return Placement(row, col, Orientation.HORIZONTAL, length)


def vertical(row: int, col: int, length: int = 2) -> Placement:
    return Placement(row, col, Orientation.VERTICAL, length)


@dataclass(frozen=True, eq=False)
class Tiling:
    """A validated exact cover of ``board``.

    ``ownership[r][c]`` is the index into ``placements`` of the tile that
    covers cell ``(r, c)``. Two tilings are equal when they use the same
    set of placements, regardless of listing order.
    """

    board: BoardSpec
    placements: tuple[Placement, ...]
    ownership: tuple[tuple[int, ...], ...]

    def owner(self, cell: Cell) -> int:
        r, c = cell
        return self.ownership[r][c]

    def offset(self, cell: Cell) -> int:
        p = self.placements[self.owner(cell)]
        return (cell[0] - p.row) + (cell[1] - p.col)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.board == other.board and frozenset(self.placements) == frozenset(
            other.placements
        )

    def __hash__(self) -> int:
        return hash((self.board, frozenset(self.placements)))

    def __len__(self) -> int:
        return len(self.placements)

    def transformed(self, flip_rows: bool = False, flip_cols: bool = False) -> "Tiling":
        """Reflect the tiling top-bottom and/or left-right.

        Both flips together give the 180 degree rotation.
        """
        rows, cols = self.board.rows, self.board.cols
        moved = []
        for p in self.placements:
            r, c = p.row, p.col
            if flip_rows:
                r = rows - 1 - r - (p.length - 1 if p.orient is Orientation.VERTICAL else 0)
            if flip_cols:
                c = cols - 1 - c - (p.length - 1 if p.orient is Orientation.HORIZONTAL else 0)
            moved.append(Placement(r, c, p.orient, p.length))
        return validate_tiling(self.board, moved)

    def transposed(self) -> "Tiling":
        """Mirror across the main diagonal (rows become columns)."""
        flipped = {
            Orientation.HORIZONTAL: Orientation.VERTICAL,
            Orientation.VERTICAL: Orientation.HORIZONTAL,
        }
        moved = [Placement(p.col, p.row, flipped[p.orient], p.length) for p in self.placements]
        return validate_tiling(self.board.transposed(), moved)


def validate_tiling(board: BoardSpec, placements: Iterable[Placement]) -> Tiling:
    """Check that ``placements`` partition ``board`` and build the ownership grid."""
    placements = tuple(placements)
    grid = [[-1] * board.cols for _ in range(board.rows)]
    for idx, p in enumerate(placements):
        if not p.fits(board):
            raise OutOfBoundsError(p)
        for r, c in p.cells():
            if grid[r][c] != -1:
                raise OverlapError((r, c))
            grid[r][c] = idx
    for r, c in board.cells():
        if grid[r][c] == -1:
            raise CoverageError((r, c))
    return Tiling(board, placements, tuple(tuple(row) for row in grid))


@dataclass(frozen=True, order=True)
class TatamiViolation:
    """An interior vertex surrounded by four distinct tiles."""

    vx: int
    vy: int


def tatami_violations(tiling: Tiling) -> list[TatamiViolation]:
    own = tiling.ownership
    found = []
    for vy in range(1, tiling.board.rows):
        above, below = own[vy - 1], own[vy]
        for vx in range(1, tiling.board.cols):
            quad = {above[vx - 1], above[vx], below[vx - 1], below[vx]}
            if len(quad) == 4:
                found.append(TatamiViolation(vx, vy))
    return found


def is_tatami(tiling: Tiling) -> tuple[bool, list[TatamiViolation]]:
    """Return ``(ok, violations)``; ``ok`` is True iff no four tiles meet at a point."""
    violations = tatami_violations(tiling)
    return (not violations, violations)


# Junction glyphs keyed by which of the (up, down, left, right) edges are drawn.
_JUNCTIONS = {
    (0, 0, 0, 0): " ",
    (0, 0, 1, 1): "─",
    (1, 1, 0, 0): "│",
    (0, 1, 0, 1): "┌",
    (0, 1, 1, 0): "┐",
    (1, 0, 0, 1): "└",
    (1, 0, 1, 0): "┘",
    (1, 1, 0, 1): "├",
    (1, 1, 1, 0): "┤",
    (0, 1, 1, 1): "┬",
    (1, 0, 1, 1): "┴",
    (1, 1, 1, 1): "┼",
    (0, 0, 0, 1): "╶",
    (0, 0, 1, 0): "╴",
    (1, 0, 0, 0): "╵",
    (0, 1, 0, 0): "╷",
}

CELL_WIDTH = 3


def render_ascii(tiling: Tiling) -> str:
    """Draw the tiling with box-drawing characters.

    Output has ``2*rows + 1`` lines, alternating boundary lines and cell
    lines; every cell is ``CELL_WIDTH`` characters wide. An edge between two
    cells is drawn only when different tiles own them.
    """
    rows, cols = tiling.board.rows, tiling.board.cols
    own = tiling.ownership

    def h_edge(vy: int, c: int) -> bool:
        # horizontal edge above cell row vy, spanning column c
        if vy == 0 or vy == rows:
            return True
        return own[vy - 1][c] != own[vy][c]

    def v_edge(r: int, vx: int) -> bool:
        # vertical edge left of column vx, spanning cell row r
        if vx == 0 or vx == cols:
            return True
        return own[r][vx - 1] != own[r][vx]

    lines = []
    for vy in range(rows + 1):
        parts = []
        for vx in range(cols + 1):
            up = vy > 0 and v_edge(vy - 1, vx)
            down = vy < rows and v_edge(vy, vx)
            left = vx > 0 and h_edge(vy, vx - 1)
            right = vx < cols and h_edge(vy, vx)
            parts.append(_JUNCTIONS[(int(up), int(down), int(left), int(right))])
            if vx < cols:
                parts.append(("─" if h_edge(vy, vx) else " ") * CELL_WIDTH)
        lines.append("".join(parts))
        if vy < rows:
            parts = []
            for vx in range(cols + 1):
                parts.append("│" if v_edge(vy, vx) else " ")
                if vx < cols:
                    parts.append(" " * CELL_WIDTH)
            lines.append("".join(parts))
    return "\n".join(line.rstrip() for line in lines)

"""Ground-truth counters that know nothing about recurrences.

Two independent engines live here:

* a backtracking search that places tiles on the first uncovered cell in
  row-major order, optionally rejecting tatami violations as soon as the
  four cells around a vertex are filled;
* a column-sweep ("broken profile") dynamic program whose state records,
  per row, how many more columns a horizontal tile still occupies.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .grid import BoardSpec, Orientation, Placement, Tiling, validate_tiling

DEFAULT_MAX_CELLS = 64


class BudgetExceeded(RuntimeError):
    pass


class StateSpaceTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationConfig:
    tile_len: int = 2
    tatami_filter: bool = False
    limit: int | None = None
    deterministic_order: bool = True

    def __post_init__(self) -> None:
        if self.tile_len < 1:
            raise ValueError(f"tile_len must be >= 1, got {self.tile_len}")
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be positive, got {self.limit}")


class _Search:
    """Mutable backtracking state over a flat ownership array."""

    def __init__(self, board: BoardSpec, cfg: EnumerationConfig) -> None:
        self.rows, self.cols = board.rows, board.cols
        self.k = cfg.tile_len
        self.tatami = cfg.tatami_filter
        self.owner = [-1] * board.area
        self.stack: list[Placement] = []
        orients = [Orientation.HORIZONTAL]
        if self.k > 1:
            orients.append(Orientation.VERTICAL)
        if not cfg.deterministic_order:
            orients.reverse()
        self.orients = orients

    def _cells(self, r: int, c: int, orient: Orientation) -> list[int] | None:
        k, cols = self.k, self.cols
        if orient is Orientation.HORIZONTAL:
            if c + k > cols:
                return None
            idx = [r * cols + c + i for i in range(k)]
        else:
            if r + k > self.rows:
                return None
            idx = [(r + i) * cols + c for i in range(k)]
        if any(self.owner[i] != -1 for i in idx):
            return None
        return idx

    def _breaks_tatami(self, cells: list[int]) -> bool:
        own, cols, rows = self.owner, self.cols, self.rows
        for i in cells:
            r, c = divmod(i, cols)
            for vy in (r, r + 1):
                if vy == 0 or vy == rows:
                    continue
                for vx in (c, c + 1):
                    if vx == 0 or vx == cols:
                        continue
                    a = own[(vy - 1) * cols + vx - 1]
                    b = own[(vy - 1) * cols + vx]
                    d = own[vy * cols + vx - 1]
                    e = own[vy * cols + vx]
                    if -1 in (a, b, d, e):
                        continue
                    if len({a, b, d, e}) == 4:
                        return True
        return False

    def moves(self, pos: int) -> Iterator[tuple[Placement, list[int]]]:
        """Legal placements anchored at flat cell ``pos``, applied in turn.

        Each yielded move is live on the board until the caller resumes the
        iterator, which undoes it.
        """
        r, c = divmod(pos, self.cols)
        tag = len(self.stack)
        for orient in self.orients:
            cells = self._cells(r, c, orient)
            if cells is None:
                continue
            for i in cells:
                self.owner[i] = tag
            if not (self.tatami and self._breaks_tatami(cells)):
                p = Placement(r, c, orient, self.k)
                self.stack.append(p)
                yield p, cells
                self.stack.pop()
            for i in cells:
                self.owner[i] = -1

    def next_free(self, pos: int) -> int:
        own, n = self.owner, len(self.owner)
        while pos < n and own[pos] != -1:
            pos += 1
        return pos

    def walk(self, pos: int = 0) -> Iterator[tuple[Placement, ...]]:
        pos = self.next_free(pos)
        if pos == len(self.owner):
            yield tuple(self.stack)
            return
        for _ in self.moves(pos):
            yield from self.walk(pos + 1)

    def count(self, pos: int = 0) -> int:
        pos = self.next_free(pos)
        if pos == len(self.owner):
            return 1
        total = 0
        for _ in self.moves(pos):
            total += self.count(pos + 1)
        return total


def enumerate_tilings(board: BoardSpec, cfg: EnumerationConfig | None = None) -> Iterator[Tiling]:
    """Yield every tiling of ``board`` by 1 x ``cfg.tile_len`` tiles exactly once.

    With ``deterministic_order`` the canonical order is used: fill the first
    uncovered cell in row-major order, horizontal before vertical.
    """
    cfg = cfg or EnumerationConfig()
    if board.area % cfg.tile_len:
        return
    search = _Search(board, cfg)
    for n, placements in enumerate(search.walk(), start=1):
        yield validate_tiling(board, placements)
        if cfg.limit is not None and n >= cfg.limit:
            return


def _check_budget(board: BoardSpec, max_cells: int | None, force: bool) -> None:
    if force or max_cells is None:
        return
    if board.area > max_cells:
        raise BudgetExceeded(
            f"{board.rows}x{board.cols} board has {board.area} cells, over the "
            f"{max_cells}-cell search budget"
        )


def _count_subtree(board: BoardSpec, cfg: EnumerationConfig, first: Placement) -> int:
    search = _Search(board, cfg)
    for p, _ in search.moves(0):
        if p == first:
            return search.count(1)
    return 0


def count_exhaustive(
    board: BoardSpec,
    cfg: EnumerationConfig | None = None,
    *,
    max_cells: int | None = DEFAULT_MAX_CELLS,
    force: bool = False,
    workers: int = 1,
) -> int:
    """Count tilings by exhaustive search.

    ``limit`` in ``cfg`` is ignored: it caps enumeration output, not the count.
    With ``workers > 1`` the search is split on the placement covering cell
    (0, 0) and the subtrees are counted in separate processes.
    """
    cfg = cfg or EnumerationConfig()
    _check_budget(board, max_cells, force)
    if board.area == 0:
        return 1
    if board.area % cfg.tile_len:
        return 0
    if workers <= 1:
        return _Search(board, cfg).count()
    firsts = [p for p, _ in _Search(board, cfg).moves(0)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_count_subtree, [board] * len(firsts), [cfg] * len(firsts), firsts)
        return sum(parts)


def default_max_rows(tile_len: int) -> int:
    return 12 if tile_len <= 2 else 10


def _column_transitions(state: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    """All successor profiles after filling one column entering with ``state``.

    ``state[r] > 0`` means cell ``r`` of this column is already covered by a
    horizontal tile from the left that still spans ``state[r] - 1`` columns
    beyond this one.
    """
    rows = len(state)
    out: list[tuple[int, ...]] = []
    nxt = [0] * rows

    def fill(r: int) -> None:
        if r == rows:
            out.append(tuple(nxt))
            return
        if state[r]:
            nxt[r] = state[r] - 1
            fill(r + 1)
            return
        # start a horizontal tile here (for k == 1 this is the only tile)
        nxt[r] = k - 1
        fill(r + 1)
        if k > 1 and r + k <= rows and not any(state[r : r + k]):
            for i in range(r, r + k):
                nxt[i] = 0
            fill(r + k)

    fill(0)
    return out


def count_profile_dp(board: BoardSpec, tile_len: int, *, max_rows: int | None = None) -> int:
    """Count tilings by sweeping columns left to right over protrusion profiles.

    Only reachable profiles are stored, so the cost is linear in ``cols``
    and bounded by ``tile_len ** rows`` states per column.
    """
    if tile_len < 1:
        raise ValueError(f"tile_len must be >= 1, got {tile_len}")
    cap = default_max_rows(tile_len) if max_rows is None else max_rows
    if board.rows > cap:
        raise StateSpaceTooLarge(
            f"{board.rows} rows exceeds the profile cap of {cap} for tile length {tile_len}"
        )
    if board.area % tile_len:
        return 0
    start = (0,) * board.rows
    layer = {start: 1}
    succ: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for _ in range(board.cols):
        nxt: dict[tuple[int, ...], int] = {}
        for state, ways in layer.items():
            if state not in succ:
                succ[state] = _column_transitions(state, tile_len)
            for s in succ[state]:
                nxt[s] = nxt.get(s, 0) + ways
        layer = nxt
    return layer.get(start, 0)

"""Exact counting sequences for the solved board families.

Every family is reduced to a constant-coefficient integer recurrence over
a compressed index ``p`` with ``m = step * p``; widths that are not a
multiple of ``step`` have no tilings. All arithmetic is on Python ints.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence


class IndexBeforeStart(IndexError):
    pass


@dataclass(frozen=True)
class LinearRecurrence:
    """``a(n) = sum(coeffs[i-1] * a(n-i))`` for ``n >= valid_from``.

    ``initial`` holds ``a(start_index), a(start_index+1), ...`` and must
    reach at least up to ``valid_from - 1``.
    """

    coeffs: tuple[int, ...]
    initial: tuple[int, ...]
    start_index: int = 0
    valid_from: int | None = None

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a recurrence needs at least one coefficient")
        valid = self.start_index + len(self.initial) if self.valid_from is None else self.valid_from
        object.__setattr__(self, "valid_from", valid)
        if valid - self.start_index < self.order:
            raise ValueError(
                f"need {self.order} initial terms before index {valid}, "
                f"got {valid - self.start_index}"
            )
        if len(self.initial) < valid - self.start_index:
            raise ValueError("initial terms stop short of valid_from")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def seed(self) -> list[int]:
        """The last ``order`` initial terms, oldest first, ending at ``valid_from - 1``."""
        end = self.valid_from - self.start_index
        return list(self.initial[end - self.order : end])


def _check_index(rec: LinearRecurrence, n: int) -> None:
    if n < rec.start_index:
        raise IndexBeforeStart(f"index {n} precedes start index {rec.start_index}")


def eval_linear_recurrence(rec: LinearRecurrence, n: int) -> int:
    """Evaluate ``a(n)`` by forward iteration."""
    _check_index(rec, n)
    if n < rec.valid_from:
        return rec.initial[n - rec.start_index]
    window = rec.seed()
    rev = rec.coeffs[::-1]
    for _ in range(n - rec.valid_from + 1):
        nxt = sum(c * a for c, a in zip(rev, window))
        window.append(nxt)
        del window[0]
    return window[-1]


def terms(rec: LinearRecurrence, upto: int) -> list[int]:
    """``[a(start_index), ..., a(upto)]`` in one pass."""
    k = rec.order
    rev = rec.coeffs[::-1]
    out: list[int] = []
    for n in range(rec.start_index, upto + 1):
        if n < rec.valid_from:
            out.append(rec.initial[n - rec.start_index])
        else:
            out.append(sum(c * a for c, a in zip(rev, out[-k:])))
    return out


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _matvec(a: list[list[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def companion_matrix(rec: LinearRecurrence) -> list[list[int]]:
    """Matrix sending ``(a(n-1), ..., a(n-order))`` to ``(a(n), ..., a(n-order+1))``."""
    k = rec.order
    top = list(rec.coeffs)
    rows = [top]
    for i in range(k - 1):
        rows.append([1 if j == i else 0 for j in range(k)])
    return rows


def companion_matrix_term(rec: LinearRecurrence, n: int) -> int:
    """Evaluate ``a(n)`` with O(log n) exact companion-matrix products."""
    _check_index(rec, n)
    if n < rec.valid_from:
        return rec.initial[n - rec.start_index]
    steps = n - rec.valid_from + 1
    state = rec.seed()[::-1]  # newest first
    base = companion_matrix(rec)
    # apply base**steps to state: square the matrix, apply odd bits to the vector
    while steps:
        if steps & 1:
            state = _matvec(base, state)
        steps >>= 1
        if steps:
            base = _matmul(base, base)
    return state[0]


class Family(enum.Enum):
    DOMINO_2XM = "domino-2xm"
    DOMINO_3XM = "domino-3xm"
    DOMINO_4XM = "domino-4xm"
    TROMINO_4XM = "tromino-4xm"
    SQUARE_TILE = "square-tile"
    KPLUS1 = "kplus1"
    TATAMI_2XM = "tatami-2xm"
    TATAMI_3XM = "tatami-3xm"
    TATAMI_4XM = "tatami-4xm"


_PARAMETRIC = {Family.SQUARE_TILE, Family.KPLUS1}
_TATAMI = {Family.TATAMI_2XM, Family.TATAMI_3XM, Family.TATAMI_4XM}


@dataclass(frozen=True)
class FamilySpec:
    """One of the solved configurations.

    ``k`` is the tile length for ``SQUARE_TILE`` (board is k x m) and
    ``KPLUS1`` (board is (k+1) x m); it is ignored elsewhere.
    """

    family: Family
    k: int | None = field(default=None)

    def __post_init__(self) -> None:
        if self.family in _PARAMETRIC:
            if self.k is None or self.k < 2:
                raise ValueError(f"{self.family.value} needs a tile length k >= 2")
        elif self.k is not None:
            object.__setattr__(self, "k", None)

    @property
    def name(self) -> str:
        if self.family in _PARAMETRIC:
            return f"{self.family.value}:{self.k}"
        return self.family.value

    @property
    def rows(self) -> int:
        if self.family is Family.SQUARE_TILE:
            return self.k
        if self.family is Family.KPLUS1:
            return self.k + 1
        return {
            Family.DOMINO_2XM: 2,
            Family.DOMINO_3XM: 3,
            Family.DOMINO_4XM: 4,
            Family.TROMINO_4XM: 4,
            Family.TATAMI_2XM: 2,
            Family.TATAMI_3XM: 3,
            Family.TATAMI_4XM: 4,
        }[self.family]

    @property
    def tile_len(self) -> int:
        if self.family in _PARAMETRIC:
            return self.k
        return 3 if self.family is Family.TROMINO_4XM else 2

    @property
    def tatami(self) -> bool:
        return self.family in _TATAMI

    def __str__(self) -> str:
        return self.name


DOMINO_2XM = FamilySpec(Family.DOMINO_2XM)
DOMINO_3XM = FamilySpec(Family.DOMINO_3XM)
DOMINO_4XM = FamilySpec(Family.DOMINO_4XM)
TROMINO_4XM = FamilySpec(Family.TROMINO_4XM)
TATAMI_2XM = FamilySpec(Family.TATAMI_2XM)
TATAMI_3XM = FamilySpec(Family.TATAMI_3XM)
TATAMI_4XM = FamilySpec(Family.TATAMI_4XM)


def square_tile(k: int) -> FamilySpec:
    return FamilySpec(Family.SQUARE_TILE, k)


def kplus1(k: int) -> FamilySpec:
    return FamilySpec(Family.KPLUS1, k)


def parse_family(name: str, k: int | None = None) -> FamilySpec:
    """Build a FamilySpec from ``"domino-4xm"``, ``"kplus1:3"`` or ``("kplus1", 3)``."""
    base, _, param = name.strip().lower().partition(":")
    try:
        fam = Family(base)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise ValueError(f"unknown family {name!r} (known: {known})") from None
    if param:
        k = int(param)
    return FamilySpec(fam, k)


def infer_family(rows: int, tile_len: int, tatami: bool = False) -> FamilySpec | None:
    """The family whose board has ``rows`` rows and uses 1 x ``tile_len`` tiles."""
    if tatami:
        if tile_len != 2:
            return None
        return {2: TATAMI_2XM, 3: TATAMI_3XM, 4: TATAMI_4XM}.get(rows)
    if tile_len == 2 and rows in (2, 3, 4):
        return {2: DOMINO_2XM, 3: DOMINO_3XM, 4: DOMINO_4XM}[rows]
    if tile_len == 3 and rows == 4:
        return TROMINO_4XM
    if tile_len >= 2 and rows == tile_len:
        return square_tile(tile_len)
    if tile_len >= 2 and rows == tile_len + 1:
        return kplus1(tile_len)
    return None


def stars_and_bars(zeros: int, gaps: int) -> int:
    """Ways to drop ``zeros`` identical items into ``gaps`` ordered gaps."""
    if zeros < 0 or gaps < 1:
        raise ValueError(f"need zeros >= 0 and gaps >= 1, got {zeros}, {gaps}")
    return comb(zeros + gaps - 1, gaps - 1)


def _kplus1_recurrence(k: int) -> LinearRecurrence:
    # Summing the full-history weights as a power series in x = z**k gives
    # A(x) = (1-x)**(k-1) / ((1-x)**k - 2x), so b(p) obeys the recurrence
    # read off the denominator once p >= k.
    coeffs = [-((-1) ** i) * comb(k, i) for i in range(1, k + 1)]
    coeffs[0] += 2
    initial = [_kplus1_full_history(k, p) for p in range(k)]
    return LinearRecurrence(tuple(coeffs), tuple(initial), 0, k)


@dataclass(frozen=True)
class FamilyRecurrence:
    """A family's count as ``a(step * p) = rec(p)``; other widths are zero."""

    rec: LinearRecurrence
    step: int = 1


@lru_cache(maxsize=None)
def family_recurrence(f: FamilySpec) -> FamilyRecurrence:
    """The telescoped recurrence for ``f``, with ``a(0) = 1`` prepended."""
    fam = f.family
    if fam is Family.DOMINO_2XM:
        return FamilyRecurrence(LinearRecurrence((1, 1), (1, 1), 0, 2))
    if fam is Family.DOMINO_3XM:
        return FamilyRecurrence(LinearRecurrence((4, -1), (1, 3), 0, 2), step=2)
    if fam is Family.DOMINO_4XM:
        return FamilyRecurrence(LinearRecurrence((1, 5, 1, -1), (1, 1, 5, 11, 36), 0, 5))
    if fam is Family.TROMINO_4XM:
        return FamilyRecurrence(LinearRecurrence((5, -3, 1), (1, 3, 13, 57), 0, 4), step=3)
    if fam is Family.SQUARE_TILE:
        k = f.k
        coeffs = (1,) + (0,) * (k - 2) + (1,)
        return FamilyRecurrence(LinearRecurrence(coeffs, (1,) * k + (2,), 0, k + 1))
    if fam is Family.KPLUS1:
        return FamilyRecurrence(_kplus1_recurrence(f.k), step=f.k)
    if fam is Family.TATAMI_2XM:
        return FamilyRecurrence(LinearRecurrence((1, 0, 1), (1, 1, 2, 3), 0, 4))
    if fam is Family.TATAMI_3XM:
        # over even widths: a(2p) = a(2p-2) + a(2p-4) from width 8 on
        return FamilyRecurrence(LinearRecurrence((1, 1), (1, 3, 4, 6), 0, 4), step=2)
    if fam is Family.TATAMI_4XM:
        initial = (1, 1, 4, 4, 2, 3, 3, 3, 5)
        return FamilyRecurrence(LinearRecurrence((0, 0, 1, 0, 1), initial, 0, 9))
    raise AssertionError(fam)


def count_family(f: FamilySpec, m: int) -> int:
    """Number of (tatami) tilings of the family's board of width ``m``."""
    if m < 0:
        raise ValueError(f"width must be >= 0, got {m}")
    fr = family_recurrence(f)
    p, rem = divmod(m, fr.step)
    if rem:
        return 0
    return eval_linear_recurrence(fr.rec, p)


def sequence(f: FamilySpec, upto: int) -> list[int]:
    """Counts for widths ``0..upto``."""
    if upto < 0:
        raise ValueError(f"upto must be >= 0, got {upto}")
    fr = family_recurrence(f)
    reduced = terms(fr.rec, upto // fr.step)
    out = [0] * (upto + 1)
    for p, v in enumerate(reduced):
        out[p * fr.step] = v
    return out


def count_square_tile_family(m: int, n: int) -> int:
    """Tilings of an m x n board by 1 x m tiles."""
    if m < 2 or n < 0:
        raise ValueError(f"need m >= 2 and n >= 0, got {m}, {n}")
    if n < m:
        return 1
    # a(n) = a(n-1) + a(n-m); keep the last m values
    window = [1] * (m - 1) + [2]
    for _ in range(n - m):
        window.append(window[-1] + window[-m])
        del window[0]
    return window[-1]


def _kplus1_full_history(k: int, p: int) -> int:
    # b(p) = 3 b(p-1) + 2 * sum_{n=2..p} C(k+n-3, n-1) b(p-n), b(0) = 1
    b = [1]
    for q in range(1, p + 1):
        total = 3 * b[q - 1]
        for n in range(2, q + 1):
            total += 2 * stars_and_bars(k - 2, n) * b[q - n]
        b.append(total)
    return b[p]


def count_kplus1_family(k: int, m: int) -> int:
    """Tilings of a (k+1) x m board by 1 x k tiles, via the binomial full-history sum."""
    if k < 2 or m < 0:
        raise ValueError(f"need k >= 2 and m >= 0, got {k}, {m}")
    p, rem = divmod(m, k)
    if rem:
        return 0
    return _kplus1_full_history(k, p)


def full_history_count(f: FamilySpec, m: int) -> int:
    """Evaluate the untelescoped recurrence that sums over every earlier width.

    Supported for DOMINO_3XM, TROMINO_4XM and DOMINO_4XM.
    """
    if m < 0:
        raise ValueError(f"width must be >= 0, got {m}")
    fam = f.family
    if fam is Family.DOMINO_3XM:
        if m % 2:
            return 0
        # b(q) = 3 b(q-1) + 2 (b(q-2) + ... + b(0))
        b = [1]
        for q in range(1, m // 2 + 1):
            b.append(3 * b[q - 1] + 2 * sum(b[: q - 1]))
        return b[-1]
    if fam is Family.TROMINO_4XM:
        if m % 3:
            return 0
        # c(q) = 3 c(q-1) + sum_{n=2..q} 2n c(q-n); the 2q tail is 2q * c(0)
        c = [1]
        for q in range(1, m // 3 + 1):
            c.append(3 * c[q - 1] + sum(2 * n * c[q - n] for n in range(2, q + 1)))
        return c[-1]
    if fam is Family.DOMINO_4XM:
        a = [1, 1, 5, 11, 36]
        for w in range(5, m + 1):
            total = a[w - 1] + 4 * a[w - 2] + 3
            for i in range(1, w - 2):
                # two zig-zag cases reach every narrower width; the two-column
                # jumps reach widths of the same parity down to 2
                weight = 2 + (1 if (w - i) % 2 == 0 and i >= 2 else 0)
                total += weight * a[i]
            a.append(total)
        return a[m]
    raise ValueError(f"no full-history form for {f}")

"""Engine agreement suite: recurrences against the oracles and closed forms."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import closed_form as cf
from .grid import BoardSpec
from .oracle import EnumerationConfig, count_exhaustive, count_profile_dp, default_max_rows
from .recurrences import (
    DOMINO_2XM,
    DOMINO_3XM,
    DOMINO_4XM,
    TATAMI_2XM,
    TATAMI_3XM,
    TATAMI_4XM,
    TROMINO_4XM,
    Family,
    FamilySpec,
    count_family,
    kplus1,
    parse_family,
    square_tile,
)

PARAM_RANGE = range(2, 7)


def all_families() -> list[FamilySpec]:
    fams = [DOMINO_2XM, DOMINO_3XM, DOMINO_4XM, TROMINO_4XM]
    fams += [square_tile(k) for k in PARAM_RANGE]
    fams += [kplus1(k) for k in PARAM_RANGE]
    fams += [TATAMI_2XM, TATAMI_3XM, TATAMI_4XM]
    return fams


def select_families(names: list[str] | None) -> list[FamilySpec]:
    """Resolve names such as ``tatami-4xm``, ``kplus1`` (k = 2..6) or ``kplus1:3``."""
    if not names:
        return all_families()
    out: list[FamilySpec] = []
    for name in names:
        base = name.strip().lower()
        if base in (Family.KPLUS1.value, Family.SQUARE_TILE.value):
            out += [parse_family(base, k) for k in PARAM_RANGE]
        else:
            out.append(parse_family(base))
    return out


@dataclass
class Instance:
    family: FamilySpec
    width: int
    counts: dict[str, int]

    @property
    def ok(self) -> bool:
        return len(set(self.counts.values())) == 1

    def __str__(self) -> str:
        shown = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        return f"{self.family} width {self.width}: {shown}"


@dataclass
class FloatCheck:
    label: str
    case: str
    exact: int
    approx: float
    rel_tol: float | None = None

    @property
    def ok(self) -> bool:
        if round(self.approx) != self.exact:
            return False
        if self.rel_tol is None:
            return True
        return abs(self.approx - self.exact) / max(self.exact, 1) < self.rel_tol

    def __str__(self) -> str:
        return f"{self.label} {self.case}: exact={self.exact}, approx={self.approx!r}"


@dataclass
class Report:
    max_cells: int
    instances: list[Instance] = field(default_factory=list)
    float_checks: list[FloatCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.instances) and all(c.ok for c in self.float_checks)

    def failures(self) -> list[str]:
        bad = [str(i) for i in self.instances if not i.ok]
        return bad + [str(c) for c in self.float_checks if not c.ok]

    def render(self) -> str:
        lines = [f"crosscheck, boards up to {self.max_cells} cells"]
        header = f"{'family':<16}{'widths':>8}  {'backtracking':>14}  {'profile-dp':>12}"
        lines += [header, "-" * len(header)]
        by_family: dict[str, list[Instance]] = {}
        for inst in self.instances:
            by_family.setdefault(inst.family.name, []).append(inst)
        for name, insts in by_family.items():
            widths = f"{insts[0].width}..{insts[-1].width}"
            cols = []
            for engine in ("backtracking", "profile-dp"):
                runs = [i for i in insts if engine in i.counts]
                if not runs:
                    cols.append("-")
                    continue
                agree = sum(i.counts[engine] == i.counts["recurrence"] for i in runs)
                cols.append(f"{agree}/{len(runs)}")
            lines.append(f"{name:<16}{widths:>8}  {cols[0]:>14}  {cols[1]:>12}")
        by_label: dict[str, list[FloatCheck]] = {}
        for chk in self.float_checks:
            by_label.setdefault(chk.label, []).append(chk)
        for label, checks in by_label.items():
            agree = sum(c.ok for c in checks)
            lines.append(f"{label:<24}{agree:>8}/{len(checks)}")
        failures = self.failures()
        if failures:
            lines.append(f"DISAGREEMENT in {len(failures)} case(s):")
            lines += [f"  {f}" for f in failures]
        else:
            lines.append("all engines agree")
        return "\n".join(lines)


def check_family(family: FamilySpec, max_cells: int) -> list[Instance]:
    out = []
    rows, k = family.rows, family.tile_len
    cfg = EnumerationConfig(tile_len=k, tatami_filter=family.tatami)
    width = 0
    while rows * width <= max_cells:
        board = BoardSpec(rows, width)
        counts = {
            "recurrence": count_family(family, width),
            "backtracking": count_exhaustive(board, cfg, max_cells=None),
        }
        if not family.tatami:
            cap = max(default_max_rows(k), rows)
            counts["profile-dp"] = count_profile_dp(board, k, max_rows=cap)
        out.append(Instance(family, width, counts))
        width += 1
    return out


CLOSED_FORM_RANGES = {
    "domino-2xm": ("closed-form 2xm", cf.closed_form_2xm, range(1, 31)),
    "domino-3xm": ("closed-form 3xm", cf.closed_form_3xm, range(2, 31, 2)),
    "domino-4xm": ("closed-form 4xm", cf.closed_form_4xm, range(1, 26)),
}
KASTELEYN_ROWS = {"domino-2xm": 2, "domino-3xm": 3, "domino-4xm": 4}
KASTELEYN_REL_TOL = 1e-9


def float_checks(families: list[FamilySpec]) -> list[FloatCheck]:
    checks = []
    names = {f.name for f in families}
    for name, (label, fn, widths) in CLOSED_FORM_RANGES.items():
        if name not in names:
            continue
        fam = parse_family(name)
        checks += [FloatCheck(label, f"m={m}", count_family(fam, m), fn(m)) for m in widths]
    for name, rows in KASTELEYN_ROWS.items():
        if name not in names:
            continue
        fam = parse_family(name)
        checks += [
            FloatCheck("kasteleyn", f"{rows}x{n}", count_family(fam, n), cf.kasteleyn_count(rows, n), KASTELEYN_REL_TOL)
            for n in range(1, 16)
        ]
    return checks


def run(max_cells: int, families: list[FamilySpec] | None = None) -> Report:
    if max_cells < 1:
        raise ValueError(f"max_cells must be >= 1, got {max_cells}")
    families = families or all_families()
    report = Report(max_cells)
    for fam in families:
        report.instances += check_family(fam, max_cells)
    report.float_checks = float_checks(families)
    return report

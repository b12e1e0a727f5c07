"""Floating-point closed forms and the Kasteleyn product.

These are approximations by construction: every value here is checked
against the exact integers in :mod:`tilecount.recurrences` and is only
trusted below the documented precision limits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .recurrences import DOMINO_2XM, DOMINO_3XM, DOMINO_4XM, FamilySpec

# Largest widths at which round(closed form) is known to equal the exact count.
EXACT_UP_TO = {"2xm": 60, "3xm": 50, "4xm": 30}

# Reject fits whose Vandermonde matrix is this badly conditioned.
MAX_CONDITION = 1e12


class SingularSystem(ValueError):
    pass


@dataclass(frozen=True)
class ClosedFormSpec:
    """``a(step * p) = sum(coeffs[i] * roots[i] ** p)``."""

    family: FamilySpec
    roots: tuple[float, ...]
    coeffs: tuple[float, ...]
    subsequence_step: int = 1

    def __call__(self, m: int) -> float:
        p, rem = divmod(m, self.subsequence_step)
        if rem:
            return 0.0
        return float(sum(c * r**p for c, r in zip(self.coeffs, self.roots)))

    @property
    def dominant_root(self) -> float:
        return max(self.roots, key=abs)


def fit_coefficients(roots: Sequence[float], initial: Sequence[tuple[int, int]]) -> list[float]:
    """Solve ``sum_i coeff_i * root_i ** index = value`` over the given points."""
    if len(roots) != len(initial):
        raise ValueError(f"{len(roots)} roots but {len(initial)} fitting points")
    r = np.asarray(roots, dtype=float)
    if len(r) > 1:
        gaps = np.abs(r[:, None] - r[None, :]) + np.eye(len(r))
        if gaps.min() < 1e-12 * max(1.0, np.abs(r).max()):
            raise SingularSystem(f"roots are not distinct: {list(roots)}")
    idx = np.array([i for i, _ in initial], dtype=float)
    vals = np.array([float(v) for _, v in initial])
    mat = r[None, :] ** idx[:, None]
    cond = np.linalg.cond(mat)
    if not np.isfinite(cond) or cond > MAX_CONDITION:
        raise SingularSystem(f"fitting system is ill-conditioned (cond={cond:.3g})")
    return [float(c) for c in np.linalg.solve(mat, vals)]


SQRT5 = math.sqrt(5.0)
SQRT29 = math.sqrt(29.0)

# Radicals used to split the 4xm quartic into two palindromic quadratics.
A = math.sqrt(7 + 2 * SQRT5) + math.sqrt(7 - 2 * SQRT5)
B = math.sqrt(7 + 2 * SQRT5) - math.sqrt(7 - 2 * SQRT5)
C = 1 + SQRT29
D = 1 - SQRT29
E = (29 + 7 * SQRT29) / 58
F = (29 - 7 * SQRT29) / 58
G = SQRT29 / 116

QUARTIC_ROOTS = ((A + C) / 4, (C - A) / 4, (B + D) / 4, (D - B) / 4)
# Multipliers written out by hand from the radical form; kept to cross-check the fit.
QUARTIC_COEFFS_BY_HAND = (C * G + E / A, C * G - E / A, -D * G + F / B, -D * G - F / B)


@lru_cache(maxsize=None)
def spec_2xm() -> ClosedFormSpec:
    roots = ((1 + SQRT5) / 2, (1 - SQRT5) / 2)
    return ClosedFormSpec(DOMINO_2XM, roots, tuple(fit_coefficients(roots, [(1, 1), (2, 2)])))


@lru_cache(maxsize=None)
def spec_3xm() -> ClosedFormSpec:
    roots = (2 + math.sqrt(3), 2 - math.sqrt(3))
    coeffs = fit_coefficients(roots, [(1, 3), (2, 11)])
    return ClosedFormSpec(DOMINO_3XM, roots, tuple(coeffs), subsequence_step=2)


@lru_cache(maxsize=None)
def spec_4xm() -> ClosedFormSpec:
    coeffs = fit_coefficients(QUARTIC_ROOTS, [(-1, 0), (0, 1), (1, 1), (2, 5)])
    return ClosedFormSpec(DOMINO_4XM, QUARTIC_ROOTS, tuple(coeffs))


def closed_form_2xm(m: int) -> float:
    return spec_2xm()(m)


def closed_form_3xm(m: int) -> float:
    """Zero for odd ``m``; otherwise the two-root form in ``m / 2``."""
    return spec_3xm()(m)


def closed_form_4xm(m: int) -> float:
    return spec_4xm()(m)


def kasteleyn_count(m: int, n: int) -> float:
    """Domino tilings of an m x n board from the double cosine product."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got {m}, {n}")
    if m % 2 and n % 2:
        # the j=(m+1)/2, k=(n+1)/2 factor is exactly zero
        return 0.0
    cj = [4 * math.cos(math.pi * j / (m + 1)) ** 2 for j in range(1, m + 1)]
    ck = [4 * math.cos(math.pi * k / (n + 1)) ** 2 for k in range(1, n + 1)]
    log_total = math.fsum(math.log(x + y) for x in cj for y in ck) / 4
    return math.exp(log_total)

from __future__ import annotations

import math

import numpy as np
import pytest

from tilecount import closed_form as cf
from tilecount.recurrences import DOMINO_2XM, DOMINO_3XM, DOMINO_4XM, count_family, infer_family


def test_fit_2xm():
    roots = ((1 + math.sqrt(5)) / 2, (1 - math.sqrt(5)) / 2)
    a, b = cf.fit_coefficients(roots, [(1, 1), (2, 2)])
    assert a == pytest.approx((5 + math.sqrt(5)) / 10, rel=1e-12)
    assert b == pytest.approx((5 - math.sqrt(5)) / 10, rel=1e-12)


def test_fit_single_root():
    assert cf.fit_coefficients([2.5], [(0, 1)]) == pytest.approx([1.0])


def test_fit_3xm():
    a, b = cf.fit_coefficients((2 + math.sqrt(3), 2 - math.sqrt(3)), [(1, 3), (2, 11)])
    assert a == pytest.approx((3 + math.sqrt(3)) / 6, rel=1e-12)
    assert b == pytest.approx((3 - math.sqrt(3)) / 6, rel=1e-12)


def test_fit_rejects_repeated_roots():
    with pytest.raises(cf.SingularSystem):
        cf.fit_coefficients([1.5, 1.5], [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        cf.fit_coefficients([1.5, 2.0], [(0, 1)])


@pytest.mark.parametrize("spec", [cf.spec_2xm(), cf.spec_3xm(), cf.spec_4xm()], ids=["2xm", "3xm", "4xm"])
def test_fit_reproduces_fitting_points(spec):
    fam = spec.family
    for m in range(1, 5):
        exact = count_family(fam, m)
        assert spec(m) == pytest.approx(exact, rel=1e-9, abs=1e-9)


def test_quartic_constants_agree_with_fit():
    assert cf.spec_4xm().coeffs == pytest.approx(cf.QUARTIC_COEFFS_BY_HAND, rel=1e-9)
    assert cf.spec_4xm()(-1) == pytest.approx(0.0, abs=1e-12)


def test_quartic_roots():
    x1, x2, x3, x4 = cf.QUARTIC_ROOTS
    assert x1 * x2 == pytest.approx(1.0, abs=1e-12)
    assert x3 * x4 == pytest.approx(1.0, abs=1e-12)
    assert cf.A**2 == pytest.approx(14 + 2 * math.sqrt(29), abs=1e-12)
    assert cf.B**2 == pytest.approx(14 - 2 * math.sqrt(29), abs=1e-12)
    numeric = sorted(np.roots([1, -1, -5, -1, 1]).real)
    assert sorted(cf.QUARTIC_ROOTS) == pytest.approx(numeric, abs=1e-10)
    for x in cf.QUARTIC_ROOTS:
        y = x + 1 / x
        assert y * y - y - 7 == pytest.approx(0.0, abs=1e-10)


def test_spot_values():
    assert cf.closed_form_2xm(2) == pytest.approx(2, abs=1e-9)
    assert cf.closed_form_3xm(6) == pytest.approx(41, abs=1e-6)
    assert cf.closed_form_4xm(4) == pytest.approx(36, abs=1e-6)
    assert round(cf.closed_form_4xm(25)) == count_family(DOMINO_4XM, 25)
    assert cf.closed_form_3xm(7) == 0.0


@pytest.mark.parametrize(
    "fn,fam,key,step",
    [
        (cf.closed_form_2xm, DOMINO_2XM, "2xm", 1),
        (cf.closed_form_3xm, DOMINO_3XM, "3xm", 2),
        (cf.closed_form_4xm, DOMINO_4XM, "4xm", 1),
    ],
)
def test_exact_range(fn, fam, key, step):
    for m in range(step, cf.EXACT_UP_TO[key] + 1, step):
        assert round(fn(m)) == count_family(fam, m), m


@pytest.mark.parametrize("fam,spec", [(DOMINO_2XM, cf.spec_2xm()), (DOMINO_3XM, cf.spec_3xm()), (DOMINO_4XM, cf.spec_4xm())])
def test_dominant_root_asymptotics(fam, spec):
    step = spec.subsequence_step
    ratio = count_family(fam, 40 + step) / count_family(fam, 40)
    assert abs(ratio - spec.dominant_root) / spec.dominant_root < 1e-3


def test_kasteleyn_spot_values():
    assert cf.kasteleyn_count(2, 2) == pytest.approx(2, abs=1e-9)
    assert cf.kasteleyn_count(3, 3) == 0.0
    assert cf.kasteleyn_count(1, 1) == 0.0
    assert cf.kasteleyn_count(4, 6) == pytest.approx(281, rel=1e-6)


def test_kasteleyn_agrees_with_recurrences():
    for m in (2, 3, 4):
        fam = infer_family(m, 2)
        for n in range(1, 16):
            exact = count_family(fam, n)
            approx = cf.kasteleyn_count(m, n)
            assert abs(approx - exact) / max(exact, 1) < 1e-9
            assert round(approx) == exact


def test_kasteleyn_is_symmetric():
    for m in range(1, 7):
        for n in range(1, 7):
            assert cf.kasteleyn_count(m, n) == pytest.approx(cf.kasteleyn_count(n, m), rel=1e-12)


def test_kasteleyn_rejects_empty():
    with pytest.raises(ValueError):
        cf.kasteleyn_count(0, 3)

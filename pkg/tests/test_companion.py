import json
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wpcurves import schemas
from wpcurves.companion import (
    INCONSISTENT,
    PolyhedralGroup,
    arnold_table,
    corollary_realizations,
    format_table,
    polyhedral_realize,
    table_to_json,
    twisted_companion,
    uniform_companion_chi,
)
from wpcurves.core import DomainError, WeightedCurve, euler_characteristic

C, D, Pl = PolyhedralGroup.cyclic, PolyhedralGroup.dihedral, PolyhedralGroup.platonic


@pytest.mark.parametrize(
    "ws, degrees, order, chi, genus",
    [
        ((2, 3, 6), (3, 2, 1), 6, 0, 1),
        ((2, 6, 6), (3, 1, 1), 12, -2, 2),
        ((2, 4, 4), (2, 1, 1), 8, 0, 1),
        ((3, 3, 3), (1, 1, 1), 9, 0, 1),
        ((4, 4, 4), (1, 1, 1), 16, -4, 3),
        ((2, 2, 2, 2), (1, 1, 1, 1), 8, 0, 1),
    ],
)
def test_smooth_companions(ws, degrees, order, chi, genus):
    comp = twisted_companion(ws)
    assert comp.degrees == degrees
    assert comp.group_order == order
    assert comp.chi == chi
    assert comp.smooth and comp.genus == genus


def test_weighted_companion_has_no_genus():
    comp = twisted_companion((2, 4, 6))  # degrees 6, 3, 2
    assert not comp.smooth and comp.genus is None


def test_two_points():
    assert twisted_companion((5, 5)).smooth
    assert not twisted_companion((2, 3)).smooth  # a weighted line P(3, 2)


def test_parameter_is_opaque():
    comp = twisted_companion((2, 2, 2, 2), parameter="lambda")
    assert comp.label() == "Y[2,2,2,2;lambda]"


def test_too_few_points():
    with pytest.raises(DomainError):
        twisted_companion((3,))


@pytest.mark.parametrize("a", range(2, 9))
def test_fermat(a):
    assert twisted_companion((a, a, a)).chi == -a * (a - 3)
    assert uniform_companion_chi(a, 3) == -a * (a - 3)


def test_uniform_values():
    assert uniform_companion_chi(2, 4) == 0
    assert uniform_companion_chi(2, 5) == -8
    assert uniform_companion_chi(2, 30) == -13 * 2**29


@pytest.mark.parametrize("a", range(2, 7))
@pytest.mark.parametrize("t", range(2, 7))
def test_uniform_matches_companion(a, t):
    assert uniform_companion_chi(a, t) == twisted_companion([a] * t).chi


@given(st.lists(st.integers(2, 12), min_size=2, max_size=6))
def test_companion_invariants(ws):
    comp = twisted_companion(ws)
    abar = max(d * a for d, a in zip(comp.degrees, comp.source_weights))
    assert all(d * a == abar for d, a in zip(comp.degrees, comp.source_weights))
    assert comp.chi == comp.group_order * euler_characteristic(WeightedCurve(0, ws))
    if comp.smooth:
        assert comp.chi.denominator == 1 and comp.chi % 2 == 0


def test_polyhedral_orders():
    assert [Pl(n).order for n in (3, 4, 5)] == [12, 24, 60]
    assert D(4).order == 8 and C(4).order == 4
    assert PolyhedralGroup.parse("S4") == Pl(4)
    assert PolyhedralGroup.parse("D7") == D(7)


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("a", range(2, 5))
def test_corollary_families(n, a):
    recs = corollary_realizations(n, a)
    assert recs["n,n,a"].quotient_weights == tuple(sorted((n, n, a)))
    assert recs["n,a,an"].quotient_weights == tuple(sorted((n, a, a * n)))
    assert recs["2,2a,n"].quotient_weights == tuple(sorted((2, 2 * a, n)))
    assert recs["2,2a,n"].group_order == a ** (n - 1) * 2 * n
    assert recs["3,3,2a"].group_order == a**5 * 12
    assert recs["3,4,2a"].quotient_weights == tuple(sorted((2 * a, 3, 4)))
    assert recs["3,5,2a"].group_order == a**29 * 60
    for rec in recs.values():
        assert rec.problems() == []


def test_cyclic_pair():
    rec = polyhedral_realize(C(5), (1, 1, 0), 3, 0)
    assert rec.quotient_weights == (15, 15)
    assert rec.group_order == 3 * 5


@given(
    st.sampled_from([C(n) for n in range(2, 7)] + [D(n) for n in range(2, 7)] + [Pl(n) for n in (3, 4, 5)]),
    st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)),
    st.integers(1, 5),
    st.integers(0, 2),
)
def test_riemann_hurwitz_closure(P, eps, a, r):
    if P.name.startswith("C"):
        eps = (eps[0], eps[1], 0)
    rec = polyhedral_realize(P, eps, a, r)
    assert rec.chi_cover == rec.group_order * rec.chi_quotient
    assert rec.problems() == []


def test_cyclic_third_orbit_rejected():
    with pytest.raises(DomainError):
        polyhedral_realize(C(3), (0, 0, 1), 2, 0)


def _row(rows, weights, k=0):
    return [r for r in rows if r.weights == weights][k]


def test_table_audit():
    rows = arnold_table()
    assert len(rows) == 16
    assert len({r.weights for r in rows}) == 14
    bad = [r for r in rows if not r.consistent]
    assert [r.weights for r in bad] == [(2, 3, 9)]
    assert bad[0].flags == (INCONSISTENT,)


def test_table_rows():
    rows = arnold_table()
    r = _row(rows, (2, 3, 8)).recomputed
    assert (r.group_order, -r.chi_quotient, -r.chi_cover, r.genus_cover) == (96, Fraction(1, 24), 4, 3)
    r = _row(rows, (4, 4, 4)).recomputed
    assert (r.group_order, -r.chi_quotient, -r.chi_cover, r.genus_cover) == (16, Fraction(1, 4), 4, 3)
    r = _row(rows, (2, 3, 9)).recomputed
    assert (r.group_order, -r.chi_quotient, -r.chi_cover, r.genus_cover) == (324, Fraction(1, 18), 18, 10)
    r = _row(rows, (3, 4, 5)).recomputed
    assert r.group_order == 2**29 * 60
    assert -r.chi_cover == 13 * 2**29
    assert r.genus_cover == 13 * 2**28 + 1


def test_table_outputs():
    rows = arnold_table()
    doc = json.loads(table_to_json(rows))
    jsonschema.validate(doc, schemas.ARNOLD_TABLE)
    text = format_table(rows, audit=True)
    assert text.count(INCONSISTENT) == 1
    assert "x^5+y^5+z^z" in text

"""The vectorized search against a plain itertools enumeration."""

import math
from functools import lru_cache
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpcurves.foxsearch import WitnessNotFound, cycle_types, min_degree, search_triple, type_representative
from wpcurves.fuchsian import fox_witness_search


def _order(p):
    seen, k = set(), 1
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        k = math.lcm(k, length)
    return k


@lru_cache(maxsize=None)
def _by_order(n, k):
    return [p for p in permutations(range(n)) if _order(p) == k]


def naive_exists(a, b, c, n):
    """Is there (x, y) in S_n with orders a, b and x*y of order c?  Left-to-right product."""
    for x in _by_order(n, a):
        for y in _by_order(n, b):
            if _order(tuple(y[x[i]] for i in range(n))) == c:
                return True
    return False


def naive_min_degree(a, b, c, limit=6):
    for n in range(1, limit + 1):
        if naive_exists(a, b, c, n):
            return n
    return None


SMALL = [(2, 2, 2), (2, 2, 3), (2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 4, 5), (2, 5, 5), (3, 3, 3),
         (3, 3, 4), (4, 4, 4), (2, 3, 6), (2, 4, 4), (2, 2, 5), (1, 4, 4), (6, 6, 1), (3, 4, 6)]


@pytest.mark.parametrize("abc", SMALL)
def test_degree_is_minimal(abc):
    w = fox_witness_search(*abc)
    expected = naive_min_degree(*abc)
    assert expected is not None
    assert w.degree == expected


def test_klein_triple_needs_degree_seven():
    assert not naive_exists(2, 3, 7, 6)
    assert fox_witness_search(2, 3, 7).degree == 7


def test_two_two_two():
    w = fox_witness_search(2, 2, 2)
    assert (str(w.c1), str(w.c2), str(w.c3)) == ("(1,2)", "(3,4)", "(1,2)(3,4)")


@pytest.mark.parametrize("k, n", [(1, 1), (2, 2), (6, 5), (7, 7), (12, 7), (30, 10), (8, 8)])
def test_min_degree(k, n):
    assert min_degree(k) == n


@pytest.mark.parametrize("n, k", [(6, 2), (7, 6), (8, 4), (9, 3)])
def test_cycle_type_representatives(n, k):
    types = cycle_types(n, k)
    # every element of order k in S_n has one of these types
    assert {tuple(sorted(
        (len(c) for c in _cycles(p)), reverse=True)) for p in _by_order(n, k)} == {
        tuple(x for x in t if x > 1) for t in types}
    for t in types:
        assert type_representative(t).order() == k


def _cycles(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def test_not_found():
    with pytest.raises(WitnessNotFound):
        search_triple(2, 3, 7, max_degree=6)


@settings(max_examples=25)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_found_witness_is_valid(a, b, c):
    lo, mid, hi = sorted((a, b, c))
    if lo == 1 and mid != hi:
        with pytest.raises(WitnessNotFound):
            fox_witness_search(a, b, c, max_degree=12)
        return
    w = fox_witness_search(a, b, c, max_degree=12)
    assert (w.c1.order(), w.c2.order(), w.c3.order()) == (a, b, c)
    assert (w.c1 * w.c2 * w.c3).is_identity()


@pytest.mark.parametrize("abc", [(2, 3, 7), (3, 3, 4), (2, 5, 6), (4, 5, 6)])
def test_worker_count_does_not_change_result(abc):
    one = fox_witness_search(*abc, workers=1)
    two = fox_witness_search(*abc, workers=2)
    assert (one.c1, one.c2) == (two.c1, two.c2)

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from helpline.lp import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    UnboundedRelaxation,
    is_feasible,
    maximize_free,
    minimize_standard,
    variable_bounds,
)


def box_rows(k, lo, hi):
    rows, rhs = [], []
    for j in range(k):
        e = [0] * k
        e[j] = 1
        rows.append(e)
        rhs.append(hi)
        rows.append([-v for v in e])
        rhs.append(-lo)
    return rows, rhs


def test_standard_form_small():
    # min x + y s.t. x + 2y = 4, x, y >= 0  ->  y = 2
    res = minimize_standard([1, 1], [[1, 2]], [4])
    assert res.status == OPTIMAL
    assert res.value == 2
    assert res.x == [0, 2]


def test_standard_form_infeasible():
    assert minimize_standard([1], [[1]], [-1]).status == INFEASIBLE


def test_standard_form_unbounded():
    assert minimize_standard([-1, 0], [[1, -1]], [0]).status == UNBOUNDED


def test_triangle_bounds():
    rows = [[-1, 0], [0, -1], [1, 1]]
    rhs = [0, 0, Fraction(5, 2)]
    assert variable_bounds(rows, rhs) == [(0, Fraction(5, 2)), (0, Fraction(5, 2))]
    assert maximize_free([1, 2], rows, rhs).value == 5


def test_empty_polytope():
    assert not is_feasible([[1], [-1]], [0, -1])
    assert variable_bounds([[1], [-1]], [0, -1]) is None
    assert maximize_free([1], [[1], [-1]], [0, -1]).status == INFEASIBLE


def test_unbounded_relaxation():
    with pytest.raises(UnboundedRelaxation):
        variable_bounds([[1, 1]], [3])
    assert maximize_free([1, 0], [[1, 1]], [3]).status == UNBOUNDED


def test_degenerate_point():
    rows = [[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1]]
    assert variable_bounds(rows, [1, -1, 2, -2, 3]) == [(1, 1), (2, 2)]


systems = st.integers(2, 4).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.lists(st.integers(-4, 4), min_size=k, max_size=k), min_size=0, max_size=5),
    st.lists(st.integers(-6, 6), min_size=5, max_size=5),
))


@settings(max_examples=60, deadline=None)
@given(systems)
def test_bounds_agree_with_scipy(system):
    k, extra, rhs = system
    rows, b = box_rows(k, -5, 5)
    rows += extra
    b += rhs[: len(extra)]
    exact = variable_bounds(rows, b)
    a = np.array(rows, dtype=float)
    bb = np.array(b, dtype=float)
    free = [(None, None)] * k
    probe = linprog(np.zeros(k), A_ub=a, b_ub=bb, bounds=free, method="highs")
    if exact is None:
        assert probe.status == 2
        return
    assert probe.status == 0
    for j in range(k):
        c = np.zeros(k)
        c[j] = 1
        lo = linprog(c, A_ub=a, b_ub=bb, bounds=free, method="highs").fun
        hi = -linprog(-c, A_ub=a, b_ub=bb, bounds=free, method="highs").fun
        assert abs(float(exact[j][0]) - lo) < 1e-7
        assert abs(float(exact[j][1]) - hi) < 1e-7


@settings(max_examples=60, deadline=None)
@given(systems, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_maximum_agrees_with_scipy(system, obj):
    k, extra, rhs = system
    rows, b = box_rows(k, -3, 7)
    rows += extra
    b += rhs[: len(extra)]
    res = maximize_free(obj[:k], rows, b)
    ref = linprog(-np.array(obj[:k], dtype=float), A_ub=np.array(rows, dtype=float),
                  b_ub=np.array(b, dtype=float), bounds=[(None, None)] * k, method="highs")
    if res.status == INFEASIBLE:
        assert ref.status == 2
    else:
        assert ref.status == 0
        assert abs(float(res.value) + ref.fun) < 1e-7

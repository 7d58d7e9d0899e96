"""Pell solver against pinned witnesses, a brute-force oracle, and sympy."""
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.solvers.diophantine.diophantine import diop_DN

from quartaut import pell


def test_solvable_examples_with_witnesses():
    assert pell.has_solution(17, 8)
    assert pell.solve(17, 8) == (5, 1)
    assert pell.has_solution(41, -8)
    assert pell.solve(41, -8) == (19, 3)
    assert not pell.has_solution(20, 8)
    assert pell.solve(20, 8) is None
    # isotropic witness off the axis needs square r
    assert pell.has_solution(25, 0, nonzero_y=True)
    assert pell.solve(25, 0, nonzero_y=True) == (5, 1)
    assert not pell.has_solution(17, 0, nonzero_y=True)


def test_solutions_up_to_examples():
    assert set(pell.solutions_up_to(17, 8, 1)) == {(5, 1), (5, -1), (-5, 1), (-5, -1)}
    assert pell.solutions_up_to(48, -8, 10) == []
    assert set(pell.solutions_up_to(9, -8, 1)) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_solutions_up_to_ordering():
    sols = pell.solutions_up_to(17, 8, 7)
    assert sols == sorted(sols, key=lambda s: (abs(s[1]), s[1], s[0]))
    assert (29, 7) in sols and (-29, -7) in sols


def test_is_square():
    assert pell.is_square(49)
    assert not pell.is_square(20)
    assert pell.is_square(0)


def test_rejects_nonpositive_r():
    for fn in (pell.solve, pell.has_solution):
        with pytest.raises(ValueError):
            fn(0, 8)
        with pytest.raises(ValueError):
            fn(-17, 8)
    with pytest.raises(ValueError):
        pell.solutions_up_to(0, 8, 5)


def test_fundamental_solution_small():
    assert pell.fundamental_solution(17) == (33, 8)
    assert pell.fundamental_solution(20) == (9, 2)
    t, u = pell.fundamental_solution(151)
    assert t * t - 151 * u * u == 1 and u > 0
    with pytest.raises(ValueError):
        pell.fundamental_solution(25)


def test_class_reps_reject_zero_rhs():
    with pytest.raises(ValueError):
        pell.solution_class_reps(17, 0)


def test_class_reps_solve_and_are_distinct_orbits():
    for r, n in ((17, -8), (17, 8), (41, -8), (56, 8), (9, -8), (49, 15)):
        reps = pell.solution_class_reps(r, n)
        assert reps, (r, n)
        assert len(set(reps)) == len(reps)
        for x, y in reps:
            assert x * x - r * y * y == n


def _brute(r, n, bound=10_000):
    """First solution with 0 <= y <= bound, scanning outward; None if none."""
    for y in range(bound + 1):
        t = n + r * y * y
        if t < 0:
            continue
        s = isqrt(t)
        if s * s == t:
            return (s, y)
    return None


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 300), st.integers(-64, 64))
def test_decision_procedure_vs_brute_oracle(r, n):
    got = pell.solve(r, n)
    if got is not None:
        x, y = got
        assert x * x - r * y * y == n
        if n == 0:
            assert y != 0 or x != 0
    witness = _brute(r, n)
    if n == 0:
        # only the y != 0 flavour is meaningful; (0, 0) is excluded
        assert pell.has_solution(r, 0, nonzero_y=True) == pell.is_square(r)
        return
    if witness is not None:
        assert got is not None, (r, n, witness)
    if got is None:
        assert witness is None


@settings(max_examples=400, deadline=None)
@given(st.integers(1, 300), st.integers(-64, 64))
def test_decision_procedure_vs_sympy(r, n):
    if n == 0:
        return
    assert pell.has_solution(r, n) == bool(diop_DN(r, n))


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 300), st.integers(-64, 64), st.integers(1, 30))
def test_solutions_up_to_sign_closure_and_soundness(r, n, bound):
    sols = pell.solutions_up_to(r, n, bound)
    seen = set(sols)
    assert len(seen) == len(sols)
    for x, y in sols:
        assert x * x - r * y * y == n
        assert abs(y) <= bound
        assert {(x, y), (-x, -y), (x, -y), (-x, y)} <= seen


def test_large_unit_discriminants_still_decide():
    # fundamental units with 8+ digit entries must not degrade the decision
    assert pell.has_solution(151, 2)
    x, y = pell.solve(151, 2)
    assert x * x - 151 * y * y == 2
    assert not pell.has_solution(151, 3)

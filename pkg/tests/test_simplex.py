import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from samuelcone.simplex import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    OPTIMAL,
    UNBOUNDED,
    Constraint,
    LinearProgram,
    lp_feasible,
    lp_solve,
)

from oracles import lp_min_by_vertices

F = Fraction

# rows of B for I = (x^3, x^2 y, y^2), J = (x^3 y^7) in the listed generator order
B = [(F(1), F(0)), (F(2, 3), F(1, 7)), (F(0), F(2, 7))]


def region_one_program():
    col1 = tuple(b[0] for b in B)
    col2 = tuple(b[1] for b in B)
    return LinearProgram(
        col1,
        [Constraint((1, 1, 1), EQ, 1), Constraint(tuple(x - y for x, y in zip(col1, col2)), GE, 0)],
    )


def test_example_region_program():
    res = lp_solve(region_one_program())
    assert res.status == OPTIMAL
    assert res.value == F(2, 9)
    assert res.point == (F(2, 9), 0, F(7, 9))


def test_trivial_programs():
    res = lp_solve(LinearProgram((1,), [Constraint((1,), EQ, 1)]))
    assert (res.status, res.value, res.point) == (OPTIMAL, 1, (1,))
    assert lp_solve(LinearProgram((-1,), [])).status == UNBOUNDED
    assert lp_solve(LinearProgram((), [])).value == 0


def test_free_variables_and_negative_rhs():
    # minimise x subject to x >= -3 with x free
    res = lp_solve(LinearProgram((1,), [Constraint((1,), GE, -3)], (False,)))
    assert res.value == -3 and res.point == (-3,)
    res = lp_solve(LinearProgram((1, 1), [Constraint((-1, -1), LE, -2)]))
    assert res.value == 2


def test_redundant_equalities():
    lp = LinearProgram((1, 2), [Constraint((1, 1), EQ, 1), Constraint((2, 2), EQ, 2)])
    res = lp_solve(lp)
    assert res.value == 1 and res.point == (1, 0)


def test_feasibility_examples():
    ok, pt = lp_feasible([Constraint((1,), EQ, 1), Constraint((1,), LE, 0)])
    assert not ok and pt is None


def test_feasibility_literal_form():
    # 3 z1 <= 2 z1 written as (3 - 2) z1 <= 0
    ok, pt = lp_feasible([Constraint((1, 1), EQ, 1), Constraint((3 - 2, 0), LE, 0)])
    assert ok and pt == (0, 1)


def test_two_plane_d2_relevance():
    # alpha = [[2,1],[2,3]]; D_2 = {m : m1*1 + m2*3 <= 2 m1 + 2 m2}
    ok, pt = lp_feasible([Constraint((1, 1), EQ, 1), Constraint((1 - 2, 3 - 2), LE, 0)])
    assert ok
    assert pt[0] + pt[1] == 1 and -pt[0] + pt[1] <= 0


def test_bland_terminates_on_degenerate_cycle_example():
    # Beale's classic cycling example (cycles under Dantzig's rule without anticycling)
    lp = LinearProgram(
        (F(-3, 4), 150, F(-1, 50), 6),
        [
            Constraint((F(1, 4), -60, F(-1, 25), 9), LE, 0),
            Constraint((F(1, 2), -90, F(-1, 50), 3), LE, 0),
            Constraint((0, 0, 1, 0), LE, 1),
        ],
    )
    res = lp_solve(lp)
    assert res.status == OPTIMAL
    assert res.value == F(-1, 20)


rat = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def bounded_programs(draw):
    n = draw(st.integers(1, 3))
    obj = tuple(draw(rat) for _ in range(n))
    rows = [((1,) * n, draw(st.sampled_from([LE, EQ])), draw(st.fractions(min_value=1, max_value=4, max_denominator=3)))]
    for _ in range(draw(st.integers(0, 3))):
        rows.append((tuple(draw(rat) for _ in range(n)), draw(st.sampled_from([LE, GE, EQ])), draw(rat)))
    return obj, rows


@settings(max_examples=150, deadline=None)
@given(bounded_programs())
def test_matches_vertex_enumeration(prog):
    obj, rows = prog
    res = lp_solve(LinearProgram(obj, [Constraint(*r) for r in rows]))
    expected = lp_min_by_vertices(obj, rows)
    if expected is None:
        assert res.status == INFEASIBLE
    else:
        # sum(x) bounded above and x >= 0 makes the region a polytope
        assert res.status == OPTIMAL
        assert res.value == expected
        assert LinearProgram(obj, [Constraint(*r) for r in rows]).is_feasible_point(res.point)


@settings(max_examples=60, deadline=None)
@given(bounded_programs(), st.randoms(use_true_random=False), st.fractions(min_value=F(1, 7), max_value=7))
def test_permutation_and_scaling_invariance(prog, rnd, lam):
    obj, rows = prog
    base = lp_solve(LinearProgram(obj, [Constraint(*r) for r in rows]))
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    perm = list(range(len(obj)))
    rnd.shuffle(perm)
    obj_p = tuple(obj[i] for i in perm)
    rows_p = [(tuple(c[i] for i in perm), rel, b) for c, rel, b in shuffled]
    other = lp_solve(LinearProgram(obj_p, [Constraint(*r) for r in rows_p]))
    assert other.status == base.status
    assert other.value == base.value
    scaled = lp_solve(LinearProgram(tuple(lam * c for c in obj), [Constraint(*r) for r in rows]))
    if base.optimal:
        assert scaled.value == lam * base.value


def test_random_points_satisfy_constraints_exactly():
    rnd = random.Random(7)
    for _ in range(50):
        n = rnd.randint(2, 5)
        rows = [Constraint((1,) * n, EQ, 1)]
        for _ in range(rnd.randint(1, 4)):
            rows.append(Constraint(tuple(F(rnd.randint(-9, 9), rnd.randint(1, 9)) for _ in range(n)), rnd.choice([LE, GE]), F(rnd.randint(-3, 3), 4)))
        lp = LinearProgram(tuple(F(rnd.randint(-9, 9), rnd.randint(1, 5)) for _ in range(n)), rows)
        res = lp_solve(lp)
        if res.optimal:
            assert lp.is_feasible_point(res.point)
            assert sum(c * x for c, x in zip(lp.objective, res.point)) == res.value

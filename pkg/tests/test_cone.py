import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from samuelcone.cone import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    AlphaMatrix,
    ConeClosure,
    alpha_matrix,
    classify_point,
    cone_closure,
    emit_mesh,
    limit_exists,
    relevant_valuations,
)
from samuelcone.errors import DomainError, UnsupportedDimensionError
from samuelcone.limits import v_multi
from samuelcone.monomial import MonomialIdeal, ideal_minimalize, monomial_in_power
from samuelcone.newton import MonomialValuation, ValuationSet, rees_valuations, user_valuations

F = Fraction
TWO_PLANE_VALS = user_valuations([((7, 1, 1), 1), ((1, 4, 1), 1)])
TWO_PLANE_J = [ideal_minimalize([(1, 0, 0), (0, 0, 2)]), ideal_minimalize([(0, 2, 0), (0, 0, 3)])]
I_STAIR = ideal_minimalize([(3, 0), (2, 1), (0, 2)])


def principal(*c):
    return MonomialIdeal(len(c), (tuple(c),))


@pytest.fixture
def two_planes():
    return alpha_matrix(TWO_PLANE_VALS, TWO_PLANE_J)


def test_alpha_examples(two_planes):
    assert two_planes.entries == ((2, 1), (2, 3))
    single = alpha_matrix(rees_valuations(I_STAIR), [principal(3, 7), principal(4, 6), principal(5, 2)])
    assert single.entries == ((F(9, 2),), (F(13, 3),), (F(8, 3),))
    two = ideal_minimalize([(2, 0), (1, 1), (0, 3)])
    assert alpha_matrix(rees_valuations(two), [two]).entries == ((1, 1),)


def test_relevance_examples(two_planes):
    assert relevant_valuations(two_planes) == [1, 2]
    assert relevant_valuations(AlphaMatrix(((2, 3),))) == [1]
    assert relevant_valuations(AlphaMatrix(((2, 2),))) == [1, 2]


def test_closure_examples(two_planes):
    assert cone_closure(two_planes).to_json() == {"hyperplanes": [["2", "2"], ["1", "3"]]}
    assert cone_closure(AlphaMatrix(((F(9, 2),),))).upper_hyperplanes == ((F(9, 2),),)
    dup = AlphaMatrix(((1, 1, 2), (3, 3, 1)))
    assert cone_closure(dup).upper_hyperplanes == ((1, 3), (2, 1))


def test_classify_examples(two_planes):
    cc = cone_closure(two_planes)
    assert classify_point(cc, (1, 1, 3)) == INTERIOR
    assert classify_point(cc, (1, 1, 4)) == BOUNDARY
    assert classify_point(cc, (1, 0, 2)) == OUTSIDE
    with pytest.raises(DomainError):
        classify_point(cc, (-1, 0, 0))


def test_limit_exists_examples(two_planes):
    single = alpha_matrix(rees_valuations(I_STAIR), [principal(3, 7), principal(4, 6), principal(5, 2)])
    assert limit_exists(single, (27, 26, 16)) == F(1, 6)
    assert limit_exists(two_planes, (1, 1)) is None
    assert limit_exists(AlphaMatrix(((F(9, 2),),)), (1,)) == F(9, 2)
    with pytest.raises(DomainError):
        limit_exists(two_planes, (1, 0))


def test_limit_exists_ignores_irrelevant_columns():
    # second column never attains the minimum, so only the first counts
    assert limit_exists(AlphaMatrix(((2, 3),)), (1,)) == 2


def test_mesh_examples(two_planes):
    text = emit_mesh(cone_closure(two_planes), 10)
    verts = [tuple(map(Fraction, line.split()[1:])) for line in text.splitlines() if line.startswith("v ")]
    faces = [line for line in text.splitlines() if line.startswith("f ")]
    seams = [line for line in text.splitlines() if line.startswith("l ")]
    assert len(faces) == 2 and len(seams) == 1
    ids = [int(x) for x in seams[0].split()[1:]]
    seam_pts = [verts[i - 1] for i in ids]
    assert all(p[0] == p[1] for p in seam_pts)  # m1 = m2
    for x, y, z in verts:
        assert z == min(2 * x + 2 * y, x + 3 * y)

    quad = emit_mesh(ConeClosure(((F(9, 2), 1),)), 1)
    assert sum(1 for line in quad.splitlines() if line.startswith("f ")) == 2
    flat = emit_mesh(ConeClosure(((0, 0),)), 3)
    assert all(line.split()[3] == "0" for line in flat.splitlines() if line.startswith("v "))
    with pytest.raises(UnsupportedDimensionError):
        emit_mesh(ConeClosure(((1, 1, 1),)), 2)


def test_mesh_decimal_coordinates():
    text = emit_mesh(ConeClosure(((F(1, 2), F(1, 4)),)), 1)
    assert "v 1 1 0.75" in text


def monomial_instances():
    return [
        (I_STAIR, (3, 7), (5, 2)),
        (ideal_minimalize([(2, 0), (1, 1), (0, 3)]), (1, 2), (3, 1)),
        (ideal_minimalize([(4, 0), (1, 2), (0, 5)]), (2, 3), (1, 1)),
    ]


@pytest.mark.parametrize("inst", monomial_instances())
def test_outside_points_fail_containment(inst):
    ideal, c1, c2 = inst
    js = [principal(*c1), principal(*c2)]
    cc = cone_closure(alpha_matrix(rees_valuations(ideal), js))
    for m1 in range(9):
        for m2 in range(9):
            v = v_multi(ideal, js, [m1, m2])
            for n in range(9):
                if classify_point(cc, (m1, m2, n)) == OUTSIDE:
                    assert v < n
                else:
                    # the valuation bound is exact on the closure side
                    assert v <= cc.bound((m1, m2))


@pytest.mark.parametrize("inst", monomial_instances())
def test_interior_points_have_multiple_in_cone(inst):
    ideal, c1, c2 = inst
    vs = rees_valuations(ideal)
    cc = cone_closure(alpha_matrix(vs, [principal(*c1), principal(*c2)]))
    rnd = random.Random(11)
    tested = 0
    while tested < 60:
        d = rnd.randint(1, 10)
        p = tuple(F(rnd.randint(0, 5 * d), d) for _ in range(3))
        if classify_point(cc, p) != INTERIOR:
            continue
        tested += 1
        den = math.lcm(*(x.denominator for x in p))
        for L in range(den, 201, den):
            m1, m2, n = (int(L * x) for x in p)
            a = tuple(m1 * x + m2 * y for x, y in zip(c1, c2))
            ok, cert = monomial_in_power(a, ideal, n, vs.weight_vectors())
            if ok:
                assert cert.verify(a, ideal)
                break
        else:
            pytest.fail(f"no multiplier <= 200 for interior point {p}")


alpha_entries = st.fractions(min_value=0, max_value=6, max_denominator=4)


@st.composite
def alpha_matrices(draw):
    k = draw(st.integers(1, 3))
    h = draw(st.integers(1, 3))
    return AlphaMatrix(tuple(tuple(draw(alpha_entries) for _ in range(h)) for _ in range(k)))


@settings(max_examples=80, deadline=None)
@given(alpha_matrices(), st.data())
def test_scaling_invariance(a, data):
    cc = cone_closure(a)
    p = tuple(data.draw(st.fractions(min_value=0, max_value=5, max_denominator=10)) for _ in range(a.k + 1))
    lam = data.draw(st.fractions(min_value=F(1, 9), max_value=9))
    assert classify_point(cc, p) == classify_point(cc, tuple(lam * x for x in p))


@settings(max_examples=60, deadline=None)
@given(alpha_matrices(), st.randoms(use_true_random=False))
def test_relevance_independent_of_order_and_covers_simplex(a, rnd):
    perm = list(range(a.h))
    rnd.shuffle(perm)
    permuted = AlphaMatrix(tuple(tuple(row[j] for j in perm) for row in a.entries))
    back = sorted(perm[j - 1] + 1 for j in relevant_valuations(permuted))
    assert back == relevant_valuations(a)
    rel = relevant_valuations(a)
    # grid of the simplex sum(m) = 1 with step 1/6
    for m in _simplex_grid(a.k, 6):
        vals = [sum(x * y for x, y in zip(a.column(j), m)) for j in range(a.h)]
        best = min(vals)
        assert any(vals[j - 1] == best for j in rel)


def _simplex_grid(k, steps):
    def rec(k, left):
        if k == 1:
            yield (left,)
            return
        for i in range(left + 1):
            for rest in rec(k - 1, left - i):
                yield (i,) + rest

    for pt in rec(k, steps):
        yield tuple(F(x, steps) for x in pt)


@settings(max_examples=60, deadline=None)
@given(alpha_matrices(), st.data())
def test_limit_exists_scaling(a, data):
    w = tuple(data.draw(st.fractions(min_value=F(1, 5), max_value=5, max_denominator=5)) for _ in range(a.k))
    lam = data.draw(st.fractions(min_value=F(1, 5), max_value=5, max_denominator=5))
    base = limit_exists(a, w)
    scaled = limit_exists(a, tuple(lam * x for x in w))
    if base is None:
        assert scaled is None
    else:
        assert scaled == base / lam


def test_limit_exists_when_columns_proportional():
    a = AlphaMatrix(((F(9, 2), F(9, 2)), (F(13, 3), F(13, 3))))
    assert limit_exists(a, (27, 26)) == F(1, 6)


def test_valuation_set_source_is_kept():
    vs = ValuationSet((MonomialValuation((2, 3), 6),))
    assert alpha_matrix(vs, [principal(3, 7)]).entries == ((F(9, 2),),)

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import bivariates, mats, polys

from qbch.errors import DimensionMismatch, IncompatibleOrder, NotCoprime
from qbch.field import build_field
from qbch.matring import (BivariateQ, MatPoly, MatRingElem, biv_evaluate, compose_Y, evaluate,
                          find_primitive_root, mat_is_unit, validate_root)

F2, F4 = build_field(2, 1), build_field(2, 2)


def M(field, rows):
    return MatRingElem.from_rows(field, rows)


GAMMA3 = M(F2, [[0, 1], [1, 1]])


def test_mat_is_unit():
    assert mat_is_unit(MatRingElem.identity(F2, 2))
    assert not mat_is_unit(MatRingElem.zero(F2, 2))
    assert mat_is_unit(M(F2, [[1, 1], [1, 0]]))


def test_ring_arithmetic():
    a = M(F4, [[1, 2], [3, 0]])
    assert a * a.inverse() == MatRingElem.identity(F4, 2)
    assert a**-2 * a**2 == MatRingElem.identity(F4, 2)
    assert (a - a).is_zero()
    with pytest.raises(DimensionMismatch):
        a + MatRingElem.identity(F4, 3)


def test_evaluate_sides():
    ident = MatRingElem.identity(F2, 2)
    zero = MatRingElem.zero(F2, 2)
    a = M(F2, [[0, 0], [1, 0]])
    x = MatPoly(F2, 2, (zero, ident))
    assert evaluate(x, a, "left") == evaluate(x, a, "right") == a
    c = M(F2, [[0, 1], [0, 0]])
    f = MatPoly(F2, 2, (zero, c))
    assert evaluate(f, a, "left") == M(F2, [[1, 0], [0, 0]])
    assert evaluate(f, a, "right") == M(F2, [[0, 0], [0, 1]])


@given(polys(F4, 2), st.integers(0, 3))
def test_central_evaluation_is_side_independent(f, c):
    a = MatRingElem.scalar(F4, 2, c)
    assert evaluate(f, a, "left") == evaluate(f, a, "right")


@given(mats(F4, 2), mats(F4, 2), polys(F4, 2))
def test_biv_evaluate_degenerate_cases(a, b, q0):
    zero = MatPoly(F4, 2)
    assert biv_evaluate(BivariateQ(q0, zero), a, b) == evaluate(q0, a, "right")
    y = BivariateQ(zero, MatPoly(F4, 2, (MatRingElem.identity(F4, 2),)))
    assert biv_evaluate(y, a, b) == b


@given(bivariates(F4, 2), polys(F4, 2))
def test_compose_y_degenerate_cases(Q, f):
    assert compose_Y(Q, MatPoly(F4, 2)) == Q.q0
    y = BivariateQ(MatPoly(F4, 2), MatPoly(F4, 2, (MatRingElem.identity(F4, 2),)))
    assert compose_Y(y, f) == f


@given(bivariates(F4, 2), polys(F4, 2), mats(F4, 2))
def test_substitution_commutes_with_right_evaluation(Q, g, a):
    # (a)((X, g(X))Q) = (a, (a)g)Q
    assert evaluate(compose_Y(Q, g), a, "right") == biv_evaluate(Q, a, evaluate(g, a, "right"))


@pytest.mark.parametrize("q,s,ell,m,want,field", [
    (2, 1, 2, 3, [[0, 1], [1, 1]], F2),
    (2, 2, 2, 5, [[2, 1], [3, 1]], F4),
    (3, 1, 2, 4, [[1, 2], [2, 2]], build_field(3, 1)),
])
def test_find_primitive_root_frozen(q, s, ell, m, want, field):
    gamma = find_primitive_root(q, s, ell, m)
    assert gamma == M(field, want)
    assert validate_root(gamma, m)


def test_primitive_root_for_m5_is_multiplication_by_alpha_cubed():
    # the char poly of multiplication by beta is beta's minimal polynomial over F_4
    f16 = build_field(2, 4)
    beta = f16.pow(f16.generator, 3)
    gamma = find_primitive_root(2, 2, 2, 5)
    trace, det = F4.add(gamma.rows[0][0], gamma.rows[1][1]), gamma.det()
    emb = {F4.pow(2, i): f16.pow(f16.generator, 5 * i) for i in range(3)}
    emb[0] = 0
    # beta^2 + tr*beta + det = 0 in characteristic 2
    assert f16.add(f16.add(f16.mul(beta, beta), f16.mul(emb[trace], beta)), emb[det]) == 0


@pytest.mark.parametrize("q,s,ell,m", [(2, 1, 3, 7), (2, 2, 2, 15), (3, 1, 2, 8), (2, 1, 4, 5),
                                       (5, 1, 2, 3), (2, 3, 2, 9)])
def test_find_primitive_root_valid(q, s, ell, m):
    assert validate_root(find_primitive_root(q, s, ell, m), m)


def test_find_primitive_root_edge_cases():
    assert find_primitive_root(2, 2, 3, 1) == MatRingElem.identity(F4, 3)
    with pytest.raises(NotCoprime):
        find_primitive_root(2, 1, 2, 2)
    with pytest.raises(IncompatibleOrder):
        find_primitive_root(2, 1, 2, 7)


def test_validate_root():
    assert validate_root(MatRingElem.identity(F2, 2), 1)
    assert validate_root(GAMMA3, 3)
    assert not validate_root(GAMMA3, 2)
    assert GAMMA3**2 == M(F2, [[1, 1], [1, 0]])
    # order 3 but I + Gamma singular
    assert not validate_root(M(F2, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]), 3)

from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from spunblf import intmat
from spunblf.monodromy import (
    alexander_polynomial,
    hv_matrix,
    monodromy_matrix,
    transvection,
    twist_order,
    verify_monodromy_identity,
)
from spunblf.surface import (
    CycleError,
    TorusKnotParams,
    build_seifert_surface,
    coordinates,
    cycle_basis,
    gram_matrix,
    twist_curves,
)

T = sympy.Symbol("t")


def sympy_alexander(p, q):
    return sympy.Poly(sympy.cancel((T ** (p * q) - 1) * (T - 1) / ((T**p - 1) * (T**q - 1))), T)


def low_to_high(poly):
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def test_trefoil_twist_matrices_by_hand():
    # x -> x + <x, c> c written out entry by entry
    p = TorusKnotParams(2, 3)
    s = build_seifert_surface(p)
    g = gram_matrix(s)
    for c in twist_curves(s):
        y = coordinates(s, c)
        expected = [[int(a == b) + y[a] * sum(g[b][k] * y[k] for k in range(2)) for b in range(2)]
                    for a in range(2)]
        assert transvection(s, c).matrix == intmat.as_matrix(expected)


def test_trefoil_monodromy_is_order_six():
    h = monodromy_matrix(TorusKnotParams(2, 3))
    assert h.matrix == ((0, -1), (1, 1))
    assert intmat.matrix_order(h.matrix, 12) == 6


def test_monodromy_equals_hv(params):
    assert monodromy_matrix(params).matrix == hv_matrix(params).matrix


def test_charpoly_against_sympy(params):
    h = monodromy_matrix(params)
    assert h.charpoly() == low_to_high(sympy.Matrix(h.matrix).charpoly(T))
    assert intmat.normalize_unit(h.charpoly()) == intmat.normalize_unit(low_to_high(sympy_alexander(params.p,
                                                                                                    params.q)))


def test_alexander_exact_division(params):
    assert alexander_polynomial(params) == low_to_high(sympy_alexander(params.p, params.q))


def test_trefoil_alexander():
    assert intmat.poly_str(alexander_polynomial(TorusKnotParams(2, 3))) == "t^2 - t + 1"


def test_periodicity(params):
    n = params.rank
    h = monodromy_matrix(params)
    assert h.power(params.p * params.q).matrix == intmat.identity(n)
    assert intmat.matrix_order(h.matrix, params.p * params.q) == params.p * params.q


def test_det_and_symplectic(params):
    g = gram_matrix(build_seifert_surface(params))
    h = monodromy_matrix(params)
    assert h.det() == 1 == sympy.Matrix(h.matrix).det()
    assert h.preserves(g) and hv_matrix(params).preserves(g)


def test_verification_report(params):
    report = verify_monodromy_identity(params)
    assert report.passed
    assert {c.name for c in report.checks} == {
        "monodromy_equals_hv", "charpoly_equals_alexander", "monodromy_power_pq_identity"}


def test_other_row_order_is_conjugate_not_equal():
    p = TorusKnotParams(3, 4)
    a = monodromy_matrix(p, "top_down")
    b = monodromy_matrix(p, "bottom_up")
    assert a.charpoly() == b.charpoly()
    assert not verify_monodromy_identity(p, "bottom_up")["monodromy_equals_hv"].passed


def test_twist_order_counts(params):
    order = twist_order(params)
    assert len(order) == (params.p - 1) * (params.q - 1)
    assert order[0][0] == params.p - 2 and order[-1][0] == 0


def test_bad_row_order():
    with pytest.raises(ValueError):
        twist_order(TorusKnotParams(2, 3), "sideways")


def test_twist_along_zero_cycle_rejected():
    s = build_seifert_surface(TorusKnotParams(2, 3))
    zero = cycle_basis(s)[0].scale(0)
    with pytest.raises(CycleError):
        transvection(s, zero)


def test_inverse_twist(params):
    s = build_seifert_surface(params)
    c = twist_curves(s)[0]
    prod = transvection(s, c, 1) @ transvection(s, c, -1)
    assert prod.matrix == intmat.identity(params.rank)


@given(st.tuples(st.integers(2, 6), st.integers(2, 6)).filter(lambda t: gcd(*t) == 1))
def test_charpoly_conjugation_invariant(pq):
    p = TorusKnotParams(*pq)
    h = monodromy_matrix(p)
    hv = hv_matrix(p)
    # conjugate by a single twist
    s = build_seifert_surface(p)
    t = transvection(s, twist_curves(s)[0])
    t_inv = transvection(s, twist_curves(s)[0], -1)
    assert (t @ h @ t_inv).charpoly() == h.charpoly() == hv.charpoly()


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4))
def test_intmat_against_sympy(rows):
    a = intmat.as_matrix(rows)
    m = sympy.Matrix(rows)
    assert intmat.det(a) == m.det()
    assert intmat.charpoly(a) == low_to_high(m.charpoly(T))
    assert intmat.matpow(a, 3) == intmat.as_matrix((m**3).tolist())


@given(st.integers(1, 12), st.integers(1, 12))
def test_poly_division(a, b):
    f = intmat.poly_mul(intmat.monomial_minus_one(a), intmat.monomial_minus_one(b))
    assert intmat.poly_exact_div(f, intmat.monomial_minus_one(b)) == intmat.monomial_minus_one(a)


def test_trefoil_twist_in_curve_basis():
    s = build_seifert_surface(TorusKnotParams(2, 3))
    g1, g2 = twist_curves(s)
    b = intmat.transpose((coordinates(s, g1), coordinates(s, g2)))  # columns are the curves
    b_inv = intmat.as_matrix(sympy.Matrix(b).inv().tolist())
    t1 = intmat.matmul(intmat.matmul(b_inv, transvection(s, g1).matrix), b)
    # <g2, g1> = -1, so tau_{g1}(g2) = g2 - g1
    assert t1 == ((1, -1), (0, 1))


def test_twist_fixes_its_curve(params):
    s = build_seifert_surface(params)
    for c in twist_curves(s):
        y = coordinates(s, c)
        assert intmat.matvec(transvection(s, c).matrix, y) == y

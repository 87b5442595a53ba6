from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spunblf.surface import (
    Cycle,
    CycleError,
    Edge,
    ParamError,
    RibbonSurface,
    TorusKnotParams,
    Vertex,
    boundary_components,
    build_seifert_surface,
    coordinates,
    cycle_basis,
    from_coordinates,
    gram_matrix,
    intersection_number,
    is_cycle,
    surface_invariants,
    twist_curves,
)

coprime_pairs = st.tuples(st.integers(2, 7), st.integers(2, 7)).filter(lambda t: gcd(*t) == 1)


def brute_boundary_count(s: RibbonSurface) -> int:
    """Independent trace: permutation sigma * alpha on darts, counted by cycles."""
    darts = [(e.label, end) for e in s.edges for end in (0, 1)]
    rot = {}
    for v in s.vertices:
        order = v.cyclic_order
        for i, h in enumerate(order):
            rot[h] = order[(i + 1) % len(order)]
    seen, count = set(), 0
    for d in darts:
        if d in seen:
            continue
        count += 1
        x = d
        while x not in seen:
            seen.add(x)
            x = rot[(x[0], 1 - x[1])]
    return count


def test_trefoil_handle_counts(trefoil):
    s = build_seifert_surface(trefoil)
    assert (len(s.vertices), len(s.edges)) == (5, 6)
    inv = surface_invariants(s)
    assert inv["boundary_components"] == 1
    assert inv["genus"] == 1
    assert inv["euler_characteristic"] == -1


def test_three_four_invariants():
    inv = surface_invariants(build_seifert_surface(TorusKnotParams(3, 4)))
    assert (inv["first_betti"], inv["genus"], inv["euler_characteristic"]) == (6, 3, -5)


@given(coprime_pairs)
def test_invariants_follow_formulas(pq):
    p, q = pq
    s = build_seifert_surface(TorusKnotParams(p, q))
    inv = surface_invariants(s)
    assert inv["vertices"] == p + q and inv["edges"] == p * q
    assert inv["euler_characteristic"] == p + q - p * q
    assert inv["boundary_components"] == 1 == brute_boundary_count(s)
    assert inv["genus"] == (p - 1) * (q - 1) // 2
    assert inv["first_betti"] == (p - 1) * (q - 1)


def test_graph_is_complete_bipartite(params):
    s = build_seifert_surface(params)
    labels = sorted(e.label for e in s.edges)
    assert labels == [(m, n) for m in range(params.p) for n in range(params.q)]
    for v in s.vertices:
        assert len(set(v.cyclic_order)) == len(v.cyclic_order)


def test_build_is_deterministic(params):
    assert build_seifert_surface(params) == build_seifert_surface(params)


@pytest.mark.parametrize("p,q", [(2, 4), (3, 6), (1, 3), (3, 1), (0, 5)])
def test_rejects_bad_params(p, q):
    with pytest.raises(ParamError):
        TorusKnotParams(p, q)


def test_rejects_negative_twist():
    with pytest.raises(ParamError):
        TorusKnotParams(2, 3, -1)


def test_isolated_vertex_is_a_disk():
    s = RibbonSurface((Vertex(("H", 0), ()),), ())
    count, walks = boundary_components(s)
    assert count == 1 and walks == [()]


def test_two_five_single_boundary():
    assert boundary_components(build_seifert_surface(TorusKnotParams(2, 5)))[0] == 1


def test_cycle_basis_rank(params):
    s = build_seifert_surface(params)
    basis = cycle_basis(s)
    assert len(basis) == (params.p - 1) * (params.q - 1)
    assert all(is_cycle(s, c) for c in basis)
    for i, c in enumerate(basis):
        assert coordinates(s, c) == tuple(int(i == j) for j in range(len(basis)))


def test_non_cycle_rejected(trefoil):
    s = build_seifert_surface(trefoil)
    bad = Cycle(tuple([1] + [0] * (len(s.edges) - 1)))
    assert not is_cycle(s, bad)
    with pytest.raises(CycleError):
        coordinates(s, bad)


def test_trefoil_gram():
    s = build_seifert_surface(TorusKnotParams(2, 3))
    assert gram_matrix(s) == ((0, 1), (-1, 0))


def test_gram_unimodular_and_antisymmetric(params):
    import sympy

    g = gram_matrix(build_seifert_surface(params))
    n = len(g)
    assert all(g[i][j] == -g[j][i] for i in range(n) for j in range(n))
    assert sympy.Matrix(g).det() == 1


@given(coprime_pairs.filter(lambda t: t[0] * t[1] <= 20), st.data())
def test_intersection_bilinear(pq, data):
    s = build_seifert_surface(TorusKnotParams(*pq))
    n = len(cycle_basis(s))
    vec = st.lists(st.integers(-3, 3), min_size=n, max_size=n)
    x, y, z = (from_coordinates(s, data.draw(vec)) for _ in range(3))
    assert intersection_number(s, x, y) == -intersection_number(s, y, x)
    assert intersection_number(s, x + y, z) == intersection_number(s, x, z) + intersection_number(s, y, z)
    assert intersection_number(s, x, x) == 0


def test_adjacent_cells_meet_once(params):
    """Neighbouring twist curves in a row or column intersect with |.| = 1, distant ones not at all."""
    s = build_seifert_surface(params)
    curves = twist_curves(s)
    q1 = params.q - 1
    for a in range(len(curves)):
        for b in range(len(curves)):
            (i, j), (k, l) = divmod(a, q1), divmod(b, q1)
            value = abs(intersection_number(s, curves[a], curves[b]))
            if abs(i - k) + abs(j - l) == 1:
                assert value == 1
            elif abs(i - k) >= 2 or abs(j - l) >= 2:
                assert value == 0


def test_ribbon_validation_rejects_duplicate_end():
    with pytest.raises(ValueError):
        RibbonSurface(
            (Vertex(("H", 0), (((0, 0), 0), ((0, 0), 0))), Vertex(("V", 0), (((0, 0), 1),))),
            (Edge((0, 0), ("H", 0), ("V", 0)),),
        )

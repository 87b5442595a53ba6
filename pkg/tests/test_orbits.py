from math import gcd

from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation

from spunblf.monodromy import phi_on_edges
from spunblf.orbits import (
    cycles,
    format_orbit_table,
    orbit_lengths,
    orbit_table,
    orbits,
    permutation_order,
    phi_action,
)
from spunblf.surface import TorusKnotParams, build_seifert_surface

coprime = st.tuples(st.integers(2, 9), st.integers(2, 9)).filter(lambda t: gcd(*t) == 1)


def test_trefoil_table():
    t = TorusKnotParams(2, 3)
    assert orbit_table(t) == {
        "0-handles": [["A", "B"], ["C", "D", "E"]],
        "1-handles": [["α", "μ", "β", "κ", "γ", "λ"]],
    }
    assert format_orbit_table(t).splitlines() == [
        "0-handles | {A→B}, {C→D→E}",
        "1-handles | {α→μ→β→κ→γ→λ}",
    ]


@given(coprime)
def test_orbit_lengths(pq):
    p, q = pq
    assert orbit_lengths(TorusKnotParams(p, q)) == {"horizontal": [p], "vertical": [q], "band": [p * q]}


@given(coprime)
def test_order_matches_sympy(pq):
    action = phi_action(TorusKnotParams(*pq))
    for perm in (action.perm0_horizontal, action.perm0_vertical, action.perm1):
        ref = Permutation(list(perm))
        assert permutation_order(perm) == ref.order()
        assert sorted(len(c) for c in cycles(perm)) == sorted(len(c) for c in ref.full_cyclic_form)
    assert permutation_order(action.perm1) == pq[0] * pq[1]


def test_phi_is_ribbon_automorphism(params):
    """Relabelling edges by phi and vertices by the induced shift preserves every cyclic order."""
    s = build_seifert_surface(params)
    shift = {("H", m): ("H", (m + 1) % params.p) for m in range(params.p)}
    shift.update({("V", n): ("V", (n - 1) % params.q) for n in range(params.q)})
    orders = {v.key: v.cyclic_order for v in s.vertices}

    def same_cycle(a, b):
        return len(a) == len(b) and any(a[i:] + a[:i] == b for i in range(len(a)))

    for key, order in orders.items():
        image = tuple((phi_on_edges(params, lab), end) for lab, end in order)
        assert same_cycle(image, orders[shift[key]])


def test_brute_force_band_orbit(params):
    start = (0, 0)
    seen, x = [], start
    while x not in seen:
        seen.append(x)
        x = phi_on_edges(params, x)
    (orbit,) = [o for o in orbits(phi_action(params)) if o.kind == "band"]
    assert list(orbit.members) == seen

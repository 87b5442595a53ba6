import pytest

from spunblf import blf
from spunblf.blf import (
    RBD,
    RH,
    RI,
    RII,
    RV,
    R0H,
    R0V,
    DescriptorError,
    RoundHandle,
    build,
    fiber_evolution,
    mutate_winding,
    validate,
)
from spunblf.surface import TorusKnotParams


def region_after(d, label):
    """Region index just outside the given round."""
    t = 0
    for r in d.rounds:
        t += r.winding
        if r.label == label:
            return t
    raise KeyError(label)


def test_trefoil_windings():
    d = build(TorusKnotParams(2, 3))
    assert d.windings == [2, 3, 2, 3, 6, 6, 1]
    assert [r.label for r in d.rounds] == [R0H, R0V, RH, RV, RI, RII, RBD]
    assert [r.index for r in d.rounds] == [0, 0, 1, 1, 1, 2, 2]
    assert d.turns == 23 and len(d.regions) == 24


def test_spun_windings_general(params):
    p, q = params.p, params.q
    assert build(params).windings == [p, q, p, q, p * q, p * q, 1]


def test_fiber_milestones(params):
    p, q = params.p, params.q
    d = build(params)
    states = fiber_evolution(d)
    assert states[region_after(d, R0V)].genera() == [0] * (p + q)
    assert states[region_after(d, RV)].genera() == [1] * (p + q)
    # p+q-1 merges and (p-1)(q-1) self-tubes: a single surface of genus pq+1
    assert states[region_after(d, RI)].genera() == [p * q + 1]
    assert states[region_after(d, RII)].genera() == [1]
    assert states[-1].is_single_sphere()


def test_ri_merge_and_selftube_counts(params):
    d = build(params)
    (ri,) = [r for r in d.rounds if r.label == RI]
    kinds = [op.kind for op in ri.attachment]
    assert kinds.count("Tube") == params.p + params.q - 1
    assert kinds.count("SelfTube") == (params.p - 1) * (params.q - 1)


def test_euler_bookkeeping_oracle(params):
    """Recompute chi region by region from the handle indices alone."""
    d = build(params)
    chi = [0]
    for r in d.rounds:
        if r.label in (R0H, R0V):
            step = 2
        elif r.index == 1:
            step = -2
        else:
            step = 2
        for _ in range(r.winding):
            chi.append(chi[-1] + step)
    assert [s.euler for s in fiber_evolution(d)] == chi
    assert chi[0] + chi[-1] == 2


def test_validate_passes(params):
    assert validate(build(params)).passed


def test_rii_framing_recorded(trefoil):
    (rii,) = [r for r in build(trefoil).rounds if r.label == RII]
    assert rii.framing == blf.RII_FRAMING


def test_mutated_rii_fails(trefoil):
    report = validate(mutate_winding(build(trefoil), RII, 5))
    assert not report.passed
    assert not report["outermost_single_sphere"].passed
    assert not report["windings_match_orbits"].passed


def test_mutated_definite_round_fails(trefoil):
    report = validate(mutate_winding(build(trefoil), R0H, 3))
    assert not report.passed


def test_build_deterministic(params):
    assert build(params) == build(params)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_twist_spun_trefoil_inventory(k):
    d = build(TorusKnotParams(2, 3, k))
    by_index = {0: [], 1: [], 2: []}
    for r in d.rounds:
        by_index[r.index].append(r.winding)
    assert by_index[0] == [k] * 5
    assert by_index[1] == [k] * 6
    assert by_index[2] == [k] * 6 + [1]
    assert all(s is None for s in d.regions[1:-1])
    assert d.regions[0].count == 0 and d.regions[-1].is_single_sphere()
    assert validate(d).passed


def test_twist_evolution_refused():
    with pytest.raises(DescriptorError):
        fiber_evolution(build(TorusKnotParams(2, 3, 2)))


def test_round_handle_validation():
    with pytest.raises(DescriptorError):
        RoundHandle(3, 1, RH)
    with pytest.raises(DescriptorError):
        RoundHandle(1, 0, RH)


def test_rh_rv_are_self_tubes(trefoil):
    d = build(trefoil)
    for r in d.rounds:
        if r.label in (RH, RV):
            assert all(op.kind == "SelfTube" for op in r.attachment)

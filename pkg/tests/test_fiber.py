import pytest
from hypothesis import given
from hypothesis import strategies as st

from spunblf.fiber import (
    EULER_CHANGE,
    FiberOp,
    FiberOpError,
    FiberState,
    derive_op,
)

genus_maps = st.dictionaries(st.sampled_from("abcdef"), st.integers(0, 4), max_size=5)


def op_strategy(state: FiberState):
    ids = [c for c, _ in state.components]
    fresh = next(x for x in "uvwxyz" if x not in ids)
    options = [FiberOp("SphereBirth", (fresh,))]
    for x in ids:
        options.append(FiberOp("SelfTube", (x,)))
        g = state.as_dict()[x]
        if g == 0:
            options.append(FiberOp("SphereDeath", (x,)))
        if g >= 1:
            options.append(FiberOp("CollapseNonSep", (x,)))
            options.append(FiberOp("Split", (x, fresh), genus=g))
        for y in ids:
            if y != x:
                options.append(FiberOp("Tube", (x, y)))
    return st.sampled_from(options)


@given(genus_maps, st.data())
def test_euler_change_matches_table(genera, data):
    state = FiberState.from_mapping(genera)
    op = data.draw(op_strategy(state))
    after = op.apply(state)
    # independent count: chi = sum 2 - 2g
    chi = lambda s: sum(2 - 2 * g for g in s.as_dict().values())  # noqa: E731
    assert chi(after) - chi(state) == EULER_CHANGE[op.kind]


@given(genus_maps, st.data())
def test_derive_recovers_effect(genera, data):
    state = FiberState.from_mapping(genera)
    op = data.draw(op_strategy(state))
    after = op.apply(state)
    derived = derive_op(state, after, op.definite)
    assert derived is not None
    assert derived.apply(state) == after


def test_tube_keeps_first_id():
    s = FiberState.from_mapping({"a": 1, "b": 2})
    assert FiberOp("Tube", ("b", "a")).apply(s).as_dict() == {"b": 3}


@pytest.mark.parametrize(
    "op,state",
    [
        (FiberOp("SphereBirth", ("a",)), {"a": 0}),
        (FiberOp("SphereDeath", ("a",)), {"a": 1}),
        (FiberOp("Tube", ("a", "a")), {"a": 0}),
        (FiberOp("CollapseNonSep", ("a",)), {"a": 0}),
        (FiberOp("CollapseToSphere", ("a",)), {"a": 2}),
        (FiberOp("Split", ("a", "b"), genus=3), {"a": 1}),
    ],
)
def test_preconditions(op, state):
    with pytest.raises(FiberOpError):
        op.apply(FiberState.from_mapping(state))


def test_arity_checked():
    with pytest.raises(ValueError):
        FiberOp("Tube", ("a",))
    with pytest.raises(ValueError):
        FiberOp("Explode", ("a",))


def test_state_rejects_duplicates_and_negative_genus():
    with pytest.raises(ValueError):
        FiberState((("a", 0), ("a", 1)))
    with pytest.raises(ValueError):
        FiberState((("a", -1),))


def test_summary():
    assert FiberState().summary() == "∅"
    assert FiberState.from_mapping({"x": 1, "y": 0}).summary() == "2:[0, 1]"

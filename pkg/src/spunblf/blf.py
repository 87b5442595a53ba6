"""Round-handle descriptors of the BLF of S^4 with a (twist-)spun torus knot fiber.

Rounds are listed from the south pole outward. A round handle of winding w
contributes w fold turns; crossing a turn outward applies one FiberOp to
the regular fiber. The spun descriptor carries the full per-turn fiber
table; the twist-spun descriptor only fixes the polar fibers.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .checks import Check, Report
from .fiber import (
    COLLAPSE_NONSEP,
    COLLAPSE_TO_SPHERE,
    SELF_TUBE,
    SPHERE_BIRTH,
    TUBE,
    FiberOp,
    FiberOpError,
    FiberState,
)
from .orbits import cycles, orbit_lengths, phi_action
from .surface import TorusKnotParams

R0H, R0V, RH, RV, RI, RII, RBD = "R0H", "R0V", "RH", "RV", "RI", "RII", "R∂"
DEFINITE_LABELS = frozenset({R0H, R0V})
RII_FRAMING = "vanishing cycle runs over its 1-handle twice, algebraically zero times"


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True)
class RoundHandle:
    index: int
    winding: int
    label: str
    source: str = ""
    attachment: tuple[FiberOp, ...] | None = None
    framing: str | None = None

    def __post_init__(self):
        if self.index not in (0, 1, 2):
            raise DescriptorError(f"round handle index must be 0, 1 or 2, got {self.index}")
        if self.winding < 1:
            raise DescriptorError(f"winding must be positive, got {self.winding}")

    @property
    def definite(self) -> bool:
        return self.label in DEFINITE_LABELS


@dataclass(frozen=True)
class Binding:
    fiber: str
    description: str


@dataclass(frozen=True)
class BLFDescriptor:
    params: TorusKnotParams
    rounds: tuple[RoundHandle, ...]
    regions: tuple[FiberState | None, ...]
    binding: Binding

    @property
    def turns(self) -> int:
        return sum(r.winding for r in self.rounds)

    @property
    def windings(self) -> list[int]:
        return [r.winding for r in self.rounds]


class _UnionFind:
    """Components named by their original torus labels; the first argument of union survives."""

    def __init__(self, labels):
        self.parent = {x: x for x in labels}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _knot_name(params: TorusKnotParams) -> str:
    base = f"({params.p},{params.q})-torus knot"
    return f"spun {base}" if params.k == 0 else f"{params.k}-twist-spun {base}"


def build(params: TorusKnotParams) -> BLFDescriptor:
    return build_spun(params) if params.k == 0 else build_twist_spun(params)


def build_spun(params: TorusKnotParams) -> BLFDescriptor:
    if params.k != 0:
        raise DescriptorError("build_spun needs k = 0")
    p, q = params.p, params.q
    action = phi_action(params)
    (h_orbit,) = cycles(action.perm0_horizontal)
    (v_orbit,) = cycles(action.perm0_vertical)
    (band_orbit,) = cycles(action.perm1)
    bands = [action.one_handle(x) for x in band_orbit]
    hid = [f"H{m}" for m in h_orbit]
    vid = [f"V{n}" for n in v_orbit]

    uf = _UnionFind([f"H{m}" for m in range(p)] + [f"V{n}" for n in range(q)])
    ri_ops = []
    for m, n in bands:
        a, b = uf.find(f"H{m}"), uf.find(f"V{n}")
        handle = f"({m},{n})"
        if uf.union(a, b):
            ri_ops.append(FiberOp(TUBE, (a, b), handle=handle))
        else:
            ri_ops.append(FiberOp(SELF_TUBE, (a,), handle=handle))
    root = uf.find("H0")
    rii_ops = [FiberOp(COLLAPSE_NONSEP, (root,), handle=f"({m},{n})") for m, n in bands]

    rounds = (
        RoundHandle(0, p, R0H, "horizontal 0-handles",
                    tuple(FiberOp(SPHERE_BIRTH, (x,), handle=x) for x in hid)),
        RoundHandle(0, q, R0V, "vertical 0-handles",
                    tuple(FiberOp(SPHERE_BIRTH, (x,), handle=x) for x in vid)),
        RoundHandle(1, p, RH, "horizontal 0-handles",
                    tuple(FiberOp(SELF_TUBE, (x,), handle=x) for x in hid)),
        RoundHandle(1, q, RV, "vertical 0-handles",
                    tuple(FiberOp(SELF_TUBE, (x,), handle=x) for x in vid)),
        RoundHandle(1, p * q, RI, "1-handles", tuple(ri_ops)),
        RoundHandle(2, p * q, RII, "1-handles", tuple(rii_ops), framing=RII_FRAMING),
        RoundHandle(2, 1, RBD, "D^2 x boundary arc",
                    (FiberOp(COLLAPSE_TO_SPHERE, (root,), handle="boundary"),)),
    )
    regions = _simulate(rounds, strict=True)[0]
    return BLFDescriptor(params, rounds, tuple(regions), Binding("S2", _knot_name(params)))


def build_twist_spun(params: TorusKnotParams) -> BLFDescriptor:
    """Round-handle inventory only; interior fibers are left unspecified (None)."""
    if params.k < 1:
        raise DescriptorError("build_twist_spun needs k >= 1")
    p, q, k = params.p, params.q, params.k
    rounds = [RoundHandle(0, k, R0H, f"H{m}") for m in range(p)]
    rounds += [RoundHandle(0, k, R0V, f"V{n}") for n in range(q)]
    bands = [(m, n) for m in range(p) for n in range(q)]
    rounds += [RoundHandle(1, k, RI, f"({m},{n})") for m, n in bands]
    rounds += [RoundHandle(2, k, RII, f"({m},{n})", framing=RII_FRAMING) for m, n in bands]
    rounds.append(RoundHandle(2, 1, RBD, "D^2 x boundary arc"))
    turns = sum(r.winding for r in rounds)
    regions = [FiberState()] + [None] * (turns - 1) + [FiberState((("K", 0),))]
    return BLFDescriptor(params, tuple(rounds), tuple(regions), Binding("S2", _knot_name(params)))


def _simulate(rounds, strict: bool):
    """Apply every turn's op; returns (states, error message or None)."""
    states = [FiberState()]
    for r in rounds:
        if r.attachment is None:
            raise DescriptorError(f"round {r.label} has no attachment data")
        for op in r.attachment[: r.winding]:
            try:
                states.append(op.apply(states[-1]))
            except FiberOpError as exc:
                if strict:
                    raise
                return states, f"{r.label}, crossing {len(states)}: {exc}"
    return states, None


def fiber_evolution(d: BLFDescriptor) -> list[FiberState]:
    """Every regular fiber from the south pole outward (spun case)."""
    if d.params.k != 0:
        raise DescriptorError("per-turn fiber evolution is only defined for the spun case")
    return _simulate(d.rounds, strict=True)[0]


def expected_windings(params: TorusKnotParams) -> list[tuple[str, int]]:
    if params.k == 0:
        lengths = orbit_lengths(params)
        (h,), (v,), (b,) = lengths["horizontal"], lengths["vertical"], lengths["band"]
        return [(R0H, h), (R0V, v), (RH, h), (RV, v), (RI, b), (RII, b), (RBD, 1)]
    p, q, k = params.p, params.q, params.k
    return [(R0H, k)] * p + [(R0V, k)] * q + [(RI, k)] * (p * q) + [(RII, k)] * (p * q) + [(RBD, 1)]


def validate(d: BLFDescriptor) -> Report:
    checks = []
    notes = []
    actual = [(r.label, r.winding) for r in d.rounds]
    expected = expected_windings(d.params)
    if d.params.k == 0:
        bad_len = [r.label for r in d.rounds if r.attachment is None or len(r.attachment) != r.winding]
        checks.append(Check("attachments_cover_turns", not bad_len,
                            "one op per turn" if not bad_len else f"mismatch in {bad_len}"))
        states, error = _simulate(d.rounds, strict=False)
        steps = [b.euler - a.euler for a, b in zip(states, states[1:])]
        ok_steps = error is None and all(abs(s) == 2 for s in steps)
        checks.append(Check("euler_steps_pm2", ok_steps,
                            error or f"{len(steps)} crossings, each changing χ by ±2"))
        checks.append(Check("stored_regions_match", tuple(states) == d.regions,
                            f"{len(states)} simulated vs {len(d.regions)} stored regions"))
        inner, outer = states[0], states[-1]
    else:
        notes.append("twist-spun interior fibers are unspecified; per-turn checks skipped")
        inner, outer = d.regions[0], d.regions[-1]
        checks.append(Check("region_count", len(d.regions) == d.turns + 1,
                            f"{len(d.regions)} regions for {d.turns} turns"))
    checks.append(Check("outermost_single_sphere", outer is not None and outer.is_single_sphere(),
                        outer.summary() if outer is not None else "unspecified"))
    total = (inner.euler if inner else 0) + (outer.euler if outer else 0)
    checks.append(Check("total_space_euler_is_2", inner is not None and outer is not None and total == 2,
                        f"χ(south fiber) + χ(north fiber) = {total}"))
    checks.append(Check("windings_match_orbits", actual == expected,
                        f"{[w for _, w in actual]}" if actual == expected
                        else f"got {actual}, expected {expected}"))
    return Report(f"BLF {_knot_name(d.params)}", tuple(checks), tuple(notes))


def mutate_winding(d: BLFDescriptor, label: str, winding: int) -> BLFDescriptor:
    """Copy of d with one round's winding replaced (used for negative tests)."""
    rounds = tuple(replace(r, winding=winding) if r.label == label else r for r in d.rounds)
    return replace(d, rounds=rounds)

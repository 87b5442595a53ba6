"""Regular fibers at the level of components and genera.

A fiber is a multiset of closed orientable surfaces. Components carry
stable string ids so that operations can name them across regions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

SPHERE_BIRTH = "SphereBirth"
SPHERE_DEATH = "SphereDeath"
TUBE = "Tube"
SPLIT = "Split"
SELF_TUBE = "SelfTube"
COLLAPSE_NONSEP = "CollapseNonSep"
COLLAPSE_TO_SPHERE = "CollapseToSphere"

#: change in total Euler characteristic for each kind
EULER_CHANGE = {
    SPHERE_BIRTH: 2,
    SPHERE_DEATH: -2,
    TUBE: -2,
    SPLIT: 2,
    SELF_TUBE: -2,
    COLLAPSE_NONSEP: 2,
    COLLAPSE_TO_SPHERE: 2,
}
#: kinds realised by crossing a definite fold; all others are indefinite
DEFINITE_KINDS = frozenset({SPHERE_BIRTH, SPHERE_DEATH})


class FiberOpError(ValueError):
    """An operation whose precondition fails on the given fiber."""


@dataclass(frozen=True)
class FiberState:
    components: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        ids = [c for c, _ in self.components]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate component id")
        if any(g < 0 for _, g in self.components):
            raise ValueError("negative genus")
        object.__setattr__(self, "components", tuple(sorted(self.components)))

    @classmethod
    def from_mapping(cls, genera: Mapping[str, int]) -> "FiberState":
        return cls(tuple(genera.items()))

    def as_dict(self) -> dict[str, int]:
        return dict(self.components)

    @property
    def euler(self) -> int:
        return sum(2 - 2 * g for _, g in self.components)

    @property
    def count(self) -> int:
        return len(self.components)

    def genera(self) -> list[int]:
        return sorted(g for _, g in self.components)

    def is_single_sphere(self) -> bool:
        return self.genera() == [0]

    def summary(self) -> str:
        if not self.components:
            return "∅"
        return f"{self.count}:{self.genera()}"


@dataclass(frozen=True)
class FiberOp:
    """One fold crossing, read from the inner region to the outer one.

    Tube(x, y) keeps id x; Split(x, y) detaches a new component y of
    ``genus`` from x. ``handle`` is free-form attachment metadata.
    """

    kind: str
    operands: tuple[str, ...]
    genus: int = 0
    handle: str | None = None

    def __post_init__(self):
        if self.kind not in EULER_CHANGE:
            raise ValueError(f"unknown fiber operation {self.kind!r}")
        arity = 2 if self.kind in (TUBE, SPLIT) else 1
        if len(self.operands) != arity:
            raise ValueError(f"{self.kind} takes {arity} operand(s)")

    @property
    def euler_change(self) -> int:
        return EULER_CHANGE[self.kind]

    @property
    def definite(self) -> bool:
        return self.kind in DEFINITE_KINDS

    def apply(self, state: FiberState) -> FiberState:
        g = state.as_dict()
        k, ops = self.kind, self.operands
        if k == SPHERE_BIRTH:
            (x,) = ops
            if x in g:
                raise FiberOpError(f"component {x} already exists")
            g[x] = 0
        elif k == SPHERE_DEATH:
            (x,) = ops
            if g.get(x) != 0:
                raise FiberOpError(f"{x} is not a sphere component")
            del g[x]
        elif k == TUBE:
            x, y = ops
            if x == y or x not in g or y not in g:
                raise FiberOpError(f"Tube needs two distinct components, got {x}, {y}")
            g[x] += g.pop(y)
        elif k == SPLIT:
            x, y = ops
            if x not in g or y in g or not 0 <= self.genus <= g[x]:
                raise FiberOpError(f"cannot split {y} of genus {self.genus} off {x}")
            g[x] -= self.genus
            g[y] = self.genus
        elif k == SELF_TUBE:
            (x,) = ops
            if x not in g:
                raise FiberOpError(f"no component {x}")
            g[x] += 1
        elif k == COLLAPSE_NONSEP:
            (x,) = ops
            if g.get(x, 0) < 1:
                raise FiberOpError(f"CollapseNonSep needs genus >= 1 on {x}")
            g[x] -= 1
        else:  # COLLAPSE_TO_SPHERE
            (x,) = ops
            if g.get(x) != 1:
                raise FiberOpError(f"CollapseToSphere needs a torus, {x} has genus {g.get(x)}")
            g[x] = 0
        return FiberState.from_mapping(g)

    def touches(self) -> frozenset[str]:
        return frozenset(self.operands)


def apply_ops(state: FiberState, ops: Iterable[FiberOp]) -> list[FiberState]:
    """All intermediate states, starting with ``state``."""
    states = [state]
    for op in ops:
        states.append(op.apply(states[-1]))
    return states


def derive_op(inner: FiberState, outer: FiberState, definite: bool) -> FiberOp | None:
    """The single fold crossing of the given kind turning ``inner`` into ``outer``.

    Tubing two spheres together looks like a sphere death at this level of
    detail, so the fold kind is needed to tell the readings apart. When a
    sphere is tubed onto (or split off) a component whose genus does not
    change, the partner is taken to be the least such id.
    """
    a, b = inner.as_dict(), outer.as_dict()
    only_a = set(a) - set(b)
    only_b = set(b) - set(a)
    common = set(a) & set(b)
    changed = sorted(x for x in common if a[x] != b[x])
    if definite:
        if not only_a and len(only_b) == 1 and not changed:
            (x,) = only_b
            return FiberOp(SPHERE_BIRTH, (x,)) if b[x] == 0 else None
        if len(only_a) == 1 and not only_b and not changed:
            (x,) = only_a
            return FiberOp(SPHERE_DEATH, (x,)) if a[x] == 0 else None
        return None
    if len(only_a) == 1 and not only_b:
        (y,) = only_a
        partners = changed or (sorted(common) if a[y] == 0 else [])
        if len(partners) >= 1 and len(changed) <= 1:
            x = partners[0]
            return FiberOp(TUBE, (x, y)) if b[x] == a[x] + a[y] else None
        return None
    if not only_a and len(only_b) == 1:
        (y,) = only_b
        partners = changed or (sorted(common) if b[y] == 0 else [])
        if len(partners) >= 1 and len(changed) <= 1:
            x = partners[0]
            return FiberOp(SPLIT, (x, y), genus=b[y]) if a[x] == b[x] + b[y] else None
        return None
    if not only_a and not only_b and len(changed) == 1:
        (x,) = changed
        if b[x] == a[x] + 1:
            return FiberOp(SELF_TUBE, (x,))
        if b[x] == a[x] - 1:
            return FiberOp(COLLAPSE_TO_SPHERE if b[x] == 0 else COLLAPSE_NONSEP, (x,))
    return None

"""Concentric fold diagrams over a disk and the Cerf moves that rewrite them.

A diagram is a stack of fold circles around the center of the base disk,
innermost first. A circle of winding w is unrolled into w concentric turns,
and ``regions`` holds the regular fiber between consecutive turns (so there
are turns + 1 regions, the first over the center). Region readings are
taken along a fixed radial ray that avoids swallowtails and lens cusps,
which therefore show up only as decorations on their circle.

Every move returns a new diagram. A move that does not apply raises
InapplicableMove and leaves the input untouched; a move that applies but
breaks region consistency raises DiagramInvariantError, which means a bug.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .blf import BLFDescriptor
from .checks import Check, Report
from .fiber import SPHERE_BIRTH, FiberOp, FiberOpError, FiberState, derive_op

DEFINITE = "definite"
INDEFINITE = "indefinite"

SWALLOWTAIL = "Swallowtail"
BIRTH = "Birth"
MERGE = "Merge"
UNMERGE = "Unmerge"
PASS_FOLDS = "PassFolds"
GAY_ELIMINATION = "GayElimination"
MOVE_KINDS = (SWALLOWTAIL, BIRTH, MERGE, UNMERGE, PASS_FOLDS, GAY_ELIMINATION)


class InapplicableMove(ValueError):
    pass


class DiagramInvariantError(RuntimeError):
    pass


@dataclass(frozen=True)
class FoldCircle:
    kind: str
    winding: int
    cusps: int = 0
    swallowtails: int = 0
    passes: int = 0  # stage of the two-swallowtail pass sequence (0, 1 or 2)
    label: str = ""

    def __post_init__(self):
        if self.kind not in (DEFINITE, INDEFINITE):
            raise ValueError(f"unknown fold kind {self.kind!r}")
        if self.winding < 1:
            raise ValueError("winding must be positive")

    @property
    def plain(self) -> bool:
        return self.cusps == 0 and self.swallowtails == 0 and self.passes == 0


@dataclass(frozen=True)
class Move:
    kind: str
    target: tuple[int, ...]
    inverse: bool = False
    component: str | None = None  # Birth: fiber component receiving the 1-handle

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")


@dataclass(frozen=True)
class FoldDiagram:
    circles: tuple[FoldCircle, ...]
    regions: tuple[FiberState | None, ...]
    history: tuple[Move, ...] = ()

    @property
    def turns(self) -> int:
        return sum(c.winding for c in self.circles)

    def span(self, i: int) -> tuple[int, int]:
        """Region indices just inside and just outside circle i."""
        start = sum(c.winding for c in self.circles[:i])
        return start, start + self.circles[i].winding

    def count(self, kind: str) -> int:
        return sum(1 for c in self.circles if c.kind == kind)

    @property
    def blf_ready(self) -> bool:
        return self.count(DEFINITE) == 0

    def without_history(self) -> "FoldDiagram":
        return replace(self, history=())


class DiagramReport(Report):
    blf_ready: bool

    def __init__(self, subject, checks, notes=(), blf_ready=False):
        super().__init__(subject, checks, notes)
        object.__setattr__(self, "blf_ready", blf_ready)

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["blf_ready"] = self.blf_ready
        return out


# --- construction -------------------------------------------------------------


def canonical_round0(n: int) -> FoldDiagram:
    """Round 0-handle winding n times: one definite circle, empty fiber at the center."""
    if n < 1:
        raise ValueError("winding must be >= 1")
    regions = [FiberState()]
    for t in range(n):
        regions.append(FiberOp(SPHERE_BIRTH, (f"S{t}",)).apply(regions[-1]))
    return FoldDiagram((FoldCircle(DEFINITE, n),), tuple(regions))


def from_descriptor(d: BLFDescriptor) -> FoldDiagram:
    circles = tuple(
        FoldCircle(DEFINITE if r.definite else INDEFINITE, r.winding, label=r.label) for r in d.rounds
    )
    return FoldDiagram(circles, d.regions)


# --- validation ---------------------------------------------------------------


def turn_ops(d: FoldDiagram, i: int) -> list[FiberOp | None]:
    a, b = d.span(i)
    definite = d.circles[i].kind == DEFINITE
    out = []
    for t in range(a, b):
        inner, outer = d.regions[t], d.regions[t + 1]
        out.append(None if inner is None or outer is None else derive_op(inner, outer, definite))
    return out


def validate_diagram(d: FoldDiagram) -> DiagramReport:
    checks = []
    count_ok = len(d.regions) == d.turns + 1
    checks.append(Check("region_count", count_ok, f"{len(d.regions)} regions for {d.turns} turns"))
    bad_turns = []
    unspecified = 0
    if count_ok:
        for i, c in enumerate(d.circles):
            a, _ = d.span(i)
            for t, op in enumerate(turn_ops(d, i)):
                inner, outer = d.regions[a + t], d.regions[a + t + 1]
                if inner is None or outer is None:
                    unspecified += 1
                elif op is None:
                    bad_turns.append(f"circle {i}{' ' + c.label if c.label else ''} turn {t}: "
                                     f"{inner.summary()} -> {outer.summary()} is not a {c.kind} crossing")
    checks.append(Check("region_consistency", count_ok and not bad_turns,
                        bad_turns[0] if bad_turns else f"all specified crossings consistent"))
    bad_deco = [
        i for i, c in enumerate(d.circles)
        if c.cusps % 2 or c.swallowtails < 0 or 2 * c.swallowtails > c.cusps or c.passes not in (0, 1, 2)
    ]
    checks.append(Check("decorations", not bad_deco,
                        "cusp counts even, two per swallowtail" if not bad_deco else f"bad circles {bad_deco}"))
    notes = (f"{unspecified} crossings with unspecified fibers",) if unspecified else ()
    return DiagramReport("fold diagram", tuple(checks), notes, blf_ready=d.blf_ready)


# --- moves --------------------------------------------------------------------


def _circle(d: FoldDiagram, i: int) -> FoldCircle:
    if not 0 <= i < len(d.circles):
        raise InapplicableMove(f"no circle {i}")
    return d.circles[i]


def _with_circles(d: FoldDiagram, i: int, j: int, new: list[FoldCircle], regions=None) -> FoldDiagram:
    circles = d.circles[:i] + tuple(new) + d.circles[j:]
    return replace(d, circles=circles, regions=d.regions if regions is None else tuple(regions))


def _swallowtail(d: FoldDiagram, m: Move) -> FoldDiagram:
    (i,) = m.target
    c = _circle(d, i)
    if not m.inverse:
        return _with_circles(d, i, i + 1, [replace(c, swallowtails=c.swallowtails + 1, cusps=c.cusps + 2)])
    if c.swallowtails < 1:
        raise InapplicableMove(f"circle {i} has no swallowtail to remove")
    left = c.swallowtails - 1
    return _with_circles(d, i, i + 1, [replace(c, swallowtails=left, cusps=c.cusps - 2,
                                               passes=c.passes if left else 0)])


def _birth(d: FoldDiagram, m: Move) -> FoldDiagram:
    if not m.inverse:
        (r,) = m.target
        if not 0 <= r < len(d.regions) or d.regions[r] is None:
            raise InapplicableMove(f"region {r} missing or unspecified")
        x = m.component
        if x is None or x not in d.regions[r].as_dict():
            raise InapplicableMove(f"birth needs a component of region {r}, got {x!r}")
        # insertion point: the circle boundary at region r
        i, acc = 0, 0
        while i < len(d.circles) and acc < r:
            acc += d.circles[i].winding
            i += 1
        if acc != r:
            raise InapplicableMove(f"region {r} lies inside a multi-turn circle")
        middle = FiberOp("SelfTube", (x,)).apply(d.regions[r])
        regions = d.regions[: r + 1] + (middle, d.regions[r]) + d.regions[r + 1:]
        pair = [FoldCircle(INDEFINITE, 1, cusps=2), FoldCircle(INDEFINITE, 1)]
        return _with_circles(d, i, i, pair, regions)
    (i,) = m.target
    a, b = _circle(d, i), _circle(d, i + 1)
    lo, _ = d.span(i)
    if not (a.kind == b.kind == INDEFINITE and a.winding == b.winding == 1 and a.cusps == 2
            and a.swallowtails == 0 and b.plain and d.regions[lo] == d.regions[lo + 2]):
        raise InapplicableMove(f"circles {i}, {i + 1} are not a canceling lens pair")
    regions = d.regions[: lo + 1] + d.regions[lo + 3:]
    return _with_circles(d, i, i + 2, [], regions)


def _merge(d: FoldDiagram, m: Move) -> FoldDiagram:
    (i,) = m.target
    a, b = _circle(d, i), _circle(d, i + 1)
    if not (a.kind == DEFINITE and a.winding == 1 and a.swallowtails == 1 and a.cusps == 2
            and a.passes == 0 and b.kind == DEFINITE and b.plain):
        raise InapplicableMove(f"no pair of beaks to merge at circles {i}, {i + 1}")
    _, mid = d.span(i)
    if derive_op(d.regions[mid], d.regions[mid + 1], definite=False) is None:
        raise InapplicableMove("merged fold would have no vanishing cycle")
    new = [replace(a, swallowtails=0, cusps=0), FoldCircle(INDEFINITE, 1)]
    if b.winding > 1:
        new.append(replace(b, winding=b.winding - 1))
    return _with_circles(d, i, i + 2, new)


def _unmerge(d: FoldDiagram, m: Move) -> FoldDiagram:
    (i,) = m.target
    a, b = _circle(d, i), _circle(d, i + 1)
    if not (a.kind == DEFINITE and a.winding == 1 and a.plain and b.kind == INDEFINITE
            and b.winding == 1 and b.plain):
        raise InapplicableMove(f"circles {i}, {i + 1} cannot be unmerged")
    _, mid = d.span(i)
    if derive_op(d.regions[mid], d.regions[mid + 1], definite=True) is None:
        raise InapplicableMove("the indefinite turn does not cancel against a definite one")
    new = [replace(a, swallowtails=1, cusps=2)]
    end = i + 2
    if end < len(d.circles) and d.circles[end].kind == DEFINITE and d.circles[end].plain:
        new.append(replace(d.circles[end], winding=d.circles[end].winding + 1))
        end += 1
    else:
        new.append(FoldCircle(DEFINITE, 1))
    return _with_circles(d, i, end, new)


def _pass_folds(d: FoldDiagram, m: Move) -> FoldDiagram:
    if len(m.target) == 1:
        (i,) = m.target
        c = _circle(d, i)
        if c.kind != DEFINITE:
            raise InapplicableMove("single-circle passes need a definite circle")
        if c.winding >= 2 and c.swallowtails == 1 and c.cusps == 2 and c.passes == 0:
            # innermost turn, carrying the swallowtail, closes up on its own
            return _with_circles(d, i, i + 1, [replace(c, winding=1), FoldCircle(DEFINITE, c.winding - 1)])
        if c.winding == 1 and c.swallowtails == 2 and c.passes == 0:
            # the two definite arms pass over each other
            return _with_circles(d, i, i + 1, [replace(c, passes=1)])
        if c.winding == 1 and c.swallowtails == 2 and c.passes == 1:
            # the two indefinite arcs pass: the extremum becomes a saddle and
            # the sphere born on this circle survives inside as a torus
            if i != 0:
                raise InapplicableMove("indefinite pass needs the innermost circle")
            op = derive_op(d.regions[0], d.regions[1], definite=True)
            if op is None or op.kind != SPHERE_BIRTH:
                raise InapplicableMove("circle does not bound a sphere from outside")
            (x,) = op.operands
            center = dict(d.regions[0].as_dict(), **{x: 1})
            regions = (FiberState.from_mapping(center),) + d.regions[1:]
            return _with_circles(d, i, i + 1, [replace(c, kind=INDEFINITE, passes=2)], regions)
        raise InapplicableMove(f"no pass available on circle {i}")
    i, j = m.target
    if j != i + 1:
        raise InapplicableMove("only adjacent circles can pass over each other")
    a, b = _circle(d, i), _circle(d, j)
    if not (a.plain and b.plain):
        raise InapplicableMove("decorated circles cannot pass")
    if a.kind == b.kind == DEFINITE:
        return _with_circles(d, i, j + 1, [replace(a, winding=a.winding + b.winding)])
    if a.winding != 1 and b.winding != 1:
        raise InapplicableMove("one of the passing circles must be a single turn")
    ops_a, ops_b = turn_ops(d, i), turn_ops(d, j)
    if None in ops_a or None in ops_b:
        raise InapplicableMove("crossings around the passing circles are not readable")
    touched_a = frozenset().union(*(op.touches() for op in ops_a))
    touched_b = frozenset().union(*(op.touches() for op in ops_b))
    if touched_a & touched_b:
        raise InapplicableMove("the two folds act on a common fiber component")
    lo, _ = d.span(i)
    states = [d.regions[lo]]
    try:
        for op in ops_b + ops_a:
            states.append(op.apply(states[-1]))
    except FiberOpError as exc:
        raise InapplicableMove(str(exc)) from exc
    regions = d.regions[:lo] + tuple(states) + d.regions[lo + len(states):]
    return _with_circles(d, i, j + 1, [b, a], regions)


def gay_sequence(i: int = 0) -> list[Move]:
    """Two swallowtails, pass definite folds, pass indefinite folds, remove swallowtails."""
    return [
        Move(SWALLOWTAIL, (i,)),
        Move(SWALLOWTAIL, (i,)),
        Move(PASS_FOLDS, (i,)),
        Move(PASS_FOLDS, (i,)),
        Move(SWALLOWTAIL, (i,), inverse=True),
        Move(SWALLOWTAIL, (i,), inverse=True),
    ]


def _gay(d: FoldDiagram, m: Move) -> FoldDiagram:
    (i,) = m.target
    c = _circle(d, i)
    if not (c.kind == DEFINITE and c.winding == 1 and c.plain):
        raise InapplicableMove("Gay's move needs a plain definite circle of winding 1")
    out = d
    for step in gay_sequence(i):
        out = apply_move(out, step, record=False)
    return out


_HANDLERS = {
    SWALLOWTAIL: _swallowtail,
    BIRTH: _birth,
    MERGE: _merge,
    UNMERGE: _unmerge,
    PASS_FOLDS: _pass_folds,
    GAY_ELIMINATION: _gay,
}


def apply_move(d: FoldDiagram, m: Move, record: bool = True) -> FoldDiagram:
    out = _HANDLERS[m.kind](d, m)
    report = validate_diagram(out)
    if not report.passed:
        raise DiagramInvariantError(f"{m} broke the diagram: {report.lines()}")
    if d.regions and out.regions:
        if d.regions[-1] != out.regions[-1]:
            raise DiagramInvariantError(f"{m} changed the outer boundary fiber")
        if d.regions[0] is not None and out.regions[0] is not None and d.regions[0].euler != out.regions[0].euler:
            raise DiagramInvariantError(f"{m} changed the Euler characteristic of the total space")
    if record:
        out = replace(out, history=d.history + (m,))
    return out


def inverse_move(m: Move) -> Move:
    """Move undoing m on the diagram m produced (Birth targets the new lens)."""
    if m.kind in (SWALLOWTAIL, BIRTH):
        if m.kind == BIRTH and not m.inverse:
            raise ValueError("the inverse of a birth needs the circle index; use death_of")
        return replace(m, inverse=not m.inverse)
    if m.kind == MERGE:
        return Move(UNMERGE, m.target)
    if m.kind == UNMERGE:
        return Move(MERGE, m.target)
    raise ValueError(f"{m.kind} has no single-move inverse")


def death_of(d: FoldDiagram, birth: Move) -> Move:
    """Inverse of a Birth move applied to d."""
    (r,) = birth.target
    i, acc = 0, 0
    while acc < r:
        acc += d.circles[i].winding
        i += 1
    return Move(BIRTH, (i,), inverse=True)


def available_passes(d: FoldDiagram) -> list[Move]:
    """Legal PassFolds moves, innermost first."""
    out = []
    for i in range(len(d.circles)):
        for target in ((i,), (i, i + 1)):
            m = Move(PASS_FOLDS, target)
            try:
                apply_move(d, m, record=False)
            except (InapplicableMove, DiagramInvariantError):
                continue
            out.append(m)
    return out


# --- definite fold elimination ------------------------------------------------


@dataclass(frozen=True)
class Elimination:
    initial: FoldDiagram
    script: tuple[Move, ...]
    states: tuple[FoldDiagram, ...]

    @property
    def final(self) -> FoldDiagram:
        return self.states[-1]


def eliminate_definite_round0(n: int) -> Elimination:
    """Remove the definite circle of a round 0-handle winding n times.

    While the definite circle winds w >= 2 times, a swallowtail on its
    innermost turn is pinched off, its beaks merged into an indefinite
    circle that splits a sphere, and that circle moved outward past the
    remaining w - 2 definite turns. The last turn goes by Gay's move.
    """
    if n < 1:
        raise ValueError("winding must be >= 1")
    initial = canonical_round0(n)
    states = [initial]
    script: list[Move] = []

    def do(m: Move):
        states.append(apply_move(states[-1], m))
        script.append(m)

    while states[-1].circles[0].winding >= 2:
        w = states[-1].circles[0].winding
        do(Move(SWALLOWTAIL, (0,)))
        do(Move(PASS_FOLDS, (0,)))
        do(Move(MERGE, (0,)))
        if w > 2:
            do(Move(PASS_FOLDS, (1, 2)))
            do(Move(PASS_FOLDS, (0, 1)))
    for m in gay_sequence(0):
        do(m)
    return Elimination(initial, tuple(script), tuple(states))


def replay(initial: FoldDiagram, script) -> list[FoldDiagram]:
    states = [initial]
    for m in script:
        states.append(apply_move(states[-1], m))
    return states

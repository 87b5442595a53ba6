"""Fat-graph model of the fiber surface L_{p,q} of the (p,q)-torus knot.

The surface is the plumbing of (p-1)(q-1) Hopf bands. As a ribbon graph it
is the complete bipartite graph between p horizontal flaps H(m) and q
vertical flaps V(n); the band joining H(m) to V(n) is edge (m, n).

Orientation conventions used throughout the package:

* every edge is oriented from its horizontal end (tail) to its vertical end
  (head), and a cycle is a signed edge vector in that orientation;
* cyclic orders list half-edges counterclockwise around the vertex disk;
* the intersection pairing <a, b> is +1 when (tangent of a, tangent of b) is
  a positively oriented frame.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Hashable, Sequence

VertexKey = tuple[str, int]
EdgeLabel = Hashable
HalfEdge = tuple[EdgeLabel, int]  # (edge label, 0 = tail end, 1 = head end)


class ParamError(ValueError):
    """Invalid torus-knot parameters."""


class CycleError(ValueError):
    """An edge vector that is not a 1-cycle, or a degenerate cycle."""


@dataclass(frozen=True)
class TorusKnotParams:
    p: int
    q: int
    k: int = 0

    def __post_init__(self):
        for name in ("p", "q", "k"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ParamError(f"{name} must be an integer, got {value!r}")
        if self.p < 2 or self.q < 2:
            raise ParamError(f"need p >= 2 and q >= 2, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise ParamError(f"p and q must be coprime, got ({self.p}, {self.q})")
        if self.k < 0:
            raise ParamError(f"twist count must be non-negative, got {self.k}")

    @property
    def spun(self) -> bool:
        return self.k == 0

    @property
    def rank(self) -> int:
        """First Betti number (p-1)(q-1) of the fiber surface."""
        return (self.p - 1) * (self.q - 1)


@dataclass(frozen=True)
class Vertex:
    key: VertexKey
    cyclic_order: tuple[HalfEdge, ...]


@dataclass(frozen=True)
class Edge:
    label: EdgeLabel
    tail: VertexKey
    head: VertexKey


@dataclass(frozen=True)
class RibbonSurface:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    params: TorusKnotParams | None = None
    _edge_index: dict = field(init=False, repr=False, compare=False)
    _rotation: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edge_index = {e.label: i for i, e in enumerate(self.edges)}
        if len(edge_index) != len(self.edges):
            raise ValueError("duplicate edge labels")
        rotation = {}
        seen = []
        for v in self.vertices:
            n = len(v.cyclic_order)
            for i, h in enumerate(v.cyclic_order):
                rotation[h] = (v.key, i, v.cyclic_order[(i + 1) % n])
                seen.append(h)
        expected = {(e.label, 0) for e in self.edges} | {(e.label, 1) for e in self.edges}
        if len(seen) != len(set(seen)) or set(seen) != expected:
            raise ValueError("every edge end must appear exactly once in a cyclic order")
        for e in self.edges:
            if rotation[(e.label, 0)][0] != e.tail or rotation[(e.label, 1)][0] != e.head:
                raise ValueError(f"edge {e.label!r} endpoints disagree with cyclic orders")
        object.__setattr__(self, "_edge_index", edge_index)
        object.__setattr__(self, "_rotation", rotation)

    def edge_index(self, label: EdgeLabel) -> int:
        return self._edge_index[label]

    def vertex_of(self, h: HalfEdge) -> VertexKey:
        return self._rotation[h][0]

    def position(self, h: HalfEdge) -> int:
        """Index of a half-edge in its vertex's counterclockwise order."""
        return self._rotation[h][1]

    def next_ccw(self, h: HalfEdge) -> HalfEdge:
        return self._rotation[h][2]

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges)


@dataclass(frozen=True)
class Cycle:
    """Signed edge vector with zero net flow at every vertex."""

    coefficients: tuple[int, ...]

    def __add__(self, other: "Cycle") -> "Cycle":
        return Cycle(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, c: int) -> "Cycle":
        return Cycle(tuple(c * a for a in self.coefficients))

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def build_seifert_surface(params: TorusKnotParams) -> RibbonSurface:
    """Ribbon graph of L_{p,q}.

    H(m) carries (m,0), ..., (m,q-1) counterclockwise; V(n) carries
    (p-1,n), ..., (0,n). With these orders the edge map (m,n) -> (m+1,n-1)
    is a ribbon-graph automorphism.
    """
    if not isinstance(params, TorusKnotParams):
        raise ParamError("expected TorusKnotParams")
    p, q = params.p, params.q
    vertices = [Vertex(("H", m), tuple(((m, n), 0) for n in range(q))) for m in range(p)]
    vertices += [
        Vertex(("V", n), tuple(((m, n), 1) for m in range(p - 1, -1, -1))) for n in range(q)
    ]
    edges = [Edge((m, n), ("H", m), ("V", n)) for m in range(p) for n in range(q)]
    return RibbonSurface(tuple(vertices), tuple(edges), params)


def boundary_components(s: RibbonSurface) -> tuple[int, list[tuple[HalfEdge, ...]]]:
    """Trace the boundary of the thickened graph.

    Leaving along half-edge h, arrive at the far end h' and continue with
    the counterclockwise successor of h'. Isolated vertices bound a disk
    and contribute one empty walk.
    """
    walks: list[tuple[HalfEdge, ...]] = []
    seen: set[HalfEdge] = set()
    for v in s.vertices:
        if not v.cyclic_order:
            walks.append(())
        for start in v.cyclic_order:
            if start in seen:
                continue
            walk = []
            h = start
            while h not in seen:
                seen.add(h)
                walk.append(h)
                label, end = h
                h = s.next_ccw((label, 1 - end))
            walks.append(tuple(walk))
    return len(walks), walks


def connected_components(s: RibbonSurface) -> int:
    parent = {v.key: v.key for v in s.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in s.edges:
        a, b = find(e.tail), find(e.head)
        if a != b:
            parent[b] = a
    return len({find(v.key) for v in s.vertices})


def genus(s: RibbonSurface) -> int:
    b, _ = boundary_components(s)
    twice = 2 * connected_components(s) - s.euler_characteristic - b
    return twice // 2


def first_betti(s: RibbonSurface) -> int:
    return len(s.edges) - len(s.vertices) + connected_components(s)


def surface_invariants(s: RibbonSurface) -> dict:
    b, _ = boundary_components(s)
    return {
        "vertices": len(s.vertices),
        "edges": len(s.edges),
        "euler_characteristic": s.euler_characteristic,
        "boundary_components": b,
        "genus": genus(s),
        "first_betti": first_betti(s),
    }


# --- cycles -----------------------------------------------------------------


def is_cycle(s: RibbonSurface, c: Cycle) -> bool:
    if len(c.coefficients) != len(s.edges):
        return False
    flow = {v.key: 0 for v in s.vertices}
    for e, x in zip(s.edges, c.coefficients):
        flow[e.tail] -= x
        flow[e.head] += x
    return not any(flow.values())


def _spanning_tree(s: RibbonSurface) -> dict[VertexKey, tuple[VertexKey, int, int] | None]:
    """BFS tree; parent[v] = (parent vertex, edge index, sign of traversal parent->v)."""
    parent: dict = {}
    for root in s.vertices:
        if root.key in parent:
            continue
        parent[root.key] = None
        queue = deque([root.key])
        while queue:
            v = queue.popleft()
            for label, end in _order(s, v):
                e = s.edges[s.edge_index(label)]
                w = e.head if end == 0 else e.tail
                if w not in parent:
                    parent[w] = (v, s.edge_index(label), 1 if end == 0 else -1)
                    queue.append(w)
    return parent


def _order(s: RibbonSurface, key: VertexKey) -> tuple[HalfEdge, ...]:
    for v in s.vertices:
        if v.key == key:
            return v.cyclic_order
    raise KeyError(key)


def _tree_path(parent, v) -> list[tuple[int, int]]:
    """Directed edges (index, sign) from the root down to v."""
    path = []
    while parent[v] is not None:
        u, idx, sign = parent[v]
        path.append((idx, sign))
        v = u
    return path[::-1]


def _fundamental(s: RibbonSurface):
    parent = _spanning_tree(s)
    tree_edges = {entry[1] for entry in parent.values() if entry is not None}
    basis_edges = [i for i in range(len(s.edges)) if i not in tree_edges]
    walks = []
    for i in basis_edges:
        e = s.edges[i]
        down_tail = _tree_path(parent, e.tail)
        down_head = _tree_path(parent, e.head)
        # strip the common prefix so the walk is a simple cycle
        k = 0
        while k < min(len(down_tail), len(down_head)) and down_tail[k] == down_head[k]:
            k += 1
        up_head = [(idx, -sign) for idx, sign in reversed(down_head[k:])]
        walks.append(tuple([(i, 1)] + up_head + down_tail[k:]))
    return basis_edges, walks


def cycle_basis(s: RibbonSurface) -> list[Cycle]:
    """Fundamental cycles of a BFS spanning tree, one per non-tree edge."""
    _, walks = _fundamental(s)
    return [walk_to_cycle(s, w) for w in walks]


def basis_edge_indices(s: RibbonSurface) -> list[int]:
    return _fundamental(s)[0]


def walk_to_cycle(s: RibbonSurface, walk: Sequence[tuple[int, int]]) -> Cycle:
    coeffs = [0] * len(s.edges)
    for idx, sign in walk:
        coeffs[idx] += sign
    return Cycle(tuple(coeffs))


def coordinates(s: RibbonSurface, c: Cycle) -> tuple[int, ...]:
    """Coordinates of a cycle in cycle_basis: its non-tree edge coefficients."""
    if not is_cycle(s, c):
        raise CycleError("not a 1-cycle")
    return tuple(c.coefficients[i] for i in basis_edge_indices(s))


def from_coordinates(s: RibbonSurface, x: Sequence[int]) -> Cycle:
    total = Cycle((0,) * len(s.edges))
    for coeff, b in zip(x, cycle_basis(s)):
        total = total + b.scale(coeff)
    return total


# --- intersection pairing -----------------------------------------------------


def _passes(s: RibbonSurface, walk):
    """(vertex, incoming half-edge, outgoing half-edge) for each vertex visit."""
    out = []
    n = len(walk)
    for k in range(n):
        i1, d1 = walk[k]
        i2, d2 = walk[(k + 1) % n]
        l1, l2 = s.edges[i1].label, s.edges[i2].label
        incoming = (l1, 1 if d1 > 0 else 0)
        outgoing = (l2, 0 if d2 > 0 else 1)
        v = s.vertex_of(incoming)
        if s.vertex_of(outgoing) != v:
            raise CycleError("walk is not closed")
        out.append((v, incoming, outgoing))
    return out


def walk_intersection(s: RibbonSurface, walk_a, walk_b) -> int:
    """Signed crossings of two simple closed walks.

    b is pushed off to the left of every edge (left relative to the edge's
    tail->head direction), so the two curves meet only inside vertex disks,
    where each meeting is a pair of chords.
    """

    def slot(h, offset):
        return (s.position(h), offset)

    def pushed(h):
        # left of tail->head is later at the tail and earlier at the head
        return slot(h, 1 if h[1] == 0 else -1)

    total = 0
    by_vertex: dict = {}
    for v, hin, hout in _passes(s, walk_b):
        by_vertex.setdefault(v, []).append((pushed(hin), pushed(hout)))
    for v, hin, hout in _passes(s, walk_a):
        a_in, a_out = slot(hin, 0), slot(hout, 0)

        def right_of_a(x):
            # points on the counterclockwise arc from a_in to a_out
            if a_in < a_out:
                return a_in < x < a_out
            return x > a_in or x < a_out

        for b_in, b_out in by_vertex.get(v, ()):
            r_in, r_out = right_of_a(b_in), right_of_a(b_out)
            if r_in and not r_out:
                total += 1
            elif r_out and not r_in:
                total -= 1
    return total


def gram_matrix(s: RibbonSurface) -> tuple[tuple[int, ...], ...]:
    """Intersection pairing on cycle_basis."""
    _, walks = _fundamental(s)
    return tuple(tuple(walk_intersection(s, a, b) for b in walks) for a in walks)


def intersection_number(s: RibbonSurface, a: Cycle, b: Cycle) -> int:
    x = coordinates(s, a)
    y = coordinates(s, b)
    g = gram_matrix(s)
    return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


def cell_walk(s: RibbonSurface, i: int, j: int):
    """The 4-cycle through (i,j), (i+1,j), (i+1,j+1), (i,j+1)."""
    labels = [((i, j), 1), ((i + 1, j), -1), ((i + 1, j + 1), 1), ((i, j + 1), -1)]
    return tuple((s.edge_index(lab), sign) for lab, sign in labels)


def twist_curves(s: RibbonSurface) -> list[Cycle]:
    """Core curves gamma_{i,j} of the plumbed Hopf bands, row-major in (i, j)."""
    if s.params is None:
        raise ValueError("twist curves need a surface built from torus-knot parameters")
    p, q = s.params.p, s.params.q
    return [walk_to_cycle(s, cell_walk(s, i, j)) for i in range(p - 1) for j in range(q - 1)]


def twist_curve_index(params: TorusKnotParams, i: int, j: int) -> int:
    return i * (params.q - 1) + j

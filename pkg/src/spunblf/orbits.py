"""Permutation action of phi = HV on the handles of L_{p,q}."""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .surface import TorusKnotParams

# Greek names of the trefoil 1-handles, in phi-traversal order from (0, 0).
TREFOIL_ONE_HANDLES = ("α", "μ", "β", "κ", "γ", "λ")
TREFOIL_HORIZONTAL = ("A", "B")
TREFOIL_VERTICAL = ("C", "D", "E")


@dataclass(frozen=True)
class HandleOrbitAction:
    """Images as tuples: perm[x] is the image of handle x.

    1-handle (m, n) is indexed m*q + n.
    """

    params: TorusKnotParams
    perm0_horizontal: tuple[int, ...]
    perm0_vertical: tuple[int, ...]
    perm1: tuple[int, ...]

    def one_handle(self, index: int) -> tuple[int, int]:
        return divmod(index, self.params.q)

    def one_handle_index(self, label: tuple[int, int]) -> int:
        m, n = label
        return (m % self.params.p) * self.params.q + (n % self.params.q)


@dataclass(frozen=True)
class Orbit:
    handle_index_class: int
    kind: str  # "horizontal", "vertical" or "band"
    members: tuple
    length: int


def phi_action(params: TorusKnotParams) -> HandleOrbitAction:
    p, q = params.p, params.q
    horizontal = tuple((m + 1) % p for m in range(p))
    vertical = tuple((n - 1) % q for n in range(q))
    bands = tuple(((m + 1) % p) * q + (n - 1) % q for m in range(p) for n in range(q))
    return HandleOrbitAction(params, horizontal, vertical, bands)


def cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Cycle decomposition, each cycle starting at its least element."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def permutation_order(perm: tuple[int, ...]) -> int:
    order = 1
    for c in cycles(perm):
        order = lcm(order, len(c))
    return order


def orbits(action: HandleOrbitAction) -> list[Orbit]:
    """Horizontal 0-handle orbits, then vertical, then 1-handle orbits."""
    out = []
    for kind, perm in (("horizontal", action.perm0_horizontal), ("vertical", action.perm0_vertical)):
        for c in cycles(perm):
            out.append(Orbit(0, kind, c, len(c)))
    for c in cycles(action.perm1):
        members = tuple(action.one_handle(x) for x in c)
        out.append(Orbit(1, "band", members, len(c)))
    return out


def orbit_lengths(params: TorusKnotParams) -> dict[str, list[int]]:
    lengths: dict[str, list[int]] = {"horizontal": [], "vertical": [], "band": []}
    for o in orbits(phi_action(params)):
        lengths[o.kind].append(o.length)
    return lengths


def handle_label(params: TorusKnotParams, kind: str, member) -> str:
    """Display name of a handle.

    For the trefoil the classical orbit-table letters are assigned in
    phi-traversal order from the least representative of each class.
    """
    if (params.p, params.q) == (2, 3):
        action = phi_action(params)
        if kind == "horizontal":
            return TREFOIL_HORIZONTAL[cycles(action.perm0_horizontal)[0].index(member)]
        if kind == "vertical":
            return TREFOIL_VERTICAL[cycles(action.perm0_vertical)[0].index(member)]
        return TREFOIL_ONE_HANDLES[cycles(action.perm1)[0].index(action.one_handle_index(member))]
    if kind == "horizontal":
        return f"H{member}"
    if kind == "vertical":
        return f"V{member}"
    return f"({member[0]},{member[1]})"


def orbit_table(params: TorusKnotParams) -> dict[str, list[list[str]]]:
    """Orbits by handle index, members named as in handle_label."""
    table: dict[str, list[list[str]]] = {"0-handles": [], "1-handles": []}
    for o in orbits(phi_action(params)):
        names = [handle_label(params, o.kind, m) for m in o.members]
        table[f"{o.handle_index_class}-handles"].append(names)
    return table


def format_orbit_table(params: TorusKnotParams) -> str:
    table = orbit_table(params)
    rows = []
    for key in ("0-handles", "1-handles"):
        cells = ", ".join("{" + "→".join(names) + "}" for names in table[key])
        rows.append((key, cells))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)} | {v}" for k, v in rows)

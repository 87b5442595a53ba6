"""Action of the torus-knot monodromy on H_1(L_{p,q}).

Two independent descriptions of the same map are computed: the ordered
product of right-handed Dehn twists along the plumbing curves, and the map
induced by the handle permutation (m, n) -> (m+1, n-1). Their agreement,
together with the Alexander polynomial and periodicity, is the checkable
homological content of "h is isotopic to HV". The boundary-collar rotation
relating the two maps acts trivially on H_1 and has no matrix here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import intmat
from .checks import Check, Report
from .surface import (
    Cycle,
    CycleError,
    RibbonSurface,
    TorusKnotParams,
    build_seifert_surface,
    coordinates,
    cycle_basis,
    gram_matrix,
    twist_curve_index,
    twist_curves,
)

BASIS_TAG = "bfs-fundamental-cycles"
ROW_ORDERS = ("top_down", "bottom_up")
DEFAULT_ROW_ORDER = "top_down"


@dataclass(frozen=True)
class HomologyAction:
    matrix: intmat.Matrix
    basis_tag: str = BASIS_TAG

    @property
    def size(self) -> int:
        return len(self.matrix)

    def __matmul__(self, other: "HomologyAction") -> "HomologyAction":
        if self.basis_tag != other.basis_tag:
            raise ValueError("actions expressed in different bases")
        return HomologyAction(intmat.matmul(self.matrix, other.matrix), self.basis_tag)

    def power(self, e: int) -> "HomologyAction":
        return HomologyAction(intmat.matpow(self.matrix, e), self.basis_tag)

    def det(self) -> int:
        return intmat.det(self.matrix)

    def charpoly(self) -> intmat.Poly:
        return intmat.charpoly(self.matrix)

    def preserves(self, gram: intmat.Matrix) -> bool:
        m = self.matrix
        return intmat.matmul(intmat.matmul(intmat.transpose(m), gram), m) == gram


@lru_cache(maxsize=64)
def _surface(params: TorusKnotParams) -> RibbonSurface:
    return build_seifert_surface(params)


@lru_cache(maxsize=64)
def _gram(params: TorusKnotParams):
    return gram_matrix(_surface(params))


def transvection(s: RibbonSurface, gamma: Cycle, chirality: int = 1) -> HomologyAction:
    """Dehn twist action x -> x + chirality * <x, gamma> * gamma."""
    if chirality not in (1, -1):
        raise ValueError("chirality must be +1 or -1")
    y = coordinates(s, gamma)
    if not any(y):
        raise CycleError("cannot twist along a null-homologous cycle")
    g = _gram(s.params) if s.params is not None else gram_matrix(s)
    gy = intmat.matvec(g, y)  # gy[a] = <e_a, gamma>
    n = len(y)
    rows = [[int(a == b) + chirality * y[a] * gy[b] for b in range(n)] for a in range(n)]
    return HomologyAction(intmat.as_matrix(rows))


def twist_order(params: TorusKnotParams, row_order: str = DEFAULT_ROW_ORDER) -> list[tuple[int, int]]:
    """Curves (i, j) in the order their twists are applied (first applied first).

    Within a row the twists run j = 0, 1, ..., q-2. ``top_down`` applies row
    p-2 first and row 0 last; ``bottom_up`` is the reverse row order.
    """
    if row_order not in ROW_ORDERS:
        raise ValueError(f"row_order must be one of {ROW_ORDERS}")
    rows = range(params.p - 2, -1, -1) if row_order == "top_down" else range(params.p - 1)
    return [(i, j) for i in rows for j in range(params.q - 1)]


def monodromy_matrix(params: TorusKnotParams, row_order: str = DEFAULT_ROW_ORDER) -> HomologyAction:
    s = _surface(params)
    curves = twist_curves(s)
    result = HomologyAction(intmat.identity(params.rank))
    for i, j in twist_order(params, row_order):
        result = transvection(s, curves[twist_curve_index(params, i, j)], +1) @ result
    return result


def phi_on_edges(params: TorusKnotParams, label):
    m, n = label
    return ((m + 1) % params.p, (n - 1) % params.q)


def hv_matrix(params: TorusKnotParams) -> HomologyAction:
    """Map on cycles induced by the edge permutation (m, n) -> (m+1, n-1)."""
    s = _surface(params)

    columns = []
    for b in cycle_basis(s):
        image = [0] * len(s.edges)
        for e, coeff in zip(s.edges, b.coefficients):
            image[s.edge_index(phi_on_edges(params, e.label))] += coeff
        columns.append(coordinates(s, Cycle(tuple(image))))
    return HomologyAction(intmat.transpose(intmat.as_matrix(columns)))


def alexander_polynomial(params: TorusKnotParams) -> intmat.Poly:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by exact division."""
    p, q = params.p, params.q
    num = intmat.poly_mul(intmat.monomial_minus_one(p * q), intmat.monomial_minus_one(1))
    den = intmat.poly_mul(intmat.monomial_minus_one(p), intmat.monomial_minus_one(q))
    return intmat.poly_exact_div(num, den)


def verify_monodromy_identity(params: TorusKnotParams, row_order: str = DEFAULT_ROW_ORDER) -> Report:
    h = monodromy_matrix(params, row_order)
    hv = hv_matrix(params)
    gram = _gram(params)
    pq = params.p * params.q
    n = params.rank

    diff = [
        (a, b, h.matrix[a][b], hv.matrix[a][b])
        for a in range(n)
        for b in range(n)
        if h.matrix[a][b] != hv.matrix[a][b]
    ]
    char = h.charpoly()
    alex = alexander_polynomial(params)
    h_pq = h.power(pq).matrix
    checks = (
        Check(
            "monodromy_equals_hv",
            not diff,
            "entrywise equal" if not diff else f"{len(diff)} entries differ, first (row, col, h, hv) = {diff[0]}",
        ),
        Check(
            "charpoly_equals_alexander",
            intmat.normalize_unit(char) == intmat.normalize_unit(alex),
            f"char(h) = {intmat.poly_str(char)}; alexander = {intmat.poly_str(alex)}",
        ),
        Check(
            "monodromy_power_pq_identity",
            h_pq == intmat.identity(n),
            f"h^{pq} {'=' if h_pq == intmat.identity(n) else '!='} I",
        ),
    )
    notes = (
        f"twists applied row by row, row order {row_order!r}, j ascending within a row, chirality +1",
        "boundary rotation taken as the identity on H_1",
        f"order of (HV)_* on H_1: {intmat.matrix_order(hv.matrix, pq)}",
        f"det h = {h.det()}, det (HV)_* = {hv.det()}",
        f"symplectic: h {h.preserves(gram)}, (HV)_* {hv.preserves(gram)}",
    )
    return Report(f"monodromy ({params.p},{params.q})", checks, notes)

"""Exact integer matrices and polynomials on plain Python ints.

Matrices are tuples of row tuples. Polynomials are coefficient tuples,
lowest degree first, with no trailing zeros (the zero polynomial is ``()``).
"""
from __future__ import annotations

from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]
Poly = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def matpow(a: Matrix, e: int) -> Matrix:
    if e < 0:
        raise ValueError("negative exponent")
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        e >>= 1
    return result


def det(a: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a: Matrix) -> Poly:
    """det(t*I - a) via Faddeev-LeVerrier; every division is exact over Z."""
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = matmul(a, as_matrix(m)) if k > 1 else tuple(tuple(0 for _ in range(n)) for _ in range(n))
        m = [[am[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        tr = sum(sum(a[i][j] * m[j][i] for j in range(n)) for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral characteristic coefficient")
        coeffs[n - k] = -tr // k
    return trim(coeffs)


def matrix_order(a: Matrix, bound: int) -> int | None:
    """Smallest e in 1..bound with a**e == I, else None."""
    ident = identity(len(a))
    power = a
    for e in range(1, bound + 1):
        if power == ident:
            return e
        power = matmul(power, a)
    return None


def trim(coeffs: Sequence[int]) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return trim(out)


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Division by a polynomial with leading coefficient +-1."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead = g[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have unit leading coefficient")
    rem = list(f)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(g) - 1] * lead
        quot[shift] = c
        if c:
            for i, y in enumerate(g):
                rem[shift + i] -= c * y
    return trim(quot), trim(rem)


def poly_exact_div(f: Poly, g: Poly) -> Poly:
    quot, rem = poly_divmod(f, g)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


def monomial_minus_one(n: int) -> Poly:
    """t**n - 1."""
    return trim([-1] + [0] * (n - 1) + [1])


def normalize_unit(f: Poly) -> Poly:
    """Representative of f up to multiplication by +-t**j."""
    c = list(trim(f))
    while c and c[0] == 0:
        c.pop(0)
    if c and c[-1] < 0:
        c = [-x for x in c]
    return tuple(c)


def poly_str(f: Poly, var: str = "t") -> str:
    if not f:
        return "0"
    terms = []
    for deg in range(len(f) - 1, -1, -1):
        c = f[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            power = var if deg == 1 else f"{var}^{deg}"
            body = power if mag == 1 else f"{mag}*{power}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out

"""Exact linear algebra over the rationals and the integers.

Matrices are plain lists of rows; scalars are ``int`` or ``fractions.Fraction``.
Everything here is exact: no floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction | int]]
IntMatrix = Sequence[Sequence[int]]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Matrix) -> list[list]:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Matrix, b: Matrix) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v: Sequence, a: Matrix) -> list:
    return [sum(x * y for x, y in zip(v, col)) for col in zip(*a)]


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def det(m: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix by Gaussian elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        result *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                factor = a[i][col] * inv
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return result


def rank(m: Matrix) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        for i in range(r + 1, rows):
            if a[i][col] != 0:
                factor = a[i][col] * inv
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form and its pivot columns."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    return a, pivots


def solve(a: Matrix, b: Sequence) -> list[Fraction] | None:
    """One exact solution of ``a @ x = b`` (free variables set to 0), or None."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    reduced, pivots = rref(aug)
    x = [Fraction(0)] * cols
    for r, col in enumerate(pivots):
        if col == cols:
            return None  # pivot in the constant column: inconsistent system
        x[col] = reduced[r][cols]
    return x


def inverse(m: Matrix) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


def hnf(m: IntMatrix) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form with transformation: returns (H, U), H = U @ m.

    H is canonical: nonzero rows first with strictly increasing pivot columns,
    pivots positive, entries above each pivot reduced into [0, pivot).
    U is unimodular.
    """
    h = [[int(x) for x in row] for row in m]
    nrows = len(h)
    ncols = len(h[0]) if nrows else 0
    u = identity(nrows)

    def combine(dst: int, src: int, q: int) -> None:
        h[dst] = [x - q * y for x, y in zip(h[dst], h[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    r = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if h[i][col] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda i: abs(h[i][col]))
            for i in nz:
                if i != piv:
                    combine(i, piv, h[i][col] // h[piv][col])
        nz = [i for i in range(r, nrows) if h[i][col] != 0]
        if not nz:
            continue
        i0 = nz[0]
        if i0 != r:
            h[r], h[i0] = h[i0], h[r]
            u[r], u[i0] = u[i0], u[r]
        if h[r][col] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][col] // h[r][col]
            if q:
                combine(i, r, q)
        r += 1
        if r == nrows:
            break
    return h, u


def hnf_basis(m: IntMatrix) -> list[list[int]]:
    """Nonzero rows of the Hermite normal form: a canonical lattice basis."""
    h, _ = hnf(m)
    return [row for row in h if any(row)]


def int_kernel(a: IntMatrix, ncols: int | None = None) -> list[list[int]]:
    """Canonical basis of the saturated integer kernel {x : a @ x = 0}.

    ``ncols`` must be given when ``a`` has no rows.
    """
    if not a:
        if ncols is None:
            raise ValueError("ncols required for an empty constraint matrix")
        return identity(ncols)
    h, u = hnf(transpose(a))
    kernel = [u[i] for i, row in enumerate(h) if not any(row)]
    return hnf_basis(kernel) if kernel else []


def clear_denominators(row: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational row by the lcm of denominators to an integer row."""
    scale = 1
    for x in row:
        d = Fraction(x).denominator
        scale = scale * d // _gcd(scale, d)
    return [int(Fraction(x) * scale) for x in row]


def primitive_row(row: Sequence[Fraction | int]) -> list[int]:
    """Integer row divided by the gcd of its entries; orientation preserved."""
    ints = clear_denominators(row)
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    if g == 0:
        return ints
    return [x // g for x in ints]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def integer_solution(a: IntMatrix, b: Sequence[Fraction | int]) -> list[int] | None:
    """Some integer solution x of ``a @ x = b``, or None when none exists."""
    if any(Fraction(x).denominator != 1 for x in b):
        return None
    if not a:
        return []
    n = len(a[0])
    h, u = hnf(transpose(a))
    r = sum(1 for row in h if any(row))
    # Substituting x = U^T z turns a @ x = b into H^T z = b; only the first r
    # entries of z appear, and they are uniquely determined over Q.
    m_top = transpose(h[:r]) if r else [[] for _ in a]
    z = solve(m_top, [int(x) for x in b]) if r else ([] if all(x == 0 for x in b) else None)
    if z is None:
        return None
    if any(zi.denominator != 1 for zi in z):
        return None
    x = [0] * n
    for i, zi in enumerate(z):
        zi = int(zi)
        x = [xj + zi * uij for xj, uij in zip(x, u[i])]
    assert mat_vec(a, x) == [int(v) for v in b]
    return x

"""Exact V-representation polytopes with H-representation, faces, projection,
slicing, and lattice-point enumeration.

Geometry is exact over the rationals throughout; the intended scale is small
("desk scale": dimension <= ~6, <= ~20 vertices).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from .linalg import clear_denominators, dot, int_kernel, mat_vec, primitive_row, rank, rref

DEFAULT_CELL_BUDGET = 10**7
_BUDGET_ENV = "LATTICEFACE_CELL_BUDGET"

Point = tuple[Fraction, ...]


class BudgetExceeded(RuntimeError):
    """Raised when lattice-point enumeration exceeds the cell budget."""


def cell_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(_BUDGET_ENV, DEFAULT_CELL_BUDGET))


@dataclass(frozen=True)
class HRep:
    """Irredundant H-representation: equalities a.x = b and inequalities c.x <= e.

    Rows are primitive integer vectors stored as (coefficients, rhs).
    """

    equalities: tuple[tuple[tuple[int, ...], int], ...]
    inequalities: tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class Face:
    """A face of a polytope, identified by the indices of its vertices."""

    vertex_indices: tuple[int, ...]
    dim: int


def _as_point(coords) -> Point:
    return tuple(Fraction(x) for x in coords)


class Polytope:
    """Convex hull of finitely many rational points, in exact arithmetic.

    The vertex list keeps the input order (minus duplicates and non-extreme
    points).  The empty polytope is a legitimate value with dimension -1.
    """

    def __init__(self, ambient_dim: int, points):
        pts: list[Point] = []
        seen = set()
        for p in points:
            tp = _as_point(p)
            if len(tp) != ambient_dim:
                raise ValueError("point length does not match ambient dimension")
            if tp not in seen:
                seen.add(tp)
                pts.append(tp)
        self.ambient_dim = ambient_dim
        if not pts:
            self.vertices: tuple[Point, ...] = ()
            self.dim = -1
            self.base_point: Point | None = None
            self.lin_basis: tuple[Point, ...] = ()
            zero = tuple(0 for _ in range(ambient_dim))
            self.hrep = HRep((), ((zero, -1),))
            self._facet_sets: tuple[frozenset[int], ...] = ()
            self._faces_cache: dict[int, list[Face]] = {}
            self._projections: dict[int, Polytope] = {}
            return

        base = pts[0]
        diffs = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
        reduced, pivots = rref(diffs)
        lin_rows = [tuple(reduced[i]) for i in range(len(pivots))]
        d = len(pivots)
        self.dim = d
        self.base_point = base
        self.lin_basis = tuple(lin_rows)

        if d == 0:
            self.vertices = (pts[0],)
        else:
            chart = _chart_coordinates(pts, base, lin_rows)
            facets = _chart_facets(chart, d)
            keep = []
            for i, c in enumerate(chart):
                active = [n for n, b in facets if dot(n, c) == b]
                if len(active) >= d and rank(active) == d:
                    keep.append(i)
            self.vertices = tuple(pts[i] for i in keep)

        self._facet_sets, self.hrep = self._build_hrep()
        self._faces_cache = {}
        self._projections = {}

    # -- structure ---------------------------------------------------------

    def _build_hrep(self) -> tuple[tuple[frozenset[int], ...], HRep]:
        base = self.base_point
        assert base is not None
        d = self.dim
        big = self.ambient_dim
        lin_rows = [list(r) for r in self.lin_basis]
        eq_rows = []
        for a in int_kernel([clear_denominators(r) for r in lin_rows], ncols=big):
            row = primitive_row(list(a) + [dot(a, base)])
            eq_rows.append((tuple(row[:-1]), row[-1]))
        if d == 0:
            return (), HRep(tuple(sorted(eq_rows)), ())

        chart = _chart_coordinates(list(self.vertices), base, lin_rows)
        facets = _chart_facets(chart, d)
        right_inv = _right_inverse(lin_rows)
        ineq_rows = []
        facet_sets = []
        for n, b in facets:
            a = mat_vec(right_inv, n)
            row = primitive_row(list(a) + [b + dot(a, base)])
            ineq_rows.append((tuple(row[:-1]), row[-1]))
            facet_sets.append(frozenset(i for i, c in enumerate(chart) if dot(n, c) == b))
        order = sorted(range(len(ineq_rows)), key=lambda i: ineq_rows[i])
        return (
            tuple(facet_sets[i] for i in order),
            HRep(tuple(sorted(eq_rows)), tuple(ineq_rows[i] for i in order)),
        )

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def affine_hull(self) -> tuple[Point, tuple[Point, ...]]:
        """A point of aff(P) together with a basis of lin(P)."""
        if self.is_empty:
            raise ValueError("empty polytope has no affine hull")
        return self.base_point, self.lin_basis

    def faces(self, ell: int) -> list[Face]:
        """All faces of dimension ``ell``, sorted by vertex index tuple."""
        if self.is_empty:
            raise ValueError("empty polytope has no faces")
        if not 0 <= ell <= self.dim:
            raise ValueError(f"face dimension must lie in [0, {self.dim}], got {ell}")
        if ell not in self._faces_cache:
            self._compute_faces()
        return self._faces_cache[ell]

    def _compute_faces(self) -> None:
        n = len(self.vertices)
        by_dim: dict[int, list[Face]] = {d: [] for d in range(self.dim + 1)}
        by_dim[self.dim] = [Face(tuple(range(n)), self.dim)]
        if self.dim >= 1:
            # Every proper face is an intersection of facets; close under intersection.
            closed: set[frozenset[int]] = set(self._facet_sets)
            frontier = set(closed)
            while frontier:
                fresh: set[frozenset[int]] = set()
                for s in frontier:
                    for f in self._facet_sets:
                        t = s & f
                        if t and t not in closed:
                            closed.add(t)
                            fresh.add(t)
                frontier = fresh
            for s in closed:
                idx = tuple(sorted(s))
                face_dim = rank([
                    [x - y for x, y in zip(self.vertices[i], self.vertices[idx[0]])]
                    for i in idx[1:]
                ])
                by_dim[face_dim].append(Face(idx, face_dim))
        for d in by_dim:
            by_dim[d].sort(key=lambda f: f.vertex_indices)
        self._faces_cache = by_dim

    def face_vertices(self, face: Face) -> tuple[Point, ...]:
        return tuple(self.vertices[i] for i in face.vertex_indices)

    # -- point queries ------------------------------------------------------

    def contains(self, point) -> bool:
        p = _as_point(point)
        return (
            all(dot(c, p) == b for c, b in self.hrep.equalities)
            and all(dot(c, p) <= b for c, b in self.hrep.inequalities)
        )

    def classify_point(self, point) -> str:
        """Classify relative to the affine hull: outside, boundary, or interior."""
        p = _as_point(point)
        if any(dot(c, p) != b for c, b in self.hrep.equalities):
            return "outside"
        tight = False
        for c, b in self.hrep.inequalities:
            v = dot(c, p)
            if v > b:
                return "outside"
            if v == b:
                tight = True
        return "boundary" if tight else "interior"

    # -- geometric constructions ---------------------------------------------

    def translate(self, shift) -> "Polytope":
        s = _as_point(shift)
        return Polytope(self.ambient_dim, [tuple(x + t for x, t in zip(v, s)) for v in self.vertices])

    def dilate(self, m: int) -> "Polytope":
        return Polytope(self.ambient_dim, [tuple(m * x for x in v) for v in self.vertices])

    def project(self, k: int) -> "Polytope":
        """Image under forgetting all but the first k coordinates."""
        if not 0 <= k <= self.ambient_dim:
            raise ValueError(f"projection target must lie in [0, {self.ambient_dim}], got {k}")
        if k == self.ambient_dim:
            return self
        if k not in self._projections:
            self._projections[k] = Polytope(k, [v[:k] for v in self.vertices])
        return self._projections[k]

    def intersect_hyperplane(self, normal, rhs) -> "Polytope":
        """Exact intersection with the hyperplane normal . x = rhs."""
        if self.is_empty:
            return self
        nrm = _as_point(normal)
        r = Fraction(rhs)
        vals = [dot(nrm, v) - r for v in self.vertices]
        pts = [v for v, val in zip(self.vertices, vals) if val == 0]
        if self.dim >= 1:
            for face in self.faces(1):
                i, j = face.vertex_indices[0], face.vertex_indices[-1]
                vi, vj = vals[i], vals[j]
                if (vi < 0 < vj) or (vj < 0 < vi):
                    t = vi / (vi - vj)
                    a, b = self.vertices[i], self.vertices[j]
                    pts.append(tuple(x + t * (y - x) for x, y in zip(a, b)))
        return Polytope(self.ambient_dim, pts)

    def slice_at(self, y) -> "Polytope":
        """The slice {x in P : first k coordinates equal y}, in ambient coordinates."""
        fixed = _as_point(y)
        if len(fixed) > self.ambient_dim:
            raise ValueError("slice point has more coordinates than the ambient space")
        result: Polytope = self
        for i, yi in enumerate(fixed):
            axis = tuple(Fraction(int(j == i)) for j in range(self.ambient_dim))
            result = result.intersect_hyperplane(axis, yi)
            if result.is_empty:
                break
        return result

    # -- lattice points -------------------------------------------------------

    def _level_systems(self):
        """Integer constraint systems of project(P, j) for j = 1..D."""
        if not hasattr(self, "_systems"):
            systems = []
            for j in range(1, self.ambient_dim + 1):
                h = self.project(j).hrep
                systems.append((h.equalities, h.inequalities))
            self._systems = systems
        return self._systems

    def lattice_points(self, scale: int = 1, budget: int | None = None) -> list[tuple[int, ...]]:
        """All integer points of ``scale * P``, in lexicographic order.

        Enumerates coordinate by coordinate, bounding each coordinate through
        the H-representation of the corresponding projection, so the work is
        proportional to the points actually visited rather than to a bounding
        box.  Raises BudgetExceeded past the cell budget.
        """
        if scale < 1:
            raise ValueError("scale must be a positive integer")
        if self.is_empty:
            return []
        if self.ambient_dim == 0:
            return [()]
        systems = self._level_systems()
        limit = cell_budget(budget)
        visited = 0
        out: list[tuple[int, ...]] = []
        prefix: list[int] = []

        def recurse(level: int) -> None:
            nonlocal visited
            eqs, ineqs = systems[level]
            lo: int | None = None
            hi: int | None = None

            def tighten_le(bound: int) -> None:
                nonlocal hi
                hi = bound if hi is None else min(hi, bound)

            def tighten_ge(bound: int) -> None:
                nonlocal lo
                lo = bound if lo is None else max(lo, bound)

            for coeffs, rhs in eqs:
                a = coeffs[level]
                c0 = scale * rhs - sum(coeffs[i] * prefix[i] for i in range(level))
                if a == 0:
                    if c0 != 0:
                        return
                elif c0 % a != 0:
                    return
                else:
                    v = c0 // a
                    tighten_le(v)
                    tighten_ge(v)
            for coeffs, rhs in ineqs:
                a = coeffs[level]
                c0 = scale * rhs - sum(coeffs[i] * prefix[i] for i in range(level))
                if a == 0:
                    if c0 < 0:
                        return
                elif a > 0:
                    tighten_le(c0 // a)
                else:
                    tighten_ge(-(c0 // -a))
            if lo is None or hi is None:
                raise AssertionError("projection fiber is unbounded")
            for v in range(lo, hi + 1):
                visited += 1
                if visited > limit:
                    raise BudgetExceeded(
                        f"lattice enumeration exceeded the cell budget of {limit}"
                    )
                prefix.append(v)
                if level + 1 == self.ambient_dim:
                    out.append(tuple(prefix))
                else:
                    recurse(level + 1)
                prefix.pop()

        recurse(0)
        return out

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polytope)
            and self.ambient_dim == other.ambient_dim
            and frozenset(self.vertices) == frozenset(other.vertices)
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, frozenset(self.vertices)))

    def __repr__(self) -> str:
        if self.is_empty:
            return f"Polytope(empty, ambient_dim={self.ambient_dim})"
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, ambient_dim={self.ambient_dim})"


def _chart_coordinates(pts: list[Point], base: Point, lin_rows) -> list[tuple[Fraction, ...]]:
    """Coordinates of points in the affine chart (base, lin_rows).

    lin_rows come from an rref, so each has a pivot column with a 1 that is the
    only nonzero entry of that column among the rows; coordinates read off
    directly from the pivot positions.
    """
    pivot_cols = []
    for row in lin_rows:
        pivot_cols.append(next(j for j, x in enumerate(row) if x != 0))
    return [tuple(p[c] - base[c] for c in pivot_cols) for p in pts]


def _right_inverse(lin_rows) -> list[list[Fraction]]:
    """Matrix R with L @ R = I for the rref basis L, so chart(x) = (x - base) @ R."""
    pivot_cols = [next(j for j, x in enumerate(row) if x != 0) for row in lin_rows]
    big = len(lin_rows[0])
    return [[Fraction(int(pivot_cols[j] == i)) for j in range(len(lin_rows))] for i in range(big)]


def _chart_facets(chart: list[tuple[Fraction, ...]], d: int):
    """Facets of the full-dimensional hull of chart points as (normal, rhs) pairs."""
    facets = {}
    for subset in itertools.combinations(range(len(chart)), d):
        p0 = chart[subset[0]]
        diffs = [[chart[i][j] - p0[j] for j in range(d)] for i in subset[1:]]
        if rank(diffs) != d - 1:
            continue
        normal = _null_vector(diffs, d)
        b = dot(normal, p0)
        vals = [dot(normal, c) - b for c in chart]
        if all(v <= 0 for v in vals):
            key_n, key_b = normal, b
        elif all(v >= 0 for v in vals):
            key_n, key_b = tuple(-x for x in normal), -b
        else:
            continue
        row = primitive_row(list(key_n) + [key_b])
        facets[tuple(row)] = (tuple(row[:-1]), row[-1])
    return sorted(facets.values())


def _null_vector(rows, d: int) -> tuple[Fraction, ...]:
    """A nonzero vector orthogonal to (d-1) independent rows in Q^d."""
    reduced, pivots = rref(rows)
    free = next(j for j in range(d) if j not in pivots)
    n = [Fraction(0)] * d
    n[free] = Fraction(1)
    for r, p in enumerate(pivots):
        n[p] = -reduced[r][free]
    return tuple(n)

"""Integrality and general-position certificates for subspaces, affine spaces,
and every dimension level of a polytope's face lattice.

A subspace U is integral when the lattice of U surjects onto Z^dim(U) under
dropping trailing coordinates; it is in general position when U itself
surjects onto the leading coordinate subspace.  A polytope is k-integral
(k-general) when every face of dimension at most k has an affinely integral
(affinely general) hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import saturate, split
from .linalg import clear_denominators, dot, identity, int_kernel, integer_solution, rank, rref
from .polytope import Face, Point, Polytope


@dataclass(frozen=True)
class LevelCertificate:
    """Largest level k at which every face of dimension <= k passes the test.

    ``max_level`` is -1 when already the vertices fail.  For levels below the
    polytope dimension, ``witness`` is the (lexicographically first) failing
    face at max_level + 1 and ``reason`` names the violated condition.
    """

    max_level: int
    witness: Face | None = None
    witness_vertices: tuple[Point, ...] | None = None
    reason: str | None = None

    def describe_witness(self) -> str | None:
        if self.witness is None:
            return None
        pts = ", ".join(_point_str(p) for p in self.witness_vertices or ())
        return f"face conv{{{pts}}} {self.reason}"


def _point_str(p: Point) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def subspace_is_integral(lin_basis) -> bool:
    """Whether the rational row span U satisfies: lattice of U projects onto Z^dim(U)."""
    rows = [list(r) for r in lin_basis]
    r = len(rows)
    if r == 0:
        return True
    if rank(rows) != r:
        raise ValueError("basis rows are linearly dependent")
    lat = saturate(rows)
    proj = split(lat, r).projection
    return list(proj.basis) == [tuple(row) for row in identity(r)]


def subspace_in_general_position(lin_basis) -> bool:
    """Whether the row span surjects onto the leading dim(U) coordinates."""
    rows = [list(r) for r in lin_basis]
    r = len(rows)
    if r == 0:
        return True
    if rank(rows) != r:
        raise ValueError("basis rows are linearly dependent")
    return rank([row[:r] for row in rows]) == r


def affine_is_integral(point, lin_basis) -> bool:
    """Whether the affine space point + span(lin_basis) is integral:
    it carries a lattice point and its direction space is integral."""
    rows = [list(r) for r in lin_basis]
    if not rows:
        return all(Fraction(x).denominator == 1 for x in point)
    if not subspace_is_integral(rows):
        return False
    constraints = int_kernel([clear_denominators(r) for r in rows], ncols=len(point))
    rhs = [dot(c, point) for c in constraints]
    if any(Fraction(v).denominator != 1 for v in rhs):
        return False
    return integer_solution(constraints, rhs) is not None


def face_hull(poly: Polytope, face: Face) -> tuple[Point, list[list[Fraction]]]:
    """Base point and a lin basis (reduced row form) of the face's affine hull."""
    pts = poly.face_vertices(face)
    base = pts[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
    reduced, pivots = rref(diffs)
    return base, [reduced[i] for i in range(len(pivots))]


def _level_scan(poly: Polytope, test, failure_reason: str) -> LevelCertificate:
    if poly.is_empty:
        raise ValueError("empty polytope has no level certificate")
    for ell in range(poly.dim + 1):
        for face in poly.faces(ell):
            base, lin = face_hull(poly, face)
            if not test(base, lin):
                return LevelCertificate(
                    max_level=ell - 1,
                    witness=face,
                    witness_vertices=poly.face_vertices(face),
                    reason=failure_reason,
                )
    return LevelCertificate(max_level=poly.dim)


def integrality_level(poly: Polytope) -> LevelCertificate:
    """Largest k such that every face of dimension <= k is affinely integral."""
    return _level_scan(poly, affine_is_integral, "is not affinely integral")


def generality_level(poly: Polytope) -> LevelCertificate:
    """Largest k such that every face of dimension <= k is in affinely general position."""
    return _level_scan(
        poly,
        lambda _base, lin: subspace_in_general_position(lin),
        "is not in affinely general position",
    )

"""Normalized volumes relative to sublattices, triangulations, and the
slice-sum volume identity.

The slice-sum of a polytope at level k adds up, over the lattice points of its
projection to the first k coordinates, the volumes of the corresponding slices
measured in the kernel sublattice.  Under the right integrality/generality
hypotheses this reproduces the normalized volume exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import HypothesisError
from .integrality import generality_level, integrality_level
from .lattice import Sublattice, saturate, split
from .linalg import det, integer_solution
from .polytope import Point, Polytope
from .report import Report


@dataclass(frozen=True)
class Triangulation:
    """A triangulation of a polytope into simplices on its own vertices."""

    simplices: tuple[tuple[int, ...], ...]


def lin_lattice(poly: Polytope) -> Sublattice:
    """The lattice of integer points in lin(P), i.e. aff(P) translated to 0."""
    _, lin = poly.affine_hull()
    return saturate([list(r) for r in lin], ambient_dim=poly.ambient_dim)


def _cone_triangulation(poly: Polytope, apex_rule) -> list[frozenset[Point]]:
    if len(poly.vertices) == poly.dim + 1:
        return [frozenset(poly.vertices)]
    apex = apex_rule(poly)
    out: list[frozenset[Point]] = []
    for facet in poly.faces(poly.dim - 1):
        pts = poly.face_vertices(facet)
        if apex in pts:
            continue
        sub = Polytope(poly.ambient_dim, pts)
        for cell in _cone_triangulation(sub, apex_rule):
            out.append(cell | {apex})
    return out


def _lex_min_apex(poly: Polytope) -> Point:
    return min(poly.vertices)


def _first_coordinate_apex(poly: Polytope) -> Point:
    lowest = min(v[0] for v in poly.vertices)
    hits = [v for v in poly.vertices if v[0] == lowest]
    if len(hits) != 1:
        raise HypothesisError(
            "polytope is not in 1-general position",
            f"vertices {hits[0]} and {hits[1]} share the minimal first coordinate",
        )
    return hits[0]


def _as_triangulation(poly: Polytope, cells: list[frozenset[Point]]) -> Triangulation:
    index = {v: i for i, v in enumerate(poly.vertices)}
    simplices = sorted(tuple(sorted(index[p] for p in cell)) for cell in cells)
    return Triangulation(tuple(simplices))


def triangulate(poly: Polytope) -> Triangulation:
    """A triangulation without new vertices, coning from lexicographic minima."""
    if poly.dim < 1:
        raise ValueError("triangulation requires dimension >= 1")
    return _as_triangulation(poly, _cone_triangulation(poly, _lex_min_apex))


def triangulate_1general(poly: Polytope) -> Triangulation:
    """A triangulation into 1-general simplices, coning from the vertex of
    minimal first coordinate at every level.  Requires P in 1-general position."""
    if poly.dim < 1:
        raise ValueError("triangulation requires dimension >= 1")
    cert = generality_level(poly)
    if cert.max_level < 1:
        raise HypothesisError("polytope is not in 1-general position", cert.describe_witness())
    return _as_triangulation(poly, _cone_triangulation(poly, _first_coordinate_apex))


def normalized_volume(poly: Polytope, lattice: Sublattice) -> Fraction:
    """Volume of P in the measure where a fundamental cell of the lattice is 1.

    The lattice must span lin(P).  A polytope of dimension below the lattice
    rank has volume 0; a 0-dimensional polytope with a rank-0 lattice has
    volume 1 (counting measure).
    """
    if poly.is_empty:
        return Fraction(0)
    if poly.ambient_dim != lattice.ambient_dim:
        raise ValueError("ambient dimensions differ")
    d = poly.dim
    r = lattice.rank
    if d > r:
        raise ValueError("lattice does not span lin(P): rank too small")
    _, lin = poly.affine_hull()
    for row in lin:
        if lattice.coordinates(row) is None:
            raise ValueError("lattice does not span lin(P)")
    if d < r:
        return Fraction(0)
    if d == 0:
        return Fraction(1)
    total = Fraction(0)
    for cell in triangulate(poly).simplices:
        base = poly.vertices[cell[0]]
        rows = []
        for i in cell[1:]:
            diff = [x - b for x, b in zip(poly.vertices[i], base)]
            coords = lattice.coordinates(diff)
            assert coords is not None
            rows.append(coords)
        total += abs(det(rows))
    return total / factorial(d)


def center_at_lattice_point(poly: Polytope) -> Polytope:
    """Translate P by a lattice point of its affine hull so that 0 lies on aff(P).

    Raises when aff(P) carries no lattice point (then the slice-sum ranges
    over an empty index set and is not meaningful).
    """
    eqs = poly.hrep.equalities
    if all(b == 0 for _, b in eqs):
        return poly
    shift = integer_solution([list(c) for c, _ in eqs], [b for _, b in eqs])
    if shift is None:
        raise HypothesisError("affine hull of P contains no lattice point")
    return poly.translate([-x for x in shift])


def slice_volume_sum(poly: Polytope, k: int, lattice: Sublattice | None = None) -> Fraction:
    """Sum of kernel-normalized slice volumes over projected lattice points.

    For each point y of the projection of the lattice lying in the projection
    of P, the slice of P over y is measured in the kernel sublattice (the
    lattice elements whose first k coordinates vanish).  Degenerate slices of
    dimension below the kernel rank contribute exactly 0.  Non-central P is
    translated by a lattice point of its affine hull first.
    """
    if poly.is_empty:
        return Fraction(0)
    if not 0 <= k <= poly.dim:
        raise ValueError(f"k must lie in [0, {poly.dim}], got {k}")
    poly = center_at_lattice_point(poly)
    if lattice is None:
        lattice = lin_lattice(poly)
    parts = split(lattice, k)
    total = Fraction(0)
    for y in poly.project(k).lattice_points():
        if not parts.projection.contains(y):
            continue
        piece = poly.slice_at(y)
        if piece.is_empty or piece.dim < parts.kernel.rank:
            continue
        total += normalized_volume(piece, parts.kernel)
    return total


def verify_volume_slice_identity(poly: Polytope, k: int) -> Report:
    """Check Vol(P) against the level-k slice-volume sum, reporting hypotheses.

    The identity is guaranteed when P is (k-1)-integral and in k-general
    position with 0 < k < dim(P); the report records both sides either way.
    """
    d = poly.dim
    if not 0 < k < d:
        raise ValueError(f"k must lie strictly between 0 and dim(P)={d}, got {k}")
    cert_int = integrality_level(poly)
    cert_gen = generality_level(poly)
    hyp_int = cert_int.max_level >= k - 1
    hyp_gen = cert_gen.max_level >= k
    witness = None
    if not hyp_int:
        witness = f"not {k - 1}-integral: {cert_int.describe_witness()}"
    elif not hyp_gen:
        witness = f"not {k}-general: {cert_gen.describe_witness()}"
    lattice = lin_lattice(poly)
    lhs = normalized_volume(poly, lattice)
    rhs = slice_volume_sum(poly, k, lattice)
    equal = lhs == rhs
    if hyp_int and hyp_gen and not equal:
        raise RuntimeError("slice-volume identity failed although hypotheses hold")
    return Report(
        identity="volume-slice-sum",
        hypotheses=((f"{k - 1}-integral", hyp_int), (f"{k}-general position", hyp_gen)),
        lhs=lhs,
        rhs=rhs,
        equal=equal,
        witness=witness,
    )

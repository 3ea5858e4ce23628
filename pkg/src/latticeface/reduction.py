"""Constructive affine maps: generic integer direction selection and the
reduction of a (k-1)-integral, k-general polytope to a full-dimensional one in
fully general position, preserving volume and slice-volume sums.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError
from .integrality import face_hull, generality_level, integrality_level
from .lattice import Sublattice, extend_basis, split
from .linalg import det, dot, identity, integer_solution, inverse, matmul, rref, vec_mat
from .polytope import Polytope
from .volume import lin_lattice


@dataclass(frozen=True)
class AffineMap:
    """x -> offset + x @ matrix, acting on row vectors of coordinates."""

    matrix: tuple[tuple[Fraction, ...], ...]
    offset: tuple[Fraction, ...]

    @staticmethod
    def identity(dim: int) -> "AffineMap":
        return AffineMap.linear(identity(dim))

    @staticmethod
    def linear(matrix) -> "AffineMap":
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        return AffineMap(rows, tuple(Fraction(0) for _ in rows))

    @staticmethod
    def translation(shift) -> "AffineMap":
        off = tuple(Fraction(x) for x in shift)
        return AffineMap(tuple(tuple(map(Fraction, row)) for row in identity(len(off))), off)

    def apply_point(self, point) -> tuple[Fraction, ...]:
        moved = vec_mat([Fraction(x) for x in point], self.matrix)
        return tuple(m + o for m, o in zip(moved, self.offset))

    def then(self, other: "AffineMap") -> "AffineMap":
        """The composite map: first self, then other."""
        matrix = matmul(self.matrix, other.matrix)
        offset = [a + b for a, b in zip(vec_mat(self.offset, other.matrix), other.offset)]
        return AffineMap(
            tuple(tuple(Fraction(x) for x in row) for row in matrix),
            tuple(Fraction(x) for x in offset),
        )

    def is_slice_volume_preserving(self, k: int) -> bool:
        """Structural check that the map preserves volumes and level-k slice sums:
        block-triangular with an upper-triangular unimodular leading k x k block,
        determinant-1 trailing block, and integer leading offset entries."""
        n = len(self.matrix)
        a = [row[:k] for row in self.matrix[:k]]
        lower_left = [row[:k] for row in self.matrix[k:]]
        b = [row[k:] for row in self.matrix[k:]]
        if any(x != 0 for row in lower_left for x in row):
            return False
        if any(self.matrix[i][j] != 0 for i in range(k) for j in range(k) if j < i):
            return False
        if any(x.denominator != 1 for row in a for x in row):
            return False
        if k and abs(det(a)) != 1:
            return False
        if n > k and det(b) != 1:
            return False
        return all(x.denominator == 1 for x in self.offset[:k])


def apply_affine(poly: Polytope, phi: AffineMap) -> Polytope:
    """Vertex-wise image of the polytope, re-extremalized."""
    return Polytope(poly.ambient_dim, [phi.apply_point(v) for v in poly.vertices])


def _ordered_candidates(limit: int) -> list[int]:
    out = [0]
    for t in range(1, limit + 1):
        out.extend((t, -t))
    return out


def find_generic_integer_vector(vectors) -> tuple[int, ...]:
    """The first integer vector w with w[0] = 1 and v . w != 0 for every v.

    Candidates (1, t_2, .., t_m) are enumerated by increasing max-norm of the
    tail, ties broken lexicographically with each coordinate ordered
    0, 1, -1, 2, -2, ...; the result is therefore deterministic.
    """
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vecs:
        raise ValueError("at least one vector is required")
    m = len(vecs[0])
    for v in vecs:
        if len(v) != m:
            raise ValueError("vectors must share a common dimension")
        if all(x == 0 for x in v):
            raise ValueError("vectors must be nonzero")
    for norm in itertools.count(0):
        values = _ordered_candidates(norm)
        for tail in itertools.product(values, repeat=m - 1):
            if norm > 0 and max((abs(t) for t in tail), default=0) != norm:
                continue
            w = (1,) + tail
            if all(dot(v, w) != 0 for v in vecs):
                return w
        if m == 1:
            raise AssertionError("the single-coordinate case always succeeds at norm 0")
    raise AssertionError("unreachable")


def _central_shift(poly: Polytope) -> list[int]:
    """A lattice point of aff(P) (to translate away), or an error without one."""
    eqs = poly.hrep.equalities
    if all(b == 0 for _, b in eqs):
        return [0] * poly.ambient_dim
    shift = integer_solution([list(c) for c, _ in eqs], [b for _, b in eqs])
    if shift is None:
        raise HypothesisError("affine hull of P contains no lattice point")
    return shift


def _embedding_basis(poly: Polytope, k: int) -> list[list[int]]:
    """Rows f_1..f_D: a staircase basis of the lattice of lin(P) adapted to the
    first k coordinates, completed to a rational basis of the ambient space."""
    big = poly.ambient_dim
    d = poly.dim
    lattice = lin_lattice(poly)
    parts = split(lattice, k)
    if parts.projection.rank != k:
        raise AssertionError("projected lattice rank dropped despite k-generality")
    proj_basis = parts.projection.basis
    for i in range(k - 1):
        if proj_basis[i][i] != 1:
            raise AssertionError("leading staircase pivots must be 1 for a (k-1)-integral P")
    top = [list(row) for row in parts.adapted_basis[:k]]
    middle = [list(row) for row in parts.kernel.basis]
    tail_lattice = Sublattice.from_rows(big - k, [row[k:] for row in middle])
    extension = extend_basis(tail_lattice)
    bottom = [[0] * k + list(row) for row in extension[d - k:]]
    return top + middle + bottom


def reduce_to_full_general(poly: Polytope, k: int) -> tuple[AffineMap, Polytope]:
    """An invertible affine map carrying P to a full-dimensional polytope in
    fully general position, preserving volume and the level-k slice-volume sum.

    Requires P (k-1)-integral and in k-general position (non-central inputs
    are translated by a lattice point of their affine hull first).  Returns
    the ambient map and the image polytope in R^dim(P); the image coordinates
    are the leading dim(P) coordinates of the mapped ambient space.
    """
    if poly.is_empty or poly.dim < 1:
        raise ValueError("reduction requires a polytope of dimension >= 1")
    d = poly.dim
    big = poly.ambient_dim
    if not 0 < k <= d:
        raise ValueError(f"k must lie in [1, {d}], got {k}")
    shift = _central_shift(poly)
    phi = AffineMap.translation([-x for x in shift])
    current = poly.translate([-x for x in shift])
    cert_int = integrality_level(current)
    if cert_int.max_level < k - 1:
        raise HypothesisError(
            f"polytope is not {k - 1}-integral", cert_int.describe_witness()
        )
    cert_gen = generality_level(current)
    if cert_gen.max_level < k:
        raise HypothesisError(
            f"polytope is not in {k}-general position", cert_gen.describe_witness()
        )

    frame = _embedding_basis(current, k)
    to_coords = AffineMap.linear(inverse(frame))
    phi = phi.then(to_coords)
    image = apply_affine(current, to_coords)
    if any(v[j] != 0 for v in image.vertices for j in range(d, big)):
        raise AssertionError("image does not lie in the leading coordinate subspace")
    current = image.project(d)

    if integrality_level(current).max_level < k - 1:
        raise AssertionError("dimension reduction lost (k-1)-integrality")
    level = generality_level(current).max_level
    if level < k:
        raise AssertionError("dimension reduction lost k-generality")

    reduced_map = AffineMap.identity(d)
    while level < d:
        directions = []
        for face in current.faces(level + 1):
            _, lin = face_hull(current, face)
            reduced, pivots = rref(lin)
            if pivots[:level] != list(range(level)):
                raise AssertionError("face hull lost general position during reduction")
            directions.append(tuple(reduced[level][level:]))
        w = find_generic_integer_vector(directions)
        column = [0] * level + list(w)
        step = [[Fraction(int(i == j)) if j != level else Fraction(column[i])
                 for j in range(d)] for i in range(d)]
        step_map = AffineMap.linear(step)
        current = apply_affine(current, step_map)
        reduced_map = reduced_map.then(step_map)
        new_level = generality_level(current).max_level
        if new_level <= level:
            raise AssertionError("generality level did not increase")
        if integrality_level(current).max_level < k - 1:
            raise AssertionError("a reduction step lost (k-1)-integrality")
        level = new_level

    padded = [
        [reduced_map.matrix[i][j] if i < d and j < d else Fraction(int(i == j))
         for j in range(big)]
        for i in range(big)
    ]
    phi = phi.then(AffineMap.linear(padded))
    return phi, current

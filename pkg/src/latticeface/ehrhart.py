"""Ehrhart polynomials: brute-force interpolation, the slice formula for
k-integral polytopes, the projection closed form for fully integral ones, and
the codimension-1 counting identity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError
from .integrality import integrality_level
from .lattice import Sublattice
from .linalg import solve
from .polytope import Polytope
from .report import Report, format_rational
from .volume import lin_lattice, normalized_volume


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Exact polynomial m -> #(mP intersect Z^D); coefficients constant-first."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, m) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * m + c
        return total

    def __add__(self, other: "EhrhartPolynomial") -> "EhrhartPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return EhrhartPolynomial(tuple(merged))

    def __str__(self) -> str:
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coefficients[j]
            if c == 0 and self.degree > 0:
                continue
            mono = "1" if j == 0 else ("m" if j == 1 else f"m^{j}")
            if j == 0:
                terms.append(str(format_rational(c)))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms) if terms else "0"

    def as_list(self) -> list:
        return [format_rational(c) for c in self.coefficients]


def count_points(poly: Polytope, m: int, budget: int | None = None) -> int:
    """Number of lattice points in the m-th dilate of P."""
    if m < 1:
        raise ValueError("dilation factor must be a positive integer")
    return len(poly.lattice_points(scale=m, budget=budget))


def _require_integral(poly: Polytope) -> None:
    if poly.is_empty:
        raise ValueError("empty polytope has no Ehrhart polynomial")
    for v in poly.vertices:
        if any(x.denominator != 1 for x in v):
            raise HypothesisError("polytope is not integral", f"vertex {tuple(map(str, v))}")


def ehrhart_interpolated(poly: Polytope) -> EhrhartPolynomial:
    """Exact coefficients from point counts at m = 1..d+1 (integral P only)."""
    _require_integral(poly)
    d = poly.dim
    counts = [count_points(poly, m) for m in range(1, d + 2)]
    system = [[Fraction(m) ** j for j in range(d + 1)] for m in range(1, d + 2)]
    coeffs = solve(system, counts)
    assert coeffs is not None
    result = EhrhartPolynomial(tuple(coeffs))
    # Independent consistency anchor: an integral polytope counts 1 at m = 0.
    assert result.coefficients[0] == 1, "constant term of an integral polytope must be 1"
    return result


def projection_volume_coefficients(poly: Polytope, up_to: int) -> list[Fraction]:
    """[Vol(project(P, j)) normalized to Z^j for j = 0..up_to]; the point gets 1."""
    return [
        normalized_volume(poly.project(j), Sublattice.standard(j))
        for j in range(up_to + 1)
    ]


def ehrhart_from_slices(poly: Polytope, k: int) -> EhrhartPolynomial:
    """Ehrhart polynomial of a k-integral polytope assembled from its slices.

    Coefficients up to degree k are volumes of projections; the higher ones
    come from summing the slice Ehrhart polynomials (each minus its constant 1)
    over the lattice points of the projection to the first k coordinates, then
    shifting by m^k.
    """
    if poly.is_empty:
        raise ValueError("empty polytope has no Ehrhart polynomial")
    d = poly.dim
    if not 0 <= k <= d:
        raise ValueError(f"k must lie in [0, {d}], got {k}")
    cert = integrality_level(poly)
    if cert.max_level < k:
        raise HypothesisError(
            f"polytope is not {k}-integral", cert.describe_witness()
        )
    projection = poly.project(k)
    interior = [
        y for y in projection.lattice_points()
        if projection.classify_point(y) != "boundary"
    ]  # boundary slices are single points and contribute i - 1 = 0
    slice_dim = d - k
    # The m-th dilate of the slice over y is mP intersected with prefix m*y,
    # so one enumeration of mP serves every slice at once.
    counts: dict[tuple[int, ...], list[int]] = {y: [] for y in interior}
    for m in range(1, slice_dim + 2):
        buckets = Counter(pt[:k] for pt in poly.lattice_points(scale=m))
        for y in interior:
            counts[y].append(buckets.get(tuple(m * c for c in y), 0))
    system = [[Fraction(m) ** j for j in range(slice_dim + 1)] for m in range(1, slice_dim + 2)]
    slice_sum = [Fraction(0)] * (slice_dim + 1)
    for y in interior:
        coeffs = solve(system, counts[y])
        assert coeffs is not None
        assert coeffs[0] == 1, "slices of a k-integral polytope must be integral"
        for j, c in enumerate(coeffs):
            slice_sum[j] += c
        slice_sum[0] -= 1
    assert slice_sum[0] == 0
    coeffs = projection_volume_coefficients(poly, k) + slice_sum[1:]
    return EhrhartPolynomial(tuple(coeffs))


def ehrhart_from_projections(poly: Polytope) -> EhrhartPolynomial:
    """Closed form for fully integral P: coefficient j is the volume of the
    projection to the first j coordinates, normalized to Z^j."""
    if poly.is_empty:
        raise ValueError("empty polytope has no Ehrhart polynomial")
    cert = integrality_level(poly)
    if cert.max_level < poly.dim:
        raise HypothesisError("polytope is not fully integral", cert.describe_witness())
    return EhrhartPolynomial(tuple(projection_volume_coefficients(poly, poly.dim)))


def verify_codim1_identity(poly: Polytope) -> Report:
    """Check i(P) = i(projection dropping one dimension) + Vol(P) for
    (d-1)-integral polytopes; reports both sides either way."""
    if poly.is_empty or poly.dim < 1:
        raise ValueError("identity requires a polytope of dimension >= 1")
    d = poly.dim
    cert = integrality_level(poly)
    hyp = cert.max_level >= d - 1
    witness = None if hyp else f"not {d - 1}-integral: {cert.describe_witness()}"
    lhs = Fraction(count_points(poly, 1))
    proj_count = count_points(poly.project(d - 1), 1)
    vol = normalized_volume(poly, lin_lattice(poly))
    rhs = proj_count + vol
    equal = lhs == rhs
    if hyp and not equal:
        raise RuntimeError("codimension-1 identity failed although hypotheses hold")
    return Report(
        identity="codim1-count",
        hypotheses=((f"{d - 1}-integral", hyp),),
        lhs=lhs,
        rhs=rhs,
        equal=equal,
        witness=witness,
        details={
            "projection_count": proj_count,
            "volume": format_rational(vol),
        },
    )

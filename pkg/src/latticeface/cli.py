"""Command-line front end.

Exit codes: 0 when the computation succeeds (and any checked identity holds),
2 when an identity's hypotheses are violated (the expected inequality is part
of the report, not a failure), and 1 for input or usage errors.  Output is
plain text by default or JSON with ``--format json``; rationals always print
exactly as p/q.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from .document import load_polytope, polytope_to_document, save_polytope
from .ehrhart import (
    EhrhartPolynomial,
    ehrhart_from_projections,
    ehrhart_from_slices,
    ehrhart_interpolated,
    verify_codim1_identity,
)
from .errors import HypothesisError
from .integrality import generality_level, integrality_level
from .lattice import Sublattice, split
from .polytope import BudgetExceeded, Polytope
from .reduction import reduce_to_full_general
from .report import Report, format_rational
from .simplex_decomposition import verify_signed_decomposition, verify_vanishing_sum
from .volume import (
    center_at_lattice_point,
    lin_lattice,
    normalized_volume,
    slice_volume_sum,
    verify_volume_slice_identity,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_HYPOTHESIS = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticeface",
        description="Exact integrality certificates, slice volumes, and Ehrhart polynomials "
        "for lattice polytopes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="polytope document (JSON)")
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check", parents=[common], help="integrality and generality levels")

    p = sub.add_parser("volume", parents=[common], help="normalized volume")
    p.add_argument(
        "--lattice",
        choices=("lin", "ambient"),
        default="lin",
        help="normalize to the lattice of lin(P) (default) or to Z^D (full-dimensional only)",
    )

    p = sub.add_parser("svol", parents=[common], help="slice-volume sum at level k")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser(
        "verify-mainvol", parents=[common], help="check volume = slice-volume sum at level k"
    )
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("ehrhart", parents=[common], help="Ehrhart polynomial")
    p.add_argument(
        "--method",
        choices=("auto", "interpolate", "k-integral", "fully-integral"),
        default="auto",
    )
    p.add_argument("--k", type=int, default=None, help="level for --method k-integral")

    p = sub.add_parser(
        "slices", parents=[common], help="per-lattice-point slice volumes and Ehrhart polynomials"
    )
    p.add_argument("--k", type=int, required=True)

    sub.add_parser(
        "simplex-identities",
        parents=[common],
        help="signed decomposition identities and the vanishing-sum sweep",
    )

    sub.add_parser("verify-codim1", parents=[common], help="check i(P) = i(projection) + Vol(P)")

    p = sub.add_parser(
        "reduce", parents=[common], help="map to a full-dimensional fully general polytope"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None, help="write the image polytope document here")
    return parser


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    lines: list[str] = []

    def emit(prefix: str, value) -> None:
        if isinstance(value, dict):
            for key, val in value.items():
                emit(f"{prefix}.{key}" if prefix else str(key), val)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                parts = " ".join(f"{k}={_scalar(v)}" for k, v in item.items())
                lines.append(f"{prefix}[{i}]: {parts}")
        else:
            lines.append(f"{prefix}: {_scalar(value)}")

    for key, val in payload.items():
        emit(str(key), val)
    return "\n".join(lines)


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if value is None:
        return "none"
    return str(value)


def _report_payload(report: Report) -> dict:
    return report.as_dict()


def _polynomial_payload(poly: EhrhartPolynomial) -> dict:
    return {"coefficients": poly.as_list(), "polynomial": str(poly)}


def _cmd_check(poly: Polytope, args) -> tuple[dict, int]:
    cert_i = integrality_level(poly)
    cert_g = generality_level(poly)
    return {
        "command": "check",
        "ambient_dim": poly.ambient_dim,
        "dim": poly.dim,
        "vertex_count": len(poly.vertices),
        "integrality_level": cert_i.max_level,
        "integrality_witness": cert_i.describe_witness(),
        "generality_level": cert_g.max_level,
        "generality_witness": cert_g.describe_witness(),
    }, EXIT_OK


def _cmd_volume(poly: Polytope, args) -> tuple[dict, int]:
    if args.lattice == "ambient":
        if poly.dim != poly.ambient_dim:
            raise ValueError("--lattice ambient requires a full-dimensional polytope")
        lattice = Sublattice.standard(poly.ambient_dim)
    else:
        lattice = lin_lattice(poly)
    vol = normalized_volume(poly, lattice)
    return {"command": "volume", "lattice": args.lattice, "volume": format_rational(vol)}, EXIT_OK


def _cmd_svol(poly: Polytope, args) -> tuple[dict, int]:
    value = slice_volume_sum(poly, args.k)
    return {"command": "svol", "k": args.k, "svol": format_rational(value)}, EXIT_OK


def _cmd_verify_mainvol(poly: Polytope, args) -> tuple[dict, int]:
    report = verify_volume_slice_identity(poly, args.k)
    payload = {"command": "verify-mainvol", "k": args.k, **_report_payload(report)}
    return payload, EXIT_OK if report.hypotheses_hold else EXIT_HYPOTHESIS


def _cmd_ehrhart(poly: Polytope, args) -> tuple[dict, int]:
    method = args.method
    if method == "auto":
        level = integrality_level(poly).max_level
        if level < 0:
            raise HypothesisError("polytope is not integral")
        if level == poly.dim:
            method, k = "fully-integral", None
        else:
            method, k = "k-integral", level
    else:
        k = args.k
    if method == "interpolate":
        result = ehrhart_interpolated(poly)
        k = None
    elif method == "fully-integral":
        result = ehrhart_from_projections(poly)
        k = None
    else:
        if k is None:
            k = integrality_level(poly).max_level
            if k < 0:
                raise HypothesisError("polytope is not integral")
        result = ehrhart_from_slices(poly, k)
    payload = {"command": "ehrhart", "method": method, **_polynomial_payload(result)}
    if k is not None:
        payload["k"] = k
    return payload, EXIT_OK


def _cmd_slices(poly: Polytope, args) -> tuple[dict, int]:
    k = args.k
    if not 0 <= k <= poly.dim:
        raise ValueError(f"k must lie in [0, {poly.dim}], got {k}")
    centered = center_at_lattice_point(poly)
    offset = [a - b for a, b in zip(poly.vertices[0], centered.vertices[0])]
    lattice = lin_lattice(centered)
    parts = split(lattice, k)
    projection = centered.project(k)
    entries = []
    total = Fraction(0)
    polynomial_sum: EhrhartPolynomial | None = EhrhartPolynomial((Fraction(0),))
    for y in projection.lattice_points():
        if not parts.projection.contains(y):
            continue
        piece = centered.slice_at(y)
        vol = (
            normalized_volume(piece, parts.kernel)
            if piece.dim == parts.kernel.rank
            else Fraction(0)
        )
        total += vol
        entry = {
            "point": [int(c) + int(o) for c, o in zip(y, offset[:k])],
            "position": projection.classify_point(y),
            "volume": format_rational(vol),
        }
        if all(x.denominator == 1 for v in piece.vertices for x in v):
            slice_poly = ehrhart_interpolated(piece)
            entry["ehrhart"] = slice_poly.as_list()
            if polynomial_sum is not None:
                polynomial_sum = polynomial_sum + slice_poly
        else:
            entry["ehrhart"] = None
            polynomial_sum = None
        entries.append(entry)
    payload = {
        "command": "slices",
        "k": k,
        "slices": entries,
        "volume_sum": format_rational(total),
        "ehrhart_sum": polynomial_sum.as_list() if polynomial_sum is not None else None,
    }
    return payload, EXIT_OK


def _cmd_simplex_identities(poly: Polytope, args) -> tuple[dict, int]:
    signed = verify_signed_decomposition(poly)
    d = poly.dim
    sweep = []
    for arity in range(max(d - 1, 0)):
        for excess in range(d - 1 - arity):
            for exponents in itertools.product(range(3), repeat=arity):
                if sum(exponents) > 2:
                    continue

                def monomial(*zs, _e=exponents):
                    out = Fraction(1)
                    for z, e in zip(zs, _e):
                        out *= z**e
                    return out

                rep = verify_vanishing_sum(poly, arity, excess, monomial)
                sweep.append(
                    {
                        "arity": arity,
                        "excess": excess,
                        "monomial_exponents": list(exponents),
                        "sum": format_rational(rep.lhs),
                        "holds": rep.equal,
                    }
                )
    payload = {
        "command": "simplex-identities",
        "signed_decomposition": _report_payload(signed),
        "vanishing_sums": sweep,
        "all_hold": signed.equal and all(e["holds"] for e in sweep),
    }
    return payload, EXIT_OK if payload["all_hold"] else EXIT_HYPOTHESIS


def _cmd_verify_codim1(poly: Polytope, args) -> tuple[dict, int]:
    report = verify_codim1_identity(poly)
    payload = {"command": "verify-codim1", **_report_payload(report)}
    return payload, EXIT_OK if report.hypotheses_hold else EXIT_HYPOTHESIS


def _cmd_reduce(poly: Polytope, args) -> tuple[dict, int]:
    phi, image = reduce_to_full_general(poly, args.k)
    doc = polytope_to_document(image)
    if args.out:
        save_polytope(image, args.out)
    payload = {
        "command": "reduce",
        "k": args.k,
        "map": {
            "matrix": [[format_rational(x) for x in row] for row in phi.matrix],
            "offset": [format_rational(x) for x in phi.offset],
        },
        "polytope": doc,
    }
    return payload, EXIT_OK


_HANDLERS = {
    "check": _cmd_check,
    "volume": _cmd_volume,
    "svol": _cmd_svol,
    "verify-mainvol": _cmd_verify_mainvol,
    "ehrhart": _cmd_ehrhart,
    "slices": _cmd_slices,
    "simplex-identities": _cmd_simplex_identities,
    "verify-codim1": _cmd_verify_codim1,
    "reduce": _cmd_reduce,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        poly = load_polytope(args.file)
        payload, code = _HANDLERS[args.command](poly, args)
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(_render(payload, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

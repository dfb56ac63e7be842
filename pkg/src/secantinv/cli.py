"""Command-line surface for the invariant calculators.

Commands: hilbert, series, degree, generators, coh-sym, coh-wedge,
coh-canonical, coh-line, tangent-cone, cone, sweep, validate.  Every number
is emitted exactly (rationals as "p/q", big integers as decimal strings) and
output is byte-identical across runs of the same request.

Exit codes: 0 success; 1 failed validation; 2 usage or domain errors
(including unknown flags); 3 internal consistency failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from .cohomology import (
    CohomologyTable,
    LineBundleClass,
    canonical_twist_table,
    line_bundle_table,
    sym_secant_table,
    wedge_secant_table,
)
from .errors import (
    AmbiguousBundle,
    DomainError,
    DuplicateNode,
    GeneratorDegreeUnknown,
    InternalCheckError,
    NonvanishingTail,
    InternalMismatch,
    StratumOutOfRange,
    UsageError,
)
from .exactmath import QPolynomial, format_rational
from .secant_core import (
    HilbertSeries,
    SecantInstance,
    canonical_h0,
    generator_count,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    variety_degree,
)
from .tangent_geometry import cone_over_secant, tangent_cone_at

FORMATS = ("text", "json", "csv", "latex")

_ERROR_CODES = {
    DomainError: "domain",
    StratumOutOfRange: "stratum",
    AmbiguousBundle: "ambiguous-bundle",
    GeneratorDegreeUnknown: "generator-degree-unknown",
    DuplicateNode: "duplicate-node",
    NonvanishingTail: "nonvanishing-tail",
    InternalMismatch: "internal-mismatch",
}


def _error_code(exc: Exception) -> str:
    for klass, code in _ERROR_CODES.items():
        if isinstance(exc, klass):
            return code
    return "internal" if isinstance(exc, InternalCheckError) else "usage"


def latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def latex_polynomial(poly: QPolynomial) -> str:
    if poly.is_zero:
        return "0"
    parts: list[str] = []
    for power in range(poly.degree, -1, -1):
        c = poly.coefficient(power)
        if c == 0:
            continue
        if power == 0:
            body = latex_rational(abs(c))
        else:
            t = "t" if power == 1 else f"t^{{{power}}}"
            body = t if abs(c) == 1 else f"{latex_rational(abs(c))} {t}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class Document:
    """A fully rendered result: one payload per output format."""

    json_payload: dict
    csv_header: tuple[str, ...]
    csv_body: tuple[tuple[str, ...], ...]
    text_body: str
    latex_body: str

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.json_payload, indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(self.csv_header)
            writer.writerows(self.csv_body)
            return buffer.getvalue()
        if fmt == "latex":
            return self.latex_body + "\n"
        return self.text_body + "\n"


def _scalar_document(value: int) -> Document:
    text = str(value)
    return Document(
        json_payload={"value": text},
        csv_header=("key", "value"),
        csv_body=(("value", text),),
        text_body=text,
        latex_body=text,
    )


def _polynomial_document(poly: QPolynomial) -> Document:
    return Document(
        json_payload={"coefficients": poly.to_strings()},
        csv_header=("power", "coefficient"),
        csv_body=tuple(
            (str(power), format_rational(c))
            for power, c in enumerate(poly.coefficients)
        ),
        text_body=str(poly),
        latex_body=latex_polynomial(poly),
    )


def _series_document(series: HilbertSeries) -> Document:
    rows = [
        (f"numerator[{power}]", format_rational(c))
        for power, c in enumerate(series.numerator.coefficients)
    ]
    rows.append(("krull_dim", str(series.krull_dim)))
    return Document(
        json_payload=series.to_json_dict(),
        csv_header=("key", "value"),
        csv_body=tuple(rows),
        text_body=(
            f"numerator = {series.numerator}\nkrull_dim = {series.krull_dim}"
        ),
        latex_body=(
            f"\\frac{{{latex_polynomial(series.numerator)}}}"
            f"{{(1 - t)^{{{series.krull_dim}}}}}"
        ),
    )


def _table_document(table: CohomologyTable) -> Document:
    rows = table.csv_rows()
    text_lines = [f"family {table.family}"] + [
        f"{key} = {value}" for key, value in table.params
    ]
    text_lines.append("i  l  dim")
    for i, twist, dim in rows:
        text_lines.append(f"{i:<2} {twist or '-':<2} {dim}")
    latex_lines = [
        "\\begin{tabular}{rrr}",
        "i & \\ell & h^i \\\\",
    ]
    for i, twist, dim in rows:
        latex_lines.append(f"{i} & {twist or '-'} & {dim} \\\\")
    latex_lines.append("\\end{tabular}")
    return Document(
        json_payload=table.to_json_dict(),
        csv_header=("i", "l", "dim"),
        csv_body=tuple(rows),
        text_body="\n".join(text_lines),
        latex_body="\n".join(latex_lines),
    )


def _flatten_json(prefix: str, value, out: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten_json(f"{prefix}.{key}" if prefix else key, value[key], out)
    elif isinstance(value, list):
        for index, item in enumerate(value):
            _flatten_json(f"{prefix}[{index}]", item, out)
    elif value is None:
        out.append((prefix, "null"))
    elif isinstance(value, bool):
        out.append((prefix, "true" if value else "false"))
    else:
        out.append((prefix, str(value)))


def _record_document(payload: dict) -> Document:
    flat: list[tuple[str, str]] = []
    _flatten_json("", payload, flat)
    text = "\n".join(f"{key} = {value}" for key, value in flat)
    latex_lines = ["\\begin{tabular}{ll}"]
    for key, value in flat:
        escaped = key.replace("_", "\\_")
        latex_lines.append(f"{escaped} & {value} \\\\")
    latex_lines.append("\\end{tabular}")
    return Document(
        json_payload=payload,
        csv_header=("key", "value"),
        csv_body=tuple(flat),
        text_body=text,
        latex_body="\n".join(latex_lines),
    )


# --- argument plumbing ------------------------------------------------------

def _range_argument(text: str) -> range:
    """Inclusive integer range "a:b", or a single integer "a"."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            value = int(parts[0])
            return range(value, value + 1)
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            if hi < lo:
                raise ValueError
            return range(lo, hi + 1)
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(
        f"expected an inclusive range 'a:b' or a single integer, got {text!r}"
    )


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="write the document to PATH instead of stdout")


def _add_instance_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--genus", type=int, required=True)
    parser.add_argument("--degree", type=int, required=True)
    parser.add_argument("--order", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secantinv",
        description="Exact invariants of secant varieties of smooth projective curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert polynomial of the secant variety")
    _add_instance_options(p)
    _add_output_options(p)

    p = sub.add_parser("series", help="Hilbert series numerator and Krull dimension")
    _add_instance_options(p)
    _add_output_options(p)

    p = sub.add_parser("degree", help="degree of the secant variety")
    _add_instance_options(p)
    _add_output_options(p)

    p = sub.add_parser("generators", help="minimal generators of the defining ideal")
    _add_instance_options(p)
    _add_output_options(p)

    p = sub.add_parser("coh-sym", help="cohomology of symmetric powers of the secant sheaf")
    _add_instance_options(p)
    p.add_argument("--twist", type=int, required=True)
    _add_output_options(p)

    p = sub.add_parser("coh-wedge", help="cohomology of exterior powers of the secant sheaf")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--points", type=int, required=True,
                   help="size of the symmetric product")
    p.add_argument("--twist", type=int, required=True,
                   help="exterior power, between 1 and points")
    p.add_argument("--degree-of-L", type=int, required=True, dest="degree_of_l")
    p.add_argument("--degree-of-M", type=int, required=True, dest="degree_of_m")
    p.add_argument("--h1-of-L", type=int, default=None, dest="h1_of_l")
    p.add_argument("--h1-of-M", type=int, default=None, dest="h1_of_m")
    p.add_argument("--h1-of-LM", type=int, default=None, dest="h1_of_lm")
    _add_output_options(p)

    p = sub.add_parser("coh-canonical", help="canonical-twisted cohomology dimensions")
    _add_instance_options(p)
    p.add_argument("--twist", type=int, required=True)
    _add_output_options(p)

    p = sub.add_parser("coh-line", help="cohomology of the N/T line bundles on a symmetric product")
    p.add_argument("--family", choices=("N", "T"), required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True, help="degree of the line bundle")
    p.add_argument("--h1-of-L", type=int, default=None, dest="h1_of_l")
    _add_output_options(p)

    p = sub.add_parser("tangent-cone", help="tangent-cone descriptor at a singular stratum")
    _add_instance_options(p)
    p.add_argument("--stratum", type=int, required=True)
    _add_output_options(p)

    p = sub.add_parser("cone", help="cone over the secant variety with a linear vertex")
    _add_instance_options(p)
    p.add_argument("--vertex-count", type=int, required=True, dest="vertex_count")
    _add_output_options(p)

    p = sub.add_parser("sweep", help="evaluate an invariant over a parameter grid")
    p.add_argument("--genus-range", type=_range_argument, required=True, dest="genus_range")
    p.add_argument("--degree-range", type=_range_argument, required=True, dest="degree_range")
    p.add_argument("--order-range", type=_range_argument, required=True, dest="order_range")
    p.add_argument(
        "--invariant",
        choices=("degree", "generators", "canonical-h0", "hilbert"),
        required=True,
    )
    p.add_argument("--twist", type=int, default=1,
                   help="twist for --invariant hilbert (default 1)")
    _add_output_options(p)

    p = sub.add_parser("validate", help="run the full self-validation catalogue")
    _add_output_options(p)

    return parser


# --- command handlers -------------------------------------------------------

def _instance(args: argparse.Namespace) -> SecantInstance:
    return SecantInstance(args.genus, args.degree, args.order)


def _handle_hilbert(args) -> Document:
    return _polynomial_document(hilbert_polynomial(_instance(args)))


def _handle_series(args) -> Document:
    return _series_document(hilbert_series(_instance(args)))


def _handle_degree(args) -> Document:
    return _scalar_document(variety_degree(_instance(args)))


def _handle_generators(args) -> Document:
    return _scalar_document(generator_count(_instance(args)))


def _handle_coh_sym(args) -> Document:
    return _table_document(sym_secant_table(_instance(args), args.twist))


def _handle_coh_wedge(args) -> Document:
    bundle = LineBundleClass.from_degree(args.genus, args.degree_of_l, args.h1_of_l)
    twisting = LineBundleClass.from_degree(args.genus, args.degree_of_m, args.h1_of_m)
    product = None
    if args.h1_of_lm is not None:
        product = LineBundleClass.from_degree(
            args.genus, args.degree_of_l + args.degree_of_m, args.h1_of_lm
        )
    table = wedge_secant_table(args.points, args.twist, bundle, twisting, product)
    return _table_document(table)


def _handle_coh_canonical(args) -> Document:
    return _table_document(canonical_twist_table(_instance(args), args.twist))


def _handle_coh_line(args) -> Document:
    bundle = LineBundleClass.from_degree(args.genus, args.degree, args.h1_of_l)
    return _table_document(line_bundle_table(args.family, args.points, bundle))


def _handle_tangent_cone(args) -> Document:
    return _record_document(tangent_cone_at(_instance(args), args.stratum).to_json_dict())


def _handle_cone(args) -> Document:
    return _record_document(cone_over_secant(_instance(args), args.vertex_count).to_json_dict())


def _handle_sweep(args, stderr: TextIO) -> Document:
    cells = []
    skipped = []
    for g in args.genus_range:
        for d in args.degree_range:
            for k in args.order_range:
                try:
                    inst = SecantInstance(g, d, k)
                except DomainError as exc:
                    skipped.append(((g, d, k), str(exc)))
                    continue
                try:
                    if args.invariant == "degree":
                        value = variety_degree(inst)
                    elif args.invariant == "generators":
                        value = generator_count(inst)
                    elif args.invariant == "canonical-h0":
                        value = canonical_h0(inst)
                    else:
                        value = hilbert_function(inst, args.twist)
                except UsageError as exc:
                    skipped.append(((g, d, k), str(exc)))
                    continue
                cells.append((inst, value))
    for (g, d, k), reason in skipped:
        print(f"skip: genus {g} degree {d} order {k}: {reason}", file=stderr)
    if not cells:
        raise DomainError("sweep grid contains no valid instances")
    cells.sort(key=lambda cell: (cell[0].genus, cell[0].degree, cell[0].order))
    payload = {
        "invariant": args.invariant,
        "cells": [
            {
                "genus": inst.genus,
                "degree": inst.degree,
                "order": inst.order,
                "value": str(value),
            }
            for inst, value in cells
        ],
    }
    if args.invariant == "hilbert":
        payload["twist"] = args.twist
    rows = tuple(
        (str(inst.genus), str(inst.degree), str(inst.order), str(value))
        for inst, value in cells
    )
    text_lines = [f"{'g':>3} {'d':>4} {'k':>3}  {args.invariant}"]
    for inst, value in cells:
        text_lines.append(f"{inst.genus:>3} {inst.degree:>4} {inst.order:>3}  {value}")
    latex_lines = ["\\begin{tabular}{rrrr}", "g & d & k & value \\\\"]
    for inst, value in cells:
        latex_lines.append(f"{inst.genus} & {inst.degree} & {inst.order} & {value} \\\\")
    latex_lines.append("\\end{tabular}")
    return Document(
        json_payload=payload,
        csv_header=("genus", "degree", "order", "value"),
        csv_body=rows,
        text_body="\n".join(text_lines),
        latex_body="\n".join(latex_lines),
    )


def _handle_validate(args) -> tuple[int, str]:
    from .validation import run_catalogue

    results = run_catalogue()
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        payload = {
            "checks": [
                {
                    "name": r.name,
                    "status": "PASS" if r.passed else "FAIL",
                    "seconds": round(r.seconds, 3),
                    "detail": r.detail,
                }
                for r in results
            ],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }
        report = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name:<45} {r.seconds:8.3f}s"
            if r.detail:
                line += f"  [{r.detail}]"
            lines.append(line)
        total = sum(r.seconds for r in results)
        lines.append(
            f"{len(results) - len(failed)} passed, {len(failed)} failed "
            f"in {total:.3f}s"
        )
        report = "\n".join(lines) + "\n"
    return (1 if failed else 0), report


_HANDLERS = {
    "hilbert": _handle_hilbert,
    "series": _handle_series,
    "degree": _handle_degree,
    "generators": _handle_generators,
    "coh-sym": _handle_coh_sym,
    "coh-wedge": _handle_coh_wedge,
    "coh-canonical": _handle_coh_canonical,
    "coh-line": _handle_coh_line,
    "tangent-cone": _handle_tangent_cone,
    "cone": _handle_cone,
}


def run(argv: Sequence[str], stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Parse and execute one request; returns the process exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    code = 0
    try:
        if args.command == "validate":
            code, rendered = _handle_validate(args)
        elif args.command == "sweep":
            rendered = _handle_sweep(args, err).render(args.format)
        else:
            rendered = _HANDLERS[args.command](args).render(args.format)
    except UsageError as exc:
        print(f"error: {_error_code(exc)}: {exc}", file=err)
        return 2
    except InternalCheckError as exc:
        print(f"error: {_error_code(exc)}: {exc}", file=err)
        return 3
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(rendered)
    else:
        out.write(rendered)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

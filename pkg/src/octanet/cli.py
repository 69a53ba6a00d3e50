"""Command-line interface.

Exit codes: 0 on success (mismatch findings are data, not failures), 1 on
internal errors or `verify --strict` failures, 2 on bad flags or bad input.
Every output is byte-stable across runs; exact canonical values are the
default and decimals are opt-in.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .claims import claims_json
from .dsl import AsymmetricExpression, ExpressionSyntaxError, MixedBasis, parse, to_index_spec
from .generators import InvalidDimension, generate_dpoh, generate_poh, generate_tp
from .graphs import Network, PARTITION_KINDS
from .indices import INDEX_NAMES, UnknownIndex, builtin, compute, wiener
from .radicals import NegativeRadicand, NonInvertibleDenominator
from .verify import (
    UnsupportedFormat,
    emit_report,
    plot_data,
    strict_failures,
    verify_families,
)

FAMILY_FLAGS = ("poh", "tp", "dpoh")
GENERATE_FORMATS = ("json", "dot", "edgelist")
REPORT_FORMATS = ("json", "markdown", "csv")
CLI_INDEX_NAMES = INDEX_NAMES + ("wiener",)

_GEN = {"poh": generate_poh, "tp": generate_tp, "dpoh": generate_dpoh}


class _UsageError(Exception):
    """Bad flag value; message should name the flag."""


def _parse_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise _UsageError(f"--n must be an integer, got {text!r}")
    if n < 1:
        raise _UsageError(f"--n must be >= 1, got {n}")
    return n


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise _UsageError(f"--n must look like '2' or '1..5', got {text!r}")
        if lo < 1 or hi < lo:
            raise _UsageError(f"--n range must satisfy 1 <= lo <= hi, got {text!r}")
        return list(range(lo, hi + 1))
    return [_parse_n(text)]


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_network(args) -> Network:
    if getattr(args, "graph", None):
        with open(args.graph, encoding="utf-8") as fh:
            return Network.from_json_doc(json.load(fh))
    if not args.family:
        raise _UsageError("either --family or --graph is required")
    return _GEN[args.family](_parse_n(args.n))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octanet",
        description=(
            "Generate planar octahedron (poh), triangular prism (tp), and "
            "dominating planar octahedron (dpoh) networks; compute exact "
            "degree-based indices; verify the published closed-form claims."
        ),
    )
    parser.add_argument("--version", action="version", version=f"octanet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit one network as json, dot, or edgelist")
    p.add_argument("--family", required=True, choices=FAMILY_FLAGS)
    p.add_argument("--n", required=True, help="dimension, a positive integer")
    p.add_argument("--format", default="json", choices=GENERATE_FORMATS)
    p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("partition", help="edge partition CSV for one network")
    p.add_argument("--family", required=True, choices=FAMILY_FLAGS)
    p.add_argument("--n", required=True, help="dimension, a positive integer")
    p.add_argument("--basis", default="degree", choices=PARTITION_KINDS)
    p.add_argument("--out", default=None)

    p = sub.add_parser("index", help="compute one index exactly")
    p.add_argument("--family", choices=FAMILY_FLAGS)
    p.add_argument("--n", default="1", help="dimension, a positive integer")
    p.add_argument("--graph", default=None, help="read the network from a JSON graph file")
    p.add_argument("--index", choices=CLI_INDEX_NAMES, help="built-in index name")
    p.add_argument("--expr", default=None, help="per-edge expression over du,dv or Su,Sv")
    p.add_argument("--basis", default="degree", choices=PARTITION_KINDS,
                   help="label basis for --expr")
    p.add_argument("--approx", type=int, default=None, metavar="DIGITS",
                   help="append a decimal column with this many digits")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="compare generated networks against every claim")
    p.add_argument("--family", default="all", choices=FAMILY_FLAGS + ("all",))
    p.add_argument("--n", required=True, help="dimension or range, e.g. 2 or 1..5")
    p.add_argument("--format", default="markdown", choices=REPORT_FORMATS)
    p.add_argument("--strict", action="store_true",
                   help="exit 1 if a claim a correct build must reproduce mismatches")
    p.add_argument("--out", default=None)

    p = sub.add_parser("plot-data", help="CSV series of computed vs claimed index values")
    p.add_argument("--family", required=True, choices=FAMILY_FLAGS)
    p.add_argument("--index", required=True, choices=INDEX_NAMES)
    p.add_argument("--n", required=True, help="dimension or range, e.g. 1..6")
    p.add_argument("--out", default=None)

    p = sub.add_parser("claims", help="dump the claim registry as JSON")
    p.add_argument("--out", default=None)

    return parser


def _cmd_generate(args) -> int:
    g = _GEN[args.family](_parse_n(args.n))
    if args.format == "json":
        text = g.to_json() + "\n"
    elif args.format == "dot":
        text = g.to_dot()
    else:
        text = g.to_edgelist()
    _write(text, args.out)
    return 0


def _cmd_partition(args) -> int:
    g = _GEN[args.family](_parse_n(args.n))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class", "count"])
    for (a, b), count in g.edge_partition(args.basis).classes:
        writer.writerow([f"({a},{b})", count])
    _write(buf.getvalue(), args.out)
    return 0


def _cmd_index(args) -> int:
    g = _load_network(args)
    if args.expr is not None:
        spec = to_index_spec(parse(args.expr), args.basis)
        value = compute(g, spec)
    elif args.index == "wiener":
        from .radicals import RadicalValue

        value = RadicalValue(wiener(g))
    elif args.index:
        value = compute(g, builtin(args.index))
    else:
        raise _UsageError("one of --index or --expr is required")
    text = str(value)
    if args.approx is not None:
        if args.approx < 1:
            raise _UsageError(f"--approx must be >= 1, got {args.approx}")
        text += f",{value.approx(args.approx)}"
    _write(text + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    families = ["POH", "TP", "DPOH"] if args.family == "all" else [args.family.upper()]
    results = verify_families(families, _parse_range(args.n))
    _write(emit_report(results, args.format), args.out)
    if args.strict and strict_failures(results):
        return 1
    return 0


def _cmd_plot_data(args) -> int:
    series = plot_data(args.family.upper(), args.index, _parse_range(args.n))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    variants = sorted(series["claims"])
    writer.writerow(["n", "computed"] + [f"claimed[{v}]" for v in variants])
    for i, n in enumerate(series["n"]):
        writer.writerow([n, series["computed"][i]] + [series["claims"][v][i] for v in variants])
    _write(buf.getvalue(), args.out)
    return 0


def _cmd_claims(args) -> int:
    _write(claims_json(), args.out)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "partition": _cmd_partition,
    "index": _cmd_index,
    "verify": _cmd_verify,
    "plot-data": _cmd_plot_data,
    "claims": _cmd_claims,
}

_BAD_INPUT = (
    _UsageError,
    InvalidDimension,
    UnknownIndex,
    UnsupportedFormat,
    ExpressionSyntaxError,
    MixedBasis,
    AsymmetricExpression,
    NegativeRadicand,
    NonInvertibleDenominator,
    FileNotFoundError,
    json.JSONDecodeError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _BAD_INPUT as exc:
        print(f"octanet {args.command}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except Exception as exc:  # internal failure
        print(f"octanet {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

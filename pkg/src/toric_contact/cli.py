"""Command-line entry point.

Exit codes: 0 success, 1 the cone fails validation (the verdicts are still
printed), 2 usage errors such as unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from . import corpus as corpus_mod
from .cohomology import (
    analyze_cone,
    contact_cohomology,
    equivariant_cohomology,
    partial_equivariant,
    toric_cohomology,
)
from .io import ConeFileError, cone_to_dict, dumps, load_cone, render_text
from .report import (
    accepted,
    equivariant_section,
    finish,
    full_report,
    normalization_section,
    stabilizer_section,
    toric_section,
    validation_section,
)

log = logging.getLogger(__name__)

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

CONE_COMMANDS = ("validate", "normalize", "equivariant", "toric", "partial",
                 "contact", "stabilizers", "report")


class UsageError(Exception):
    pass


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--output", type=Path, help="write to this path instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="toric-contact",
        description="Cohomology of good contact toric manifolds from facet normals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "validate": "check strict convexity, goodness and smoothness",
        "normalize": "move the cone into the upper half space and print D, u, k",
        "equivariant": "Hilbert function of the equivariant cohomology ring",
        "toric": "cohomology of the toric manifold over the slice polytope",
        "partial": "equivariant cohomology of the slice for a coordinate subtorus",
        "contact": "cohomology of the contact manifold with theorem checks",
        "stabilizers": "stabilizer dimension and smoothness per face",
        "report": "everything, including stabilizers",
    }
    for name in CONE_COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        p.add_argument("cone", type=Path, help="cone file (JSON)")
        if name in ("equivariant", "partial", "contact", "report"):
            p.add_argument("--max-degree", type=_non_negative, default=None)
        if name in ("validate", "toric", "partial", "contact", "report"):
            p.add_argument("--rational", action="store_true",
                           help="rational coefficients; drops the smoothness requirement")
        if name == "partial":
            p.add_argument("--rank", type=_non_negative, required=True,
                           help="rank r of the subtorus T^r")

    p = sub.add_parser("corpus", parents=[common], help="write the bundled corpus with twisted variants")
    p.add_argument("--seed", type=int, default=corpus_mod.DEFAULT_SEED)
    p.add_argument("--twists", type=_non_negative, default=2)
    return parser


def _config(args: argparse.Namespace, rational: bool) -> dict:
    return {
        "command": args.command,
        "rational": rational,
        "max_degree": getattr(args, "max_degree", None),
        "rank": getattr(args, "rank", None),
    }


def run(args: argparse.Namespace) -> tuple[int, dict]:
    """Execute one parsed command and return the exit code and document."""
    if args.command == "corpus":
        if args.output is None:
            raise UsageError("corpus needs --output DIR")
        paths = corpus_mod.write_corpus(args.output, args.seed, args.twists)
        doc = {"directory": str(args.output), "seed": args.seed,
               "files": [p.name for p in paths]}
        args.output = None  # the files are the output; the summary goes to stdout
        return EXIT_OK, finish(doc, {"command": "corpus", "seed": args.seed, "twists": args.twists})

    try:
        cf = load_cone(args.cone)
    except OSError as exc:
        raise UsageError(f"cannot read {args.cone}: {exc.strerror or exc}") from None
    except ConeFileError as exc:
        if exc.kind == "syntax":
            raise UsageError(f"{args.cone}: {exc}") from None
        doc = {"input": {"file": str(args.cone)},
               "validation": {"accepted": False, "errors": [str(exc)]}}
        return EXIT_INVALID, finish(doc, {"command": args.command})

    cone = cf.cone
    rational = getattr(args, "rational", False) or cf.mode == "rational"
    config = _config(args, rational)
    a = analyze_cone(cone)
    head = {
        "input": cone_to_dict(cone, "rational" if rational else "integral"),
        "normalization": normalization_section(a),
    }
    if args.command == "normalize":
        code = EXIT_OK if a.normalization is not None else EXIT_INVALID
        if code:
            head["validation"] = validation_section(a, rational)
        return code, finish(head, config)

    head["validation"] = validation_section(a, rational)
    if args.command == "validate":
        return (EXIT_OK if accepted(a, rational) else EXIT_INVALID), finish(head, config)

    if not a.is_good:
        return EXIT_INVALID, finish(head, config)
    if args.command == "equivariant":
        head["equivariant"] = equivariant_section(
            equivariant_cohomology(cone, args.max_degree, analysis=a))
        return EXIT_OK, finish(head, config)
    if args.command == "stabilizers":
        head["stabilizers"] = stabilizer_section(a)
        return EXIT_OK, finish(head, config)
    if args.command == "partial":
        if args.rank > cone.n - 1:
            raise UsageError(f"--rank must be at most {cone.n - 1} for this cone")
        ranks = partial_equivariant(cone, args.rank, args.max_degree, analysis=a)
        head["partial"] = {"rank": args.rank, "hilbert": ranks}
        return EXIT_OK, finish(head, config)

    if not accepted(a, rational):
        return EXIT_INVALID, finish(head, config)
    t = toric_cohomology(cone, rational, analysis=a)
    if args.command == "toric":
        head["toric"] = toric_section(t)
        return EXIT_OK, finish(head, config)
    r = contact_cohomology(cone, rational, args.max_degree, analysis=a)
    doc = full_report(r, t, config, stabilizers=args.command == "report")
    return EXIT_OK, doc


def render(doc: dict, fmt: str) -> str:
    return dumps(doc) if fmt == "json" else render_text(doc)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        code, doc = run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(doc, args.format)
    if code == EXIT_INVALID:
        errors = doc.get("validation", {}).get("errors") or ["validation failed"]
        for line in errors:
            print(f"invalid: {line}", file=sys.stderr)
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return code

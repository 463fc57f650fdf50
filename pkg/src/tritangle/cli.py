"""Command-line surface: calculators, classification, catalog and census.

Exit codes: 0 success/classified, 2 usage or input error, 3 inadmissible
decomposition, 4 toroidal decomposition.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as catalog_mod
from .annuli import good_annulus
from .census import census_csv, run_census
from .errors import (
    BoundsTooLarge,
    DocumentError,
    NotApplicable,
    TritangleError,
    UnknownName,
)
from .frac import ExtFraction, cf_eval, cf_expand, parse_fraction, slope_normalize
from .jsonio import (
    dumps_decomposition,
    loads_decomposition,
    loads_tangle,
    serialize_decomposition,
)
from .rect import rect_types_rho, rect_types_tau
from .tangle import KIND_TAU, ResolvedTangle, resolve
from .verdict import CLASSIFIED, INADMISSIBLE, TOROIDAL, Verdict, classify

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INADMISSIBLE = 3
EXIT_TOROIDAL = 4

HOPF_SLOPE = ExtFraction(1, 2)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_cf(args) -> int:
    value = cf_eval(args.twists)
    if value.is_infinite:
        return _fail("twist vector evaluates to infinity; "
                     "it does not present a rational 3-tangle")
    slope = slope_normalize(value)
    marker = " [Hopf rho]" if slope == HOPF_SLOPE else ""
    print(f"{value} (slope {slope}){marker}")
    return EXIT_OK


def cmd_expand(args) -> int:
    try:
        fraction = parse_fraction(args.fraction)
    except (ValueError, TritangleError) as exc:
        return _fail(f"not a valid fraction {args.fraction!r}: {exc}")
    if fraction.is_infinite:
        return _fail("cannot expand the infinite slope")
    print(" ".join(str(a) for a in cf_expand(fraction)))
    return EXIT_OK


def _resolved_as_dict(t: ResolvedTangle) -> dict:
    out = {
        "kind": t.kind,
        "atoroidal": t.atoroidal,
        "trivial": t.trivial,
        "essential": t.essential,
        "satellite": t.satellite,
        "cable": t.cable,
        "hopf_summand": t.hopf_summand,
        "hopf_tangle": t.hopf_tangle,
        "provenance": list(t.provenance),
    }
    if t.rational is not None:
        out["rational"] = t.rational
    if t.slope is not None:
        out["slope"] = str(t.slope)
    if t.unit_fraction_slope is not None:
        out["unit_fraction_slope"] = t.unit_fraction_slope
    if t.torus is not None:
        out["torus"] = {"p": t.torus.p, "q": t.torus.q}
    return out


def cmd_tangle(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        return _fail(str(exc))
    try:
        descriptor = loads_tangle(text)
        resolved = resolve(descriptor)
    except (DocumentError, TritangleError) as exc:
        return _fail(str(exc))
    extras: dict = {}
    try:
        rect = rect_types_tau(resolved) if resolved.kind == KIND_TAU \
            else rect_types_rho(resolved)
        extras["good_rectangles"] = sorted(r.value for r in rect)
    except NotApplicable as exc:
        extras["good_rectangles"] = f"n/a ({exc})"
    try:
        annulus = good_annulus(resolved)
        extras["good_annulus"] = annulus.value if annulus else "none"
    except NotApplicable as exc:
        extras["good_annulus"] = f"n/a ({exc})"
    info = _resolved_as_dict(resolved) | extras
    if args.json:
        print(json.dumps(info, indent=2))
    else:
        for key, value in info.items():
            if key == "provenance":
                print("provenance:")
                for note in value:
                    print(f"  - {note}")
            else:
                print(f"{key}: {value}")
    return EXIT_OK


def _verdict_exit(v: Verdict) -> int:
    return {CLASSIFIED: EXIT_OK, INADMISSIBLE: EXIT_INADMISSIBLE,
            TOROIDAL: EXIT_TOROIDAL}[v.status]


def _print_verdict(v: Verdict, as_json: bool):
    if as_json:
        out = {
            "status": v.status,
            "summary": v.summary(),
            "annulus_count": str(v.annulus_count) if v.annulus_count is not None else None,
            "hyperbolic": v.hyperbolic,
            "branch": v.branch,
            "annuli": list(v.annuli),
            "notes": list(v.notes),
            "violations": [str(x) for x in v.violations],
        }
        print(json.dumps(out, indent=2))
        return
    print(f"status: {v.status}")
    print(f"verdict: {v.summary()}")
    if v.status == CLASSIFIED:
        print(f"count: {v.annulus_count}")
        print(f"hyperbolic: {'yes' if v.hyperbolic else 'no'}")
        print(f"branch: {v.branch}")
    for label, items in (("annuli", v.annuli), ("notes", v.notes),
                         ("violations", v.violations)):
        if items:
            print(f"{label}:")
            for item in items:
                print(f"  - {item}")


def cmd_classify(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        return _fail(str(exc))
    try:
        decomposition = loads_decomposition(text)
    except DocumentError as exc:
        return _fail(str(exc))
    verdict = classify(decomposition)
    _print_verdict(verdict, args.json)
    return _verdict_exit(verdict)


def cmd_catalog(args) -> int:
    if args.verify:
        entries = catalog_mod.catalog_entries()
        if args.name:
            entries = [e for e in entries if e.name.startswith(args.name)]
            if not entries:
                return _fail(f"no catalog entry named {args.name!r}")
        report = catalog_mod.catalog_verify(entries)
        for row in report.rows:
            if row.passed is None:
                state = "stored"
            else:
                state = "pass" if row.passed else "FAIL"
            print(f"{row.name:<22} {state:<7} expected: {row.expected}")
            if row.passed is False:
                print(f"{'':<22} {'':<7} actual:   {row.actual}")
        print(f"{report.checked} checked, {report.mismatches} mismatches")
        if report.ok:
            print("all entries match")
            return EXIT_OK
        return 1
    if args.name:
        try:
            entry = catalog_mod.catalog_get(args.name)
        except UnknownName as exc:
            return _fail(str(exc))
        print(f"name: {entry.name}")
        print(f"provenance: {entry.provenance}")
        print(f"source: {entry.source}")
        if entry.expected is not None:
            print(f"expected: {entry.expected}")
        if entry.expected_obstructions:
            print("expected obstructions:")
            for o in entry.expected_obstructions:
                print(f"  - {o.name}")
        if entry.decomposition is not None:
            if args.json:
                print(dumps_decomposition(entry.decomposition))
            else:
                print("decomposition: " +
                      json.dumps(serialize_decomposition(entry.decomposition)))
        return EXIT_OK
    for name in catalog_mod.catalog_names():
        entry = catalog_mod.catalog_get(name)
        expected = str(entry.expected) if entry.expected else "obstruction profile"
        print(f"{name:<22} {expected}")
    return EXIT_OK


def cmd_census(args) -> int:
    try:
        rows = run_census(args.type, args.max_denominator)
    except BoundsTooLarge as exc:
        return _fail(str(exc))
    text = census_csv(rows)
    if args.out:
        # newline="" keeps the CSV byte-identical across platforms
        Path(args.out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritangle",
        description="Exact classifier for 3-decompositions of genus-two "
                    "handlebody-knots: slopes, good rectangles and annuli, "
                    "essential-annulus counts and hyperbolicity verdicts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cf = sub.add_parser("cf", help="evaluate a twist vector and its slope")
    p_cf.add_argument("twists", type=int, nargs="*", metavar="TWIST",
                      help="twist entries (use -- before negative entries)")
    p_cf.set_defaults(func=cmd_cf)

    p_expand = sub.add_parser("expand", help="expand a fraction into a twist vector")
    p_expand.add_argument("fraction", metavar="P/Q",
                          help='fraction such as 7/2 (use -- before a negative one)')
    p_expand.set_defaults(func=cmd_expand)

    p_tangle = sub.add_parser("tangle", help="resolve a single tangle JSON document")
    p_tangle.add_argument("file", help="path to a tangle JSON document")
    p_tangle.add_argument("--json", action="store_true", help="machine-readable output")
    p_tangle.set_defaults(func=cmd_tangle)

    p_classify = sub.add_parser("classify", help="classify a decomposition JSON document")
    p_classify.add_argument("file", help="path to a decomposition JSON document")
    p_classify.add_argument("--json", action="store_true", help="machine-readable output")
    p_classify.set_defaults(func=cmd_classify)

    p_catalog = sub.add_parser("catalog", help="show or verify the built-in table")
    p_catalog.add_argument("name", nargs="?", help="entry name, e.g. 6_9")
    p_catalog.add_argument("--verify", action="store_true",
                           help="re-derive every entry and report mismatches")
    p_catalog.add_argument("--json", action="store_true",
                           help="print the entry's decomposition document")
    p_catalog.set_defaults(func=cmd_catalog)

    p_census = sub.add_parser("census", help="enumerate the counting rules as CSV")
    p_census.add_argument("type", choices=["tautau", "taurho", "rhorho"])
    p_census.add_argument("--max-denominator", type=int, default=25, metavar="N",
                          help="range bound (default 25, hard cap 99)")
    p_census.add_argument("--out", metavar="FILE", help="write CSV here instead of stdout")
    p_census.set_defaults(func=cmd_census)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

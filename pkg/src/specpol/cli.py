"""Command-line front end.

Subcommands expose every library operation with both a human-readable format
and a canonical JSON format (``--json``): sorted keys, sorted arrays, no
whitespace, so identical inputs always produce identical bytes.

Rationals on the command line are written ``p/q`` or as plain integers;
``-inf`` and ``+inf`` are accepted where a ray endpoint makes sense.  Exit
status is 0 on success (verdicts such as a failed check are data, not exit
codes) and 2 on a usage or argument error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, catalog, polar, search, semicontinuity, spectrum
from .polar import Configuration
from .search import SearchFilters
from .spectrum import NEG_INF, POS_INF, Spectrum

__all__ = ["main", "run", "REACHABLE_OPERATIONS"]

# Dispatch-table record of which library operations each subcommand reaches,
# directly or transitively; a coverage test keeps this honest.
REACHABLE_OPERATIONS = {
    "spectrum germ": (catalog.germ_spectrum, catalog.curve_spectrum,
                      catalog.spectrum_from_weights, catalog.weights,
                      catalog.parse_germ, spectrum.make_spectrum,
                      spectrum.shift, spectrum.suspend, spectrum.total,
                      spectrum.min_spectral, spectrum.is_symmetric),
    "spectrum fermat": (catalog.fermat_spectrum, spectrum.total,
                        spectrum.min_spectral, spectrum.is_symmetric),
    "spectrum join": (spectrum.join, spectrum.total, spectrum.min_spectral),
    "deg": (spectrum.deg_window,),
    "pol": (polar.polar_degree, catalog.milnor),
    "check": (semicontinuity.check_configuration, semicontinuity.check,
              semicontinuity.candidate_spectrum, spectrum.add,
              spectrum.unit_window_degree),
    "search": (search.enumerate_configurations, search.germ_pool,
               polar.huh_inequality_holds, polar.sectional_milnor_plane,
               catalog.corank_curve, catalog.multiplicity_curve,
               bounds.alpha1_threshold),
    "region": (bounds.candidate_region, bounds.ell, bounds.degree_bound,
               bounds.dimension_excluded, bounds.lemma1_region_k2),
    "verify-huh": (search.verify_huh_lists, search.load_huh_lists),
}


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def _parse_bound(text: str):
    if text in ("-inf", "-oo"):
        return NEG_INF
    if text in ("+inf", "inf", "+oo"):
        return POS_INF
    return _parse_rational(text)


def _load_spectrum(source: str) -> Spectrum:
    """A spectrum source: germ:<class>[:<vars>], fermat:<n>:<d>, a file, or -."""
    if source.startswith("germ:"):
        parts = source.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"bad germ source {source!r}; use germ:<class>[:<vars>]")
        ambient = int(parts[2]) if len(parts) == 3 else 2
        return catalog.germ_spectrum(catalog.parse_germ(parts[1], ambient))
    if source.startswith("fermat:"):
        parts = source.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad fermat source {source!r}; use fermat:<n>:<d>")
        return catalog.fermat_spectrum(int(parts[1]), int(parts[2]))
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return Spectrum.from_json(text)


def _load_configuration(value: str) -> Configuration:
    text = value if value.lstrip().startswith("{") else Path(value).read_text()
    return Configuration.from_json(text)


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _print_spectrum(s: Spectrum, as_json: bool, center: Fraction | None = None) -> None:
    if as_json:
        print(s.to_json())
        return
    for alpha, mult in s:
        print(f"{alpha}\t{mult}")
    print(f"total\t{s.total()}")
    if s:
        print(f"min\t{s.min_spectral()}")
    if center is not None:
        print(f"symmetric about {center}\t{s.is_symmetric(center)}")


def _cmd_spectrum(args) -> int:
    if args.which == "germ":
        g = catalog.parse_germ(args.cls, args.vars)
        _print_spectrum(
            catalog.germ_spectrum(g), args.json, Fraction(args.vars - 2, 2)
        )
    elif args.which == "fermat":
        _print_spectrum(
            catalog.fermat_spectrum(args.n, args.d), args.json,
            Fraction(args.n - 2, 2),
        )
    else:
        joined = spectrum.join(_load_spectrum(args.left), _load_spectrum(args.right))
        _print_spectrum(joined, args.json)
    return 0


def _cmd_deg(args) -> int:
    s = _load_spectrum(args.source)
    value = spectrum.deg_window(
        s,
        _parse_bound(getattr(args, "from")),
        _parse_bound(args.to),
        args.left == "open",
        args.right == "open",
    )
    if args.json:
        _emit_json({"degree": value})
    else:
        print(value)
    return 0


def _cmd_pol(args) -> int:
    config = _load_configuration(args.config)
    value = polar.polar_degree(config)
    if args.json:
        _emit_json(
            {
                "polar_degree": value,
                "total_milnor": config.total_milnor,
                "smooth_milnor": config.smooth_milnor,
            }
        )
    else:
        print(value)
    return 0


def _cmd_check(args) -> int:
    config = _load_configuration(args.config)
    report = semicontinuity.check_configuration(config, not args.no_open_variant)
    if args.json:
        _emit_json(report.to_json_obj())
        return 0
    print(f"configuration {config}")
    print(f"holds: {report.holds}  (windows tested: {report.breakpoints_checked})")
    for v in report.violations:
        shape = "[" if v.kind.value == "open" else "]"
        print(f"  violated ]{v.a}, {v.a + 1}{shape}: candidate {v.lhs} > target {v.rhs}")
    return 0


def _make_filters(disabled: list[str]) -> SearchFilters:
    known = {"alpha1", "corank", "huh", "semicontinuity", "open-variant"}
    unknown = set(disabled) - known
    if unknown:
        raise ValueError(f"unknown filter name(s) {sorted(unknown)}; choose from {sorted(known)}")
    return SearchFilters(
        alpha1="alpha1" not in disabled,
        corank="corank" not in disabled,
        huh="huh" not in disabled,
        semicontinuity="semicontinuity" not in disabled,
        open_variant="open-variant" not in disabled,
    )


def _cmd_search(args) -> int:
    whitelist = tuple(f.strip() for f in args.whitelist.split(",") if f.strip())
    report = search.enumerate_configurations(
        args.n,
        args.d,
        args.k,
        whitelist=whitelist,
        filters=_make_filters(args.no_filter),
        workers=args.workers,
    )
    if args.json:
        _emit_json(report.to_json_obj())
        return 0
    print(f"search n={report.n} d={report.d} k={report.k}  target mu = {report.target_mu}")
    print(f"filters: {', '.join(report.filters_applied) or 'none'}")
    print(f"examined {report.examined} complete configurations; pruned: "
          + ", ".join(f"{name}={count}" for name, count in report.pruned_by))
    for label, deg in report.diagnostic_windows:
        print(f"target degree over {label}: {deg}")
    print(f"survivors ({len(report.survivors)} candidates):")
    for config in report.survivors:
        print(f"  {config}")
    return 0


def _cmd_region(args) -> int:
    region = bounds.candidate_region(args.k)
    if args.json:
        _emit_json(region.to_json_obj())
        return 0
    print(f"candidate (n, d) region for polar degree {region.k}:")
    for n, d in sorted(region.pairs):
        print(f"  ({n}, {d})")
    print(f"excluded pairs in scanned rectangle: {len(region.exclusion_log)}")
    for note in region.notes:
        print(f"note: {note}")
    return 0


def _cmd_verify_huh(args) -> int:
    verification = search.verify_huh_lists(workers=args.workers)
    if args.json:
        _emit_json(verification.to_json_obj())
        return 0
    ok = sum(1 for e in verification.entries if e.ok)
    for e in verification.entries:
        status = "pass" if e.ok else f"FAIL ({e.diagnosis()})"
        print(f"{e.key:<10} {e.configuration}  pol={e.expected_pol}  {status}")
    print(f"{ok}/{len(verification.entries)} entries pass")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specpol",
        description="Exact singularity spectra, polar degrees and semicontinuity searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="print a germ or diagonal-germ spectrum")
    spec_sub = p_spec.add_subparsers(dest="which", required=True)
    p_germ = spec_sub.add_parser("germ", help="catalog germ spectrum")
    p_germ.add_argument("cls", help="class string, e.g. A2, D5, E7, J2_4")
    p_germ.add_argument("--vars", type=int, default=2, help="ambient variable count")
    p_germ.add_argument("--json", action="store_true")
    p_germ.set_defaults(func=_cmd_spectrum)
    p_fermat = spec_sub.add_parser("fermat", help="diagonal germ x_1^d + ... + x_n^d")
    p_fermat.add_argument("n", type=int)
    p_fermat.add_argument("d", type=int)
    p_fermat.add_argument("--json", action="store_true")
    p_fermat.set_defaults(func=_cmd_spectrum)
    p_join = spec_sub.add_parser("join", help="join of two spectra (totals multiply)")
    p_join.add_argument("left", help="spectrum source (germ:..., fermat:..., file, -)")
    p_join.add_argument("right", help="spectrum source")
    p_join.add_argument("--json", action="store_true")
    p_join.set_defaults(func=_cmd_spectrum)

    p_deg = sub.add_parser("deg", help="interval degree of a spectrum")
    p_deg.add_argument("source", help="germ:<class>[:<vars>], fermat:<n>:<d>, file, or -")
    p_deg.add_argument("--from", required=True,
                       help="left endpoint: p/q or -inf (write --from=-1/3 for negatives)")
    p_deg.add_argument("--to", required=True,
                       help="right endpoint: p/q or +inf (write --to=-1/2 for negatives)")
    p_deg.add_argument("--left", choices=("open", "closed"), default="open")
    p_deg.add_argument("--right", choices=("open", "closed"), default="open")
    p_deg.add_argument("--json", action="store_true")
    p_deg.set_defaults(func=_cmd_deg)

    p_pol = sub.add_parser("pol", help="polar degree of a configuration")
    p_pol.add_argument("--config", required=True, help="configuration JSON (inline or file)")
    p_pol.add_argument("--json", action="store_true")
    p_pol.set_defaults(func=_cmd_pol)

    p_check = sub.add_parser("check", help="semicontinuity check of a configuration")
    p_check.add_argument("--config", required=True, help="configuration JSON (inline or file)")
    p_check.add_argument("--no-open-variant", action="store_true",
                         help="test half-open windows only")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=_cmd_check)

    p_search = sub.add_parser("search", help="enumerate candidate configurations")
    p_search.add_argument("n", type=int)
    p_search.add_argument("d", type=int)
    p_search.add_argument("k", type=int)
    p_search.add_argument("--whitelist", default="A,D,E,J",
                          help="comma-separated germ families (default all)")
    p_search.add_argument("--no-filter", action="append", default=[],
                          metavar="NAME", help="disable a filter (repeatable)")
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--json", action="store_true")
    p_search.set_defaults(func=_cmd_search)

    p_region = sub.add_parser("region", help="finite candidate (n, d) region for one k")
    p_region.add_argument("k", type=int)
    p_region.add_argument("--json", action="store_true")
    p_region.set_defaults(func=_cmd_region)

    p_verify = sub.add_parser("verify-huh", help="verify the bundled reference lists")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify_huh)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

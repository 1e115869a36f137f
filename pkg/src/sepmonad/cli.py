"""Command line front end for the verification suite."""

import argparse
import json
import sys

from .presets import preset_names
from .suite import (
    CHECK_IDS,
    CORRUPTIONS,
    ConfigError,
    InternalError,
    SuiteConfig,
    mutation_smoke,
    run_suite,
)


def _parse_subgroup(text):
    if text is None:
        return None
    s = text.strip()
    if not s:
        return ()
    try:
        return tuple(int(t) for t in s.split(","))
    except ValueError:
        raise ConfigError(f"--subgroup expects comma-separated element indices, got {text!r}")


def _parse_checks(text):
    if text is None or text.strip() == "all":
        return ()
    return tuple(t.strip() for t in text.split(",") if t.strip())


def build_parser():
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Exact verification of the coinduction adjunction, the coset "
        "function ring, and the module-category equivalence for a finite group pair.",
    )
    parser.add_argument(
        "--group",
        default="s3",
        help=f"preset name ({', '.join(preset_names())}) or path to a JSON group file",
    )
    parser.add_argument(
        "--subgroup",
        default=None,
        help="comma-separated generator element indices; default is the preset's "
        "documented subgroup, or the whole group for a file",
    )
    parser.add_argument("--field", default="q", help="q for the rationals, fp:P for a prime field")
    parser.add_argument("--seed", type=int, default=0, help="seed for every generated family")
    parser.add_argument("--family-size", type=int, default=10, help="objects per generated family")
    parser.add_argument(
        "--checks",
        default="all",
        help=f"'all' or a comma-separated subset of: {', '.join(CHECK_IDS)}",
    )
    parser.add_argument("--report", choices=("text", "json"), default="text")
    parser.add_argument(
        "--mutation-smoke",
        action="store_true",
        help="corrupt the data three ways and require the suite to notice each one",
    )
    return parser


def _run_mutation(cfg, fmt):
    rows = []
    for corruption in CORRUPTIONS:
        report = mutation_smoke(cfg, corruption)
        failed = [c for c in report.checks if c.status != "pass"]
        rows.append(
            {
                "corruption": corruption,
                "detected": bool(failed),
                "failed_checks": [c.id for c in failed],
                "witness": failed[0].witness if failed else None,
            }
        )
    ok = all(r["detected"] for r in rows)
    if fmt == "json":
        print(json.dumps({"version": 1, "mutation_smoke": rows}, indent=2))
    else:
        for r in rows:
            mark = "detected" if r["detected"] else "MISSED"
            names = ", ".join(r["failed_checks"]) or "-"
            print(f"  corruption {r['corruption']:<12} {mark}: failing checks: {names}")
        print(f"mutation smoke: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = SuiteConfig(
            group=args.group,
            subgroup=_parse_subgroup(args.subgroup),
            field=args.field,
            seed=args.seed,
            family_size=args.family_size,
            checks=_parse_checks(args.checks),
        )
        if args.mutation_smoke:
            return _run_mutation(cfg, args.report)
        report = run_suite(cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    print(report.to_json() if args.report == "json" else report.to_text())
    return 0 if report.passed else 1

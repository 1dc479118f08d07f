"""Scenario runner.

Subcommands:

    verify         run the full invariant suite, write report files
    scan           emit a plot-ready table (field-profile, asymptotic-convergence,
                   subsidiary-vs-sigma, charge-class)
    chi-identity   focused run of the characteristic-function identity
    charged-state  focused run of the charged-state suites plus a one-point table

Flags: --config PATH, --out DIR, --seed N, --tolerance-scale X, --jobs N.
GBLAB_CONFIG names a default configuration file.  Exit codes: 0 pass,
1 check failures, 2 configuration or usage error, 3 internal numeric failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from pathlib import Path

from .config import ConfigError, ScenarioConfig, load_config
from .fields import NumericFailure
from .reports import Report, write_table
from .verify import SCANS, SUITES, run_verify

EXIT_PASS = 0
EXIT_CHECK_FAILURES = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_FAILURE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gblab", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (("verify", "run the full verification suite"),
                           ("scan", "emit a tabular scan"),
                           ("chi-identity", "characteristic-function identity only"),
                           ("charged-state", "charged-state construction suites")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", default=os.environ.get("GBLAB_CONFIG"),
                       help="scenario configuration file (INI); defaults to GBLAB_CONFIG "
                            "or built-in defaults")
        p.add_argument("--out", default=None, help="output directory")
        p.add_argument("--seed", type=int, default=None, help="override the random seed")
        p.add_argument("--tolerance-scale", type=float, default=None,
                       help="multiply every tolerance by this factor")
        p.add_argument("--jobs", type=int, default=None, help="parallel suite workers")
        if name == "scan":
            p.add_argument("--kind", default=None, choices=sorted(SCANS),
                           help="scan kind (defaults to the configured one)")
    return parser


def _apply_overrides(cfg: ScenarioConfig, args) -> ScenarioConfig:
    run = cfg.run
    if args.seed is not None:
        run = dataclasses.replace(run, seed=args.seed)
    if args.tolerance_scale is not None:
        if args.tolerance_scale <= 0.0:
            raise ConfigError("--tolerance-scale must be positive")
        run = dataclasses.replace(run, tolerance_scale=args.tolerance_scale)
    if args.jobs is not None:
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        run = dataclasses.replace(run, jobs=args.jobs)
    if args.out is not None:
        run = dataclasses.replace(run, out_dir=args.out)
    return dataclasses.replace(cfg, run=run)


def _finish(report: Report, out_dir: Path, stem: str) -> int:
    json_path = report.write_json(out_dir / f"{stem}.json")
    csv_path = report.write_csv(out_dir / f"{stem}.csv")
    counts = report.counts()
    for r in report.records:
        print(f"[{r.status}] {r.check_id}: {r.description}")
    print(f"{report.suite}: {counts['PASS']} pass, {counts['FAIL']} fail, "
          f"{counts['SKIP']} skip -> {report.overall_status}")
    print(f"wrote {json_path} and {csv_path}")
    return EXIT_PASS if report.overall_status == "PASS" else EXIT_CHECK_FAILURES


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        cfg = _apply_overrides(cfg, args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except OSError as exc:
        print(f"cannot read configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    out_dir = Path(cfg.run.out_dir)
    try:
        if args.command == "verify":
            report = run_verify(cfg)
            return _finish(report, out_dir, "verify-report")
        if args.command == "chi-identity":
            report = run_verify(cfg, suites=("chi",))
            return _finish(report, out_dir, "chi-identity-report")
        if args.command == "charged-state":
            report = run_verify(cfg, suites=("states", "dirac", "charge-class"))
            header, rows = SCANS["charge-class"](cfg)
            table = write_table(out_dir / "charged-state-one-points.csv", "charge-class",
                                header, rows)
            print(f"wrote {table}")
            return _finish(report, out_dir, "charged-state-report")
        if args.command == "scan":
            kind = args.kind or cfg.scan.kind
            if kind not in SCANS:
                print(f"unknown scan kind {kind!r}", file=sys.stderr)
                return EXIT_CONFIG_ERROR
            header, rows = SCANS[kind](cfg)
            path = write_table(out_dir / f"scan-{kind}.csv", kind, header, rows)
            print(f"wrote {path} ({len(rows)} rows)")
            return EXIT_PASS
    except NumericFailure as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC_FAILURE
    return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())

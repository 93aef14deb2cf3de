"""Command line entry point: ``tyv roots`` and ``tyv check``."""

from __future__ import annotations

import argparse
import logging
import sys

from . import __version__
from .harness import SUITES, ConfigError, SuiteConfig, parse_mutation, run_roots, run_suite, write_report
from .report import CheckReport


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tyv", description="Exact verification of twisted Yangian identities.")
    p.add_argument("--version", action="version", version=f"tyv {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("roots", help="build and check root data and structure constants")
    r.add_argument("--type", required=True, dest="lie_type", help="Lie type such as A2, C3, G2")
    r.add_argument("--json", dest="json_path", help="write the JSON report here ('-' for stdout)")

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("suite", choices=SUITES)
    c.add_argument("--type", dest="lie_type", help="Lie type for classical, embedding and casimir suites")
    c.add_argument("--zdeg", type=int, help="z-degree budget of the current algebra (default 6)")
    c.add_argument("--order", type=int, help="series order (rank1 default 8, rtt default 6)")
    c.add_argument("--maxidx", type=int, help="index budget of the Drinfeld engine (default 10)")
    c.add_argument("--json", dest="json_path", help="write the JSON report here ('-' for stdout)")
    c.add_argument("--mutate", action="append", default=[], metavar="ID:VALUE",
                   help="replace a relation coefficient (negative control)")
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    return p


def _print(report: CheckReport, quiet: bool) -> None:
    if quiet:
        return
    for it in report.items:
        line = f"{it.status.upper():5} {it.id:<32} [{it.anchor}] {it.millis:.0f} ms"
        print(line)
        if not it.passed:
            print(f"      {it.detail}")
    n = len(report.items)
    bad = len(report.failures())
    print(f"{report.suite} {report.lie_type}: {n - bad}/{n} passed")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    quiet = args.json_path == "-"
    try:
        if args.command == "roots":
            report = run_roots(args.lie_type)
        else:
            mutate = dict(parse_mutation(m) for m in args.mutate)
            cfg = SuiteConfig(args.suite, args.lie_type, args.zdeg, args.order, args.maxidx, mutate, args.jobs)
            report = run_suite(cfg)
        _print(report, quiet)
        if args.json_path:
            write_report(report, args.json_path)
    except ConfigError as exc:
        print(f"tyv: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tyv: cannot write report: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal error, not a verification verdict
        print(f"tyv: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())

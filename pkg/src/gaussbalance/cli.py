"""Command-line client for the verification suites.

The CLI is a thin layer over the same execution path the HTTP service uses:
it builds a SuiteRequest, runs it in-process (or POSTs it to a running
server with --server), prints one pass/fail line per check, and writes the
machine-readable report. Exit status is 0 iff every hard check passed;
soft checks (unproven comparisons) only produce warnings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GaussBalanceError
from .report import write_report
from .service.app import options_from_request
from .service.schemas import SuiteRequest
from .suites import COMMANDS, run_command

EXIT_OK = 0
EXIT_HARD_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussbalance",
        description="Run verification suites for Gaussian cone measures, "
                    "vector balancing and lattice covering radii.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, help=f"run the {name} suite")
        sp.add_argument("--p", action="append", type=float, dest="p_list",
                        metavar="P", help="measure level; repeatable")
        sp.add_argument("--grid", type=int, default=None, help="sweep resolution")
        sp.add_argument("--samples", type=int, default=None,
                        help="randomized suite size")
        sp.add_argument("--seed", type=int, default=None, help="RNG seed")
        sp.add_argument("--tol", action="append", default=[], metavar="KEY=VALUE",
                        help="tolerance override; repeatable")
        sp.add_argument("--out", type=Path, default=None, help="report output path")
        sp.add_argument("--format", choices=("csv", "json"), default="json",
                        dest="fmt", help="report format")
        sp.add_argument("--config", type=Path, default=None,
                        help="JSON config file replacing the flags")
        sp.add_argument("--server", default=None, metavar="URL",
                        help="POST the request to a running service instead "
                             "of executing in-process")
    return parser


def _parse_tolerances(pairs: list[str]) -> dict[str, float]:
    tolerances = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"--tol expects KEY=VALUE, got {pair!r}")
        tolerances[key.strip()] = float(value)
    return tolerances


def _request_from_args(args: argparse.Namespace) -> tuple[str, SuiteRequest, Path | None, str]:
    command = args.command
    out = args.out
    fmt = args.fmt
    payload: dict = {}
    if args.config is not None:
        cfg = json.loads(Path(args.config).read_text())
        command = cfg.get("command", command)
        out = Path(cfg["out"]) if "out" in cfg else out
        fmt = cfg.get("format", fmt)
        payload = {k: cfg[k] for k in ("p_list", "grid", "samples", "seed", "tolerances")
                   if k in cfg}
    else:
        if args.p_list:
            payload["p_list"] = args.p_list
        if args.grid is not None:
            payload["grid"] = args.grid
        if args.samples is not None:
            payload["samples"] = args.samples
        if args.seed is not None:
            payload["seed"] = args.seed
        if args.tol:
            payload["tolerances"] = _parse_tolerances(args.tol)
    return command, SuiteRequest(**payload), out, fmt


def _run_remote(server: str, command: str, request: SuiteRequest) -> dict:
    import httpx

    url = server.rstrip("/") + f"/suites/{command}"
    response = httpx.post(url, json=request.model_dump(), timeout=600.0)
    response.raise_for_status()
    return response.json()


def _print_summary(report: dict) -> None:
    for check in report["checks"]:
        if check["passed"]:
            status = "PASS"
        elif check["kind"] == "hard":
            status = "FAIL"
        else:
            status = "WARN"
        print(f"[{status}] ({check['kind']}) {check['name']}")
    print(
        f"{report['command']}: {'passed' if report['passed'] else 'FAILED'} "
        f"(hard failures: {report['hard_failures']}, "
        f"soft failures: {report['soft_failures']})"
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        command, request, out, fmt = _request_from_args(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.server:
            report = _run_remote(args.server, command, request)
        else:
            report = run_command(command, options_from_request(request))
    except GaussBalanceError as exc:
        print(f"suite error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _print_summary(report)
    for path in write_report(report, out, fmt):
        print(f"wrote {path}")
    return EXIT_OK if report["passed"] else EXIT_HARD_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())

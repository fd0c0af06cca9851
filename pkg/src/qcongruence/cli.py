"""Command-line front end: ``verify``, ``show`` and ``selftest``.

Exit status: 0 when nothing failed, 1 when any case failed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from . import numtheory, qobjects, quotients
from .verifier import CLAIMS, FAIL, PASS, SKIPPED, CaseReport, default_jobs, run_suite, summarize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ACCEPTANCE_PRIMES = (5, 7, 11, 13)
ACCEPTANCE_M = range(2, 25)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    p_min: int
    p_max: int
    m_min: int
    m_max: int
    claims: tuple[str, ...]
    output_format: str = "human"
    output_path: Optional[str] = None
    parallelism: int = 1
    witness_dir: Optional[str] = None

    def __post_init__(self):
        if self.p_min > self.p_max:
            raise UsageError(f"empty p range {self.p_min}..{self.p_max}")
        if self.m_min > self.m_max:
            raise UsageError(f"empty m range {self.m_min}..{self.m_max}")
        if not self.claims:
            raise UsageError("no claims selected")
        unknown = [c for c in self.claims if c not in CLAIMS]
        if unknown:
            raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
        if self.output_format not in ("human", "records"):
            raise UsageError(f"unknown format {self.output_format!r}")
        if self.parallelism < 1:
            raise UsageError("--jobs must be positive")

    def grid(self) -> list[tuple[int, int]]:
        # composite p and p < 5 are dropped silently; so are m divisible by p
        primes = [p for p in numtheory.primes_in_range(self.p_min, self.p_max) if p >= 5]
        return [(p, m) for p in primes for m in range(self.m_min, self.m_max + 1) if m % p]


def parse_range(text: str) -> tuple[int, int]:
    """``"5..13"`` -> (5, 13); a single integer means a one-point range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None


def parse_claims(text: str) -> tuple[str, ...]:
    if text.strip() == "all":
        return tuple(CLAIMS)
    return tuple(c.strip() for c in text.split(",") if c.strip())


def format_human(report: CaseReport) -> str:
    m = "-" if report.m is None else str(report.m)
    status = report.status if report.status != SKIPPED else f"SKIPPED({report.reason})"
    line = (f"{report.claim_id:<24} p={report.p:<4} m={m:<4} {status:<8} "
            f"terms={report.remainder_nonzero_terms} deg={report.max_degree_seen} "
            f"{report.elapsed * 1000:.1f}ms")
    if report.failed_checks:
        line += "  [" + "; ".join(report.failed_checks) + "]"
    return line


def format_record(report: CaseReport) -> str:
    return json.dumps(report.record(), ensure_ascii=False)


def summary_lines(reports: Sequence[CaseReport]) -> list[str]:
    lines = []
    for claim_id, counts in summarize(reports).items():
        lines.append(f"{claim_id}: {counts[PASS]} passed, {counts[FAIL]} failed, "
                     f"{counts[SKIPPED]} skipped")
    return lines


def write_reports(reports: Sequence[CaseReport], fmt: str, out: TextIO) -> None:
    if fmt == "records":
        for r in reports:
            out.write(format_record(r) + "\n")
        return
    for r in reports:
        out.write(format_human(r) + "\n")
    for line in summary_lines(reports):
        out.write(line + "\n")
    n_fail = sum(r.status == FAIL for r in reports)
    out.write(f"total: {len(reports)} cases, {n_fail} failed\n")


def cmd_verify(config: RunConfig, stdout: TextIO = sys.stdout) -> int:
    reports = run_suite(config.grid(), config.claims, jobs=config.parallelism,
                        witness_dir=config.witness_dir)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
            write_reports(reports, config.output_format, fh)
    else:
        write_reports(reports, config.output_format, stdout)
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.object} needs " + ", ".join("--" + n for n in missing))


def cmd_show(args, stdout: TextIO = sys.stdout) -> int:
    obj = args.object
    if obj == "qbinomial":
        _require(args, "n", "k")
        value = qobjects.q_binomial(args.n, args.k, args.t)
    else:
        _require(args, "p", "m")
        if not numtheory.is_prime(args.p) or args.p == 2:
            raise UsageError(f"--p must be an odd prime, got {args.p}")
        if obj == "rset":
            value = numtheory.residue_set(args.p, args.m)
        elif obj == "qfermat":
            value = quotients.q_fermat_quotient(args.p, args.m, args.base)
        elif obj == "qeuler":
            value = quotients.q_euler_quotient(args.p, args.m, args.base)
        else:
            value = quotients.eq_star(args.p, args.m)
    stdout.write(f"{value}\n")
    return EXIT_OK


def _oracle_qbinomial() -> tuple[int, int]:
    passed = failed = 0
    for t in (1, 2, 3):
        for n in range(31):
            for k in range(n + 1):
                if qobjects.q_binomial(n, k, t) == qobjects.q_binomial_recurrence(n, k, t):
                    passed += 1
                else:
                    failed += 1
    return passed, failed


def _oracle_legendre() -> tuple[int, int]:
    passed = failed = 0
    for p in numtheory.primes_in_range(3, 97):
        for m in range(1, p):
            if numtheory.legendre_gauss(p, m) == numtheory.legendre_euler(p, m):
                passed += 1
            else:
                failed += 1
    return passed, failed


def cmd_selftest(claims: Optional[Sequence[str]] = None, jobs: int = 1,
                 stdout: TextIO = sys.stdout) -> int:
    """Acceptance grid for every claim plus the oracle pairs; one line per family."""
    claims = tuple(CLAIMS) if claims is None else tuple(claims)
    grid = [(p, m) for p in ACCEPTANCE_PRIMES for m in ACCEPTANCE_M if m % p]
    start = time.perf_counter()
    reports = run_suite(grid, claims, jobs=jobs)
    any_fail = any(r.status == FAIL for r in reports)
    for line in summary_lines(reports):
        stdout.write(line + "\n")
    for name, oracle in (("oracle q_binomial", _oracle_qbinomial),
                         ("oracle legendre p<=97", _oracle_legendre)):
        passed, failed = oracle()
        any_fail = any_fail or bool(failed)
        stdout.write(f"{name}: {passed} passed, {failed} failed\n")
    verdict = "FAIL" if any_fail else "OK"
    stdout.write(f"selftest {verdict} in {time.perf_counter() - start:.1f}s\n")
    return EXIT_FAIL if any_fail else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcongruence", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify claims over a (p, m) grid")
    v.add_argument("--claims", default="theorem_1_1",
                   help="comma-separated claim ids, or 'all' (default: theorem_1_1)")
    v.add_argument("--p", default="5..13", help="prime range A..B; composites are skipped")
    v.add_argument("--m", default="2..24", help="m range A..B")
    v.add_argument("--format", choices=("human", "records"), default="human")
    v.add_argument("--out", help="write reports to this file instead of stdout")
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
    v.add_argument("--witness-dir", help="directory for remainder witnesses of failed cases")

    s = sub.add_parser("show", help="print one object")
    s.add_argument("object", choices=("qbinomial", "qfermat", "qeuler", "eqstar", "rset"))
    s.add_argument("--p", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--t", type=int, default=1)
    s.add_argument("--base", type=int, default=1)

    t = sub.add_parser("selftest", help="run the acceptance grid and oracle checks")
    t.add_argument("--claims", default="all")
    t.add_argument("--jobs", type=int, default=None)

    sub.add_parser("claims", help="list claim ids")
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout: TextIO = sys.stdout,
         stderr: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        jobs = getattr(args, "jobs", None)
        jobs = default_jobs() if jobs is None else jobs
        if args.command == "verify":
            p_min, p_max = parse_range(args.p)
            m_min, m_max = parse_range(args.m)
            config = RunConfig(p_min, p_max, m_min, m_max, parse_claims(args.claims),
                               args.format, args.out, jobs, args.witness_dir)
            return cmd_verify(config, stdout)
        if args.command == "show":
            return cmd_show(args, stdout)
        if args.command == "selftest":
            claims = parse_claims(args.claims)
            unknown = [c for c in claims if c not in CLAIMS]
            if unknown or not claims:
                raise UsageError(f"unknown claim id(s): {', '.join(unknown) or '(none)'}")
            if jobs < 1:
                raise UsageError("--jobs must be positive")
            return cmd_selftest(claims, jobs, stdout)
        for cid, claim in CLAIMS.items():
            stdout.write(f"{cid:<24} {claim.description}\n")
        return EXIT_OK
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (numtheory.DividesError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    adjmat adj FILE [--mode par|seq] [--seed N] [--retries N] [--stats] [--trace] [--verify]
    adjmat det FILE [--oracle] ...
    adjmat selftest [--cases N] [--seed N] [--domain int|poly|both]
    adjmat bench [--sizes 4,8,16] [--repeats N] [--seed N]

Matrix files::

    adjmat v1 <int|poly> <n>
    <n lines of n whitespace-separated elements>

Exit codes: 0 ok, 1 selftest failure, 2 parse error, 3 retries exhausted,
4 verification failure.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from .domain import Domain, DomainError, format_element, parse_element
from .matrix import Matrix, MatrixError, is_scalar_multiple_of_identity
from .oracle import MAX_COFACTOR_ADJ_ORDER, adj_cofactor, det_bareiss
from .paradj import (
    TraceNode,
    predicted_critical_path,
    predicted_matmul_count,
)
from .precondition import RetriesExhausted, adj_any

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_PARSE = 2
EXIT_RETRIES = 3
EXIT_VERIFY = 4

MAGIC = "adjmat"
VERSION = "v1"


class MatrixFileError(ValueError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def parse_matrix_file(text: str) -> Matrix:
    lines = [(k + 1, ln.strip()) for k, ln in enumerate(text.splitlines())]
    lines = [(k, ln) for k, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFileError("empty file")
    k0, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != MAGIC or parts[1] != VERSION:
        raise MatrixFileError(f"bad header {header!r}, expected 'adjmat v1 <domain> <n>'", k0)
    if parts[2] not in ("int", "poly"):
        raise MatrixFileError(f"unknown domain {parts[2]!r}", k0)
    try:
        n = int(parts[3])
    except ValueError:
        raise MatrixFileError(f"bad order {parts[3]!r}", k0) from None
    if n < 1:
        raise MatrixFileError("order must be >= 1", k0)
    body = lines[1:]
    if len(body) != n:
        raise MatrixFileError(f"expected {n} matrix rows, found {len(body)}")
    domain = Domain(parts[2])
    rows = []
    for k, ln in body:
        toks = ln.split()
        if len(toks) != n:
            raise MatrixFileError(f"expected {n} entries, found {len(toks)}", k)
        try:
            rows.append([parse_element(t, domain) for t in toks])
        except DomainError as exc:
            raise MatrixFileError(str(exc), k) from None
    return Matrix(rows, domain)


def read_matrix_file(path: str) -> Matrix:
    if path == "-":
        return parse_matrix_file(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_file(fh.read())


def format_rows(M: Matrix) -> str:
    return "\n".join(" ".join(format_element(e) for e in r) for r in M.rows)


def format_matrix_file(M: Matrix) -> str:
    return f"{MAGIC} {VERSION} {M.domain.kind} {M.order}\n{format_rows(M)}\n"


@dataclass
class ResultReport:
    determinant: Any
    adjugate: Matrix | None
    stats: dict = field(default_factory=dict)

    def to_text(self, with_stats: bool = False) -> str:
        out = [f"determinant {format_element(self.determinant)}"]
        if self.adjugate is not None:
            out.append("adjugate")
            out.append(format_rows(self.adjugate))
        if with_stats:
            out.extend(f"{k} {v}" for k, v in self.stats.items())
        return "\n".join(out) + "\n"

    @classmethod
    def parse(cls, text: str, domain: Domain) -> "ResultReport":
        lines = text.splitlines()
        det = parse_element(lines[0].split(None, 1)[1], domain)
        adj = None
        rest = lines[1:]
        if rest and rest[0] == "adjugate":
            # square: the first row's width gives the row count
            n = len(rest[1].split())
            adj = Matrix([[parse_element(t, domain) for t in ln.split()] for ln in rest[1:1 + n]], domain)
            rest = rest[1 + n:]
        stats = dict(ln.split(None, 1) for ln in rest if ln.strip())
        return cls(det, adj, stats)


def _format_trace(node: TraceNode) -> str:
    out = []
    for t in node.walk():
        tag = t.path or "<root>"
        out.append(f"# node {tag} level={t.level} order={t.order} gamma={format_element(t.gamma)}")
        if t.order == 2:
            out.append(f"phi {format_element(t.phi)}")
            out.append("adj " + " ; ".join(" ".join(map(format_element, r)) for r in t.adj.rows))
            continue
        for name in ("alpha", "beta", "F_phi", "phi"):
            out.append(f"{name} {format_element(getattr(t, name))}")
        for name in ("A_adj", "B_adj", "N", "M", "F", "F_adj", "H", "L", "H_prime", "L_prime"):
            X = getattr(t, name)
            out.append(f"{name} " + " ; ".join(" ".join(map(format_element, r)) for r in X.rows))
    return "\n".join(out) + "\n"


def _verify(A: Matrix, det, adj: Matrix) -> bool:
    return is_scalar_multiple_of_identity(A @ adj, det) and is_scalar_multiple_of_identity(adj @ A, det)


def _compute(A: Matrix, args, want_adj: bool):
    """Returns (report, trace, exit_code)."""
    mode = args.mode
    t0 = time.perf_counter()
    trace = None
    if getattr(args, "oracle", False):
        det = det_bareiss(A)
        adj = None
        stats = {"mode": "oracle"}
    else:
        try:
            res = adj_any(A, max_retries=args.retries, seed=args.seed, mode=mode,
                          trace=args.trace, backend=args.backend)
            det, adj = res.det, res.adj
            trace = res.trace
            stats = dict(res.stats.as_dict())
            stats.update(mode=mode, seed=args.seed, attempts=res.record.attempts)
        except RetriesExhausted as exc:
            if A.order > MAX_COFACTOR_ADJ_ORDER:
                print(f"error: {exc}", file=sys.stderr)
                return None, None, EXIT_RETRIES
            print(f"warning: {exc}; falling back to cofactor expansion", file=sys.stderr)
            det, adj = det_bareiss(A), adj_cofactor(A)
            stats = {"mode": "oracle-fallback", "seed": args.seed, "attempts": exc.attempts}
    stats["wall_time_ms"] = f"{(time.perf_counter() - t0) * 1000:.3f}"
    return ResultReport(det, adj if want_adj else None, stats), trace, EXIT_OK


def _load(path):
    try:
        return read_matrix_file(path)
    except (OSError, MatrixFileError, MatrixError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def cmd_adj(args) -> int:
    A = _load(args.input)
    if A is None:
        return EXIT_PARSE
    report, trace, code = _compute(A, args, want_adj=True)
    if code:
        return code
    if args.trace and trace is not None:
        sys.stdout.write(_format_trace(trace))
    sys.stdout.write(report.to_text(with_stats=args.stats))
    if args.verify:
        ok = _verify(A, report.determinant, report.adjugate)
        print(f"verify {'ok' if ok else 'FAILED'}")
        if not ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_det(args) -> int:
    A = _load(args.input)
    if A is None:
        return EXIT_PARSE
    report, trace, code = _compute(A, args, want_adj=args.verify)
    if code:
        return code
    if args.trace and trace is not None:
        sys.stdout.write(_format_trace(trace))
    print(f"determinant {format_element(report.determinant)}")
    if args.stats:
        for k, v in report.stats.items():
            print(f"{k} {v}")
    if args.verify:
        ok = report.determinant == det_bareiss(A)
        if report.adjugate is not None:
            ok = ok and _verify(A, report.determinant, report.adjugate)
        print(f"verify {'ok' if ok else 'FAILED'}")
        if not ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .identities import run_suites

    domains = ["int", "poly"] if args.domain == "both" else [args.domain]
    failed = False
    for d in domains:
        for r in run_suites(cases=args.cases, seed=args.seed, domain=d):
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {d} {r.name} cases={r.cases} failures={r.failures} skipped={r.skipped}")
            failed |= not r.passed
    return EXIT_SELFTEST if failed else EXIT_OK


def cmd_bench(args) -> int:
    from .identities import random_matrix

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)
    print(f"{'n':>4} {'seq_ms':>10} {'par_ms':>10} {'seq/par':>8} {'matmuls':>8} {'pred':>6} "
          f"{'stages':>7} {'pred':>6} {'identical':>9}")
    for n in sizes:
        A = random_matrix(rng, n)
        times = {}
        results = {}
        for mode in ("seq", "par"):
            best = None
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                res = adj_any(A, seed=args.seed, mode=mode, backend=args.backend)
                dt = (time.perf_counter() - t0) * 1000
                best = dt if best is None else min(best, dt)
            times[mode] = best
            results[mode] = res
        s, p = results["seq"], results["par"]
        same = s.det == p.det and s.adj == p.adj and s.stats == p.stats
        order = s.record.padded_order
        print(f"{n:>4} {times['seq']:>10.1f} {times['par']:>10.1f} {times['seq'] / times['par']:>8.2f} "
              f"{s.stats.matmul_count:>8} {predicted_matmul_count(order):>6} "
              f"{s.stats.critical_path_stages:>7} {predicted_critical_path(order):>6} {str(same):>9}")
    return EXIT_OK


def _add_compute_flags(p):
    p.add_argument("input", help="matrix file, or - for stdin")
    p.add_argument("--mode", choices=("par", "seq"), default="par")
    p.add_argument("--backend", choices=("thread", "process"), default="thread")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=8)
    p.add_argument("--stats", action="store_true", help="append 'key value' statistics")
    p.add_argument("--trace", action="store_true", help="dump named intermediates of every recursive call")
    p.add_argument("--verify", action="store_true", help="check A adj = adj A = det I")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adjmat", description="Exact adjugate and determinant.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("adj", help="determinant and adjugate")
    _add_compute_flags(p)
    p.set_defaults(func=cmd_adj)

    p = sub.add_parser("det", help="determinant only")
    _add_compute_flags(p)
    p.add_argument("--oracle", action="store_true", help="use Bareiss elimination instead")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("selftest", help="randomized identity suites")
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--domain", choices=("int", "poly", "both"), default="int")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="sequential vs parallel timings")
    p.add_argument("--sizes", default="4,8,16,32,64")
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=("thread", "process"), default="thread")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

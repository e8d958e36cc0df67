"""Recursive fraction-free block algorithm for the determinant and adjugate.

For a matrix ``M = [[A, C], [B, D]]`` of order ``2n = 2**N`` and a nonzero
scale ``gamma`` such that every order-k minor of ``M`` is divisible by
``gamma**(k-1)``, :func:`par_adj` returns

    phi = gamma**(1-2n) * det(M)        adj = gamma**(2-2n) * adj(M)

Each recursive step runs five dependent stages::

    1. alpha, A* = rec(A, gamma)   ||   beta, B* = rec(B, gamma)
    2. N = B* D / gamma            ||   M_ = A* C / gamma      ; F = alpha N - beta M_
    3. phi, F* = rec(F, alpha beta)
    4. phi' = phi / gamma  ||  H = F* A* / (alpha gamma)  ||  L = F* B* / (beta gamma)
    5. H' = (phi' A* + M_ H) / alpha   ||   L' = -M_ L / alpha

and returns ``phi'`` with ``[[H', L'], [-H, L]]``. Every division is exact;
a nonzero remainder raises :class:`~adjmat.domain.NotDivisible`.
"""
from __future__ import annotations

import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Optional

from .domain import exact_div
from .matrix import (
    Matrix,
    MatrixError,
    classical_matmul,
    join_blocks,
    mat_add,
    mat_sub,
    scalar_exact_div,
    scalar_mul,
    split_blocks,
)

__all__ = [
    "DegenerateMinor",
    "RunStats",
    "TraceNode",
    "AdjResult",
    "STAGE_DAG",
    "par_adj",
    "par_adj_with_mode",
    "predicted_matmul_count",
    "predicted_critical_path",
    "predicted_recursion_calls",
    "is_power_of_two",
]

# Items inside one stage are independent; stages are barriers.
STAGE_DAG = (
    ("rec(A)", "rec(B)"),
    ("N", "M"),
    ("rec(F)",),
    ("phi'", "H", "L"),
    ("H'", "L'"),
)


class DegenerateMinor(ArithmeticError):
    """A block used as a divisor has zero determinant."""

    def __init__(self, level: int, block: str):
        self.level = level
        self.block = block
        super().__init__(f"zero determinant of block {block!r} at recursion level {level}")


@dataclass(frozen=True)
class RunStats:
    matmul_count: int = 0
    exact_div_count: int = 0
    recursion_calls: int = 0
    critical_path_stages: int = 0

    def __add__(self, other: "RunStats") -> "RunStats":
        """Sequential composition: counts and stage lengths add."""
        return RunStats(
            self.matmul_count + other.matmul_count,
            self.exact_div_count + other.exact_div_count,
            self.recursion_calls + other.recursion_calls,
            self.critical_path_stages + other.critical_path_stages,
        )

    def __or__(self, other: "RunStats") -> "RunStats":
        """Parallel composition: counts add, the critical path is the longer branch."""
        return RunStats(
            self.matmul_count + other.matmul_count,
            self.exact_div_count + other.exact_div_count,
            self.recursion_calls + other.recursion_calls,
            max(self.critical_path_stages, other.critical_path_stages),
        )

    def as_dict(self):
        return {
            "matmul_count": self.matmul_count,
            "exact_div_count": self.exact_div_count,
            "recursion_calls": self.recursion_calls,
            "critical_path_stages": self.critical_path_stages,
        }


@dataclass
class TraceNode:
    """Named intermediates of one recursive call (filled only in trace mode)."""

    path: str
    level: int
    order: int
    gamma: Any
    phi: Any = None
    adj: Optional[Matrix] = None
    alpha: Any = None
    beta: Any = None
    A_adj: Optional[Matrix] = None
    B_adj: Optional[Matrix] = None
    N: Optional[Matrix] = None
    M: Optional[Matrix] = None
    F: Optional[Matrix] = None
    F_phi: Any = None
    F_adj: Optional[Matrix] = None
    H: Optional[Matrix] = None
    L: Optional[Matrix] = None
    H_prime: Optional[Matrix] = None
    L_prime: Optional[Matrix] = None
    input: Optional[Matrix] = None
    children: dict = field(default_factory=dict)

    def walk(self):
        yield self
        for key in ("A", "B", "F"):
            if key in self.children:
                yield from self.children[key].walk()


@dataclass(frozen=True)
class AdjResult:
    phi: Any
    adj: Matrix
    stats: RunStats
    trace: Optional[TraceNode] = None


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def predicted_matmul_count(order: int) -> int:
    return 0 if order <= 2 else 3 * predicted_matmul_count(order // 2) + 6


def predicted_critical_path(order: int) -> int:
    return 1 if order <= 2 else 2 * predicted_critical_path(order // 2) + 3


def predicted_recursion_calls(order: int) -> int:
    return 1 if order <= 2 else 1 + 3 * predicted_recursion_calls(order // 2)


@dataclass(frozen=True)
class _Ctx:
    matmul: Callable = classical_matmul
    trace: bool = False
    parallel: bool = False
    backend: str = "thread"
    parallel_depth: int = 3
    executor: Any = field(default=None, compare=False)

    def worker_ctx(self):
        return replace(self, parallel=False, executor=None)


def _run_thread(fn, args, slot, errors, idx):
    try:
        slot[idx] = fn(*args)
    except BaseException as exc:  # re-raised in the joining thread
        errors[idx] = exc


def _fork(ctx: _Ctx, level: int, tasks):
    """Run ``tasks`` (a list of ``(fn, args)``) and return results in order.

    Whatever the schedule, the first failing task (in list order) wins, so
    errors are schedule independent too.
    """
    if not ctx.parallel or level >= ctx.parallel_depth or len(tasks) < 2:
        return [fn(*args) for fn, args in tasks]

    if ctx.backend == "process" and ctx.executor is not None:
        wctx = ctx.worker_ctx()
        futs = [ctx.executor.submit(fn, *_swap_ctx(args, wctx)) for fn, args in tasks]
        results, first_err = [], None
        for f in futs:
            try:
                results.append(f.result())
            except BaseException as exc:
                results.append(None)
                first_err = first_err or exc
        if first_err is not None:
            raise first_err
        return results

    n = len(tasks)
    slot = [None] * n
    errors = [None] * n
    threads = []
    for i, (fn, args) in enumerate(tasks[1:], start=1):
        t = threading.Thread(target=_run_thread, args=(fn, args, slot, errors, i))
        t.start()
        threads.append(t)
    _run_thread(tasks[0][0], tasks[0][1], slot, errors, 0)
    for t in threads:
        t.join()
    for e in errors:
        if e is not None:
            raise e
    return slot


def _swap_ctx(args, wctx):
    return tuple(wctx if isinstance(a, _Ctx) else a for a in args)


def _mul_div(X, Y, divisor, ctx):
    return scalar_exact_div(ctx.matmul(X, Y), divisor)


def _top_left(phi_p, A_adj, M, H, alpha, ctx):
    return scalar_exact_div(mat_add(scalar_mul(phi_p, A_adj), ctx.matmul(M, H)), alpha)


def _div_scalar(phi, gamma):
    return exact_div(phi, gamma)


def _recurse(S: Matrix, gamma, ctx: _Ctx, level: int, path: str):
    n2 = S.nrows
    dom = S.domain
    node = TraceNode(path=path, level=level, order=n2, gamma=gamma, input=S) if ctx.trace else None

    if n2 == 2:
        (a, c), (b, d) = S.rows
        phi = exact_div(a * d - b * c, gamma)
        adj = Matrix._trusted(((d, -c), (-b, a)), dom)
        stats = RunStats(matmul_count=0, exact_div_count=1, recursion_calls=1, critical_path_stages=1)
        if node is not None:
            node.phi, node.adj = phi, adj
        return phi, adj, stats, node

    n = n2 // 2
    sq = n * n
    A, C, B, D = split_blocks(S)

    # stage 1
    (alpha, A_adj, sA, tA), (beta, B_adj, sB, tB) = _fork(
        ctx, level,
        [(_recurse, (A, gamma, ctx, level + 1, path + "A")),
         (_recurse, (B, gamma, ctx, level + 1, path + "B"))],
    )
    if not alpha:
        raise DegenerateMinor(level, path + "A")
    if not beta:
        raise DegenerateMinor(level, path + "B")

    # stage 2
    N, M = _fork(ctx, level, [(_mul_div, (B_adj, D, gamma, ctx)), (_mul_div, (A_adj, C, gamma, ctx))])
    F = mat_sub(scalar_mul(alpha, N), scalar_mul(beta, M))
    s2 = RunStats(matmul_count=2, exact_div_count=2 * sq, critical_path_stages=1)

    # stage 3
    phi, F_adj, sF, tF = _recurse(F, alpha * beta, ctx, level + 1, path + "F")

    # stage 4
    phi_p, H, L = _fork(
        ctx, level,
        [(_div_scalar, (phi, gamma)),
         (_mul_div, (F_adj, A_adj, alpha * gamma, ctx)),
         (_mul_div, (F_adj, B_adj, beta * gamma, ctx))],
    )
    s4 = RunStats(matmul_count=2, exact_div_count=1 + 2 * sq, critical_path_stages=1)

    # stage 5
    H_p, L_p = _fork(
        ctx, level,
        [(_top_left, (phi_p, A_adj, M, H, alpha, ctx)),
         (_mul_div, (M, L, -alpha, ctx))],
    )
    s5 = RunStats(matmul_count=2, exact_div_count=2 * sq, critical_path_stages=1)

    adj = join_blocks(H_p, L_p, -H, L)
    stats = RunStats(recursion_calls=1) + (sA | sB) + s2 + sF + s4 + s5

    if node is not None:
        node.phi, node.adj = phi_p, adj
        node.alpha, node.beta = alpha, beta
        node.A_adj, node.B_adj = A_adj, B_adj
        node.N, node.M, node.F = N, M, F
        node.F_phi, node.F_adj = phi, F_adj
        node.H, node.L, node.H_prime, node.L_prime = H, L, H_p, L_p
        node.children = {"A": tA, "B": tB, "F": tF}
    return phi_p, adj, stats, node


def par_adj(
    M: Matrix,
    gamma=1,
    *,
    mode: str = "seq",
    trace: bool = False,
    matmul: Callable[[Matrix, Matrix], Matrix] | None = None,
    backend: str = "thread",
    parallel_depth: int = 3,
    workers: int | None = None,
) -> AdjResult:
    """Scaled determinant and adjugate of ``M`` (order ``2**N >= 2``).

    ``mode`` is ``"seq"`` or ``"par"``. In parallel mode the items of each
    stage run concurrently down to ``parallel_depth`` recursion levels,
    on threads or (``backend="process"``) on a process pool. Results and
    statistics do not depend on the mode.

    Raises :class:`DegenerateMinor` when a block determinant used as a
    divisor vanishes.
    """
    if not M.is_square():
        raise MatrixError(f"par_adj needs a square matrix, got {M.shape}")
    if M.nrows < 2 or not is_power_of_two(M.nrows):
        raise MatrixError(f"par_adj needs order 2**N >= 2, got {M.nrows}")
    mode = {"sequential": "seq", "parallel": "par"}.get(mode, mode)
    if mode not in ("seq", "par"):
        raise ValueError(f"unknown mode {mode!r}")
    if backend not in ("thread", "process"):
        raise ValueError(f"unknown backend {backend!r}")
    gamma = M.domain.coerce(gamma)
    if not gamma:
        raise ZeroDivisionError("gamma must be nonzero")

    ctx = _Ctx(
        matmul=matmul or classical_matmul,
        trace=trace,
        parallel=mode == "par",
        backend=backend,
        parallel_depth=parallel_depth,
    )
    if ctx.parallel and backend == "process":
        with ProcessPoolExecutor(max_workers=workers) as ex:
            phi, adj, stats, node = _recurse(M, gamma, replace(ctx, executor=ex, parallel_depth=1), 0, "")
    else:
        phi, adj, stats, node = _recurse(M, gamma, ctx, 0, "")
    return AdjResult(phi=phi, adj=adj, stats=stats, trace=node)


def par_adj_with_mode(M: Matrix, gamma=1, mode: str = "par", **kwargs) -> AdjResult:
    return par_adj(M, gamma, mode=mode, **kwargs)

"""Bring an arbitrary square matrix into a form the recursion accepts.

The input is embedded as ``P = diag(A, I)`` of power-of-two order and,
if the plain attempt hits a zero block determinant, left-multiplied by
a random unimodular ``U`` (det 1). Since ``det U = 1``::

    det(U P) = det(P)        adj(P) = adj(U P) @ U

and the top-left block of ``adj(P)`` is ``adj(A)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from .domain import INTEGERS, Domain
from .matrix import Matrix, MatrixError, block_diag, identity
from .paradj import DegenerateMinor, RunStats, par_adj

__all__ = [
    "RetriesExhausted",
    "PreconditionRecord",
    "AdjAnyResult",
    "padded_order",
    "pad",
    "random_unimodular",
    "adj_any",
]


class RetriesExhausted(RuntimeError):
    def __init__(self, attempts: int, last: DegenerateMinor | None):
        self.attempts = attempts
        self.last = last
        super().__init__(f"every one of {attempts} attempts hit a zero block determinant ({last})")


@dataclass(frozen=True)
class PreconditionRecord:
    original_order: int
    padded_order: int
    U: Matrix
    seed: int
    attempts: int


@dataclass(frozen=True)
class AdjAnyResult:
    det: Any
    adj: Matrix
    record: PreconditionRecord
    stats: RunStats
    trace: Any = None

    def __iter__(self):
        # unpacks as (det, adj, record)
        return iter((self.det, self.adj, self.record))


def padded_order(n: int) -> int:
    """Least power of two >= max(n, 2)."""
    p = 2
    while p < n:
        p *= 2
    return p


def pad(A: Matrix) -> Matrix:
    n = A.order
    p = padded_order(n)
    if p == n:
        return A
    return block_diag(A, identity(p - n, A.domain))


def random_unimodular(order: int, seed: int = 0, entry_bound: int = 2, n_ops: int | None = None,
                      domain: Domain = INTEGERS) -> Matrix:
    """Product of ``n_ops`` random row additions ``I + c E_ij`` (``i != j``,
    ``1 <= |c| <= entry_bound``); defaults to ``6 * order`` operations."""
    if order < 1:
        raise MatrixError("order must be >= 1")
    rng = random.Random(seed)
    if n_ops is None:
        # 3 * order leaves ~40% of order-5 paddings degenerate
        n_ops = 6 * order
    U = [[int(i == j) for j in range(order)] for i in range(order)]
    if order > 1:
        for _ in range(n_ops):
            i, j = rng.sample(range(order), 2)
            c = rng.randint(1, entry_bound) * rng.choice((-1, 1))
            # row_i += c * row_j
            ri, rj = U[i], U[j]
            for k in range(order):
                ri[k] += c * rj[k]
    return Matrix(U, domain)


def _attempt_seed(seed: int, attempt: int) -> int:
    return seed * 1_000_003 + attempt


def adj_any(A: Matrix, max_retries: int = 8, seed: int = 0, *, entry_bound: int = 2,
            **par_kwargs) -> AdjAnyResult:
    """Determinant and adjugate of any square ``A`` through the recursion.

    Attempt 0 uses ``U = I``; each further attempt (up to ``max_retries``)
    draws a fresh unimodular ``U`` from ``(seed, attempt)``. Extra keyword
    arguments go to :func:`~adjmat.paradj.par_adj`.
    """
    n0 = A.order
    P = pad(A)
    p = P.nrows
    dom = A.domain
    last = None
    for attempt in range(max_retries + 1):
        if attempt == 0:
            U = identity(p, dom)
            UP = P
        else:
            U = random_unimodular(p, _attempt_seed(seed, attempt), entry_bound, domain=dom)
            UP = U @ P
        try:
            res = par_adj(UP, 1, **par_kwargs)
        except DegenerateMinor as exc:
            last = exc
            continue
        adj_P = res.adj if attempt == 0 else res.adj @ U
        adj_A = adj_P.submatrix(range(n0), range(n0))
        record = PreconditionRecord(n0, p, U, seed, attempt + 1)
        return AdjAnyResult(res.phi, adj_A, record, res.stats, res.trace)
    raise RetriesExhausted(max_retries + 1, last)

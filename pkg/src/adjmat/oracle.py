"""Slow reference computations: Laplace expansion, cofactor adjugate, Bareiss.

These never call into the recursive algorithm and are used to check it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .domain import exact_div
from .matrix import Matrix, MatrixError

__all__ = [
    "OracleError",
    "MinorSpec",
    "det_cofactor",
    "adj_cofactor",
    "det_bareiss",
    "minor",
    "MAX_COFACTOR_DET_ORDER",
    "MAX_COFACTOR_ADJ_ORDER",
]

MAX_COFACTOR_DET_ORDER = 10
MAX_COFACTOR_ADJ_ORDER = 8


class OracleError(MatrixError):
    pass


@dataclass(frozen=True)
class MinorSpec:
    """Row and column index sets (0-based, strictly increasing) of a minor."""

    rows: tuple
    cols: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if len(self.rows) != len(self.cols):
            raise OracleError("minor needs as many rows as columns")
        if not self.rows:
            raise OracleError("minor of order 0")
        for idx in (self.rows, self.cols):
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise OracleError(f"indices must be strictly increasing: {idx}")
            if idx[0] < 0:
                raise OracleError(f"negative index in {idx}")

    @property
    def order(self) -> int:
        return len(self.rows)


def _square(M: Matrix, limit: int | None, what: str) -> int:
    if not M.is_square():
        raise OracleError(f"{what} needs a square matrix, got {M.shape}")
    n = M.nrows
    if limit is not None and n > limit:
        raise OracleError(f"{what} is limited to order {limit}, got {n}")
    return n


def _laplace(rows: Sequence[Sequence], zero):
    # first-row expansion; minors on the same column subset are shared
    n = len(rows)
    memo = {}

    def det(r, cols):
        if r == n:
            return zero + 1
        key = cols
        if key in memo:
            return memo[key]
        acc = zero
        row = rows[r]
        for k, j in enumerate(cols):
            a = row[j]
            if not a:
                continue
            sub = det(r + 1, cols[:k] + cols[k + 1:])
            acc = acc - a * sub if k & 1 else acc + a * sub
        memo[key] = acc
        return acc

    return det(0, tuple(range(n)))


def det_cofactor(M: Matrix):
    """Determinant by recursive first-row Laplace expansion (order <= 10)."""
    _square(M, MAX_COFACTOR_DET_ORDER, "det_cofactor")
    return _laplace(M.rows, M.domain.zero)


def adj_cofactor(M: Matrix) -> Matrix:
    """Transposed matrix of signed cofactors (order <= 8)."""
    n = _square(M, MAX_COFACTOR_ADJ_ORDER, "adj_cofactor")
    dom = M.domain
    if n == 1:
        return Matrix._trusted(((dom.one,),), dom)
    rows = M.rows
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            # cofactor of entry (j, i)
            sub = [tuple(r[c] for c in range(n) if c != i) for k, r in enumerate(rows) if k != j]
            d = _laplace(sub, dom.zero)
            line.append(-d if (i + j) & 1 else d)
        out.append(tuple(line))
    return Matrix._trusted(tuple(out), dom)


def det_bareiss(M: Matrix):
    """Fraction-free Gaussian elimination with row swaps on zero pivots."""
    n = _square(M, None, "det_bareiss")
    a = [list(r) for r in M.rows]
    dom = M.domain
    sign = 1
    prev = dom.one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return dom.zero
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = exact_div(akk * ri[j] - aik * rk[j], prev)
            ri[k] = dom.zero
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def minor(M: Matrix, spec: MinorSpec):
    if spec.rows[-1] >= M.nrows or spec.cols[-1] >= M.ncols:
        raise OracleError(f"minor indices {spec} out of range for shape {M.shape}")
    return det_bareiss(M.submatrix(spec.rows, spec.cols))

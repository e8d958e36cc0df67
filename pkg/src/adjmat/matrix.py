"""Immutable dense matrices over an exact domain.

Block layout follows the convention used throughout the package::

    [[A, C],
     [B, D]]

so ``split_blocks`` returns ``(A, C, B, D)`` with ``B`` the bottom-left
block.
"""
from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .domain import (
    INTEGERS,
    Domain,
    DomainMismatch,
    NotDivisible,
    domain_of,
    exact_div,
)

__all__ = [
    "MatrixError",
    "Matrix",
    "from_rows",
    "identity",
    "zeros",
    "split_blocks",
    "join_blocks",
    "block_diag",
    "classical_matmul",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "scalar_mul",
    "scalar_exact_div",
    "transpose",
    "is_scalar_multiple_of_identity",
]


class MatrixError(ValueError):
    pass


class Matrix:
    """Dense row-major matrix. Entries are never mutated after construction."""

    __slots__ = ("_rows", "nrows", "ncols", "domain")

    def __init__(self, rows: Sequence[Sequence], domain: Domain | None = None):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise MatrixError("matrix must have at least one row and one column")
        ncols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise MatrixError(f"ragged rows: row 0 has {ncols} entries, row {i} has {len(r)}")
        if domain is None:
            domain = _infer_domain(rows)
        rows = tuple(tuple(domain.coerce(e) for e in r) for r in rows)
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.domain = domain

    @classmethod
    def _trusted(cls, rows, domain):
        # internal fast path: rows already tuples of correctly-typed entries
        m = object.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0])
        m.domain = domain
        return m

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def order(self) -> int:
        if self.nrows != self.ncols:
            raise MatrixError(f"matrix is not square: {self.nrows}x{self.ncols}")
        return self.nrows

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def rows(self):
        return self._rows

    def row(self, i):
        return self._rows[i]

    def col(self, j):
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def tolist(self):
        return [list(r) for r in self._rows]

    def entries(self):
        for r in self._rows:
            yield from r

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        cols = list(cols)
        return Matrix._trusted(
            tuple(tuple(self._rows[i][j] for j in cols) for i in rows), self.domain
        )

    def map(self, f: Callable) -> "Matrix":
        return Matrix._trusted(tuple(tuple(f(e) for e in r) for r in self._rows), self.domain)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"Matrix({self.tolist()!r})"

    def __str__(self):
        from .domain import format_element

        cells = [[format_element(e) for e in r] for r in self._rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return self.map(lambda e: -e)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, s):
        return scalar_mul(s, self)

    __rmul__ = __mul__

    @property
    def T(self):
        return transpose(self)


def _infer_domain(rows) -> Domain:
    dom = None
    for r in rows:
        for e in r:
            d = domain_of(e)
            if d.kind == "poly":
                if dom is not None and dom.kind == "poly" and dom != d:
                    raise DomainMismatch(f"mixed polynomial variables: {dom} and {d}")
                dom = d
    return dom if dom is not None else INTEGERS


def from_rows(rows, domain: Domain | str | None = None) -> Matrix:
    """Build a matrix from a list of rows; ints are promoted in polynomial domains."""
    if isinstance(domain, str):
        domain = Domain(domain)
    rows = list(rows)
    if not rows:
        raise MatrixError("empty input")
    return Matrix(rows, domain)


def identity(n: int, domain: Domain = INTEGERS) -> Matrix:
    if n < 1:
        raise MatrixError("identity order must be >= 1")
    z, o = domain.zero, domain.one
    return Matrix._trusted(
        tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), domain
    )


def zeros(m: int, n: int | None = None, domain: Domain = INTEGERS) -> Matrix:
    n = m if n is None else n
    z = domain.zero
    return Matrix._trusted(tuple((z,) * n for _ in range(m)), domain)


def split_blocks(M: Matrix):
    """Return ``(A, C, B, D)``: top-left, top-right, bottom-left, bottom-right."""
    n2 = M.order
    if n2 % 2:
        raise MatrixError(f"cannot split a matrix of odd order {n2}")
    n = n2 // 2
    r = M.rows
    d = M.domain
    top, bot = r[:n], r[n:]
    A = Matrix._trusted(tuple(row[:n] for row in top), d)
    C = Matrix._trusted(tuple(row[n:] for row in top), d)
    B = Matrix._trusted(tuple(row[:n] for row in bot), d)
    D = Matrix._trusted(tuple(row[n:] for row in bot), d)
    return A, C, B, D


def join_blocks(A: Matrix, C: Matrix, B: Matrix, D: Matrix) -> Matrix:
    """Inverse of :func:`split_blocks`."""
    n = A.order
    for name, X in (("C", C), ("B", B), ("D", D)):
        if X.shape != (n, n):
            raise MatrixError(f"block {name} has shape {X.shape}, expected {(n, n)}")
        if X.domain != A.domain:
            raise DomainMismatch(f"block {name} is over {X.domain}, expected {A.domain}")
    rows = tuple(a + c for a, c in zip(A.rows, C.rows)) + tuple(
        b + d for b, d in zip(B.rows, D.rows)
    )
    return Matrix._trusted(rows, A.domain)


def block_diag(X: Matrix, Y: Matrix) -> Matrix:
    if X.domain != Y.domain:
        raise DomainMismatch("block_diag operands are over different domains")
    z = X.domain.zero
    p, q = X.ncols, Y.ncols
    rows = tuple(r + (z,) * q for r in X.rows) + tuple((z,) * p + r for r in Y.rows)
    return Matrix._trusted(rows, X.domain)


def _check_same(X: Matrix, Y: Matrix, op: str):
    if X.shape != Y.shape:
        raise MatrixError(f"{op}: shape mismatch {X.shape} vs {Y.shape}")
    if X.domain != Y.domain:
        raise DomainMismatch(f"{op}: {X.domain} vs {Y.domain}")


def classical_matmul(X: Matrix, Y: Matrix) -> Matrix:
    """Schoolbook O(n^3) product."""
    if X.ncols != Y.nrows:
        raise MatrixError(f"inner dimensions differ: {X.shape} @ {Y.shape}")
    if X.domain != Y.domain:
        raise DomainMismatch(f"matmul: {X.domain} vs {Y.domain}")
    cols = tuple(zip(*Y.rows))
    zero = X.domain.zero
    rows = tuple(
        tuple(sum((a * b for a, b in zip(r, c)), zero) for c in cols) for r in X.rows
    )
    return Matrix._trusted(rows, X.domain)


def mat_mul(X: Matrix, Y: Matrix, strategy: Callable[[Matrix, Matrix], Matrix] | None = None) -> Matrix:
    return (strategy or classical_matmul)(X, Y)


def mat_add(X: Matrix, Y: Matrix) -> Matrix:
    _check_same(X, Y, "add")
    return Matrix._trusted(
        tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(X.rows, Y.rows)), X.domain
    )


def mat_sub(X: Matrix, Y: Matrix) -> Matrix:
    _check_same(X, Y, "sub")
    return Matrix._trusted(
        tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(X.rows, Y.rows)), X.domain
    )


def scalar_mul(s, X: Matrix) -> Matrix:
    s = X.domain.coerce(s)
    return X.map(lambda e: s * e)


def scalar_exact_div(X: Matrix, s) -> Matrix:
    """Entrywise exact quotient ``X / s``.

    Raises :class:`NotDivisible` naming the first offending entry.
    """
    s = X.domain.coerce(s)
    if not s:
        raise ZeroDivisionError("scalar_exact_div by zero")
    if s == 1:
        return X
    rows = []
    for i, r in enumerate(X.rows):
        out = []
        for j, e in enumerate(r):
            try:
                out.append(exact_div(e, s))
            except NotDivisible as exc:
                raise NotDivisible(e, s, where=(i, j)) from exc
        rows.append(tuple(out))
    return Matrix._trusted(tuple(rows), X.domain)


def transpose(X: Matrix) -> Matrix:
    return Matrix._trusted(tuple(zip(*X.rows)), X.domain)


def is_scalar_multiple_of_identity(X: Matrix, s) -> bool:
    if not X.is_square():
        return False
    s = X.domain.coerce(s)
    z = X.domain.zero
    return all(
        e == (s if i == j else z) for i, r in enumerate(X.rows) for j, e in enumerate(r)
    )

"""Determinant identities behind the recursion, as executable checkers.

* column replacement: for ``B`` with two fixed columns ``i, j`` and
  ``B{x,y}`` denoting ``B`` with those columns replaced by ``x`` and ``y``::

      det B{a,b} det B{c,d} = det B{a,d} det B{c,b} - det B{d,b} det B{a,c}

* minor divisibility: with ``alpha = det A``, ``beta = det B`` and
  ``F = alpha adj(B) D - beta adj(A) C``, every order-k minor of ``F`` is
  divisible by ``(alpha beta)**(k-1)`` and
  ``det F = (alpha beta)**(n-1) det M``
* Sylvester's identity for the corner element.

Column positions are 0-based.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .domain import INTEGERS, Domain, NotDivisible, Polynomial, exact_div
from .matrix import Matrix, MatrixError, mat_sub, scalar_mul, split_blocks
from .oracle import adj_cofactor, det_bareiss, det_cofactor
from .paradj import DegenerateMinor

__all__ = [
    "ColumnReplacement",
    "replace_columns",
    "check_column_replacement",
    "f_matrix",
    "check_f_minor_divisibility",
    "check_det_f_identity",
    "check_f_adjugate_divisibility",
    "sylvester_g",
    "check_sylvester",
    "random_element",
    "random_matrix",
    "random_column",
    "SuiteResult",
    "SUITES",
    "run_suites",
]


@dataclass(frozen=True)
class ColumnReplacement:
    base: Matrix
    i: int
    j: int

    def __post_init__(self):
        n = self.base.order
        if not (0 <= self.i < self.j < n):
            raise MatrixError(f"need 0 <= i < j < {n}, got i={self.i}, j={self.j}")


def replace_columns(ctx: ColumnReplacement, x: Sequence, y: Sequence) -> Matrix:
    """``B`` with column ``i`` set to ``x`` and column ``j`` set to ``y``."""
    B = ctx.base
    n = B.nrows
    if len(x) != n or len(y) != n:
        raise MatrixError(f"replacement columns must have length {n}")
    rows = []
    for r, row in enumerate(B.rows):
        row = list(row)
        row[ctx.i] = x[r]
        row[ctx.j] = y[r]
        rows.append(row)
    return Matrix(rows, B.domain)


def check_column_replacement(ctx: ColumnReplacement, a, b, c, d, det: Callable = det_bareiss) -> bool:
    def D(x, y):
        return det(replace_columns(ctx, x, y))

    return D(a, b) * D(c, d) == D(a, d) * D(c, b) - D(d, b) * D(a, c)


def f_matrix(M: Matrix):
    """``(alpha, beta, F)`` with ``F = alpha adj(B) D - beta adj(A) C`` from oracles."""
    A, C, B, D = split_blocks(M)
    alpha = det_bareiss(A)
    beta = det_bareiss(B)
    if not alpha:
        raise DegenerateMinor(0, "A")
    if not beta:
        raise DegenerateMinor(0, "B")
    F = mat_sub(scalar_mul(alpha, adj_cofactor(B) @ D), scalar_mul(beta, adj_cofactor(A) @ C))
    return alpha, beta, F


def _divides(a, b) -> bool:
    try:
        exact_div(a, b)
    except NotDivisible:
        return False
    return True


def check_f_minor_divisibility(M: Matrix, k: int) -> bool:
    """Every order-``k`` minor of ``F`` is divisible by ``(alpha beta)**(k-1)``."""
    alpha, beta, F = f_matrix(M)
    n = F.nrows
    if not 1 <= k <= n:
        raise MatrixError(f"k must be in 1..{n}")
    q = (alpha * beta) ** (k - 1)
    for rows in itertools.combinations(range(n), k):
        for cols in itertools.combinations(range(n), k):
            if not _divides(det_bareiss(F.submatrix(rows, cols)), q):
                return False
    return True


def check_det_f_identity(M: Matrix) -> bool:
    """``det F == (alpha beta)**(n-1) * det M``."""
    alpha, beta, F = f_matrix(M)
    n = F.nrows
    return det_bareiss(F) == (alpha * beta) ** (n - 1) * det_bareiss(M)


def check_f_adjugate_divisibility(M: Matrix) -> bool:
    """Entries of ``adj(F)`` are divisible by ``(alpha beta)**(n-2)`` (n >= 2)."""
    alpha, beta, F = f_matrix(M)
    n = F.nrows
    q = (alpha * beta) ** max(n - 2, 0)
    return all(_divides(e, q) for e in adj_cofactor(F).entries())


def sylvester_g(Fp: Matrix) -> Matrix:
    """Order-(k-1) matrix of the 2x2 minors of ``Fp`` that contain ``Fp[0, 0]``."""
    k = Fp.order
    f = Fp.rows
    f11 = f[0][0]
    return Matrix(
        [[f11 * f[p][q] - f[p][0] * f[0][q] for q in range(1, k)] for p in range(1, k)],
        Fp.domain,
    )


def check_sylvester(Fp: Matrix, det: Callable = det_cofactor) -> bool:
    """``det(Fp) * f11**(k-2) == det(G)``."""
    k = Fp.order
    if k < 3:
        raise MatrixError("Sylvester check needs order >= 3")
    f11 = Fp[0, 0]
    if not f11:
        raise ZeroDivisionError("corner entry is zero")
    return det(Fp) * f11 ** (k - 2) == det(sylvester_g(Fp))


# ---------------------------------------------------------------- generators

def random_element(rng: random.Random, domain: Domain = INTEGERS, bound: int = 9, degree: int = 1):
    if domain.kind == "int":
        return rng.randint(-bound, bound)
    return Polynomial([rng.randint(-bound, bound) for _ in range(degree + 1)], domain.var)


def random_column(rng, n, domain=INTEGERS, bound=9, degree=1):
    return [random_element(rng, domain, bound, degree) for _ in range(n)]


def random_matrix(rng: random.Random, n: int, domain: Domain = INTEGERS, bound: int = 9,
                  degree: int = 1, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return Matrix([random_column(rng, m, domain, bound, degree) for _ in range(n)], domain)


# ---------------------------------------------------------------- suites

@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: int
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0


def _suite_column_replacement(rng, domain, cases):
    fails = 0
    for _ in range(cases):
        n = rng.randint(2, 6)
        B = random_matrix(rng, n, domain, bound=5)
        i, j = sorted(rng.sample(range(n), 2))
        ctx = ColumnReplacement(B, i, j)
        cols = [random_column(rng, n, domain, bound=5) for _ in range(4)]
        fails += not check_column_replacement(ctx, *cols)
    return fails, 0


def _suite_sylvester(rng, domain, cases):
    fails = skipped = 0
    for _ in range(cases):
        k = rng.randint(3, 5)
        Fp = random_matrix(rng, k, domain)
        if not Fp[0, 0]:
            skipped += 1
            continue
        fails += not check_sylvester(Fp)
    return fails, skipped


def _suite_minor_divisibility(rng, domain, cases):
    fails = skipped = 0
    for t in range(cases):
        order = (4, 6, 8)[t % 3]
        M = random_matrix(rng, order, domain, bound=5)
        try:
            ok = all(check_f_minor_divisibility(M, k) for k in range(1, order // 2 + 1))
            ok = ok and check_det_f_identity(M)
        except DegenerateMinor:
            skipped += 1
            continue
        fails += not ok
    return fails, skipped


SUITES = {
    "column_replacement": _suite_column_replacement,
    "sylvester": _suite_sylvester,
    "minor_divisibility": _suite_minor_divisibility,
}


def run_suites(cases: int = 200, seed: int = 0, domain: Domain | str = INTEGERS,
               names: Sequence[str] | None = None) -> list[SuiteResult]:
    """Run the randomized identity suites; each suite gets its own RNG stream."""
    if isinstance(domain, str):
        domain = Domain(domain)
    out = []
    for name in names or SUITES:
        rng = random.Random(f"{seed}:{name}:{domain}")
        fails, skipped = SUITES[name](rng, domain, cases)
        out.append(SuiteResult(name, cases, fails, skipped))
    return out

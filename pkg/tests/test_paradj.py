import random

import pytest

from adjmat.domain import NotDivisible, exact_div
from adjmat.identities import random_matrix
from adjmat.matrix import Matrix, MatrixError, from_rows, identity, is_scalar_multiple_of_identity
from adjmat.oracle import adj_cofactor, det_bareiss, det_cofactor
from adjmat.paradj import (
    STAGE_DAG,
    DegenerateMinor,
    RunStats,
    par_adj,
    par_adj_with_mode,
    predicted_critical_path,
    predicted_matmul_count,
    predicted_recursion_calls,
)

from conftest import PAPER_ADJ, POLY


def admissible(rng, n, domain=None, bound=9):
    """Random matrix that the bare recursion accepts (gamma = 1)."""
    kw = {} if domain is None else {"domain": domain}
    while True:
        M = random_matrix(rng, n, bound=bound, **kw)
        try:
            par_adj(M)
        except DegenerateMinor:
            continue
        return M


def test_golden_output(paper_matrix):
    res = par_adj(paper_matrix, 1)
    assert res.phi == 6
    assert res.adj.tolist() == PAPER_ADJ


def test_golden_trace(paper_matrix):
    t = par_adj(paper_matrix, trace=True).trace
    assert t.alpha == -2 and t.beta == 9
    assert t.A_adj.tolist() == [[-3, -2], [-1, 0]]
    # printed as [[4,-2],[2,-2]] in the worked example; the cofactor oracle gives this
    assert t.B_adj.tolist() == [[3, 0], [1, 3]] == adj_cofactor(from_rows([[3, 0], [-1, 3]])).tolist()
    assert t.N.tolist() == [[-9, 0], [-6, 3]]
    # printed as [[-3,-2],[-1,0]]; A* C recomputed
    assert t.M.tolist() == [[4, -2], [2, -2]] == (t.A_adj @ from_rows([[-2, 2], [1, -2]])).tolist()
    assert t.F.tolist() == [[-18, 18], [-6, 12]]
    assert t.F_phi == 6
    assert t.F_adj.tolist() == [[12, -18], [6, -18]]
    assert t.children["F"].gamma == -18
    assert t.H.tolist() == [[9, 12], [0, 6]]
    assert t.L.tolist() == [[2, -6], [0, -6]]
    assert t.H_prime.tolist() == [[-9, -12], [-6, -6]]
    assert t.L_prime.tolist() == [[4, -6], [2, 0]]
    assert t.phi == 6


def test_inner_call_with_gamma():
    res = par_adj(from_rows([[-18, 18], [-6, 12]]), -18)
    assert res.phi == 6
    assert res.adj.tolist() == [[12, -18], [6, -18]]


def test_identity_two():
    res = par_adj(identity(2))
    assert res.phi == 1 and res.adj == identity(2)


def test_bad_inputs():
    with pytest.raises(MatrixError):
        par_adj(identity(3))
    with pytest.raises(MatrixError):
        par_adj(from_rows([[1]]))
    with pytest.raises(MatrixError):
        par_adj(from_rows([[1, 2]]))
    with pytest.raises(ZeroDivisionError):
        par_adj(identity(2), 0)
    with pytest.raises(ValueError):
        par_adj(identity(2), mode="fast")


def test_degenerate_minor_reported():
    with pytest.raises(DegenerateMinor) as info:
        par_adj(identity(4))  # bottom-left block is zero
    assert info.value.block == "B" and info.value.level == 0


def test_gamma_precondition_violation_raises():
    # minors of order 2 not divisible by gamma: the base case division fails
    with pytest.raises(NotDivisible):
        par_adj(from_rows([[1, 2], [3, 5]]), 7)


@pytest.mark.parametrize("n", [2, 4, 8])
@pytest.mark.parametrize("domain", [None, POLY], ids=["int", "poly"])
def test_oracle_equivalence(n, domain):
    rng = random.Random(n)
    for _ in range(8):
        M = admissible(rng, n, domain, bound=9 if domain is None else 4)
        res = par_adj(M)
        assert res.phi == det_bareiss(M) == det_cofactor(M)
        assert res.adj == adj_cofactor(M)


@pytest.mark.parametrize("n", [16, 32])
def test_defining_relation_large(n):
    rng = random.Random(n)
    for _ in range(3):
        M = admissible(rng, n)
        res = par_adj(M)
        assert is_scalar_multiple_of_identity(M @ res.adj, res.phi)
        assert is_scalar_multiple_of_identity(res.adj @ M, res.phi)
        assert res.phi == det_bareiss(M)


def test_general_gamma_relation():
    # scale an admissible matrix so every order-k minor picks up gamma**k
    rng = random.Random(9)
    for n in (4, 8):
        M = admissible(rng, n)
        for g in (2, -3):
            S = Matrix([[g * e for e in r] for r in M.rows])
            res = par_adj(S, g)
            d = det_bareiss(S)
            assert res.phi * g ** (n - 1) == d
            assert is_scalar_multiple_of_identity(res.adj @ S, g * res.phi)
            assert is_scalar_multiple_of_identity(S @ res.adj, g * res.phi)


@pytest.mark.parametrize("n", [4, 8])
def test_eq3_at_every_level(n):
    # det F * gamma**(2n-2) == (alpha beta)**(n-1) * det(input) at each node
    rng = random.Random(40 + n)
    for _ in range(5):
        M = admissible(rng, n)
        root = par_adj(M, trace=True).trace
        for t in root.walk():
            if t.order == 2:
                continue
            h = t.order // 2
            lhs = det_bareiss(t.F) * t.gamma ** (2 * h - 2)
            assert lhs == (t.alpha * t.beta) ** (h - 1) * det_bareiss(t.input)
            # scaled adjugate of F is integral: (alpha beta)**(h-2) adj(F)
            if h >= 2:
                q = (t.alpha * t.beta) ** (h - 2)
                assert t.F_adj == adj_cofactor(t.F).map(lambda e: exact_div(e, q))


def test_stats_small(paper_matrix):
    s2 = par_adj(from_rows([[1, 2], [3, 4]])).stats
    assert s2.matmul_count == 0 and s2.critical_path_stages == 1 and s2.recursion_calls == 1
    s4 = par_adj(paper_matrix).stats
    assert s4 == RunStats(matmul_count=6, exact_div_count=28, recursion_calls=4, critical_path_stages=5)


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
def test_stats_recurrences(n):
    rng = random.Random(n)
    s = par_adj(admissible(rng, n)).stats
    assert s.matmul_count == predicted_matmul_count(n)
    assert s.critical_path_stages == predicted_critical_path(n)
    assert s.recursion_calls == predicted_recursion_calls(n)


def test_predicted_values():
    assert [predicted_matmul_count(n) for n in (2, 4, 8, 16)] == [0, 6, 24, 78]
    assert [predicted_critical_path(n) for n in (2, 4, 8, 16)] == [1, 5, 13, 29]
    assert [predicted_recursion_calls(n) for n in (2, 4, 8)] == [1, 4, 13]
    assert len(STAGE_DAG) == 5


def test_stats_composition():
    a = RunStats(1, 2, 3, 4)
    b = RunStats(10, 20, 30, 5)
    assert a | b == b | a == RunStats(11, 22, 33, 5)
    assert a + b == RunStats(11, 22, 33, 9)


@pytest.mark.parametrize("backend", ["thread", "process"])
def test_schedule_independence(paper_matrix, backend):
    rng = random.Random(16)
    for M in (paper_matrix, admissible(rng, 16)):
        seq = par_adj_with_mode(M, 1, "seq", trace=True)
        par = par_adj_with_mode(M, 1, "par", trace=True, backend=backend)
        assert seq.phi == par.phi
        assert seq.adj == par.adj
        assert seq.stats == par.stats
        assert [t.path for t in seq.trace.walk()] == [t.path for t in par.trace.walk()]


def test_parallel_errors_are_deterministic():
    seq_err = par_err = None
    try:
        par_adj(identity(8), mode="seq")
    except DegenerateMinor as exc:
        seq_err = (exc.level, exc.block)
    try:
        par_adj(identity(8), mode="par")
    except DegenerateMinor as exc:
        par_err = (exc.level, exc.block)
    assert seq_err == par_err is not None


def test_custom_matmul_strategy(paper_matrix):
    from adjmat.matrix import classical_matmul

    calls = []

    def mm(X, Y):
        calls.append(X.nrows)
        return classical_matmul(X, Y)

    res = par_adj(paper_matrix, matmul=mm)
    assert res.adj.tolist() == PAPER_ADJ
    assert len(calls) == res.stats.matmul_count == 6

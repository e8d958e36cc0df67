import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adjmat.domain import DomainMismatch, NotDivisible, Polynomial
from adjmat.matrix import (
    Matrix,
    MatrixError,
    block_diag,
    from_rows,
    identity,
    is_scalar_multiple_of_identity,
    join_blocks,
    mat_mul,
    scalar_exact_div,
    scalar_mul,
    split_blocks,
    transpose,
)
from adjmat.oracle import adj_cofactor

from conftest import PAPER_A, PAPER_ADJ, POLY, int_matrices, poly_matrices


def test_from_rows(paper_matrix):
    assert paper_matrix.shape == (4, 4)
    assert paper_matrix.tolist() == PAPER_A
    assert from_rows([[5]]).shape == (1, 1)
    with pytest.raises(MatrixError):
        from_rows([[1, 2], [3]])
    with pytest.raises(MatrixError):
        from_rows([])


def test_mixed_domains_rejected():
    with pytest.raises(DomainMismatch):
        from_rows([[Polynomial([1], "x"), Polynomial([0, 1], "y")]])
    with pytest.raises(DomainMismatch):
        from_rows([[1.5]])


def test_ints_promoted_in_poly_domain():
    M = from_rows([[1, Polynomial([0, 1])]])
    assert M.domain == POLY
    assert all(isinstance(e, Polynomial) for e in M.entries())


def test_split_paper(paper_matrix):
    A, C, B, D = split_blocks(paper_matrix)
    assert A.tolist() == [[0, 2], [1, -3]]
    assert C.tolist() == [[-2, 2], [1, -2]]
    assert B.tolist() == [[3, 0], [-1, 3]]
    assert D.tolist() == [[-3, 0], [-1, 1]]


def test_split_small_and_odd():
    A, C, B, D = split_blocks(from_rows([[1, 2], [3, 4]]))
    assert (A[0, 0], C[0, 0], B[0, 0], D[0, 0]) == (1, 2, 3, 4)
    with pytest.raises(MatrixError):
        split_blocks(identity(3))


def test_join_paper_output():
    Hp = from_rows([[-9, -12], [-6, -6]])
    Lp = from_rows([[4, -6], [2, 0]])
    H = from_rows([[9, 12], [0, 6]])
    L = from_rows([[2, -6], [0, -6]])
    assert join_blocks(Hp, Lp, -H, L).tolist() == PAPER_ADJ
    with pytest.raises(MatrixError):
        join_blocks(Hp, Lp, -H, identity(3))


def test_mul_paper_values():
    B_adj = from_rows([[3, 0], [1, 3]])
    D = from_rows([[-3, 0], [-1, 1]])
    N = mat_mul(B_adj, D)
    assert N.tolist() == [[-9, 0], [-6, 3]]
    M = from_rows([[4, -2], [2, -2]])
    F = scalar_mul(-2, N) - scalar_mul(9, M)
    assert F.tolist() == [[-18, 18], [-6, 12]]
    assert identity(2) @ N == N
    with pytest.raises(MatrixError):
        identity(2) @ identity(3)


def test_scalar_exact_div():
    X = from_rows([[-18, -24], [0, -12]])
    assert scalar_exact_div(X, -2).tolist() == [[9, 12], [0, 6]]
    assert scalar_exact_div(X, 1) == X
    with pytest.raises(NotDivisible) as info:
        scalar_exact_div(from_rows([[4, 3]]), 2)
    assert info.value.where == (0, 1)
    with pytest.raises(ZeroDivisionError):
        scalar_exact_div(X, 0)


def test_identity_predicate(paper_matrix):
    assert identity(2).tolist() == [[1, 0], [0, 1]]
    adj = from_rows(PAPER_ADJ)
    assert is_scalar_multiple_of_identity(paper_matrix @ adj, 6)
    assert not is_scalar_multiple_of_identity(from_rows([[1, 1], [0, 1]]), 1)
    assert not is_scalar_multiple_of_identity(from_rows([[1, 0]]), 1)


def test_block_diag():
    P = block_diag(from_rows([[2]]), identity(2))
    assert P.tolist() == [[2, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_immutable_entries(paper_matrix):
    with pytest.raises(TypeError):
        paper_matrix.rows[0][0] = 1


def test_poly_matmul_matches_int_evaluation():
    x = Polynomial([0, 1])
    M = from_rows([[x, 1], [1, x]])
    sq = M @ M
    assert sq.tolist() == [[x * x + 1, 2 * x], [2 * x, x * x + 1]]


@settings(max_examples=40)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(int_matrices(n), int_matrices(n), int_matrices(n))))
def test_associativity(xyz):
    X, Y, Z = xyz
    assert (X @ Y) @ Z == X @ (Y @ Z)


@settings(max_examples=40)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(poly_matrices(n), poly_matrices(n))))
def test_transpose_of_product(xy):
    X, Y = xy
    assert transpose(X @ Y) == transpose(Y) @ transpose(X)


@settings(max_examples=40)
@given(st.sampled_from([2, 4, 6]).flatmap(int_matrices))
def test_split_join_round_trip(M):
    assert join_blocks(*split_blocks(M)) == M


def test_swappable_strategy():
    calls = []

    def counting(X, Y):
        calls.append(1)
        from adjmat.matrix import classical_matmul

        return classical_matmul(X, Y)

    assert mat_mul(identity(2), identity(2), counting) == identity(2)
    assert calls == [1]

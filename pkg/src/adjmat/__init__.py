"""Exact adjugate and determinant via a parallel fraction-free block recursion."""
from .domain import (
    INTEGERS,
    Domain,
    DomainMismatch,
    NotDivisible,
    Polynomial,
    exact_div,
    format_element,
    parse_element,
)
from .matrix import Matrix, from_rows, identity, join_blocks, split_blocks
from .oracle import adj_cofactor, det_bareiss, det_cofactor
from .paradj import AdjResult, DegenerateMinor, RunStats, par_adj, par_adj_with_mode
from .precondition import RetriesExhausted, adj_any, pad, random_unimodular

__version__ = "0.1.0"

# %% [markdown]
# # Determinant identities on random instances
#
# Column replacement, divisibility of the minors of F, and Sylvester's
# identity, checked exactly on random integer and polynomial matrices.

# %%
import random

from adjmat.domain import Domain
from adjmat.identities import (
    ColumnReplacement,
    check_column_replacement,
    check_det_f_identity,
    check_f_minor_divisibility,
    check_sylvester,
    f_matrix,
    random_column,
    random_matrix,
    run_suites,
)
from adjmat.paradj import DegenerateMinor

rng = random.Random(0)
B = random_matrix(rng, 5)
ctx = ColumnReplacement(B, 1, 3)
a, b, c, d = (random_column(rng, 5) for _ in range(4))
print("column replacement holds:", check_column_replacement(ctx, a, b, c, d))

# %%
while True:
    M = random_matrix(rng, 8, bound=5)
    try:
        alpha, beta, F = f_matrix(M)
        break
    except DegenerateMinor:
        pass
print("alpha * beta =", alpha * beta)
for k in range(1, 5):
    print(f"order-{k} minors of F divisible by (alpha beta)^{k-1}:", check_f_minor_divisibility(M, k))
print("det F = (alpha beta)^3 det M:", check_det_f_identity(M))

# %%
P = random_matrix(rng, 4, Domain("poly"), bound=3)
print(P)
print("Sylvester identity:", check_sylvester(P))

# %%
for r in run_suites(cases=100, seed=1, domain="poly"):
    print(r)

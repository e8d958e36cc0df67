# %% [markdown]
# # Matrices of any order
#
# The recursion needs power-of-two order and nonzero block determinants.
# `adj_any` pads with an identity block and, when needed, left-multiplies
# by a random determinant-one matrix, then maps the result back.

# %%
import random

from adjmat import adj_any, adj_cofactor, det_bareiss, identity
from adjmat.domain import Domain
from adjmat.identities import random_matrix

rng = random.Random(3)
A = random_matrix(rng, 5)
det, adj, rec = adj_any(A, seed=7)
print("det:", det, "padded to", rec.padded_order, "after", rec.attempts, "attempt(s)")
print(rec.U)
assert det == det_bareiss(A) and adj == adj_cofactor(A)

# %% [markdown]
# The identity of order 3 pads to the 4x4 identity, whose bottom-left block is
# zero, so the first plain attempt always fails and a transform is drawn.

# %%
print(adj_any(identity(3)).record.attempts)

# %%
P = random_matrix(rng, 3, Domain("poly"), bound=3)
det, adj, _ = adj_any(P)
print("det:", det)
print(adj)

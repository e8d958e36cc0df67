# %% [markdown]
# # The 4x4 worked example, step by step
#
# We run the recursion on a small integer matrix with `gamma = 1` and look
# at every named intermediate of the top-level call.

# %%
from adjmat import from_rows, par_adj, adj_cofactor, det_cofactor

A = from_rows([[0, 2, -2, 2],
               [1, -3, 1, -2],
               [3, 0, -3, 0],
               [-1, 3, -1, 1]])
res = par_adj(A, 1, trace=True)
print("determinant:", res.phi)
print(res.adj)

# %% [markdown]
# The trace holds the two block determinants, their adjugates, the products
# N and M, the order-2 matrix F handed to the inner call with
# gamma = alpha * beta, and the four output blocks.

# %%
t = res.trace
print("alpha, beta =", t.alpha, t.beta)
for name in ("A_adj", "B_adj", "N", "M", "F", "F_adj", "H", "L", "H_prime", "L_prime"):
    print(f"{name}:", getattr(t, name).tolist())
print("inner call gamma:", t.children["F"].gamma)

# %% [markdown]
# Cross-check against cofactor expansion.

# %%
assert res.phi == det_cofactor(A)
assert res.adj == adj_cofactor(A)
print((A @ res.adj).tolist())
print(res.stats)

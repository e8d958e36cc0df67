# %% [markdown]
# # Work, depth and schedules
#
# Each recursive step does six matrix products and three recursive calls,
# but only five of its stages are sequential. The counters below are
# structural, so the sequential and parallel runs report the same numbers.

# %%
import time
import random

from adjmat import adj_any
from adjmat.identities import random_matrix
from adjmat.paradj import predicted_critical_path, predicted_matmul_count

rng = random.Random(0)
print(f"{'n':>3} {'matmuls':>8} {'stages':>7} {'seq ms':>8} {'par ms':>8}")
for n in (4, 8, 16, 32):
    A = random_matrix(rng, n)
    t0 = time.perf_counter()
    s = adj_any(A, mode="seq")
    t1 = time.perf_counter()
    p = adj_any(A, mode="par")
    t2 = time.perf_counter()
    assert (s.det, s.adj, s.stats) == (p.det, p.adj, p.stats)
    assert s.stats.matmul_count == predicted_matmul_count(n)
    assert s.stats.critical_path_stages == predicted_critical_path(n)
    print(f"{n:>3} {s.stats.matmul_count:>8} {s.stats.critical_path_stages:>7} "
          f"{(t1 - t0) * 1e3:>8.1f} {(t2 - t1) * 1e3:>8.1f}")

# %% [markdown]
# Threads share the interpreter lock, so wall-clock gains need the process
# backend and more than one core.

# %%
A = random_matrix(rng, 32)
r = adj_any(A, mode="par", backend="process")
print(r.stats)

# %% [markdown]
# # Realizing every admissible sign pattern
#
# The constructive search starts from a base composition with a high-order
# root at 0, perturbs the designated factors by O(eps), solves for the
# cluster of small roots, and certifies each candidate exactly.  Specs with
# odd delta are outside the complex-couple construction; a plain random
# search is tried for them instead.

# %%
import time
from collections import Counter

from szego.decomposition import MODES
from szego.realization import SearchConfig, realize_all, realize_case
from szego.signature import CaseSpec

# %%
cfg = SearchConfig()
for mode in MODES:
    for n in range(2, 6):
        t = time.perf_counter()
        res = realize_all(n, mode, cfg, strict_errors=False)
        strategies = Counter(c.trace["strategy"] for c in res.certificates)
        print(f"{mode:12s} n={n}  {res.counts}  {dict(strategies)}  {time.perf_counter() - t:.1f}s")

# %% [markdown]
# ## One certificate in detail

# %%
cert = realize_case(CaseSpec(3, 4, q=1, k=1, kC=2, qC=2, delta=2), "polynomial", cfg)
print(cert.object)
print(cert.factors.values())
print(cert.trace)
print("recheck:", cert.recheck().ok)

# %% [markdown]
# ## An odd-delta spec

# %%
odd = CaseSpec(3, 5, q=1, k=1, r=1, s=1, kC=2, qC=2, delta=1)
cert = realize_case(odd, "polynomial", cfg)
print(odd.label(), "->", cert.trace["strategy"], cert.trace["candidates"], "candidates")
print(cert.object)

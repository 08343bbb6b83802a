# %% [markdown]
# # Sign patterns, necessary conditions and the four cases
#
# For each P we count roots of P/(x+1) by sign and the values -a_i by sign;
# the pair of counts is the 8-vector.  Necessary conditions restrict which
# 8-vectors occur, and the enumeration lists every admissible one.

# %%
import random
from collections import Counter

from szego.exact_arith import RatPoly
from szego.sampling import random_multiset
from szego.signature import CaseSpec, analyze, check_necessary, enumerate_cases, verify_realization

# %%
p = RatPoly([0, -1, 0, 1])  # x(x+1)(x-1)
fm, sig = analyze(p, 3)
print(fm.values())
print(sig.to_dict())
print(check_necessary(sig, fm, 3).to_dict())

# %% [markdown]
# ## How many specs per n, and by case

# %%
for n in range(2, 9):
    specs = enumerate_cases(n)
    by_case = Counter(s.case_id for s in specs)
    odd = sum(s.construction_unsupported for s in specs)
    print(f"n={n}: {len(specs):4d} specs  {dict(sorted(by_case.items()))}  odd delta: {odd}")

# %% [markdown]
# ## Random composed instances never violate the conditions

# %%
rng = random.Random(1)
seen = Counter()
for _ in range(300):
    n = rng.randint(2, 6)
    fm = random_multiset(rng, n)
    f2, sig = analyze(fm.to_polynomial(n), n)
    rep = check_necessary(sig, f2, n)
    seen[rep.ok] += 1
print(seen)

# %% [markdown]
# ## Verifying a hand-made realization

# %%
spec = CaseSpec(1, 3, q=1, k=1, m=1)
print(spec.label(), verify_realization(RatPoly([0, -2, -1, 1]), spec).ok)

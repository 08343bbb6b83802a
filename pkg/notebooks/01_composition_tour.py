# %% [markdown]
# # Composition, factors and the map Phi
#
# A walk through the exact pipeline: build polynomials from factors
# K_a = (x+1)^(n-1) (x+a), take them apart again, and look at the affine map
# from coefficients to elementary symmetric functions of the a_i.
#
# Run with `python notebooks/01_composition_tour.py` (or open as a percent
# notebook in Jupyter / VS Code).

# %%
from fractions import Fraction as F

from szego import decompose_exp, decompose_poly, factor_K, schur_szego
from szego.composition import DegreeTaggedPoly, ExpForm, kappa, exp_compose
from szego.decomposition import node_polynomial, phi_affine, phi_eigen_check
from szego.exact_arith import RatPoly

# %% [markdown]
# ## K_2 * K_3 at n = 3
# Normalized coefficients multiply entrywise.

# %%
p = schur_szego(factor_K(2, 3), factor_K(3, 3))
print("P =", p)
print("node polynomial Q(t) =", node_polynomial(p, 3))
fm = decompose_poly(p, 3)
print("factors:", fm.values(), "scalar:", fm.scalar)

# %% [markdown]
# (x+1)^n is the unit, so any A composed with it comes back unchanged.

# %%
a = RatPoly([F(1, 3), -2, 0, 5, 1])
unit = DegreeTaggedPoly(RatPoly([1, 1]) ** 4, 4)
print(schur_szego(unit, DegreeTaggedPoly(a, 4)) == a)

# %% [markdown]
# ## A double root at 0 forces a = b_1 = -1/2

# %%
q = RatPoly([0, 0, 1, 1])  # x^2 (x+1)
print(sorted(decompose_poly(q, 3).values()))

# %% [markdown]
# ## Entire functions e^x R(x)
# kappa_1 * kappa_2 has gamma_j = (1+j)(2+j)/2.

# %%
f = exp_compose(kappa(1), kappa(2))
print("R =", f.y, " gamma:", f.series(5))
print(decompose_exp(f.y))

# %% [markdown]
# ## Phi and its spectrum

# %%
for n in range(2, 7):
    rep = phi_eigen_check(n)
    print(n, [str(e) for e in rep.eigenvalues], "invertible" if rep.invertible else "singular")
print(phi_affine(3))

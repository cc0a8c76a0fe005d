# %% [markdown]
# # Hodge diamonds and super symmetric powers
#
# Odd-degree classes anticommute, so symmetric powers of an abelian surface
# are not naive symmetric powers of its 16-dimensional cohomology.

# %%
from genkummer.graded import (
    HodgeDiamond,
    diamond_of_abelian_surface,
    exact_divide,
    numerical_invariants,
    sym_power,
    symmetric_product_series,
    tate_twist,
)
from genkummer.render import diamond_triangle

D_A = diamond_of_abelian_surface()
print(diamond_triangle(D_A, 2))
print(numerical_invariants(D_A, dim=2))

# %% [markdown]
# Two independent routes to `Sym^k`: the Newton recurrence and the Macdonald product.

# %%
series = symmetric_product_series(D_A, 4)
for k in range(5):
    s = sym_power(D_A, k)
    print(k, s.betti(), "agree" if s == series[k] else "DISAGREE")

# %% [markdown]
# `Sym^2 A` divided by `h(A)` is the singular Kummer surface `A/{+-1}`; adding the
# 16 exceptional curves (16 copies of `L`) gives the Kummer K3.

# %%
kummer_quotient = exact_divide(sym_power(D_A, 2), D_A)
print(kummer_quotient.betti())
k3 = kummer_quotient + 16 * tate_twist(HodgeDiamond.unit(), 1)
print(diamond_triangle(k3, 2))
print("euler", k3.euler())

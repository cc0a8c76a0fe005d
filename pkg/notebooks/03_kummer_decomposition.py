# %% [markdown]
# # Hodge numbers of generalized Kummer varieties
#
# `h(A x K^[n])` is a sum over partitions of `e^4` copies of
# `h(A^(lam)) (x) L^(n - l)`.  Dividing its realization by `h(A)` gives the
# Hodge diamond of `K^[n]`; so does summing the per-stratum quotients.

# %%
from genkummer.kummer import (
    expected_euler_characteristic,
    kummer_diamond_via_corollary,
    kummer_diamond_via_theorem,
    product_motive,
    stratum_motive,
    verify_suite,
)
from genkummer.partitions import enumerate_partitions
from genkummer.render import diamond_triangle

# %%
print(product_motive(3))

# %%
for lam in enumerate_partitions(3):
    print(lam, stratum_motive(lam).betti())

# %%
for n in range(2, 7):
    d = kummer_diamond_via_corollary(n)
    same = d == kummer_diamond_via_theorem(n)
    print(f"n={n} routes agree={same} euler={d.euler()} (expected {expected_euler_characteristic(n)})")
    print("   betti", d.betti())

# %%
print(diamond_triangle(kummer_diamond_via_corollary(3), 4))

# %%
report = verify_suite(6)
print("all checks passed:", report.passed, f"({len(report.checks)} checks)")

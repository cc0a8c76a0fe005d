# %% [markdown]
# # Partitions and the strata of K^[n] -> K^(n)
#
# Every partition `lam` of `n` gives `gcd(lam)^4` strata, one per torsion
# point.  A stratum has base dimension `2l - 2` and fibres of dimension `n - l`.

# %%
from genkummer.partitions import Partition, enumerate_partitions, refines, torsion_component_count
from genkummer.kummer import strata_catalog

# %%
for lam in enumerate_partitions(4):
    print(f"{str(lam):12s} length={lam.length}  mult={lam.multiplicities}  e={lam.gcd_of_parts}  e^4={torsion_component_count(lam)}")

# %% [markdown]
# The refinement order: `lam >= mu` when the parts of `lam` can be grouped to give `mu`.

# %%
ps = enumerate_partitions(4)
print("      " + " ".join(f"{str(m):9s}" for m in ps))
for lam in ps:
    print(f"{str(lam):9s} " + " ".join(f"{'>=' if refines(lam, mu) else '.':9s}" for mu in ps))

# %%
for n in (2, 3, 6):
    report = strata_catalog(n)
    print(f"n={n}: {len(report.strata)} partitions, {report.total_strata_count} strata, semi-small: {report.semi_small_verified}")

# %%
for s in strata_catalog(3).strata:
    print(s.partition, "base", s.dim_base_stratum, "total", s.dim_total_stratum, "fibre", s.dim_fiber)

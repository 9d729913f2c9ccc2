"""
Hooks, cores and core towers
============================

A walk through the combinatorics everything else is built on: hook lengths,
removing rim hooks, the abacus, and the q-core tower.
"""

from blockwitness import (
    conjugate,
    core_tower,
    e_core,
    e_quotient,
    hook_census,
    partition_from_tower,
    remove_e_hook,
)
from blockwitness.partitions import beta_set

lam = (4, 2, 1)
print("partition", lam, "conjugate", conjugate(lam))

# Hook lengths, cell by cell (rows and columns are 1-indexed)
census = hook_census(lam, {2, 3})
for cell, h in census.by_cell.items():
    print(f"  h{tuple(cell)} = {h}")
print("cells with hook length divisible by 2 or 3:", census.e_counts)

# Peeling a 5-hook off (2,2,1,1,1) leaves a single row
print("remove the 5-hook at (2,1) of (2,2,1,1,1):", remove_e_hook((2, 2, 1, 1, 1), (2, 1), 5))

# %%
# The abacus: the 3-core slides every bead down its runner, the 3-quotient
# records how far each bead travelled.
mu = (6, 4, 3, 1, 1)
print("beta-set with 6 beads:", beta_set(mu, 6))
print("3-core:", e_core(mu, 3), " 3-quotient:", e_quotient(mu, 3))

# %%
# The 2-core tower.  Layer sizes weighted by powers of 2 add back up to |mu|,
# and the tower alone is enough to rebuild the partition.
tower = core_tower(mu, 2)
for j, layer in enumerate(tower.layers):
    print(f"  T_{j}: {[list(x) for x in layer]}  (size {tower.layer_size(j)})")
print("weighted size", tower.weighted_size, "== |mu| =", sum(mu))
print("rebuilt from tower:", partition_from_tower(tower))

"""
How many factors of q divide a character degree?
================================================

The exact degree comes from the hook length formula.  Its q-part can be read
off the q-core tower (MacDonald) or from Legendre's formula for n! minus the
hooks; the two never disagree.
"""

from blockwitness import degree, enumerate_partitions, legendre_valuation, macdonald_valuation

n, q = 9, 3
print(f"partitions of {n}: degree, nu_{q} by tower, nu_{q} by hooks")
for lam in enumerate_partitions(n):
    mac = macdonald_valuation(lam, q).value
    leg = legendre_valuation(lam, q).value
    assert mac == leg
    print(f"  {str(lam):<20} {degree(lam):>5}  {mac}  {leg}")

# %%
# Hook partitions (n-d, 1^d) have binomial degrees.
from math import comb

print([degree((12 - d,) + (1,) * d) == comb(11, d) for d in range(12)])

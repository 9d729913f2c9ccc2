"""
Witness certificates
====================

For primes q < p <= n (n >= 5) the witness engine picks one of eight explicit
shapes, depending on how n = a + p*w sits against the base-q digits of n, and
then checks that the character is in the principal p-block and has degree
divisible by q.
"""

import json

from blockwitness import arithmetic_frame, brute_force_block, classify, witness

for n, p, q in [(10, 5, 2), (7, 5, 2), (26, 23, 3), (5, 3, 2), (9, 7, 3), (7, 7, 2)]:
    frame = arithmetic_frame(n, p, q)
    print(f"n={n} p={p} q={q}: a={frame.a} w={frame.w} digits of n={frame.alpha} -> {classify(frame)}")
    cert = witness(n, p, q, "alternating")
    print("   ", json.dumps(cert.to_json()))

# %%
# The witness always shows up in the brute-force list of principal-block
# characters whose degree is divisible by q.
members = brute_force_block(7, 5, 2)
print("B_7(2,5) =", [list(m) for m in members])
print("witness in it:", witness(7, 5, 2).partition in members)

"""
Checking every triple up to a bound
===================================

``check_range`` certifies both groups for every admissible (n, p, q) and checks
each witness against an exhaustive scan.  The command-line equivalent is
``blockwitness check-range --nmax 40``.
"""

import sys

from blockwitness import check_range

nmax = int(sys.argv[1]) if len(sys.argv) > 1 else 20
report = check_range(nmax, jobs=1)
print("\n".join(report.summary_lines()))

smallest = min(report.oracle_sizes.items(), key=lambda kv: kv[1])
print("smallest B_n(q,p) seen:", smallest)

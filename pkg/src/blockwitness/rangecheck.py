"""Exhaustive certification of every admissible ``(n, p, q, group)`` up to a bound."""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .blocks import block_frame, in_principal_block
from .oracle import dual_valuation, enumerate_partitions
from .partitions import DomainError
from .tower import primes_up_to
from .witness import ALTERNATING, GROUPS, SYMMETRIC, CertificationError, WitnessCase, arithmetic_frame, certify


def admissible_triples(n: int):
    for p in primes_up_to(n):
        for q in primes_up_to(p - 1):
            yield n, p, q


@dataclass
class RangeReport:
    nmax: int
    groups: tuple[str, ...]
    certificates: list = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    oracle_sizes: dict = field(default_factory=dict)  # (n, p, q) -> |B_n(q, p)|

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def triples(self) -> int:
        return len(self.oracle_sizes)

    def case_counts(self) -> Counter:
        return Counter(c.case.value for c in self.certificates)

    def summary_lines(self) -> list[str]:
        lines = [
            f"check-range n in [5, {self.nmax}], groups: {', '.join(self.groups)}",
            f"triples (n, p, q): {self.triples}",
            f"certificates: {len(self.certificates)}",
            f"oracle-confirmed: {len(self.certificates) - len(self.failures)}",
            "case tags:",
        ]
        counts = self.case_counts()
        for tag in WitnessCase:
            lines.append(f"  {tag.value:<24} {counts.get(tag.value, 0)}")
        lines.append(f"failures: {len(self.failures)}")
        return lines


def _check_n(n: int, groups: tuple[str, ...]):
    partitions = list(enumerate_partitions(n))
    certificates, failures, sizes = [], [], {}
    nu_cache: dict = {}
    for p in primes_up_to(n):
        if p == 2:
            continue
        frame = block_frame(n, p)
        block = [lam for lam in partitions if in_principal_block(lam, frame)]
        for q in primes_up_to(p - 1):
            members = set()
            for lam in block:
                key = (lam, q)
                if key not in nu_cache:
                    nu_cache[key] = dual_valuation(lam, q)
                if nu_cache[key] >= 1:
                    members.add(lam)
            sizes[(n, p, q)] = len(members)
            for group in groups:
                triple = {"n": n, "p": p, "q": q, "group": group}
                try:
                    cert = certify(arithmetic_frame(n, p, q), group)
                except (CertificationError, AssertionError) as exc:
                    failures.append({**triple, "error": str(exc)})
                    continue
                certificates.append(cert)
                if cert.partition not in members:
                    failures.append({**triple, "error": "witness missing from brute-force block",
                                     "partition": list(cert.partition)})
    return certificates, failures, sizes


def check_range(nmax: int, groups=GROUPS, jobs: int | None = None) -> RangeReport:
    """Certify and oracle-check every ``5 <= n <= nmax``, prime ``q < p <= n``."""
    if nmax < 5:
        raise DomainError(f"nmax must be at least 5, got {nmax}")
    groups = tuple(g for g in GROUPS if g in groups)
    jobs = jobs or os.cpu_count() or 1
    ns = range(5, nmax + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # largest n first keeps the pool busy
            futures = {n: pool.submit(_check_n, n, groups) for n in sorted(ns, reverse=True)}
            results = [futures[n].result() for n in ns]
    else:
        results = [_check_n(n, groups) for n in ns]

    report = RangeReport(nmax, groups)
    for certificates, failures, sizes in results:
        report.certificates.extend(certificates)
        report.failures.extend(failures)
        report.oracle_sizes.update(sizes)
    return report


__all__ = ["RangeReport", "admissible_triples", "check_range", "SYMMETRIC", "ALTERNATING"]

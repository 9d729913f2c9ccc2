"""Brute-force ground truth: partition enumeration, exhaustive blocks, cross-checks.

Nothing here relies on the witness construction.  Degrees are checked against
the branching rule, valuations are computed both from the core tower and from
hook lengths, and disagreement is fatal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .blocks import block_frame, degree, in_principal_block, legendre_valuation
from .partitions import Partition, conjugate, hook_lengths
from .tower import macdonald_valuation, require_prime


class OracleIntegrityError(AssertionError):
    pass


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order: ``(n)`` first."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield Partition._trusted(prefix)
            return
        for x in range(min(cap, remaining), 0, -1):
            prefix.append(x)
            yield from rec(remaining - x, x, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def partition_count(n: int) -> int:
    """``p(n)`` by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p[n]


def dual_valuation(lam: Partition, q: int) -> int:
    mac = macdonald_valuation(lam, q).value
    leg = legendre_valuation(lam, q).value
    if mac != leg:
        raise OracleIntegrityError(f"nu_{q} of {lam}: macdonald={mac}, legendre={leg}")
    return mac


def brute_force_block(n: int, p: int, q: int, partitions=None) -> list[Partition]:
    """``B_n(q, p)`` by scanning every partition of ``n``."""
    require_prime(p, "p")
    require_prime(q, "q")
    if not q < p <= n:
        raise ValueError(f"need q < p <= n, got n={n}, p={p}, q={q}")
    frame = block_frame(n, p)
    if partitions is None:
        partitions = enumerate_partitions(n)
    return [lam for lam in partitions if in_principal_block(lam, frame) and dual_valuation(lam, q) >= 1]


@lru_cache(maxsize=None)
def branching_degree(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam``, by removing corner cells."""
    if not lam:
        return 1
    total = 0
    for i, x in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < x:
            total += branching_degree(Partition.from_parts(lam[:i] + (x - 1,) + lam[i + 1:]))
    return total


def rim_hook_removals(lam: Partition, e: int) -> list[Partition]:
    """Every partition reachable by removing one rim hook of length exactly ``e``.

    Works on the diagram directly: removing the rim hook of ``(r, c)``, whose
    leg ends in row ``R``, shifts rows ``r..R-1`` up by one box and cuts row
    ``R`` to ``c - 1``.
    """
    out = []
    conj = conjugate(lam)
    for r in range(1, len(lam) + 1):
        for c in range(1, lam[r - 1] + 1):
            bottom = conj[c - 1]
            if (lam[r - 1] - c) + (bottom - r) + 1 != e:
                continue
            rows = list(lam)
            for i in range(r, bottom):
                rows[i - 1] = lam[i] - 1
            rows[bottom - 1] = c - 1
            out.append(Partition.from_parts(rows))
    return out


def reachable_cores(lam: Partition, e: int) -> frozenset[Partition]:
    """All end points of every sequence of ``e``-rim-hook removals."""
    memo: dict[Partition, frozenset[Partition]] = {}

    def rec(mu: Partition) -> frozenset[Partition]:
        if mu not in memo:
            nxt = rim_hook_removals(mu, e)
            memo[mu] = frozenset([mu]) if not nxt else frozenset().union(*(rec(nu) for nu in nxt))
        return memo[mu]

    return rec(lam)


@dataclass
class CrossValidationReport:
    n_max: int
    q_set: tuple[int, ...]
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "CrossValidationReport") -> "CrossValidationReport":
        return CrossValidationReport(
            max(self.n_max, other.n_max),
            tuple(sorted(set(self.q_set) | set(other.q_set))),
            self.checks + other.checks,
            self.failures + other.failures,
        )

    def minimal_counterexample(self) -> dict | None:
        if not self.failures:
            return None
        return min(self.failures, key=lambda f: (sum(f["partition"]), f["partition"]))

    def summary(self) -> dict:
        return {"checks": self.checks, "failures": self.failures}

    def to_text(self) -> str:
        lines = [
            f"cross-validation n <= {self.n_max}, q in {list(self.q_set)}",
            f"checks: {self.checks}",
            f"failures: {len(self.failures)}",
        ]
        worst = self.minimal_counterexample()
        if worst is not None:
            lines.append(f"minimal counterexample: {json.dumps(worst)}")
        return "\n".join(lines)


DEGREE_RECURRENCE_LIMIT = 15


def cross_validate(n_max: int, q_set=(2, 3)) -> CrossValidationReport:
    if n_max > 40:
        raise ValueError(f"n_max is capped at 40, got {n_max}")
    q_set = tuple(sorted(q_set))
    for q in q_set:
        require_prime(q)
    report = CrossValidationReport(n_max, q_set)

    def fail(kind: str, lam: Partition, **extra) -> None:
        report.failures.append({"check": kind, "partition": list(lam), **extra})

    for n in range(1, n_max + 1):
        for lam in enumerate_partitions(n):
            for q in q_set:
                mac = macdonald_valuation(lam, q).value
                leg = legendre_valuation(lam, q).value
                report.checks += 1
                if mac != leg:
                    fail("macdonald-legendre", lam, q=q, macdonald=mac, legendre=leg)
            report.checks += 1
            if sorted(hook_lengths(lam)) != sorted(hook_lengths(conjugate(lam))):
                fail("hook-conjugation", lam)
            if n <= DEGREE_RECURRENCE_LIMIT:
                report.checks += 1
                if degree(lam) != branching_degree(lam):
                    fail("degree-branching", lam, degree=str(degree(lam)))
    return report

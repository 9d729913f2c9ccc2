"""Principal-block membership, exact degrees, and restriction to the alternating group."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .partitions import DomainError, Partition, as_partition, conjugate, e_core, hook_lengths
from .tower import (
    LEGENDRE_HOOK,
    DegreeValuation,
    macdonald_valuation,
    primes_up_to,
    require_prime,
)


@dataclass(frozen=True)
class BlockFrame:
    n: int
    p: int
    a: int
    w: int

    @property
    def core(self) -> Partition:
        """The principal block's ``p``-core label ``(a)``; empty when ``a == 0``."""
        return Partition([self.a] if self.a else [])


def block_frame(n: int, p: int) -> BlockFrame:
    require_prime(p, "p")
    if p > n:
        raise DomainError(f"block weight zero: p={p} exceeds n={n}")
    w, a = divmod(n, p)
    return BlockFrame(n, p, a, w)


def in_principal_block(lam, frame: BlockFrame) -> bool:
    lam = as_partition(lam)
    if lam.size != frame.n:
        raise DomainError(f"{lam} is not a partition of {frame.n}")
    return e_core(lam, frame.p) == frame.core


def valuation(m: int, q: int) -> int:
    """``nu_q(m)`` for ``m >= 1``."""
    v = 0
    while m % q == 0:
        m //= q
        v += 1
    return v


def factorial_valuation(n: int, q: int) -> int:
    """Legendre: ``nu_q(n!) = sum_i floor(n / q**i)``."""
    v, pk = 0, q
    while pk <= n:
        v += n // pk
        pk *= q
    return v


def legendre_valuation(lam, q: int) -> DegreeValuation:
    require_prime(q)
    lam = as_partition(lam)
    value = factorial_valuation(lam.size, q) - sum(valuation(h, q) for h in hook_lengths(lam))
    return DegreeValuation(q, value, LEGENDRE_HOOK)


def degree(lam) -> int:
    """``chi^lam(1) = n! / prod(hooks)``, cancelled prime by prime."""
    lam = as_partition(lam)
    n = lam.size
    if n < 1:
        raise DomainError("degree needs a partition of a positive integer")
    exps = Counter({r: factorial_valuation(n, r) for r in primes_up_to(n)})
    for h in hook_lengths(lam):
        r = 2
        while h > 1:
            while h % r == 0:
                h //= r
                exps[r] -= 1
            r += 1
    out = 1
    for r, e in exps.items():
        assert e >= 0, (lam, r, e)
        out *= r**e
    return out


@dataclass
class CharacterRecord:
    partition: Partition
    in_principal_block: bool
    self_conjugate: bool
    valuations: dict[int, DegreeValuation] = field(default_factory=dict)
    degree: int | None = None

    def to_json(self) -> dict:
        out = {
            "partition": list(self.partition),
            "in_block": self.in_principal_block,
            "self_conjugate": self.self_conjugate,
            "valuations": {str(q): v.value for q, v in sorted(self.valuations.items())},
        }
        if self.degree is not None:
            out["degree"] = str(self.degree)
        return out


def character_record(lam, frame: BlockFrame, qs=(), with_degree: bool = False) -> CharacterRecord:
    lam = as_partition(lam)
    return CharacterRecord(
        partition=lam,
        in_principal_block=in_principal_block(lam, frame),
        self_conjugate=lam == conjugate(lam),
        valuations={q: macdonald_valuation(lam, q) for q in qs},
        degree=degree(lam) if with_degree else None,
    )


def enumerate_block(frame: BlockFrame, q: int, with_degree: bool = False) -> list[CharacterRecord]:
    """Characters of the principal ``p``-block, annotated with ``nu_q``.

    The subset with ``nu_q >= 1`` is ``B_n(q, p)``; see :func:`block_members`.
    Ordered lexicographically decreasing.
    """
    from .oracle import enumerate_partitions

    require_prime(q)
    if q == frame.p:
        raise DomainError("q must differ from p")
    out = []
    for lam in enumerate_partitions(frame.n):
        if in_principal_block(lam, frame):
            out.append(character_record(lam, frame, (q,), with_degree))
    return out


def block_members(frame: BlockFrame, q: int, with_degree: bool = False) -> list[CharacterRecord]:
    return [r for r in enumerate_block(frame, q, with_degree) if r.valuations[q].value >= 1]


@dataclass(frozen=True)
class AlternatingConstituent:
    partition: Partition
    splits: bool
    constituent_valuation: dict[int, int]
    small: bool = False  # n < 5, outside the simple-group range


def alternating_constituent(lam, q: int) -> AlternatingConstituent:
    """q-part of a constituent of the restriction of ``chi^lam`` to ``A_n``.

    A self-conjugate ``lam`` restricts to two constituents of half the degree,
    which costs one factor of 2 and nothing else.
    """
    require_prime(q)
    lam = as_partition(lam)
    splits = lam == conjugate(lam)
    v = macdonald_valuation(lam, q).value
    if splits and q == 2:
        v -= 1
    return AlternatingConstituent(lam, splits, {q: v}, small=lam.size < 5)

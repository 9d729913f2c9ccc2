"""Partitions, Young diagrams, hooks, and the abacus (cores and quotients).

Cells are 1-indexed ``(row, col)`` pairs with rows counted downwards, so the
hook length of ``(r, c)`` in ``lam`` is ``1 + (lam[r-1] - c) + (lam'[c-1] - r)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    Behaves like a plain tuple (hashable, lexicographically ordered, JSON
    serialises as an array) but refuses to be built from invalid data.

    >>> Partition([4, 2, 1]).size
    7
    >>> Partition([])
    Partition([])
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise DomainError(f"partition parts must be positive integers, got {parts!r}")
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise DomainError(f"partition parts must be non-increasing, got {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from a sequence that may carry trailing zeros."""
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # caller guarantees validity
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def is_self_conjugate(self) -> bool:
        return self == conjugate(self)

    def cells(self):
        for r, row in enumerate(self, start=1):
            for c in range(1, row + 1):
                yield Cell(r, c)

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


class Cell(NamedTuple):
    row: int
    col: int


def as_partition(obj) -> Partition:
    return obj if isinstance(obj, Partition) else Partition(obj)


def parse_partition(text: str) -> Partition:
    """Parse a bracketed literal such as ``"[4,2,1]"`` or ``"[]"``."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise DomainError(f"partition literal must be bracketed, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return Partition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise DomainError(f"malformed partition literal {text!r}") from None
    return Partition(parts)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= c) for c in range(1, lam[0] + 1))


def _check_cell(lam: Partition, cell) -> Cell:
    r, c = cell
    if not (1 <= r <= len(lam) and 1 <= c <= lam[r - 1]):
        raise DomainError(f"cell {tuple(cell)} is not in the diagram of {lam}")
    return Cell(r, c)


def hook_length(lam, cell) -> int:
    lam = as_partition(lam)
    r, c = _check_cell(lam, cell)
    leg = sum(1 for x in lam[r:] if x >= c)
    return 1 + (lam[r - 1] - c) + leg


def hook_lengths(lam) -> list[int]:
    """All hook lengths of ``lam``, row by row (the multiset H(lam))."""
    lam = as_partition(lam)
    if not lam:
        return []
    conj = conjugate(lam)
    return [
        lam[r] - c + conj[c] - r - 1
        for r in range(len(lam))
        for c in range(lam[r])
    ]


@dataclass
class HookCensus:
    by_cell: dict[Cell, int] = field(default_factory=dict)
    e_counts: dict[int, int] = field(default_factory=dict)


def hook_census(lam, divisors: Iterable[int] = ()) -> HookCensus:
    lam = as_partition(lam)
    conj = conjugate(lam)
    by_cell = {
        Cell(r + 1, c + 1): lam[r] - c + conj[c] - r - 1
        for r in range(len(lam))
        for c in range(lam[r])
    }
    e_counts = {}
    for e in divisors:
        if e < 1:
            raise DomainError(f"divisor must be positive, got {e}")
        e_counts[e] = sum(1 for h in by_cell.values() if h % e == 0)
    return HookCensus(by_cell, e_counts)


def count_e_hooks(lam, e: int) -> int:
    """``|H^e(lam)|``: the number of cells whose hook length is divisible by ``e``."""
    return sum(1 for h in hook_lengths(lam) if h % e == 0)


# -- abacus ---------------------------------------------------------------


def beta_set(lam, length: int | None = None) -> tuple[int, ...]:
    """First-column hook lengths of ``lam`` padded with zero parts to ``length`` beads.

    Returned strictly decreasing.
    """
    lam = as_partition(lam)
    if length is None:
        length = len(lam)
    if length < len(lam):
        raise DomainError(f"beta-set of {lam} needs at least {len(lam)} beads")
    parts = list(lam) + [0] * (length - len(lam))
    return tuple(x + length - i for i, x in enumerate(parts, start=1))


def from_beta_set(beads: Iterable[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    if len(set(beads)) != len(beads) or (beads and beads[-1] < 0):
        raise DomainError(f"beads must be distinct non-negative integers, got {beads}")
    return _from_decreasing_beads(beads)


def _from_decreasing_beads(beads) -> Partition:
    m = len(beads)
    parts = [b - m + i for i, b in enumerate(beads, start=1)]
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition._trusted(parts)


def _padded_length(lam: Partition, e: int) -> int:
    return -(-len(lam) // e) * e


def _check_modulus(e: int) -> None:
    if not isinstance(e, int) or e < 2:
        raise DomainError(f"modulus e must be an integer >= 2, got {e!r}")


def _runners(lam: Partition, e: int) -> list[list[int]]:
    """Bead levels on each runner, top to bottom, for a beta-set of ``0 mod e`` beads."""
    length = _padded_length(lam, e)
    runners: list[list[int]] = [[] for _ in range(e)]
    for b in beta_set(lam, length):
        runners[b % e].append(b // e)
    return runners


def _core(lam: Partition, e: int) -> Partition:
    counts = [len(levels) for levels in _runners(lam, e)]
    beads = sorted((r + e * i for r, m in enumerate(counts) for i in range(m)), reverse=True)
    return _from_decreasing_beads(beads)


@lru_cache(maxsize=1 << 16)
def _quotient(lam: Partition, e: int) -> tuple[Partition, ...]:
    return tuple(_from_decreasing_beads(levels) for levels in _runners(lam, e))


def e_core(lam, e: int) -> Partition:
    """The ``e``-core of ``lam``: slide every bead down its runner."""
    _check_modulus(e)
    return _core(as_partition(lam), e)


def e_quotient(lam, e: int) -> tuple[Partition, ...]:
    """The ``e``-quotient, read off runners ``0..e-1``.

    The beta-set is padded to a multiple of ``e`` beads first, which fixes the
    runner order.
    """
    _check_modulus(e)
    return _quotient(as_partition(lam), e)


def e_weight(lam, e: int) -> int:
    return sum(q.size for q in e_quotient(lam, e))


def from_core_and_quotient(core, quotient) -> Partition:
    """Inverse of ``(e_core, e_quotient)`` with ``e = len(quotient)``."""
    core = as_partition(core)
    quotient = [as_partition(q) for q in quotient]
    e = len(quotient)
    _check_modulus(e)
    longest = max((len(q) for q in quotient), default=0)
    length = _padded_length(core, e) + e * longest
    runners: list[list[int]] = [[] for _ in range(e)]
    for b in beta_set(core, length):
        runners[b % e].append(b // e)
    beads = []
    for r, levels in enumerate(runners):
        m = len(levels)
        mu = list(quotient[r]) + [0] * (m - len(quotient[r]))
        beads.extend(r + e * (x + m - i) for i, x in enumerate(mu, start=1))
    return from_beta_set(beads)


def remove_e_hook(lam, cell, e: int) -> Partition:
    """Remove the rim hook attached to ``cell``, whose hook length must equal ``e``."""
    lam = as_partition(lam)
    cell = _check_cell(lam, cell)
    h = hook_length(lam, cell)
    if h != e:
        raise DomainError(f"hook at {tuple(cell)} of {lam} has length {h}, not {e}")
    length = len(lam)
    beads = list(beta_set(lam, length))
    # the bead of row r moves h places down into a gap
    beads[cell.row - 1] -= h
    return from_beta_set(beads)

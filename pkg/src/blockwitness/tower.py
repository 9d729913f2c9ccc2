"""q-core towers and MacDonald's formula for the q-part of a character degree."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    DomainError,
    Partition,
    as_partition,
    count_e_hooks,
    e_core,
    e_quotient,
    from_core_and_quotient,
)

MACDONALD = "macdonald"
LEGENDRE_HOOK = "legendre-hook"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(n: int) -> list[int]:
    return [m for m in range(2, n + 1) if is_prime(m)]


def require_prime(q: int, name: str = "q") -> None:
    if not isinstance(q, int) or not is_prime(q):
        raise DomainError(f"{name} must be prime, got {q!r}")


@dataclass(frozen=True)
class QExpansion:
    base: int
    digits: tuple[int, ...]  # little-endian: digits[j] multiplies base**j

    @property
    def value(self) -> int:
        return sum(d * self.base**j for j, d in enumerate(self.digits))

    @property
    def leading_index(self) -> int:
        """``k`` with ``digits[k]`` the leading nonzero digit; -1 for zero."""
        return len(self.digits) - 1

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)


def q_expansion(n: int, q: int) -> QExpansion:
    require_prime(q)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return QExpansion(q, _digits(n, q))


def _digits(n: int, q: int) -> tuple[int, ...]:
    out = []
    while n:
        n, d = divmod(n, q)
        out.append(d)
    return tuple(out)


def padded_digits(n: int, q: int, length: int) -> tuple[int, ...]:
    d = _digits(n, q)
    if len(d) > length:
        raise DomainError(f"{n} has more than {length} base-{q} digits")
    return d + (0,) * (length - len(d))


@dataclass(frozen=True)
class CoreTower:
    """Layers ``T_0, ..., T_k`` of the ``q``-core tower, layer ``j`` holding ``q**j`` cores."""

    q: int
    layers: tuple[tuple[Partition, ...], ...]

    def layer_size(self, j: int) -> int:
        if j >= len(self.layers):
            return 0
        return sum(mu.size for mu in self.layers[j])

    @property
    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(self.layer_size(j) for j in range(len(self.layers)))

    @property
    def depth(self) -> int:
        nonzero = [j for j, s in enumerate(self.layer_sizes) if s]
        return nonzero[-1] if nonzero else 0

    @property
    def total(self) -> int:
        """``sum_j |T_j|``."""
        return sum(self.layer_sizes)

    @property
    def weighted_size(self) -> int:
        return sum(s * self.q**j for j, s in enumerate(self.layer_sizes))

    def to_json(self) -> dict:
        return {"q": self.q, "layers": [[list(mu) for mu in layer] for layer in self.layers]}

    @classmethod
    def from_json(cls, data: dict) -> "CoreTower":
        return cls(
            data["q"],
            tuple(tuple(Partition(mu) for mu in layer) for layer in data["layers"]),
        )


def _tower_layers(lam: Partition, q: int, height: int) -> list[list[Partition]]:
    layers = [[e_core(lam, q)]]
    if height > 1:
        sub = [_tower_layers(mu, q, height - 1) for mu in e_quotient(lam, q)]
        for j in range(height - 1):
            layers.append([mu for s in sub for mu in s[j]])
    return layers


def core_tower(lam, q: int) -> CoreTower:
    require_prime(q)
    lam = as_partition(lam)
    height = len(_digits(lam.size, q))
    if height == 0:
        return CoreTower(q, ())
    layers = _tower_layers(lam, q, height)
    return CoreTower(q, tuple(tuple(layer) for layer in layers))


def partition_from_tower(tower: CoreTower) -> Partition:
    """Rebuild the unique partition with the given core tower."""
    q = tower.q
    if not tower.layers:
        return Partition()

    def build(layers: list[list[Partition]]) -> Partition:
        if len(layers) == 1:
            return layers[0][0]
        quotient = []
        for i in range(q):
            # component i owns chunk i (of size q**j) in layer j+1
            sub = [layers[j + 1][i * q**j:(i + 1) * q**j] for j in range(len(layers) - 1)]
            quotient.append(build(sub))
        return from_core_and_quotient(layers[0][0], quotient)

    return build([list(layer) for layer in tower.layers])


@lru_cache(maxsize=1 << 17)
def tower_total(lam: Partition, q: int) -> int:
    """``sum_j |T_j(lam)|`` without materialising the layers."""
    if not lam:
        return 0
    return e_core(lam, q).size + sum(tower_total(mu, q) for mu in e_quotient(lam, q))


@dataclass(frozen=True)
class DegreeValuation:
    q: int
    value: int
    method: str


def macdonald_valuation(lam, q: int) -> DegreeValuation:
    require_prime(q)
    lam = as_partition(lam)
    if lam.size < 1:
        raise DomainError("valuation needs a partition of a positive integer")
    numerator = tower_total(lam, q) - sum(_digits(lam.size, q))
    value, rem = divmod(numerator, q - 1)
    assert rem == 0 and value >= 0, (lam, q, numerator)
    return DegreeValuation(q, value, MACDONALD)


def last_layer_count(lam, q: int) -> int:
    """``|H^{q^k}(lam)|`` where ``k`` indexes the leading base-``q`` digit of ``|lam|``."""
    require_prime(q)
    lam = as_partition(lam)
    if not lam:
        return 0
    k = len(_digits(lam.size, q)) - 1
    return count_e_hooks(lam, q**k)


class LemmaViolation(AssertionError):
    pass


def check_k_plus_one_alpha(lam, k: int, ell: int) -> bool:
    """Whether ``lam`` of size ``2**(k+1) - 2**ell`` meets the hook hypotheses.

    The hypotheses are ``|H^{2^k}| = 0`` and ``|H^{2^(k-1)}| <= 2``.  When they
    hold, ``nu_2(chi(1)) >= 2`` is checked as well and a failure raises
    :class:`LemmaViolation`.
    """
    lam = as_partition(lam)
    if k < 2 or not 0 <= ell <= k - 2:
        raise DomainError(f"need k >= 2 and 0 <= ell <= k-2, got k={k}, ell={ell}")
    n = 2 ** (k + 1) - 2**ell
    if lam.size != n:
        raise DomainError(f"{lam} has size {lam.size}, expected {n}")
    holds = count_e_hooks(lam, 2**k) == 0 and count_e_hooks(lam, 2 ** (k - 1)) <= 2
    if holds and macdonald_valuation(lam, 2).value < 2:
        raise LemmaViolation(f"{lam}: hook hypotheses hold but nu_2 < 2")
    return holds

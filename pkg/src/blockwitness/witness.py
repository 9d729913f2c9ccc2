"""Explicit principal-block characters whose degree is divisible by a smaller prime.

Given primes ``q < p <= n`` with ``n >= 5``, :func:`certify` builds a partition
``lam`` of ``n`` such that ``chi^lam`` lies in the principal ``p``-block of the
symmetric group and ``q`` divides ``chi^lam(1)``; for the alternating group it
also checks that ``q`` divides the degree of each constituent of the
restriction.  Every claim is re-checked by two independent valuation routes.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .blocks import (
    alternating_constituent,
    block_frame,
    in_principal_block,
    legendre_valuation,
)
from .partitions import DomainError, Partition, conjugate, e_core
from .tower import macdonald_valuation, padded_digits, q_expansion, require_prime

SYMMETRIC = "symmetric"
ALTERNATING = "alternating"
GROUPS = (SYMMETRIC, ALTERNATING)


class WitnessCase(str, enum.Enum):
    A_ZERO = "A_ZERO"
    PW_GREATER_GENERIC = "PW_GREATER_GENERIC"
    PW_GREATER_BOUNDARY = "PW_GREATER_BOUNDARY"
    PW_GREATER_DEGENERATE = "PW_GREATER_DEGENERATE"
    PW_LESS_BETA_POS = "PW_LESS_BETA_POS"
    PW_LESS_A1 = "PW_LESS_A1"
    PW_LESS_GENERIC = "PW_LESS_GENERIC"
    PW_LESS_POWER = "PW_LESS_POWER"

    def __str__(self) -> str:
        return self.value


class CertificationError(AssertionError):
    """A constructed witness failed verification.  Carries the frame and partition."""

    def __init__(self, message: str, frame: "ArithmeticFrame", partition) -> None:
        super().__init__(f"{message} (n={frame.n}, p={frame.p}, q={frame.q}, partition={list(partition)})")
        self.frame = frame
        self.partition = partition


@dataclass(frozen=True)
class ArithmeticFrame:
    """``n = a + p*w`` together with the base-``q`` digits of ``n``, ``a`` and ``p*w``.

    Digit vectors are little-endian and padded to ``k + 1`` entries, where ``k``
    indexes the leading digit of ``n``.
    """

    n: int
    p: int
    q: int
    a: int
    w: int
    k: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    zeta: tuple[int, ...]

    @property
    def pw(self) -> int:
        return self.p * self.w

    @property
    def top(self) -> int:
        """``alpha_k * q**k``."""
        return self.alpha[self.k] * self.q**self.k


def check_hypotheses(n: int, p: int, q: int) -> None:
    for name, v in (("n", n), ("p", p), ("q", q)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"{name} must be an integer, got {v!r}")
    require_prime(p, "p")
    require_prime(q, "q")
    if q == p:
        raise DomainError("q must differ from p")
    if q > p:
        raise DomainError(f"need q < p (got q={q}, p={p}); witnesses for q > p are not constructed")
    if n < 5:
        raise DomainError(f"need n >= 5 (got n={n})")
    if p > n:
        raise DomainError(f"need p <= n (got p={p}, n={n})")


def arithmetic_frame(n: int, p: int, q: int) -> ArithmeticFrame:
    check_hypotheses(n, p, q)
    bf = block_frame(n, p)
    alpha = q_expansion(n, q).digits
    k = len(alpha) - 1
    beta = padded_digits(bf.a, q, k + 1)
    zeta = padded_digits(bf.p * bf.w, q, k + 1)
    frame = ArithmeticFrame(n, p, q, bf.a, bf.w, k, alpha, beta, zeta)

    assert bf.a + frame.pw == n and alpha[k] != 0
    assert 0 <= beta[k] <= zeta[k] <= alpha[k] <= q - 1, frame
    assert frame.pw != zeta[k] * q**k, frame
    if frame.a >= 1:
        assert frame.pw != frame.top, frame
    return frame


def classify(frame: ArithmeticFrame) -> WitnessCase:
    n, p, q, a, w = frame.n, frame.p, frame.q, frame.a, frame.w
    if a == 0:
        return WitnessCase.A_ZERO
    if frame.pw == frame.top:
        raise AssertionError(f"p*w == alpha_k*q^k with a >= 1 is impossible: {frame}")
    if frame.pw > frame.top:
        if n != (frame.alpha[frame.k] + 1) * q**frame.k - 1:
            return WitnessCase.PW_GREATER_GENERIC
        if q == 2 and w == 1 and a == p - 3:
            return WitnessCase.PW_GREATER_DEGENERATE
        return WitnessCase.PW_GREATER_BOUNDARY
    if frame.beta[frame.k] > 0:
        return WitnessCase.PW_LESS_BETA_POS
    if a == 1:
        return WitnessCase.PW_LESS_A1
    if n != frame.top:
        return WitnessCase.PW_LESS_GENERIC
    return WitnessCase.PW_LESS_POWER


def _shape(*head: int, ones: int) -> Partition:
    # parts are checked, never sorted: a misordered shape means a classification bug
    assert ones >= 0, (head, ones)
    parts = list(head) + [1] * ones
    assert all(x >= 1 for x in parts), parts
    assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)), parts
    return Partition(parts)


def construct(frame: ArithmeticFrame, case: WitnessCase) -> Partition:
    n, p, q, a = frame.n, frame.p, frame.q, frame.a
    top = frame.top
    C = WitnessCase
    if case is C.A_ZERO:
        lam = _shape(top, ones=n - top)
    elif case is C.PW_GREATER_GENERIC:
        lam = _shape(top - 1, a + 1, ones=n - (top + a))
    elif case is C.PW_GREATER_BOUNDARY:
        lam = _shape(top - 2, a + 1, ones=n - (top + a - 1))
    elif case is C.PW_GREATER_DEGENERATE:
        lam = _shape(a, 2, ones=p - 2)
    elif case is C.PW_LESS_BETA_POS:
        bq = frame.beta[frame.k] * q**frame.k
        lam = _shape(a, a - bq + 1, ones=n - 2 * a + bq - 1)
    elif case is C.PW_LESS_A1:
        lam = _shape(n - 2, 2, ones=0)
    elif case is C.PW_LESS_GENERIC:
        lam = _shape(a, ones=frame.pw)
    elif case is C.PW_LESS_POWER:
        lam = _shape(a, 2, ones=frame.pw - 2)
    else:
        raise AssertionError(case)
    assert lam.size == n, (frame, case, lam)
    return lam


@dataclass(frozen=True)
class WitnessCertificate:
    group: str
    frame: ArithmeticFrame
    case: WitnessCase
    partition: Partition
    p_core: Partition
    q_valuation: int
    self_conjugate: bool
    constituent_q_valuation: int

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.frame.n,
            "p": self.frame.p,
            "q": self.frame.q,
            "case": self.case.value,
            "partition": list(self.partition),
            "p_core": list(self.p_core),
            "q_valuation": self.q_valuation,
            "self_conjugate": self.self_conjugate,
            "constituent_q_valuation": self.constituent_q_valuation,
        }

    @classmethod
    def from_json(cls, data: dict) -> "WitnessCertificate":
        return cls(
            group=data["group"],
            frame=arithmetic_frame(data["n"], data["p"], data["q"]),
            case=WitnessCase(data["case"]),
            partition=Partition(data["partition"]),
            p_core=Partition(data["p_core"]),
            q_valuation=data["q_valuation"],
            self_conjugate=data["self_conjugate"],
            constituent_q_valuation=data["constituent_q_valuation"],
        )


def _q_valuation(frame: ArithmeticFrame, lam: Partition) -> int:
    mac = macdonald_valuation(lam, frame.q).value
    leg = legendre_valuation(lam, frame.q).value
    if mac != leg:
        raise CertificationError(f"valuation routes disagree: macdonald={mac}, legendre={leg}", frame, lam)
    return mac


def certify(frame: ArithmeticFrame, group: str = SYMMETRIC) -> WitnessCertificate:
    if group not in GROUPS:
        raise DomainError(f"group must be one of {GROUPS}, got {group!r}")
    case = classify(frame)
    lam = construct(frame, case)

    bf = block_frame(frame.n, frame.p)
    if not in_principal_block(lam, bf):
        raise CertificationError(f"p-core is {list(e_core(lam, frame.p))}, expected {list(bf.core)}", frame, lam)
    nu = _q_valuation(frame, lam)
    if nu < 1:
        raise CertificationError("q does not divide the degree", frame, lam)

    self_conj = lam == conjugate(lam)
    constituent = alternating_constituent(lam, frame.q).constituent_valuation[frame.q]
    if group == ALTERNATING:
        if frame.q == 2 and self_conj and nu < 2:
            raise CertificationError("self-conjugate witness with nu_2 < 2", frame, lam)
        if constituent < 1:
            raise CertificationError("q does not divide the alternating constituent degree", frame, lam)
    return WitnessCertificate(group, frame, case, lam, e_core(lam, frame.p), nu, self_conj, constituent)


def witness(n: int, p: int, q: int, group: str = SYMMETRIC) -> WitnessCertificate:
    """Shortcut for ``certify(arithmetic_frame(n, p, q), group)``."""
    return certify(arithmetic_frame(n, p, q), group)


def verify_certificate(cert: WitnessCertificate) -> None:
    """Re-check a (possibly deserialised) certificate against a fresh certification."""
    fresh = certify(cert.frame, cert.group)
    if fresh != cert:
        raise CertificationError("certificate does not match recomputation", cert.frame, cert.partition)

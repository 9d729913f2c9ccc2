import importlib
import json
from math import factorial, prod

import pytest

from blockwitness import (
    CertificationError,
    DomainError,
    WitnessCase,
    WitnessCertificate,
    arithmetic_frame,
    brute_force_block,
    certify,
    classify,
    conjugate,
    construct,
    hook_lengths,
    witness,
)
from blockwitness.oracle import reachable_cores
from blockwitness.rangecheck import admissible_triples
from blockwitness.witness import verify_certificate

C = WitnessCase
witness_module = importlib.import_module("blockwitness.witness")


def nu_degree(lam, q):
    d = factorial(sum(lam)) // prod(hook_lengths(lam))
    v = 0
    while d % q == 0:
        d, v = d // q, v + 1
    return v


def all_triples(nmax):
    for n in range(5, nmax + 1):
        yield from admissible_triples(n)


class TestFrame:
    def test_seven_five_two(self):
        f = arithmetic_frame(7, 5, 2)
        assert (f.a, f.w, f.k) == (2, 1, 2)
        assert f.alpha == (1, 1, 1)
        assert f.beta == (0, 1, 0)
        assert f.zeta == (1, 0, 1)

    def test_ten_five_two(self):
        f = arithmetic_frame(10, 5, 2)
        assert (f.a, f.w, f.k, f.alpha) == (0, 2, 3, (0, 1, 0, 1))

    def test_five_five_three(self):
        f = arithmetic_frame(5, 5, 3)
        assert (f.a, f.w, f.k, f.alpha) == (0, 1, 1, (2, 1))

    @pytest.mark.parametrize(
        "args, message",
        [
            ((5, 5, 5), "q must differ from p"),
            ((7, 3, 5), "q < p"),
            ((4, 3, 2), "n >= 5"),
            ((6, 7, 2), "p <= n"),
            ((9, 9, 2), "p must be prime"),
            ((9, 7, 4), "q must be prime"),
        ],
    )
    def test_preconditions(self, args, message):
        with pytest.raises(DomainError, match=message):
            arithmetic_frame(*args)

    def test_digit_invariants(self):
        for n, p, q in all_triples(60):
            f = arithmetic_frame(n, p, q)
            assert sum(d * q**j for j, d in enumerate(f.alpha)) == n
            assert sum(d * q**j for j, d in enumerate(f.beta)) == f.a
            assert sum(d * q**j for j, d in enumerate(f.zeta)) == f.pw
            assert 0 <= f.beta[f.k] <= f.zeta[f.k] <= f.alpha[f.k] <= q - 1
            if f.a >= 1:
                assert f.pw != f.top


class TestClassify:
    def test_examples(self):
        assert classify(arithmetic_frame(7, 5, 2)) is C.PW_GREATER_DEGENERATE
        assert classify(arithmetic_frame(10, 5, 2)) is C.A_ZERO
        f = arithmetic_frame(26, 23, 3)
        assert (f.a, f.alpha, f.top) == (3, (2, 2, 2), 18)
        assert classify(f) is C.PW_GREATER_BOUNDARY
        assert classify(arithmetic_frame(5, 3, 2)) is C.PW_LESS_GENERIC

    def test_degenerate_iff(self):
        for n, p, q in all_triples(60):
            f = arithmetic_frame(n, p, q)
            case = classify(f)
            boundary = f.a >= 1 and f.pw > f.top and n == (f.alpha[f.k] + 1) * q**f.k - 1
            degenerate = q == 2 and f.w == 1 and f.a == p - 3
            assert (case is C.PW_GREATER_DEGENERATE) == (boundary and degenerate)

    def test_impossible_equality_is_fatal(self):
        # forge a frame with p*w == alpha_k * q^k and a >= 1
        forged = witness_module.ArithmeticFrame(9, 2, 2, 1, 4, 3, (1, 0, 0, 1), (1, 0, 0, 0), (0, 0, 0, 1))
        assert forged.pw == forged.top
        with pytest.raises(AssertionError):
            classify(forged)


class TestConstruct:
    @pytest.mark.parametrize(
        "n, p, q, case, expected",
        [
            (10, 5, 2, C.A_ZERO, (8, 1, 1)),
            (7, 5, 2, C.PW_GREATER_DEGENERATE, (2, 2, 1, 1, 1)),
            (5, 3, 2, C.PW_LESS_GENERIC, (2, 1, 1, 1)),
            (26, 23, 3, C.PW_GREATER_BOUNDARY, (16, 4, 1, 1, 1, 1, 1, 1)),
            (7, 7, 2, C.A_ZERO, (4, 1, 1, 1)),
            (9, 7, 3, C.PW_LESS_POWER, (2, 2, 1, 1, 1, 1, 1)),
        ],
    )
    def test_examples(self, n, p, q, case, expected):
        f = arithmetic_frame(n, p, q)
        assert classify(f) is case
        lam = construct(f, case)
        assert lam == expected
        (core,) = reachable_cores(lam, p)
        assert list(core) == ([f.a] if f.a else [])
        assert nu_degree(lam, q) >= 1

    def test_mismatched_case_is_caught(self):
        # building the degenerate shape outside its case is not a partition of n
        f = arithmetic_frame(10, 5, 2)
        with pytest.raises(AssertionError):
            construct(f, C.PW_GREATER_DEGENERATE)


class TestCertify:
    def test_five_five_two(self):
        cert = witness(5, 5, 2)
        assert cert.partition == (4, 1) and cert.case is C.A_ZERO and cert.q_valuation == 2

    def test_seven_five_two_alternating(self):
        cert = witness(7, 5, 2, "alternating")
        assert cert.partition == (2, 2, 1, 1, 1)
        assert conjugate(cert.partition) == (5, 2)
        assert not cert.self_conjugate
        assert cert.constituent_q_valuation == cert.q_valuation == nu_degree((2, 2, 1, 1, 1), 2) == 1

    def test_seven_seven_two_alternating(self):
        cert = witness(7, 7, 2, "alternating")
        assert cert.partition == (4, 1, 1, 1) and cert.self_conjugate
        assert factorial(7) // prod(hook_lengths((4, 1, 1, 1))) == 20
        assert cert.q_valuation == 2 and cert.constituent_q_valuation == 1

    def test_json_schema(self):
        data = witness(7, 5, 2).to_json()
        assert list(data) == ["group", "n", "p", "q", "case", "partition", "p_core", "q_valuation",
                              "self_conjugate", "constituent_q_valuation"]
        assert json.dumps(data) == (
            '{"group": "symmetric", "n": 7, "p": 5, "q": 2, "case": "PW_GREATER_DEGENERATE", '
            '"partition": [2, 2, 1, 1, 1], "p_core": [2], "q_valuation": 1, "self_conjugate": false, '
            '"constituent_q_valuation": 1}'
        )

    def test_round_trip(self):
        for n, p, q in all_triples(20):
            for group in ("symmetric", "alternating"):
                cert = witness(n, p, q, group)
                again = WitnessCertificate.from_json(json.loads(json.dumps(cert.to_json())))
                assert again == cert
                verify_certificate(again)

    def test_tampered_certificate(self):
        data = witness(7, 5, 2).to_json()
        data["partition"] = [3, 2, 1, 1]
        with pytest.raises(CertificationError):
            verify_certificate(WitnessCertificate.from_json(data))

    def test_bad_group(self):
        with pytest.raises(DomainError):
            certify(arithmetic_frame(7, 5, 2), "cyclic")

    def test_failure_carries_context(self, monkeypatch):
        monkeypatch.setattr(witness_module, "construct", lambda frame, case: witness_module.Partition([7]))
        with pytest.raises(CertificationError) as info:
            witness(7, 5, 2)
        assert info.value.partition == (7,) and info.value.frame.n == 7

    def test_oracle_membership(self):
        for n, p, q in all_triples(18):
            members = brute_force_block(n, p, q)
            assert witness(n, p, q).partition in members


class TestSelfConjugacy:
    def test_pw_greater_analysis(self):
        for n, p, q in all_triples(60):
            if q != 2:
                continue
            f = arithmetic_frame(n, p, q)
            case = classify(f)
            lam = construct(f, case)
            if case.value.startswith("PW_GREATER") and n != 2 ** (f.k + 1) - 1:
                assert (lam == conjugate(lam)) == (f.a == 1 and n == 2 ** (f.k + 1) - 2)
            if case.value.startswith("PW_LESS"):
                assert f.beta[f.k] == 0
                assert lam != conjugate(lam)

    def test_hook_hypotheses_for_self_conjugate(self):
        seen = 0
        for n, p, q in all_triples(60):
            if q != 2:
                continue
            f = arithmetic_frame(n, p, q)
            lam = construct(f, classify(f))
            if lam == conjugate(lam):
                seen += 1
                hooks = hook_lengths(lam)
                assert sum(h % 2**f.k == 0 for h in hooks) == 0
                assert sum(h % 2 ** (f.k - 1) == 0 for h in hooks) <= 2
        assert seen

"""Command-line front end.

Exit codes: 0 success, 2 usage or precondition violation, 3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .blocks import block_frame, block_members, legendre_valuation
from .partitions import DomainError, e_core, parse_partition
from .rangecheck import check_range
from .tower import core_tower, macdonald_valuation, require_prime
from .witness import ALTERNATING, SYMMETRIC, CertificationError, arithmetic_frame, certify

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3

CSV_COLUMNS = ["n", "p", "q", "group", "case", "partition", "q_valuation", "self_conjugate"]
GROUP_FLAGS = {"sym": SYMMETRIC, "alt": ALTERNATING}


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(lam) -> str:
    return json.dumps(list(lam), separators=(",", ":"))


def _csv_row(n, p, q, group, case, lam, nu, self_conj) -> list:
    return [n, p, q, group, case, _fmt(lam), nu, str(self_conj).lower()]


def cmd_witness(args) -> int:
    frame = arithmetic_frame(args.n, args.p, args.q)
    cert = certify(frame, GROUP_FLAGS[args.group])
    if args.format == "json":
        print(json.dumps(cert.to_json()))
    else:
        data = cert.to_json()
        width = max(map(len, data))
        for key, value in data.items():
            print(f"{key:<{width}}  {_fmt(value) if isinstance(value, list) else value}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    require_prime(args.p, "p")
    require_prime(args.q, "q")
    if args.q >= args.p:
        raise DomainError("q must differ from p" if args.q == args.p else "need q < p")
    frame = block_frame(args.n, args.p)
    records = block_members(frame, args.q, with_degree=True)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for rec in records:
                nu = rec.valuations[args.q].value
                writer.writerow(_csv_row(args.n, args.p, args.q, SYMMETRIC, "", rec.partition, nu, rec.self_conjugate))
    if args.format == "json":
        print(json.dumps([rec.to_json() for rec in records]))
    else:
        print(f"B_{args.n}({args.q},{args.p}): {len(records)} characters")
        for rec in records:
            print(f"{_fmt(rec.partition)}  nu_{args.q}={rec.valuations[args.q].value}  degree={rec.degree}")
    return EXIT_OK


def cmd_check_range(args) -> int:
    groups = {"both": (SYMMETRIC, ALTERNATING), "sym": (SYMMETRIC,), "alt": (ALTERNATING,)}[args.groups]
    report = check_range(args.nmax, groups, jobs=args.jobs)
    for line in report.summary_lines():
        print(line)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for c in report.certificates:
                f = c.frame
                writer.writerow(_csv_row(f.n, f.p, f.q, c.group, c.case.value, c.partition,
                                         c.q_valuation, c.self_conjugate))
    if not report.ok:
        print(json.dumps(report.failures))
        return EXIT_VERIFY
    return EXIT_OK


def cmd_core(args) -> int:
    print(_fmt(e_core(args.partition, args.e)))
    return EXIT_OK


def cmd_tower(args) -> int:
    tower = core_tower(args.partition, args.q)
    if args.format == "json":
        print(json.dumps(tower.to_json(), separators=(",", ":")))
        return EXIT_OK
    for j, layer in enumerate(tower.layers):
        body = ",".join(_fmt(mu) for mu in layer)
        print(f"layer {j}: [{body}]  size {tower.layer_size(j)}")
    return EXIT_OK


def cmd_valuation(args) -> int:
    mac = macdonald_valuation(args.partition, args.q)
    leg = legendre_valuation(args.partition, args.q)
    print(f"{mac.method}: {mac.value}")
    print(f"{leg.method}: {leg.value}")
    if mac.value != leg.value:
        print("valuation methods disagree", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockwitness",
        description="Principal-block characters of symmetric and alternating groups with degree divisible by q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="certify a witness character for (n, p, q)")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--group", choices=sorted(GROUP_FLAGS), default="sym")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", help="list B_n(q,p) by brute force")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check-range", help="certify every admissible triple up to --nmax")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--groups", choices=["both", "sym", "alt"], default="both")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_check_range)

    p = sub.add_parser("core", help="e-core of a partition literal such as [4,2,1]")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("e", type=int)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("tower", help="q-core tower of a partition")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("valuation", help="nu_q of the degree, by both methods")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_valuation)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())

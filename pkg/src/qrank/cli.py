"""qrank command-line front end.

Subcommands: wd, rgf, dual, restrict, polymatroid, check, random-code,
lattice.  JSON is the single interchange format; exit code 2 on
malformed input, 1 on failed checks.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .delsarte import (
    RankMetricCode,
    dual_code,
    random_code,
    rank_distribution,
    rank_weight_enumerator,
    restrict,
)
from .errors import QrankError
from .gf import FieldContext
from .identities import IDENTITY_RUNNERS
from .qpolymatroid import from_code, rank_generating_function
from .qseries import galois_number, gaussian_binomial
from .subspaces import Subspace, enumerate_subspaces


def _env_int(name: str, default: int) -> int:
    val = os.environ.get(name)
    return int(val) if val else default


def _load_code(path: str) -> RankMetricCode:
    with open(path) as fh:
        return RankMetricCode.from_json(json.load(fh))


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _code_text(C: RankMetricCode, extra: dict | None = None) -> str:
    obj = C.to_json()
    if extra:
        obj.update(extra)
    return json.dumps(obj, indent=2) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrank", description=__doc__)
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="codeword enumeration cap (default QRANK_BUDGET or 2^24)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker threads for identity checks (default QRANK_THREADS or 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_code_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("code", help="code JSON file")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("-o", "--output", default=None)
        return p

    add_code_cmd("wd", "rank distribution and rank weight enumerator")
    p = add_code_cmd("rgf", "four-variable rank generating function of P_C")
    p.add_argument("--hat", action="store_true", help="use the hatted variant")
    p = sub.add_parser("dual", help="trace-product dual code")
    p.add_argument("code")
    p.add_argument("-o", "--output", default=None)
    p = sub.add_parser("restrict", help="restriction C(J) to a subspace")
    p.add_argument("code")
    p.add_argument("subspace", help='basis rows, e.g. "1,0;0,1" ("" for zero)')
    p.add_argument("-o", "--output", default=None)
    add_code_cmd("polymatroid", "rank table of P_C over the subspace lattice")
    p = sub.add_parser("check", help="verify identities; exit 0 iff all pass")
    p.add_argument("identity", choices=sorted(IDENTITY_RUNNERS))
    p.add_argument("code")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p = sub.add_parser("random-code", help="seeded random code file")
    p.add_argument("--q", type=int, default=None, help="prime field size")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p = sub.add_parser("lattice", help="subspace lattice counts / listing")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    return parser


def _field_from_args(args) -> FieldContext:
    if args.q is not None:
        return FieldContext(args.q, 1)
    if args.p is not None:
        return FieldContext(args.p, args.e)
    raise QrankError("specify --q (prime) or --p/--e")


def _run(args) -> int:
    budget = args.budget if args.budget is not None else _env_int("QRANK_BUDGET", 2**24)
    threads = args.threads if args.threads is not None else _env_int("QRANK_THREADS", 1)
    if budget < 1:
        raise QrankError("budget must be >= 1")

    if args.command == "wd":
        C = _load_code(args.code)
        dist = rank_distribution(C, budget)
        enum = rank_weight_enumerator(C, budget)
        obj = {"rank_distribution": list(dist), "enumerator": str(enum)}
        if args.format == "json":
            _emit(json.dumps(obj) + "\n", args.output)
        else:
            _emit(f"rank distribution: {list(dist)}\nenumerator: {enum}\n", args.output)
        return 0

    if args.command == "rgf":
        C = _load_code(args.code)
        R = rank_generating_function(from_code(C), hatted=args.hat)
        if args.format == "json":
            _emit(json.dumps({"terms": R.to_records()}) + "\n", args.output)
        else:
            lines = [" ".join(str(v) for v in rec) for rec in R.to_records()]
            _emit("\n".join(lines) + "\n", args.output)
        return 0

    if args.command == "dual":
        C = _load_code(args.code)
        _emit(_code_text(dual_code(C)), args.output)
        return 0

    if args.command == "restrict":
        C = _load_code(args.code)
        J = Subspace.from_key(args.subspace, C.n, C.field)
        _emit(_code_text(restrict(C, J)), args.output)
        return 0

    if args.command == "polymatroid":
        C = _load_code(args.code)
        P = from_code(C)
        if args.format == "json":
            _emit(json.dumps({"r": P.r, "rank_table": P.rank_table()}) + "\n", args.output)
        else:
            _emit("\n".join(P.rank_table_lines()) + "\n", args.output)
        return 0

    if args.command == "check":
        C = _load_code(args.code)
        reports = IDENTITY_RUNNERS[args.identity](C, budget, threads)
        if args.format == "json":
            sys.stdout.write(json.dumps([r.as_dict() for r in reports]) + "\n")
        else:
            for r in reports:
                sys.stdout.write(str(r) + "\n")
        return 0 if all(r.passed for r in reports) else 1

    if args.command == "random-code":
        field = _field_from_args(args)
        rng = random.Random(args.seed)
        C = random_code(args.n, args.m, field, args.dim, rng)
        _emit(_code_text(C, {"seed": args.seed}), args.output)
        return 0

    if args.command == "lattice":
        field = _field_from_args(args)
        if args.count_only:
            if args.dim is None:
                count = galois_number(args.n, field.q)
            else:
                count = gaussian_binomial(args.n, args.dim, field.q)
            sys.stdout.write(f"{count}\n")
            return 0
        for S in enumerate_subspaces(args.n, field, args.dim):
            sys.stdout.write(f"{S.canonical_key() or '0'}\n")
        return 0

    raise QrankError(f"unknown command {args.command}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (QrankError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"qrank: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

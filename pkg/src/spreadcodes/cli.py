"""Command-line front end.

Subcommands: ``params`` (code parameters), ``encode`` (projective point
file to subspace file), ``decode`` (subspace file to codeword file),
``simulate`` (seeded channel statistics), ``bench`` (operation-count
table across block sizes).

Exit codes: 0 success, 1 usage or input error, 2 decoding failure.

File formats
    point file      r lines, one extension-field element per line as k
                    space-separated base-q digits, lowest first
    subspace file   header line "q k r p_0 ... p_{k-1}", then
                    "rows cols", then one basis row per line
"""

from __future__ import annotations

import argparse
import sys

from .channel import simulate, trial_rng, random_codeword, corrupt, ChannelSpec
from .decoder import ReceivedSpace, decode
from .gf import OpCount, is_prime
from .linalg import Matrix
from .spread import SpreadCode, Subspace, format_subspace


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # input errors must exit 1, not argparse's 2
        raise UsageError(message)


def _add_code_flags(p, k_list: bool = False):
    p.add_argument("--q", type=int, required=True, help="base field order")
    if k_list:
        p.add_argument("--k", type=str, required=True,
                       help="comma-separated block sizes, e.g. 3,5,7,9")
    else:
        p.add_argument("--k", type=int, required=True, help="block size")
    p.add_argument("--r", type=int, default=2, help="number of blocks")
    p.add_argument("--p", type=int, nargs="+", default=None,
                   help="modulus coefficients p_0 ... p_{k-1}")


def _make_code(args, k=None) -> SpreadCode:
    q = args.q
    k = args.k if k is None else k
    if not is_prime(q):
        raise UsageError(f"--q must be prime, got {q}")
    if k < 2:
        raise UsageError("--k must be at least 2")
    if args.r < 2:
        raise UsageError("--r must be at least 2")
    return SpreadCode(q, k, args.r, tuple(args.p) if args.p else None)


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_point(lines: list[str], code: SpreadCode) -> list[tuple]:
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if len(rows) != code.r:
        raise InputError(f"line {len(lines)}: expected {code.r} coordinate "
                         f"lines, found {len(rows)}")
    point = []
    for lineno, ln in rows:
        try:
            point.append(code.ext.from_str(ln))
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
    return point


def _parse_subspace(lines: list[str], code: SpreadCode) -> Subspace:
    idx = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not idx:
        raise InputError("line 1: empty subspace file")
    lineno, header = idx[0]
    try:
        file_code = SpreadCode.from_header(header)
    except ValueError as exc:
        raise InputError(f"line {lineno}: {exc}") from exc
    if file_code.header() != code.header():
        raise InputError(f"line {lineno}: file header {header!r} does not "
                         f"match the requested code {code.header()!r}")
    if len(idx) < 2:
        raise InputError(f"line {lineno}: missing matrix size line")
    lineno, size = idx[1]
    try:
        nrows, ncols = map(int, size.split())
    except ValueError as exc:
        raise InputError(f"line {lineno}: bad size line {size!r}") from exc
    if ncols != code.n:
        raise InputError(f"line {lineno}: expected {code.n} columns")
    if len(idx) != 2 + nrows:
        raise InputError(f"line {lineno}: expected {nrows} basis rows, "
                         f"found {len(idx) - 2}")
    rows = []
    for lineno, ln in idx[2:]:
        digits = ln.split()
        if len(digits) != ncols:
            raise InputError(f"line {lineno}: expected {ncols} entries, "
                             f"found {len(digits)}")
        try:
            rows.append([code.base.from_str(d) for d in digits])
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
    sub = Subspace.from_generators(Matrix(code.base, rows))
    if sub.dim < 1:
        raise InputError(f"line {lineno}: basis spans only the zero space")
    return sub


def _cmd_params(args) -> int:
    code = _make_code(args)
    print(code.header())
    print(f"|S|={code.size} dmin={code.min_distance}")
    return 0


def _cmd_encode(args) -> int:
    code = _make_code(args)
    point = _parse_point(_read_lines(args.infile), code)
    cw = code.encode(point)
    _write(args.outfile, format_subspace(code, cw.subspace))
    return 0


def _cmd_decode(args) -> int:
    code = _make_code(args)
    sub = _parse_subspace(_read_lines(args.infile), code)
    result = decode(ReceivedSpace(sub, code.k), code)
    if not result.ok:
        print(f"decoding failed: {result.reason}", file=sys.stderr)
        return 2
    _write(args.outfile, format_subspace(code, result.codeword.subspace))
    return 0


def _cmd_simulate(args) -> int:
    code = _make_code(args)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    records = simulate(code, args.trials,
                       [(args.errors, args.erasures)], seed=args.seed)
    for rec in records:
        print(rec.line())
    return 0


def _cmd_bench(args) -> int:
    try:
        ks = [int(x) for x in args.k.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --k list {args.k!r}") from exc
    if not ks or any(k < 2 for k in ks):
        raise UsageError("--k must list block sizes of at least 2")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    print("k n mean_ops max_ops")
    for k in ks:
        code = _make_code(args, k=k)
        spec = ChannelSpec(erasures=1, errors=0, seed=args.seed)
        ops = []
        for t in range(args.trials):
            rng = trial_rng(args.seed, k, t)
            cw = random_codeword(code, rng)
            received = corrupt(cw, spec, code, rng)
            with OpCount() as counter:
                decode(received, code)
            ops.append(counter.ext_total)
        print(f"{k} {code.n} {sum(ops) / len(ops):.2f} {max(ops)}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="spreadcodes",
                     description="spread codes over F_q: construction, "
                                 "encoding, decoding and simulation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print code parameters")
    _add_code_flags(p)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("encode", help="encode a projective point file")
    _add_code_flags(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", default=None)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="decode a subspace file")
    _add_code_flags(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", default=None)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="seeded channel statistics")
    _add_code_flags(p)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--errors", type=int, default=0)
    p.add_argument("--erasures", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("bench", help="operation-count table over block sizes")
    _add_code_flags(p, k_list=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

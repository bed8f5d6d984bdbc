"""Command-line front end.

Exit codes: 0 success, 1 parameter error, 2 usage error, 3 some word failed to
decode (or, for ``simulate``, some trial did not succeed).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .code import BlockWord, build_spec, encode, message_of
from .errors import DecodingFailure, QBCHError
from .interleaved import diagonalize, row_parity_matrix, splitting_field
from .matring import MatRingElem
from .sim import DECODERS, simulate

EXIT_OK, EXIT_PARAM, EXIT_USAGE, EXIT_DECODE = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def cmd_make_code(args) -> int:
    gamma = None
    if args.gamma is not None:
        from .field import build_field, prime_power

        p, e = prime_power(args.q)
        field = build_field(p, e * args.s)
        ell = args.l
        if len(args.gamma) != ell * ell or any(not 0 <= x < field.order for x in args.gamma):
            print(f"error: --gamma needs {ell * ell} entries in 0..{field.order - 1}",
                  file=sys.stderr)
            return EXIT_PARAM
        gamma = MatRingElem.from_rows(field, [args.gamma[i * ell:(i + 1) * ell]
                                              for i in range(ell)])
    spec = build_spec(args.q, args.s, args.l, args.m, args.delta, gamma)
    io.save_spec(spec, args.out)
    print(f"length={spec.length} dim={spec.dim} tau={spec.tau} s'={splitting_field(spec)}")
    return EXIT_OK


def cmd_encode(args) -> int:
    spec = io.load_spec(args.code)
    out = [io.format_word(encode(spec, msg))
           for _, msg in io.parse_symbol_lines(Path(args.input).read_text(), spec.dim, spec.q)]
    Path(args.out).write_text("".join(line + "\n" for line in out))
    return EXIT_OK


def cmd_decode(args) -> int:
    spec = io.load_spec(args.code)
    decoder = DECODERS[args.decoder]
    out, failed = [], 0
    for _, symbols in io.parse_symbol_lines(Path(args.input).read_text(), spec.length, spec.q):
        y = BlockWord.from_flat(spec.base, symbols, spec.ell)
        try:
            c = decoder(spec, y)
        except DecodingFailure:
            out.append("FAIL")
            failed += 1
            continue
        out.append(io.format_word(c if args.output == "codeword" else message_of(spec, c)))
    Path(args.out).write_text("".join(line + "\n" for line in out))
    return EXIT_DECODE if failed else EXIT_OK


def cmd_simulate(args) -> int:
    spec = io.load_spec(args.code)
    reports = [simulate(spec, args.decoder, t, args.trials, args.seed) for t in args.errors]
    print("decoder\terrors\ttrials\tsuccesses\tfailures\tmiscorrections\tsuccess_rate\tseed")
    for r in reports:
        print(f"{r.decoder}\t{r.errors}\t{r.trials}\t{r.successes}\t{r.failures}\t"
              f"{r.miscorrections}\t{r.success_rate:.4f}\t{r.seed}")
    if args.plot:
        from .plotting import plot_outcomes

        plot_outcomes(reports, args.plot,
                      title=f"{args.decoder}, q={spec.q} l={spec.ell} m={spec.m} "
                            f"delta={spec.delta}")
    return EXIT_OK if all(r.successes == r.trials for r in reports) else EXIT_DECODE


def _print_matrix(name: str, rows):
    print(f"{name}:")
    for row in rows:
        print(" ".join(str(x) for x in row))


def cmd_inspect(args) -> int:
    spec = io.load_spec(args.code)
    print(f"q={spec.q} s={spec.s} l={spec.ell} m={spec.m} delta={spec.delta}")
    print(f"length={spec.length} dim={spec.dim} tau={spec.tau}")
    _print_matrix("gamma", spec.gamma.rows)
    _print_matrix("H", spec.parity)
    _print_matrix("G", spec.generator)
    eig = diagonalize(spec)
    print(f"s'={eig.s_prime}")
    print("eigenvalues: " + " ".join(str(x) for x in eig.lambdas))
    _print_matrix("P", eig.P)
    for i, lam in enumerate(eig.lambdas, 1):
        _print_matrix(f"row {i} parity (lambda={lam})",
                      row_parity_matrix(eig.field, lam, spec.m, spec.delta))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbch", description="Quasi-BCH code toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make-code", help="construct a code and write its spec file")
    for flag in ("--q", "--s", "--l", "--m", "--delta"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--gamma", type=_int_list, help="l*l entries of Gamma, row-major")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_make_code)

    p = sub.add_parser("encode", help="encode one message per line")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode one received word per line")
    p.add_argument("--code", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--decoder", choices=("wb", "ilrs", "collab"), default="wb")
    p.add_argument("--output", choices=("message", "codeword"), default="message")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="seeded Monte-Carlo block-error channel")
    p.add_argument("--code", required=True)
    p.add_argument("--decoder", choices=("wb", "ilrs", "collab", "collaborative"),
                   required=True)
    p.add_argument("--errors", type=_int_list, required=True,
                   help="block errors per word; a comma list gives one row each")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--plot", help="also write a stacked outcome chart to this path")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("inspect", help="print H, G, eigenvalues and row parity matrices")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QBCHError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())

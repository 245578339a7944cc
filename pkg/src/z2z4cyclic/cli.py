"""Command-line interface.

Code files hold a header line ``"alpha beta"`` followed by one generator row
per line, binary entries, a ``|`` separator, then quaternary entries::

    # the code {(0|0), (1|2)}
    1 1
    1 | 2

Exit status: 0 success, 1 usage error, 2 invalid input, 3 internal
inconsistency.
"""
from __future__ import annotations

import argparse
import sys

from .algebra import BinaryPolynomial, QuaternaryPolynomial, gen_poly_binary_cyclic
from .codes import AdditiveCode, cyclic_closure, equals, is_cyclic, puncture_y, residue, torsion
from .cyclicgen import CyclicGenerators, compute_generators, reconstruct, verify_conditions
from .errors import InternalInconsistency, InvalidInput, ParseError
from .linalg import MixedMatrix
from .oracle import sample_valid_generators
from .words import MixedWord

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


def _int_token(tok: str, lineno: int, hi: int, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(lineno, f"bad token {tok!r} in {what}")
    v = int(tok)
    if v >= hi:
        raise ParseError(lineno, f"entry {v} out of range in {what}")
    return v


def parse_code_file(text: str) -> AdditiveCode:
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            tokens = line.split()
            if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
                raise ParseError(lineno, "header must be two non-negative integers 'alpha beta'")
            header = (int(tokens[0]), int(tokens[1]))
            continue
        alpha, beta = header
        if line.count("|") != 1:
            raise ParseError(lineno, "row must contain exactly one '|' separator")
        left, right = line.split("|")
        xs, ys = left.split(), right.split()
        if len(xs) != alpha:
            raise ParseError(lineno, f"expected {alpha} binary entries, found {len(xs)}")
        if len(ys) != beta:
            raise ParseError(lineno, f"expected {beta} quaternary entries, found {len(ys)}")
        rows.append(MixedWord([_int_token(t, lineno, 2, "binary part") for t in xs],
                              [_int_token(t, lineno, 4, "quaternary part") for t in ys]))
    if header is None:
        raise ParseError(max(len(text.splitlines()), 1), "missing header line")
    return AdditiveCode(MixedMatrix(header[0], header[1], rows))


def format_code_file(M: MixedMatrix | AdditiveCode) -> str:
    if isinstance(M, AdditiveCode):
        M = M.gens
    lines = [f"{M.alpha} {M.beta}"] + [str(r) for r in M.rows]
    return "\n".join(lines) + "\n"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="z2z4cyclic",
                description="Generator polynomials of Z2Z4-additive cyclic codes.")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("generators", help="compute (b, l, f, h)")
    g.add_argument("file")
    g.add_argument("--pretty", action="store_true", help="print x^k notation")
    g.add_argument("--closure", action="store_true",
                   help="close the code under cyclic shifts first")

    for name, text in [("verify", "check cyclicity, type and the round trip"),
                       ("type", "print (alpha, beta; gamma, delta; kappa)"),
                       ("standard-form", "print the standard generator matrix"),
                       ("info", "print cardinality and torsion/residue polynomials")]:
        sub.add_parser(name, help=text).add_argument("file")

    r = sub.add_parser("reconstruct", help="code file from a polynomial tuple")
    r.add_argument("--alpha", type=int, required=True)
    r.add_argument("--beta", type=int, required=True)
    for name in "blfh":
        r.add_argument(f"--{name}", required=True, metavar="COEFFS",
                       help="ascending coefficients, e.g. '3 1'")

    s = sub.add_parser("sample", help="random valid tuple and its code")
    s.add_argument("--alpha", type=int, required=True)
    s.add_argument("--beta", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    return p


def _read(path: str) -> AdditiveCode:
    if path == "-":
        return parse_code_file(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def _cmd_generators(args, out):
    C = _read(args.file)
    if args.closure:
        C = cyclic_closure(C)
    g = compute_generators(C)
    out.extend(g.lines(pretty=args.pretty))


def _cmd_verify(args, out):
    C = _read(args.file)
    cyclic = is_cyclic(C)
    out.append(f"cyclic: {'yes' if cyclic else 'no'}")
    out.append(f"type: {C.type}")
    if not cyclic:
        out.append("round-trip: skipped (code is not cyclic)")
        return EXIT_OK
    if C.beta % 2 == 0:
        out.append("round-trip: skipped (beta is even)")
        return EXIT_OK
    g = compute_generators(C, check_cyclic=False)
    out.extend(g.lines())
    report = verify_conditions(g)
    out.extend(f"{c.name}: {'pass' if c.passed else 'fail'}" for c in report.conditions)
    same = report.ok and equals(reconstruct(g, check=False), C)
    out.append(f"round-trip: {'ok' if same else 'FAILED'}")
    return EXIT_OK if same else EXIT_INTERNAL


def _cmd_reconstruct(args, out):
    try:
        g = CyclicGenerators(args.alpha, args.beta,
                             BinaryPolynomial.parse(args.b), BinaryPolynomial.parse(args.l),
                             QuaternaryPolynomial.parse(args.f), QuaternaryPolynomial.parse(args.h))
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    if args.alpha < 0 or args.beta < 0:
        raise InvalidInput("alpha and beta must be non-negative")
    out.append(format_code_file(reconstruct(g)).rstrip("\n"))


def _cmd_type(args, out):
    out.append(str(_read(args.file).type))


def _cmd_standard_form(args, out):
    sf = _read(args.file).standard_form
    out.append(f"# type: {sf.code_type}")
    out.append("# perm_x:" + "".join(f" {i}" for i in sf.perm_x))
    out.append("# perm_y:" + "".join(f" {i}" for i in sf.perm_y))
    out.append(format_code_file(sf.matrix).rstrip("\n"))


def _cmd_info(args, out):
    C = _read(args.file)
    out.append(f"type: {C.type}")
    out.append(f"cardinality: {C.size}")
    cy = puncture_y(C)
    if is_cyclic(C):
        out.append(f"torsion: {gen_poly_binary_cyclic(torsion(cy, C.beta), C.beta)}")
        out.append(f"residue: {gen_poly_binary_cyclic(residue(cy, C.beta), C.beta)}")
    else:
        out.append("torsion: n/a (code is not cyclic)")
        out.append("residue: n/a (code is not cyclic)")


def _cmd_sample(args, out):
    g = sample_valid_generators(args.alpha, args.beta, args.seed)
    out.extend(f"# {line}" for line in g.lines())
    out.append(format_code_file(reconstruct(g)).rstrip("\n"))


_COMMANDS = {
    "generators": _cmd_generators,
    "verify": _cmd_verify,
    "reconstruct": _cmd_reconstruct,
    "type": _cmd_type,
    "standard-form": _cmd_standard_form,
    "info": _cmd_info,
    "sample": _cmd_sample,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    out: list[str] = []
    try:
        code = _COMMANDS[args.command](args, out) or EXIT_OK
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    if out:
        stdout.write("\n".join(out) + "\n")
    return code


def main() -> None:
    sys.exit(run())

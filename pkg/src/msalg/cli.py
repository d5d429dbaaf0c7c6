"""Command line: ``msalg <command> ...``.

Exit status 0 on success, 1 on bad input, 2 when a built-in theorem check or
the brute-force oracle disagrees with the fast path.
"""

import argparse
import sys

from . import io
from .congruence import all_congruences, brute_force_congruences
from .errors import MSAlgError, TheoremViolation
from .extension import (
    check_representability_conditions,
    is_perfect_extension,
    subalgebra_generated,
)
from .lattice import is_distributive
from .ms import MSAlgebra, substructures, variety_of
from .triple import construct, pairs_of


def _names(A, items):
    return "{" + ",".join(A.names[i] for i in sorted(items)) + "}"


def cmd_check(args, out):
    A = io.load_algebra(args.file)
    out(f"elements: {A.n}")
    if not isinstance(A, MSAlgebra):
        out("kind: lattice")
        out(f"distributive: {'true' if is_distributive(A) else 'false'}")
        return 0
    flags = variety_of(A)
    for key, value in flags.as_dict().items():
        out(f"{key}: {'true' if value else 'false'}")
    s = substructures(A)
    out(f"closed: {_names(A, s.closed)}")
    out(f"dense: {_names(A, s.dense)}")
    if flags.principal_ms:
        out(f"d: {A.names[s.smallest_dense]}")
    out(f"boolean_center: {_names(A, s.boolean_center)}")
    out(f"stone_part: {_names(A, s.stone_part)}")
    return 0


def cmd_con(args, out):
    A = io.load_algebra(args.file)
    con = all_congruences(A)
    out(f"congruences: {len(con)}")
    for i, theta in enumerate(con):
        out(f"{i}: {io.format_congruence(A, theta, full=args.full)}")
    if args.oracle:
        oracle = brute_force_congruences(A, cap=args.max_oracle)
        if set(oracle) != set(con):
            out(f"oracle: mismatch ({len(oracle)} compatible partitions)")
            return 2
        out("oracle: agrees")
    return 0


def cmd_construct(args, out):
    t = io.load_triple(args.file)
    text = io.serialize_algebra(construct(t).algebra)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out(f"wrote {args.output}")
    else:
        out(text.rstrip("\n"))
    return 0


def cmd_pairs(args, out):
    L = io.load_algebra(args.file)
    A = pairs_of(L)
    Lcc, DL = A.parts.Lcc, A.parts.DL
    out(f"d: {L.names[A.parts.d]}")
    out(f"pairs: {len(A)}")
    for i, p in enumerate(A):
        out(
            f"{i}: ({io.format_congruence(Lcc, p.theta1)}, {io.format_congruence(DL, p.theta2)})"
            f" -> {A.to_con[i]}: {io.format_congruence(L, A.con[A.to_con[i]])}"
        )
    return 0


def cmd_perfect(args, out):
    A = io.load_algebra(args.file)
    if args.stone:
        sub = substructures(A).stone_part
    elif args.sub:
        sub = subalgebra_generated(A, [A.index(x) for x in args.sub])
    else:
        raise MSAlgError("give --sub NAMES or --stone")
    report = is_perfect_extension(A, sub)
    S = A.induced(report.sub)
    out(f"subalgebra: {_names(A, report.sub)}")
    out(f"perfect: {'true' if report.perfect else 'false'}")
    out(f"cep: {'true' if report.cep else 'false'}")
    for theta, count, exts in report.per_congruence:
        out(f"{io.format_congruence(S, theta)}: {count} extension(s)")
        for e in exts:
            out(f"  {io.format_congruence(A, e)}")
    return 0


def cmd_represent(args, out):
    P = io.load_pairset(args.file)
    r = check_representability_conditions(P)
    if not r.agrees:
        raise TheoremViolation("representability conditions disagree with the direct search")
    if r.representable:
        phi = ", ".join(f"{P.M.names[i]}->{P.D.names[v]}" for i, v in enumerate(r.representable_phi))
        out(f"representable: phi = {{{phi}}}")
        return 0
    cond, witness = r.first_failure()
    out(f"not representable: {cond} witness={_format_witness(P, cond, witness)}")
    return 0


def _format_pair(P, pair):
    t1, t2 = pair
    return f"({io.format_congruence(P.M, t1, full=True)},{io.format_congruence(P.D, t2, full=True)})"


def _format_witness(P, cond, witness):
    if witness is None:
        return "none"
    if cond == "condition(1)":
        return f"{_format_pair(P, witness[0])} v {_format_pair(P, witness[1])}"
    pair, alpha = witness
    return f"{_format_pair(P, pair)} above {io.format_congruence(P.M, alpha, full=True)}"


def cmd_dot(args, out):
    A = io.load_algebra(args.file)
    marks = None
    if args.congruence is not None:
        con = all_congruences(A)
        if not 0 <= args.congruence < len(con):
            raise MSAlgError(f"congruence index must be in 0..{len(con) - 1}")
        marks = con[args.congruence]
    text = io.emit_dot(A, marks)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out(f"wrote {args.output}")
    else:
        out(text.rstrip("\n"))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="msalg", description="Finite principal MS-algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a file and print variety flags")
    c.add_argument("file")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("con", help="list the congruence lattice")
    c.add_argument("file")
    c.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    c.add_argument("--max-oracle", type=int, default=10, metavar="N")
    c.add_argument("--full", action="store_true", help="print singleton blocks too")
    c.set_defaults(run=cmd_con)

    c = sub.add_parser("construct", help="build the algebra of a triple file")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(run=cmd_construct)

    c = sub.add_parser("pairs", help="print congruence pairs and their congruences")
    c.add_argument("file")
    c.set_defaults(run=cmd_pairs)

    c = sub.add_parser("perfect", help="extension report for a subalgebra")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--sub", nargs="+", metavar="NAME", help="generators of the subalgebra")
    g.add_argument("--stone", action="store_true", help="use the greatest Stone subalgebra")
    c.set_defaults(run=cmd_perfect)

    c = sub.add_parser("represent", help="test a pair-set file for representability")
    c.add_argument("file")
    c.set_defaults(run=cmd_represent)

    c = sub.add_parser("dot", help="emit a Graphviz diagram")
    c.add_argument("file")
    c.add_argument("--congruence", type=int, metavar="INDEX")
    c.add_argument("-o", "--output")
    c.set_defaults(run=cmd_dot)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    lines = []
    try:
        status = args.run(args, lines.append)
    except TheoremViolation as exc:
        print(f"error:{exc.kind}: {exc}", file=sys.stderr)
        return 2
    except MSAlgError as exc:
        print(f"error:{exc.kind}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error:io: {exc}", file=sys.stderr)
        return 1
    if lines:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())

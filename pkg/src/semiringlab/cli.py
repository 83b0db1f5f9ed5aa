"""Command-line front end.

Exit codes: 0 for a completed computation (negative verdicts included),
2 for input errors (bad files, bad tables, size thresholds, violated
preconditions), 3 for a cross-validation discrepancy.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checkers, congruence, constructions, core, matrixring
from .errors import CrossCheckError, InputError


def _emit(obj, fmt, out=None):
    out = out if out is not None else sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        _emit_text(obj, out, 0)


def _inline(val):
    if not isinstance(val, (dict, list)):
        return True
    return isinstance(val, list) and all(not isinstance(x, (dict, list)) for x in val)


def _emit_text(obj, out, depth):
    pad = "  " * depth
    if isinstance(obj, dict):
        for key in obj:
            val = obj[key]
            if _inline(val) or not val:
                out.write(f"{pad}{key}: {_scalar(val)}\n")
            else:
                out.write(f"{pad}{key}:\n")
                _emit_text(val, out, depth + 1)
    elif isinstance(obj, list):
        for val in obj:
            if _inline(val):
                out.write(f"{pad}- {_scalar(val)}\n")
            else:
                out.write(f"{pad}-\n")
                _emit_text(val, out, depth + 1)
    else:
        out.write(f"{pad}{_scalar(obj)}\n")


def _scalar(val):
    if val is True:
        return "true"
    if val is False:
        return "false"
    if val is None:
        return "null"
    if isinstance(val, (dict, list)):
        return json.dumps(val, sort_keys=True)
    return str(val)


def _write_semiring(S, path, fmt):
    if path:
        core.dump_semiring(S, path)
    else:
        _emit(S.to_dict(), "json" if fmt == "text" else fmt)
    return 0


def _analysis(S, matrix_n, threshold):
    report = {
        "name": S.name,
        "size": S.size,
        "flags": core.classify(S).to_dict(),
        "profile": core.element_profile(S).to_dict(S),
    }
    if S.size >= 2:
        mono = congruence.monolith(S)
        report["simple"] = congruence.is_congruence_simple(S)
        report["si"] = mono is not None
        report["monolith"] = mono.partition.to_blocks(S.elements) if mono else None
    if matrix_n:
        mat = matrixring.matrix_semiring(S, matrix_n, threshold=threshold)
        T = mat.semiring
        mono = congruence.monolith(T)
        report["matrix"] = {
            "n": matrix_n,
            "size": T.size,
            "simple": congruence.is_congruence_simple(T),
            "si": mono is not None,
            "monolith": None
            if mono is None
            else {
                "generating_pair": [T.elements[i] for i in mono.generating_pair],
                "num_blocks": mono.partition.num_blocks,
            },
        }
    return report


def _gen_from_spec(spec):
    if spec == "l2":
        return constructions.gen_l2()
    if spec.startswith("bool:"):
        return constructions.gen_boolean(_int_arg(spec))
    if spec.startswith("luk:"):
        return constructions.gen_lukasiewicz(_int_arg(spec))
    if spec.startswith("end0:"):
        return constructions.gen_end0(constructions.load_lattice(spec.split(":", 1)[1]))
    raise InputError(f"unknown generator spec {spec!r} (expected l2, bool:K, luk:U, end0:<lattice-file>)")


def _int_arg(spec):
    text = spec.split(":", 1)[1]
    try:
        return int(text)
    except ValueError:
        raise InputError(f"bad integer argument in generator spec {spec!r}") from None


_CHECKS = {
    "two-sided-separation": checkers.check_two_sided_separation,
    "padded-separation": checkers.check_padded_separation,
    "downward-directed": checkers.check_downward_directed,
    "si-criterion": checkers.check_si_criterion,
    "matrix-si-criterion": checkers.check_matrix_si_criterion,
    "two-element": checkers.check_two_element,
    "greatest-not-absorbing": checkers.check_greatest_not_absorbing,
    "si-consequences": checkers.check_si_consequences,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="semiringlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=False, threshold=False, n=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if output:
            p.add_argument("-o", "--output", default=None, help="write result to this path")
        if threshold:
            p.add_argument(
                "--threshold",
                type=int,
                default=matrixring.DEFAULT_THRESHOLD,
                help="materialization size cap",
            )
        if n:
            p.add_argument("--n", type=int, required=True, help="matrix dimension")

    p = sub.add_parser("verify", help="validate a semiring file against the axioms")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("analyze", help="profile, classify, and decide simplicity / SI")
    p.add_argument("file")
    p.add_argument("--matrix", type=int, default=None, metavar="N", help="also analyze M_N(S)")
    common(p, threshold=True)

    p = sub.add_parser("gen", help="generate a semiring (l2, bool:K, luk:U, end0:<lattice-file>)")
    p.add_argument("spec")
    common(p, output=True)

    p = sub.add_parser("transform", help="adjoin-unity, adjoin-least, or corner:<label>")
    p.add_argument("op")
    p.add_argument("file")
    common(p, output=True)

    p = sub.add_parser("matrix", help="materialize M_n(S) as a semiring file")
    p.add_argument("file")
    common(p, output=True, threshold=True, n=True)

    p = sub.add_parser("check", help="run one condition check")
    p.add_argument("name", choices=sorted(_CHECKS))
    p.add_argument("file")
    common(p)

    p = sub.add_parser("crosscheck", help="validate the characterization equivalences")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--max-size", type=int, default=3, help="sweep size when no file is given")
    common(p, threshold=True, n=True)

    p = sub.add_parser("experiment", help="report-only probes")
    p.add_argument("name", choices=("hat-monolith",))
    p.add_argument("file")
    common(p, threshold=True, n=True)

    return parser


def _cmd_verify(args):
    S = core.load_semiring(args.file)
    report = core.verify_axioms(S)
    _emit(report.to_dict(S), args.format)
    if not report.ok:
        print(f"error: {args.file}: tables violate the semiring axioms", file=sys.stderr)
        return 2
    return 0


def _cmd_analyze(args):
    S = core.load_semiring(args.file)
    report = core.verify_axioms(S)
    if not report.ok:
        raise InputError(f"{args.file}: {report.failures[0].describe(S)}")
    _emit(_analysis(S, args.matrix, args.threshold), args.format)
    return 0


def _cmd_gen(args):
    return _write_semiring(_gen_from_spec(args.spec), args.output, args.format)


def _cmd_transform(args):
    S = core.load_semiring(args.file)
    if args.op == "adjoin-unity":
        out = constructions.adjoin_unity(S)
    elif args.op == "adjoin-least":
        out = constructions.adjoin_least(S)
    elif args.op.startswith("corner:"):
        out = constructions.corner(S, S.index(args.op.split(":", 1)[1]))
    else:
        raise InputError(f"unknown transform {args.op!r}")
    return _write_semiring(out, args.output, args.format)


def _cmd_matrix(args):
    S = core.load_semiring(args.file)
    mat = matrixring.matrix_semiring(S, args.n, threshold=args.threshold)
    return _write_semiring(mat.semiring, args.output, args.format)


def _cmd_check(args):
    S = core.load_semiring(args.file)
    verdict = _CHECKS[args.name](S)
    _emit(verdict.to_dict(), args.format)
    return 0


def _cmd_crosscheck(args):
    if args.file is not None:
        report = checkers.crosscheck(core.load_semiring(args.file), args.n, threshold=args.threshold)
        _emit(report.to_dict(), args.format)
        return 0
    results = []
    for S in checkers.enumerate_small(args.max_size):
        report = checkers.crosscheck(S, args.n, threshold=args.threshold)
        results.append(
            {
                "semiring": S.name,
                "ok": report.ok,
                "checked": sum(1 for a in report.agreements if a["applicable"]),
            }
        )
    _emit({"n": args.n, "max_size": args.max_size, "results": results}, args.format)
    return 0


def _cmd_experiment(args):
    S = core.load_semiring(args.file)
    mat = matrixring.matrix_semiring(S, args.n, threshold=args.threshold)
    T = mat.semiring
    mono_T = congruence.monolith(T)
    mono_S = congruence.monolith(S)
    report = {
        "experiment": "hat-monolith",
        "semiring": S.name,
        "n": args.n,
        "matrix_si": mono_T is not None,
        "base_si": mono_S is not None,
    }
    if mono_T is not None:
        hat = congruence.hat_congruence(S, args.n, mono_T.partition, matrix=mat)
        report["hat_of_matrix_monolith"] = hat.to_blocks(S.elements)
        report["base_monolith"] = mono_S.partition.to_blocks(S.elements) if mono_S else None
        report["hat_equals_base_monolith"] = (
            None if mono_S is None else hat == mono_S.partition
        )
    _emit(report, args.format)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
    "gen": _cmd_gen,
    "transform": _cmd_transform,
    "matrix": _cmd_matrix,
    "check": _cmd_check,
    "crosscheck": _cmd_crosscheck,
    "experiment": _cmd_experiment,
}


def run(argv):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        payload = {"discrepancy": str(exc), "counterexample": exc.counterexample}
        if exc.report is not None:
            payload["report"] = exc.report.to_dict()
        _emit(payload, getattr(args, "format", "json"))
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

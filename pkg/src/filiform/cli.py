"""Command line front end.

    filiform catalog M1 --n 6 --k 3 > m1.json
    filiform check m1.json
    filiform der m1.json --weights 1,2,3,4,5,2
    filiform grade verify m1.json --weights 1,2,3,4,5,2
    filiform grade search m1.json --bound 3
    filiform grade natural m1.json
    filiform audit --n 5..9 --format md

Exit status: 0 success, 2 usage error, 3 unreadable or malformed input,
4 parameter constraint violated, 5 a check failed.
"""

import argparse
import sys

from . import audit as audit_mod
from .catalog import FAMILIES, ParameterError, TranscriptionError, make
from .core import (
    NotLeibnizError, is_filiform, is_lie, is_nilpotent, leibniz_defect, left_annihilator,
    lower_central_series, right_annihilator,
)
from .derivation import coboundary_rank, derivation_space, graded_der_decomposition, inner_derivations
from .gradation import GradationError, best_diagonal_gradation, natural_grading, verify_weights
from .serialize import DocumentError, dumps, loads_algebra, matrix_to_json, parse_rational, serialize, to_document

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_CONSTRAINT = 4
EXIT_CHECK = 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    try:
        return loads_algebra(text)
    except DocumentError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _weights(text, n):
    try:
        w = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise CliError(f"weights must be comma-separated integers, got {text!r}", EXIT_PARSE) from None
    if len(w) != n:
        raise CliError(f"{len(w)} weights given for an algebra of dimension {n}", EXIT_PARSE)
    return w


def _catalog_params(args):
    family = args.family
    p = {}
    extra = {}
    for item in args.param or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise CliError(f"--param expects NAME=VALUE, got {item!r}", EXIT_PARSE)
        try:
            extra[name.strip()] = parse_rational(value.strip())
        except DocumentError as exc:
            raise CliError(f"--param {name}: {exc}", EXIT_PARSE) from None
    if args.k is not None:
        p["k"] = args.k
    if args.alpha is not None:
        p["alpha"] = parse_rational(args.alpha)
    if family == "F1":
        p["alphas"] = {int(k[5:]): v for k, v in extra.items() if k.startswith("alpha") and k[5:].isdigit()}
        p["theta"] = extra.pop("theta", 0)
        extra = {k: v for k, v in extra.items() if not (k.startswith("alpha") and k[5:].isdigit())}
    elif family == "F2":
        p["betas"] = {int(k[4:]): v for k, v in extra.items() if k.startswith("beta") and k[4:].isdigit()}
        p["gamma"] = extra.pop("gamma", 0)
        extra = {k: v for k, v in extra.items() if not (k.startswith("beta") and k[4:].isdigit())}
    elif family == "F3":
        for name in ("theta1", "theta2", "theta3"):
            if name in extra:
                p[name] = extra.pop(name)
        tail = {}
        for item in args.tail or []:
            idx, sep, value = item.partition("=")
            try:
                i, j, k = (int(t) for t in idx.split(","))
                tail[(i, j, k)] = parse_rational(value)
            except (ValueError, DocumentError):
                raise CliError(f"--tail expects I,J,K=VALUE, got {item!r}", EXIT_PARSE) from None
        p["tail"] = tail
    if extra:
        raise CliError(f"unknown parameter(s) for {family}: {', '.join(sorted(extra))}", EXIT_CONSTRAINT)
    return p


def cmd_catalog(args, out):
    try:
        A = make(args.family, args.n, **_catalog_params(args))
    except (ParameterError, TranscriptionError) as exc:
        raise CliError(str(exc), EXIT_CONSTRAINT) from None
    out.write(serialize(A))
    return EXIT_OK


def _check_report(A):
    defect = leibniz_defect(A)
    lines = [f"dim: {A.dim}"]
    if defect:
        lines.append(f"leibniz: FAILED ({len(defect)} violated tuples)")
        for i, j, k, m, r in defect:
            lines.append(f"  (i={i}, j={j}, k={k}) coefficient of e{m}: {r}")
        return lines, False
    series = [s.dim for s in lower_central_series(A)]
    lines += [
        "leibniz: ok",
        f"nilpotent: {'yes' if is_nilpotent(A) else 'no'}",
        f"filiform: {'yes' if is_filiform(A) else 'no'}",
        f"lie: {'yes' if is_lie(A) else 'no'}",
        f"lower central series dims: {series}",
        f"left annihilator dim: {left_annihilator(A).dim}",
        f"right annihilator dim: {right_annihilator(A).dim}",
    ]
    return lines, True


def cmd_check(args, out):
    A = _read(args.input)
    lines, ok = _check_report(A)
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_CHECK


def _basis_json(basis):
    return [matrix_to_json(m) for m in basis.maps]


def cmd_der(args, out):
    A = _read(args.input)
    try:
        der = derivation_space(A)
        inn = inner_derivations(A)
    except NotLeibnizError as exc:
        raise CliError(str(exc), EXIT_CHECK) from None
    n2 = A.dim ** 2
    doc = {
        "dim": A.dim,
        "dim_der": der.dim,
        "dim_inn": inn.dim,
        "dim_h1": der.dim - inn.dim,
        "dim_b2": n2 - der.dim,
        "der_basis": _basis_json(der),
        "inn_basis": _basis_json(inn),
        "checks": {
            "h1_plus_inn_equals_der": True,
            "b2_plus_der_equals_n_squared": coboundary_rank(A) + der.dim == n2,
        },
    }
    if args.weights:
        w = _weights(args.weights, A.dim)
        try:
            levels = graded_der_decomposition(A, w)
        except (GradationError, ValueError) as exc:
            raise CliError(str(exc), EXIT_CHECK) from None
        doc["weights"] = w
        doc["graded"] = {str(s): _basis_json(b) for s, b in sorted(levels.items()) if b.dim}
        doc["checks"]["graded_dims_sum_to_der"] = sum(b.dim for b in levels.values()) == der.dim
    out.write(dumps(doc))
    return EXIT_OK


def cmd_grade(args, out):
    A = _read(args.input)
    if args.mode == "verify":
        if not args.weights:
            raise CliError("grade verify needs --weights", EXIT_PARSE)
        w = _weights(args.weights, A.dim)
        try:
            rep = verify_weights(A, w)
        except GradationError as exc:
            out.write(dumps({"admissible": False, "violation": list(exc.triple), "weights": w}))
            return EXIT_CHECK
        out.write(dumps({"admissible": True, "weights": w, **rep.as_dict()}))
    elif args.mode == "search":
        w, rep = best_diagonal_gradation(A, args.bound)
        out.write(dumps({"bound": args.bound, "weights": w, **rep.as_dict()}))
    else:
        try:
            gr, w = natural_grading(A)
        except (NotLeibnizError, ValueError) as exc:
            raise CliError(str(exc), EXIT_CHECK) from None
        out.write(dumps({"gr": to_document(gr), "weights": w}))
    return EXIT_OK


def cmd_audit(args, out):
    try:
        n_values = audit_mod.parse_n_range(args.n)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_CONSTRAINT) from None
    report = audit_mod.build_report(n_values)
    if args.format == "json":
        out.write(dumps(report))
    else:
        out.write(audit_mod.render_markdown(report))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="filiform", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a catalog algebra as JSON")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--alpha")
    p.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="family parameter, e.g. alpha4=1/2, theta=3, beta3=1, gamma=2, theta1=1")
    p.add_argument("--tail", action="append", metavar="I,J,K=VALUE", help="F3 tail product entry")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("check", help="structural report for an algebra document")
    p.add_argument("input", help="path to JSON document, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("der", help="derivation algebra and cohomology dimensions")
    p.add_argument("input")
    p.add_argument("--weights", help="comma-separated weights for the graded decomposition")
    p.set_defaults(func=cmd_der)

    p = sub.add_parser("grade", help="gradation tools")
    p.add_argument("mode", choices=("verify", "search", "natural"))
    p.add_argument("input")
    p.add_argument("--weights")
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_grade)

    p = sub.add_parser("audit", help="audit the length n-1 algebras")
    p.add_argument("--n", default="4..10", help="dimension or range such as 5..9 (within 4..12)")
    p.add_argument("--format", choices=("md", "json"), default="md")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Input matrices are JSON documents ``{"field": "Q" | "Q(t)", "name": ...,
"matrix": [[entry, ...], ...]}`` whose entries are strings in the entry
grammar (plain JSON numbers are accepted too).  Output is a JSON document.
Positions and row indices in the output are 1-based.

Exit codes: 0 success or relation holds, 1 negative verdict, 2 error.
"""

import argparse
import json
import sys

from . import __version__
from .archimedean import (
    BoundedMultiplier, ScalarMultiplier, SimCertificate, equiv, gg, sim, succeq,
    verify_certificate, w_valuation,
)
from .echelon import (
    archimedean_canonical_form, class_descriptor, elementary_factorization,
)
from .elementary import AddMultiple, Swap, product
from .errors import ArchClassError, NotBibounded
from .fields import INFINITY, QT, format_element, get_field
from .lattice import join, meet
from .linalg import is_psd, moore_penrose_general, moore_penrose_symmetric
from .matrix import Matrix

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# documents

def load_document(path, field_flag=None):
    """Read a matrix document; ``field_flag`` must agree with its ``field``."""
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg})") from None
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise UsageError(f"{path}: expected an object with a 'matrix' key")
    name = doc.get("field")
    flag = get_field(field_flag) if field_flag else None
    try:
        field = get_field(name) if name is not None else (flag or get_field("Q"))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if flag is not None and flag is not field:
        raise UsageError(f"{path}: document field {name} conflicts with --field {field_flag}")
    rows = doc["matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise UsageError(f"{path}: 'matrix' must be a list of rows")
    cols = doc.get("cols")
    if not rows and not cols:
        raise UsageError(f"{path}: an empty matrix needs a 'cols' entry")
    entries = [[x if isinstance(x, str) else str(x) for x in r] for r in rows]
    return Matrix(entries, field, cols), doc.get("name", path)


def matrix_document(M, name):
    doc = {"field": M.field.name, "name": name, "matrix": [list(r) for r in M.to_strings()]}
    if not M.rows:
        doc["cols"] = M.cols
    return doc


def _valuation(v):
    return "inf" if v == INFINITY else int(v)


def descriptor_document(A):
    d = class_descriptor(A)
    return {
        "class": "infinity" if A.is_zero() else "finite",
        "shape": sorted([i + 1, j + 1] for i, j in d.shape.positions),
        "pivots": [[i + 1, k + 1] for i, k in d.shape.pivots],
        "pivot_valuations": [_valuation(v) for v in d.pivot_valuations],
    }


def certificate_document(cert):
    if cert is None:
        return None
    if isinstance(cert, SimCertificate):
        return {"kind": "sim", "forward": certificate_document(cert.forward),
                "backward": certificate_document(cert.backward)}
    if isinstance(cert, BoundedMultiplier):
        return {"kind": "bounded_multiplier", "r": cert.r,
                "C": matrix_document(cert.C, "C")}
    if isinstance(cert, ScalarMultiplier):
        return {"kind": "scalar", "alpha": format_element(cert.alpha)}
    raise TypeError(f"unknown certificate {cert!r}")


def op_document(op):
    if isinstance(op, Swap):
        return {"op": "swap", "i": op.i + 1, "j": op.j + 1}
    if isinstance(op, AddMultiple):
        return {"op": "add_multiple", "i": op.i + 1, "j": op.j + 1,
                "alpha": format_element(op.alpha)}
    return {"op": "scale", "i": op.i + 1, "alpha": format_element(op.alpha)}


# commands

def cmd_compare(args):
    A, na = load_document(args.a, args.field)
    B, nb = load_document(args.b, args.field)
    rel = args.relation
    if rel == "equiv":
        holds, cert, verified = equiv(A, B), None, None
    else:
        verdict = {"succeq": succeq, "sim": sim, "gg": gg}[rel](A, B)
        holds, cert = verdict.holds, verdict.certificate
        verified = verify_certificate(A, B, cert) if holds else None
    out = {"command": "compare", "relation": rel, "a": na, "b": nb, "holds": holds,
           "certificate": certificate_document(cert), "verified": verified}
    return out, EXIT_OK if holds else EXIT_NEGATIVE


def cmd_canon(args):
    A, name = load_document(args.file, args.field)
    if A.field is not QT:
        raise UsageError("canonical forms are computed only over Q(t); "
                         "no canonical representative is provided over Q")
    if A.is_zero():
        raise UsageError("the zero matrix (class infinity) has no canonical form")
    C = archimedean_canonical_form(A)
    return {"command": "canon", "input": name, "canonical": matrix_document(C, f"canon({name})"),
            "descriptor": descriptor_document(A)}, EXIT_OK


def cmd_lattice(args):
    A, na = load_document(args.a, args.field)
    B, nb = load_document(args.b, args.field)
    R = (meet if args.op == "meet" else join)(A, B)
    out = {"command": "lattice", "op": args.op,
           "representative": matrix_document(R, f"{args.op}({na}, {nb})"),
           "descriptor": descriptor_document(R), "canonical": None}
    if R.field is QT and not R.is_zero():
        out["canonical"] = matrix_document(archimedean_canonical_form(R), "canonical")
    return out, EXIT_OK


def _witness_document(w):
    w = dict(w)
    if "entry" in w:
        w["entry"] = [k + 1 for k in w["entry"]]
    for key in ("valuation", "determinant_valuation"):
        if key in w:
            w[key] = _valuation(w[key])
    return w


def cmd_factor(args):
    A, name = load_document(args.file, args.field)
    try:
        ops = elementary_factorization(A)
    except NotBibounded as exc:
        return {"command": "factor", "input": name, "bibounded": False,
                "witness": _witness_document(exc.witness or {})}, EXIT_NEGATIVE
    check = product(ops, A.rows, A.field) == A
    return {"command": "factor", "input": name, "bibounded": True,
            "factors": [op_document(op) for op in ops], "product_check": check}, EXIT_OK


def cmd_shape(args):
    A, name = load_document(args.file, args.field)
    return {"command": "shape", "input": name, **descriptor_document(A)}, EXIT_OK


def cmd_psd(args):
    A, name = load_document(args.file, args.field)
    holds = is_psd(A)
    return {"command": "psd", "input": name, "psd": holds}, EXIT_OK if holds else EXIT_NEGATIVE


def cmd_pinv(args):
    A, name = load_document(args.file, args.field)
    if A.is_square() and A.is_symmetric():
        P, kind = moore_penrose_symmetric(A), "symmetric"
    else:
        P, kind = moore_penrose_general(A), "general"
    return {"command": "pinv", "input": name, "kind": kind,
            "pinv": matrix_document(P, f"pinv({name})")}, EXIT_OK


def cmd_wval(args):
    A, name = load_document(args.file, args.field)
    return {"command": "wval", "input": name, "w": _valuation(w_valuation(A))}, EXIT_OK


def cmd_selftest(args):
    from .selftest import run

    results = run(args.seed, args.scale)
    ok = all(r.ok for r in results)
    return {"command": "selftest", "seed": args.seed, "passed": ok,
            "suites": [{"name": r.name, "cases": r.cases, "failures": r.failures}
                       for r in results]}, EXIT_OK if ok else EXIT_NEGATIVE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=["Q", "Qt", "Q(t)"],
                        help="backend (must match the documents' field)")
    common.add_argument("--out", help="write the result document here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for random generators")

    p = argparse.ArgumentParser(prog="archclass",
                                description="Archimedean classes of matrices, exactly.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compare", parents=[common], help="decide a relation between A and B")
    s.add_argument("relation", choices=["succeq", "sim", "gg", "equiv"])
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("lattice", parents=[common], help="meet or join of two classes")
    s.add_argument("op", choices=["meet", "join"])
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_lattice)

    for name, func, text in (("canon", cmd_canon, "canonical form over Q(t)"),
                             ("factor", cmd_factor, "bibounded elementary factorization"),
                             ("shape", cmd_shape, "shape and pivot valuations of the class"),
                             ("psd", cmd_psd, "positive semidefiniteness"),
                             ("pinv", cmd_pinv, "Moore-Penrose inverse"),
                             ("wval", cmd_wval, "valuation of the max-norm")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("file", help="matrix document, or - for stdin")
        s.set_defaults(func=func)

    s = sub.add_parser("selftest", parents=[common], help="run randomized property suites")
    s.add_argument("--scale", type=int, default=1, help="multiply the case counts")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except (UsageError, ArchClassError, ValueError) as exc:
        print(f"archclass: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = json.dumps(out, indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

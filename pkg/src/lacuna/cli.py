"""Command-line interface.

Every command prints one result document on stdout. Exit status: 0 for
verified, degenerate or plain success; 1 for a refuted identity; 2 for usage
and precondition errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import lattice
from .exact import bernoulli
from .relations import (
    BUILTINS,
    RelationSpec,
    bernoulli_identity,
    default_precision,
    evaluate_relation,
    hst_relation_vector,
    lacunarity_search,
)
from .serialize import (
    dumps_document,
    rational_to_str,
    render_relation,
    residual_summary,
    vector_from_document,
    vector_to_document,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


class CommandResult:
    __slots__ = ("status", "payload")

    def __init__(self, status: str, payload: dict[str, Any]):
        self.status = status
        self.payload = payload

    @property
    def exit_code(self) -> int:
        if self.status == "refuted":
            return EXIT_REFUTED
        if self.status == "error":
            return EXIT_USAGE
        return EXIT_OK

    def document(self) -> dict[str, Any]:
        return {"status": self.status, **self.payload}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lacuna",
        description="Verify lacunary recurrences and linear relations among Eisenstein series exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def triple(p):
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--t", type=int, required=True)

    def fmt(p, choices=("json", "text"), default="json"):
        p.add_argument("--format", choices=choices, default=default)

    verify = sub.add_parser("verify", help="verify an identity as an exact zero residual")
    vsub = verify.add_subparsers(dest="target", required=True)
    vb = vsub.add_parser("builtin", help="one of the named recurrences")
    vb.add_argument("--name", choices=sorted(BUILTINS), required=True)
    vb.add_argument("--n", type=int, required=True)
    vb.add_argument("--precision", type=int)
    fmt(vb)
    vh = vsub.add_parser("hst", help="one instance (r, s, t) of the three-sum relation family")
    triple(vh)
    vh.add_argument("--precision", type=int)
    fmt(vh)
    vv = vsub.add_parser("vector", help="a relation vector stored as a JSON document")
    vv.add_argument("--file", required=True)
    vv.add_argument("--precision", type=int)
    fmt(vv)

    relation = sub.add_parser("relation", help="relation vectors")
    rsub = relation.add_subparsers(dest="action", required=True)
    rp = rsub.add_parser("print", help="print the relation vector for (r, s, t)")
    triple(rp)
    fmt(rp, ("json", "latex", "text"))
    rp.add_argument("--normalize-integer", action="store_true")

    search = sub.add_parser("search", help="sparsest relations of a given weight")
    search.add_argument("--weight", type=int, required=True)
    search.add_argument("--max-results", type=int, default=10)
    fmt(search)

    bern = sub.add_parser("bernoulli", help="exact Bernoulli number B_k")
    bern.add_argument("--k", type=int, required=True)
    fmt(bern)

    bid = sub.add_parser("bernoulli-identity", help="constant-term identity of a relation")
    triple(bid)
    fmt(bid)

    ev = sub.add_parser("eval", help="compare the lattice sum with the q-expansion numerically")
    ev.add_argument("--k", type=int, required=True)
    ev.add_argument("--tau", required=True, help="re,im (write --tau=-0.5,1 for a negative real part)")
    ev.add_argument("--tol", type=float, default=1e-6)
    fmt(ev)
    return parser


def _verify_vector(vec, precision: int | None, extra: dict[str, Any]) -> CommandResult:
    n = default_precision(vec.weight) if precision is None else precision
    if n < 1:
        raise ValueError(f"precision must be positive, got {n}")
    payload = {**extra, "weight": vec.weight, "precision": n, "relation": vector_to_document(vec)}
    if vec.is_degenerate:
        return CommandResult("degenerate", payload)
    residual = evaluate_relation(vec, n)
    payload["residual"] = residual_summary(residual)
    return CommandResult("verified" if residual.is_zero() else "refuted", payload)


def _cmd_verify(args) -> CommandResult:
    if args.target == "builtin":
        vec = BUILTINS[args.name](args.n)
        return _verify_vector(vec, args.precision, {"name": args.name, "n": args.n})
    if args.target == "hst":
        spec = RelationSpec(args.r, args.s, args.t)
        vec = hst_relation_vector(spec)
        return _verify_vector(vec, args.precision, {"spec": {"r": spec.r, "s": spec.s, "t": spec.t}})
    with open(args.file, encoding="utf-8") as fh:
        doc = json.load(fh)
    vec = vector_from_document(doc)
    return _verify_vector(vec, args.precision, {"file": args.file})


def _cmd_relation(args) -> CommandResult:
    spec = RelationSpec(args.r, args.s, args.t)
    vec = hst_relation_vector(spec)
    status = "degenerate" if vec.is_degenerate else "success"
    if args.format == "json":
        if args.normalize_integer:
            vec = vec.integer_normalized()
        return CommandResult(status, vector_to_document(vec))
    rendered = render_relation(vec, args.format, normalize=True)
    return CommandResult(status, {"rendered": rendered})


def _cmd_search(args) -> CommandResult:
    if args.max_results < 1:
        raise ValueError(f"--max-results must be positive, got {args.max_results}")
    hits = lacunarity_search(args.weight, args.max_results)
    return CommandResult(
        "success",
        {
            "weight": args.weight,
            "results": [
                {
                    "spec": {"r": h.spec.r, "s": h.spec.s, "t": h.spec.t},
                    "sparsity": h.sparsity,
                    "rendered": render_relation(h.vector),
                    "relation": vector_to_document(h.vector),
                }
                for h in hits
            ],
        },
    )


def _cmd_bernoulli(args) -> CommandResult:
    return CommandResult("success", {"k": args.k, "value": rational_to_str(bernoulli(args.k))})


def _cmd_bernoulli_identity(args) -> CommandResult:
    vec = hst_relation_vector(RelationSpec(args.r, args.s, args.t))
    ident = bernoulli_identity(vec)
    payload = {
        "weight": ident.weight,
        "residuals": {str(g): rational_to_str(v) for g, v in ident.residuals.items()},
        "bernoulli_form": ident.bernoulli_form,
        "zeta_form": ident.zeta_form,
    }
    if vec.is_degenerate:
        return CommandResult("degenerate", payload)
    return CommandResult("verified" if ident.holds else "refuted", payload)


def _cmd_eval(args) -> CommandResult:
    try:
        point = lattice.UpperHalfPoint.parse(args.tau)
    except ValueError as exc:
        raise ValueError(f"--tau expects 're,im', got {args.tau!r}") from exc
    report = lattice.compare(args.k, point, args.tol)
    payload = {
        "k": report.k,
        "tau": [report.tau.real, report.tau.imag],
        "difference": report.difference,
        "cutoff": report.cutoff,
        "precision": report.precision,
        "lattice_bound": report.lattice_bound,
        "qexp_bound": report.qexp_bound,
        "tolerance": report.tolerance,
    }
    return CommandResult("verified" if report.passed else "refuted", payload)


_COMMANDS = {
    "verify": _cmd_verify,
    "relation": _cmd_relation,
    "search": _cmd_search,
    "bernoulli": _cmd_bernoulli,
    "bernoulli-identity": _cmd_bernoulli_identity,
    "eval": _cmd_eval,
}


def _to_text(doc: dict[str, Any]) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None) -> CommandResult:
    """Parse ``argv``, execute, print the result document and return it.

    argparse reports malformed command lines itself and exits with status 2.
    """
    args = _build_parser().parse_args(argv)
    try:
        result = _COMMANDS[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError, lattice.UnreachableTolerance) as exc:
        print(f"lacuna: error: {exc}", file=sys.stderr)
        result = CommandResult("error", {"message": str(exc)})
    doc = result.document()
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        out = dumps_document(doc)
    elif args.command == "relation" and "rendered" in doc:
        out = doc["rendered"] + "\n"
    else:
        out = _to_text(doc)
    sys.stdout.write(out)
    return result


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run(argv).exit_code
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``tlcrystals <verb> [options]``.

Exit status is 0 on success, 1 on a domain error or failed verification,
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .crystal import build_graph, export_dot, verify_stembridge
from .immanants import (
    ROUTES,
    ImmanantQuery,
    default_m,
    imm_eval,
    lr_coefficient,
)
from .partitions import Partition, parse_int_list, shape_pair
from .shuffle import enumerate_shuffle
from .sweep import SweepBounds, check_shape, parallel_map, sweep_items
from .sympoly import expansion_to_json, parse_poly, schur_expand
from .temperley_lieb import NoncrossingMatching, tl_basis
from .wirings import enumerate_wirings


class DomainFailure(Exception):
    """Computation finished but reported a failure; the document is still emitted."""

    def __init__(self, document: str) -> None:
        super().__init__("verification failed")
        self.document = document


def _partition_arg(text: str) -> tuple[int, ...]:
    try:
        return Partition(parse_int_list(text)).parts
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _matching_arg(text: str) -> NoncrossingMatching:
    try:
        return NoncrossingMatching.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad matching {text!r}: {exc}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _schur_text(exp) -> str:
    if not exp:
        return "0"
    return " + ".join(f"{c}*s({lam})" for lam, c in expansion_to_json(exp).items())


def _h_label(k: int) -> str:
    return "0" if k < 0 else "1" if k == 0 else f"h{k}"


def cmd_jt_matrix(args) -> str:
    mu, nu = shape_pair(args.mu, args.nu)
    labels = [[_h_label(a - b) for b in nu] for a in mu]
    if args.format == "text":
        return "\n".join(" ".join(f"{x:>4}" for x in row) for row in labels) + "\n"
    return _dump({"mu": list(mu), "nu": list(nu), "matrix": labels})


def cmd_immanant(args) -> str:
    q = ImmanantQuery.make(args.mu, args.nu, args.tau, args.m)
    poly = imm_eval(q, args.route)
    doc = {"immanant": poly.term_strings(), "route": args.route}
    if args.schur:
        doc["schur"] = expansion_to_json(schur_expand(poly))
    if args.format == "text":
        lines = [str(poly)]
        if args.schur:
            lines.append(_schur_text(schur_expand(poly)))
        return "\n".join(lines) + "\n"
    return _dump(doc)


def cmd_schur_expand(args) -> str:
    if args.poly is not None:
        poly = parse_poly(args.poly, args.m)
    else:
        if args.mu is None or args.tau is None:
            raise argparse.ArgumentTypeError("schur-expand needs --poly or --mu/--tau")
        poly = imm_eval(ImmanantQuery.make(args.mu, args.nu, args.tau, args.m), args.route)
    exp = schur_expand(poly)
    if args.format == "text":
        return _schur_text(exp) + "\n"
    return _dump(expansion_to_json(exp))


def cmd_lr_coeff(args) -> str:
    res = lr_coefficient(args.mu, args.nu, args.tau, args.lam, args.m)
    if args.format == "text":
        return "\n".join([str(res.count)] + [str(t) for t in res.witnesses]) + "\n"
    return _dump({"coefficient": res.count, "witnesses": [str(t) for t in res.witnesses]})


def cmd_crystal_graph(args) -> str:
    g = build_graph(args.mu, args.nu, args.m)
    if args.format == "dot":
        return export_dot(g)
    if args.format == "text":
        lines = []
        for n, comp in enumerate(g.components):
            lines.append(f"component {n}: {len(comp)} vertices")
            lines.extend(f"  {k}" for k in comp)
        lines.extend(f"{x} -{i}-> {y}" for x, i, y in g.edges)
        return "\n".join(lines) + "\n"
    return _dump(
        {
            "m": g.m,
            "vertices": [str(v) for v in g.vertices],
            "edges": [[x, i, y] for x, i, y in g.edges],
            "components": g.components,
        }
    )


def cmd_verify_axioms(args) -> str:
    g = build_graph(args.mu, args.nu, args.m)
    report = verify_stembridge(g)
    if args.format == "text":
        lines = ["pass" if not report else "fail"]
        lines += [f"{r['axiom']} at {r['vertex']} colors {r['colors']}" for r in report]
        doc = "\n".join(lines) + "\n"
    else:
        doc = _dump({"pass": not report, "violations": report})
    if report:
        raise DomainFailure(doc)
    return doc


def cmd_verify_identities(args) -> str:
    bounds = SweepBounds(args.max_n, args.max_degree, args.max_m, args.max_part)
    items = sweep_items(bounds)
    results = parallel_map(check_shape, items)
    failures = [
        r for r in results if r["route_mismatches"] or r["identity_failures"] or r["negative_schur"]
    ]
    doc = {
        "bounds": {
            "max_n": bounds.max_n,
            "max_degree": bounds.max_degree,
            "max_m": bounds.max_m,
            "max_part": bounds.max_part,
        },
        "cases": len(items),
        "pass": not failures,
        "failures": failures,
    }
    if args.format == "text":
        text = f"{len(items)} cases, {len(failures)} failing\n"
        text += "".join(f"{f['mu']}/{f['nu']} m={f['m']}\n" for f in failures)
    else:
        text = _dump(doc)
    if failures:
        raise DomainFailure(text)
    return text


def cmd_enumerate(args) -> str:
    if args.what == "basis":
        if args.n is None:
            raise argparse.ArgumentTypeError("enumerate basis needs --n")
        items = [str(t) for t in tl_basis(args.n)]
    else:
        if args.mu is None:
            raise argparse.ArgumentTypeError(f"enumerate {args.what} needs --mu")
        a, b = shape_pair(args.mu, args.nu)
        m = default_m(a, b) if args.m is None else args.m
        if args.what == "tableaux":
            items = [str(t) for t in enumerate_shuffle(a, b, m)]
        else:
            wirings = enumerate_wirings(a, b, m)
            if args.format == "text":
                items = [json.dumps(w.to_json()) for w in wirings]
            else:
                return _dump([w.to_json() for w in wirings])
    if args.format == "text":
        return "".join(f"{x}\n" for x in items)
    return _dump(items)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tlcrystals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name: str, func, formats=("json", "text"), shape=True, tau=False, help=None):
        p = sub.add_parser(name, help=help)
        if shape:
            p.add_argument("--mu", type=_partition_arg, required=True)
            p.add_argument("--nu", type=_partition_arg, default=())
        if tau:
            p.add_argument("--tau", type=_matching_arg, required=True)
        p.add_argument("--m", type=_positive, default=None, help="number of variables / entry bound")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", default=None, help="write the document here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("jt-matrix", cmd_jt_matrix, help="Jacobi-Trudi matrix of h-labels")
    p = add("immanant", cmd_immanant, tau=True, help="Temperley-Lieb immanant")
    p.add_argument("--route", choices=ROUTES, default="tableaux")
    p.add_argument("--schur", action="store_true", help="include the Schur expansion")

    p = add("schur-expand", cmd_schur_expand, shape=False, help="Schur expansion of a polynomial or immanant")
    p.add_argument("--poly", default=None)
    p.add_argument("--mu", type=_partition_arg, default=None)
    p.add_argument("--nu", type=_partition_arg, default=())
    p.add_argument("--tau", type=_matching_arg, default=None)
    p.add_argument("--route", choices=ROUTES, default="tableaux")

    p = add("lr-coeff", cmd_lr_coeff, tau=True, help="Yamanouchi count with witnesses")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)

    add("crystal-graph", cmd_crystal_graph, formats=("json", "text", "dot"), help="crystal graph")
    add("verify-axioms", cmd_verify_axioms, help="Stembridge axioms on one crystal graph")

    p = add("verify-identities", cmd_verify_identities, shape=False, help="route and minor identity sweep")
    p.add_argument("--max-n", type=_positive, default=4)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--max-m", type=_positive, default=3)
    p.add_argument("--max-part", type=_positive, default=6)

    p = add("enumerate", cmd_enumerate, shape=False, help="list tableaux, wirings or TL diagrams")
    p.add_argument("what", choices=("tableaux", "wirings", "basis"))
    p.add_argument("--mu", type=_partition_arg, default=None)
    p.add_argument("--nu", type=_partition_arg, default=())
    p.add_argument("--n", type=_positive, default=None)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except DomainFailure as exc:
        _emit(exc.document, args.output)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, args.output)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line interface.

Module expressions combine named indecomposables and module files with '+':
P(<vertex>) and S(<vertex>) name projectives and simples by vertex label,
the literal 0 is the zero module, and any other term names a parsed module:
either a path to a .mod file or a bare name resolved to <name>.mod next
to the working directory or the algebra file.  The support half of a pair
is inferred from the vertices where the module vanishes.

Exit codes: 0 on success, 2 for malformed input, 3 when a certificate
could not be produced.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from .algebra import loewy_length, radical
from .endo import derdim_estimate, endo_algebra, quiver_presentation
from .exceptions import CertificationError, InputError
from .mutation import IsoRegistry, compact_label, enumerate_stt
from .parsing import parse_algebra_file, parse_module_file, parse_registry_file
from .reports import (canonical_json, derdim_bound_report, export_graph_dot,
                      export_graph_json, graph_reports)
from .reps import annihilator, direct_sum, projective, simple
from .tau import classify_pair, hom_to_tau, tau, validate_stt_pair

_TERM_RE = re.compile(r"^([PS])\(([^()]+)\)$")


def _default_seed() -> int:
    env = os.environ.get("TAUBOUND_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"TAUBOUND_SEED must be an integer, got {env!r}")


def _resolve_module_path(term: str, search_dir):
    """A term that is not P/S/0 names a module file; find it."""
    cands = [term] if term.endswith(".mod") else [term, term + ".mod"]
    for c in cands:
        if os.path.exists(c):
            return c
        if search_dir and not os.path.isabs(c):
            p = os.path.join(search_dir, c)
            if os.path.exists(p):
                return p
    return None


def parse_module_expr(expr: str, algebra, search_dir=None):
    """'P(1)+S(2)+extra' -> list of representations (empty for '0')."""
    labels = {str(l): v for v, l in enumerate(algebra.quiver.vertices)}
    out = []
    for raw in expr.split("+"):
        term = raw.strip()
        if not term:
            raise InputError(f"empty term in module expression {expr!r}")
        if term == "0":
            continue
        m = _TERM_RE.match(term)
        if m:
            kind, lab = m.groups()
            if lab not in labels:
                raise InputError(f"unknown vertex {lab!r} in term {term!r}")
            v = labels[lab]
            out.append(projective(algebra, v) if kind == "P"
                       else simple(algebra, v))
            continue
        path = _resolve_module_path(term, search_dir)
        if path is None:
            raise InputError(
                f"cannot read term {term!r}: use P(v), S(v), 0, a module "
                f"name, or a .mod path"
            )
        out.append(parse_module_file(path, algebra))
    return out


def _module_of(args, algebra):
    summands = parse_module_expr(args.module, algebra,
                                 search_dir=os.path.dirname(args.algebra))
    if not summands:
        from .reps import zero_rep
        return summands, zero_rep(algebra)
    return summands, direct_sum(algebra, summands).rep


def _inferred_support(algebra, M):
    return [v for v in range(algebra.n_vertices) if M.dims[v] == 0]


def _emit(args, text_fn, json_payload):
    if getattr(args, "format", "text") == "json":
        sys.stdout.write(canonical_json(json_payload))
    else:
        print(text_fn())


# ---------------------------------------------------------------------------
# Subcommands


def cmd_validate(args) -> int:
    A = parse_algebra_file(args.algebra)
    if args.module is None:
        payload = A.to_json_dict()
        payload["loewy_length"] = loewy_length(A) if A.dim else 0
        _emit(args, lambda: (
            f"algebra {A.name}: dim {A.dim}, {A.n_vertices} vertices, "
            f"{len(A.quiver.arrows)} arrows, {len(A.relations)} relations, "
            f"Loewy length {payload['loewy_length']}"), payload)
        return 0
    summands, M = _module_of(args, A)
    support = _inferred_support(A, M)
    val = validate_stt_pair(A, summands, support, seed=args.seed)
    payload = {
        "status": val.status,
        "reasons": list(val.reasons),
        "summand_classes": val.summand_classes,
        "expected_classes": val.expected_classes,
        "support": [str(A.quiver.vertices[v]) for v in support],
    }

    def text():
        lines = [f"pair ({args.module} | support {payload['support']}): {val.status}"]
        lines.extend(f"  - {r}" for r in val.reasons)
        return "\n".join(lines)

    _emit(args, text, payload)
    return 0


def cmd_tau(args) -> int:
    A = parse_algebra_file(args.algebra)
    _, M = _module_of(args, A)
    t = tau(M)
    if t.dim_total:
        name = IsoRegistry(A, seed=args.seed).name_of(t)
    else:
        name = "0"
    payload = {"module_dims": list(M.dims), "tau_dims": list(t.dims),
               "tau_total_dim": t.dim_total, "tau_name": name}
    _emit(args, lambda: f"tau has dimension vector {t.dims_str()} "
                        f"(total {t.dim_total}), isomorphic to {name}",
          payload)
    return 0


def cmd_rigid(args) -> int:
    A = parse_algebra_file(args.algebra)
    _, M = _module_of(args, A)
    defect = hom_to_tau(M) if M.dim_total else 0
    payload = {"tau_rigid": defect == 0, "hom_to_tau_dim": defect}
    _emit(args, lambda: ("tau-rigid" if defect == 0 else
                         f"not tau-rigid: dim Hom(M, tau M) = {defect}"),
          payload)
    return 0


def cmd_enumerate(args) -> int:
    A = parse_algebra_file(args.algebra)
    graph = enumerate_stt(A, max_nodes=args.max_nodes, seed=args.seed)
    if args.format == "dot":
        sys.stdout.write(export_graph_dot(graph))
        return 0
    if args.format == "json":
        sys.stdout.write(canonical_json(export_graph_json(graph)))
        return 0
    print(f"{graph.n_nodes} pairs, {graph.n_edges} exchanges")
    for n in graph.nodes:
        print(f"  {n.key}   [{n.classification}]")
    for e in graph.edges:
        print(f"  {e.src}  --[{e.removed} -> {e.added}]-->  {e.dst}")
    return 0


def cmd_classify(args) -> int:
    A = parse_algebra_file(args.algebra)
    summands, M = _module_of(args, A)
    support = _inferred_support(A, M)
    cls = classify_pair(A, summands, support, seed=args.seed)
    payload = {"classification": cls,
               "support": [str(A.quiver.vertices[v]) for v in support]}
    _emit(args, lambda: cls, payload)
    return 0


def cmd_endo(args) -> int:
    A = parse_algebra_file(args.algebra)
    summands, _ = _module_of(args, A)
    if not summands:
        raise InputError("the zero module has a zero endomorphism algebra")
    registry = parse_registry_file(args.registry) if args.registry else None
    iso = IsoRegistry(A, seed=args.seed)
    names = [compact_label(iso.name_of(s)) for s in summands]
    endo = endo_algebra(summands, labels=names)
    B = quiver_presentation(endo, name=f"End[{args.module}]")
    est = derdim_estimate(B, registry)
    payload = B.to_json_dict()
    payload["derdim"] = est.to_json_dict()

    def text():
        lines = [f"endomorphism algebra: dim {B.dim}, "
                 f"vertices {list(B.quiver.vertices)}"]
        for a in B.quiver.arrows:
            lines.append(f"  arrow {a.label}: "
                         f"{B.quiver.vertices[a.source]} -> "
                         f"{B.quiver.vertices[a.target]}")
        for rel in B.relations:
            lines.append(f"  relation {B.relation_str(rel)}")
        lines.append(f"derdim estimate: {est.value} ({est.kind}, "
                     f"{est.provenance})")
        return "\n".join(lines)

    _emit(args, text, payload)
    return 0


def cmd_annihilator(args) -> int:
    A = parse_algebra_file(args.algebra)
    _, M = _module_of(args, A)
    ann = annihilator(M)
    rad = radical(A)
    nilpotent = all(rad.contains(v) for v in ann.basis_vectors())
    index = ann.nilpotency_index() if nilpotent else None
    payload = {"dim": ann.dim, "nilpotent": nilpotent,
               "nilpotency_index": index,
               "generators": [A.element_str(v) for v in ann.basis_vectors()]}

    def text():
        if ann.dim == 0:
            return "annihilator is zero (faithful module); nilpotency index 1"
        lines = [f"annihilator has dimension {ann.dim}"]
        for g in payload["generators"]:
            lines.append(f"  {g}")
        if nilpotent:
            lines.append(f"nilpotency index {index}")
        else:
            lines.append("not nilpotent (the module is not sincere)")
        return "\n".join(lines)

    _emit(args, text, payload)
    return 0


def cmd_loewy(args) -> int:
    A = parse_algebra_file(args.algebra)
    rad = radical(A)
    ll = loewy_length(A) if A.dim else 0
    payload = {"dim": A.dim, "radical_dim": rad.dim, "loewy_length": ll}
    _emit(args, lambda: f"dim {A.dim}, radical dim {rad.dim}, "
                        f"Loewy length {ll}", payload)
    return 0


def cmd_report(args) -> int:
    A = parse_algebra_file(args.algebra)
    registry = parse_registry_file(args.registry) if args.registry else None
    if args.module is not None:
        summands, M = _module_of(args, A)
        rep = derdim_bound_report(A, summands, registry=registry,
                                  seed=args.seed)
        payload = rep.to_json_dict()

        def text():
            lines = [rep.summary_line()]
            lines.extend(f"  - {n}" for n in rep.notes)
            return "\n".join(lines)

        _emit(args, text, payload)
        return 0
    graph, reps = graph_reports(A, registry=registry, seed=args.seed,
                                max_nodes=args.max_nodes)
    payload = {"algebra": A.name, "n_pairs": len(reps),
               "reports": [r.to_json_dict() for r in reps]}

    def text():
        lines = [f"{A.name}: {len(reps)} pairs"]
        lines.extend("  " + r.summary_line() for r in reps)
        counts = {}
        for r in reps:
            counts[r.status] = counts.get(r.status, 0) + 1
        lines.append("status counts: " + ", ".join(
            f"{k}={counts[k]}" for k in sorted(counts)))
        return "\n".join(lines)

    _emit(args, text, payload)
    return 0


# ---------------------------------------------------------------------------
# Wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taubound",
        description="support tau-tilting pairs, exchange graphs, and "
                    "derived-dimension bound reports for bound quiver algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, module=None, registry=False, max_nodes=False,
               formats=("text", "json")):
        sp.add_argument("--algebra", required=True,
                        help="path to a .alg file")
        if module == "required":
            sp.add_argument("--module", required=True,
                            help="module expression, e.g. P(1)+S(2) or m.mod")
        elif module == "optional":
            sp.add_argument("--module", default=None,
                            help="module expression, e.g. P(1)+S(2) or m.mod")
        if registry:
            sp.add_argument("--registry", default=None,
                            help="path to a .reg derived-dimension registry")
        if max_nodes:
            sp.add_argument("--max-nodes", type=int, default=4096,
                            help="enumeration budget (default 4096)")
        sp.add_argument("--seed", type=int, default=None,
                        help="randomness seed (default: $TAUBOUND_SEED or 0)")
        sp.add_argument("--format", choices=list(formats), default="text")

    sp = sub.add_parser("validate", help="check an algebra file or a pair")
    common(sp, module="optional")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("tau", help="the AR translate of a module")
    common(sp, module="required")
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("rigid", help="test tau-rigidity")
    common(sp, module="required")
    sp.set_defaults(func=cmd_rigid)

    sp = sub.add_parser("enumerate", help="the exchange graph of all pairs")
    common(sp, max_nodes=True, formats=("text", "json", "dot"))
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("classify", help="classify a pair")
    common(sp, module="required")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("endo", help="present the endomorphism algebra")
    common(sp, module="required", registry=True)
    sp.set_defaults(func=cmd_endo)

    sp = sub.add_parser("annihilator", help="the annihilator ideal")
    common(sp, module="required")
    sp.set_defaults(func=cmd_annihilator)

    sp = sub.add_parser("loewy", help="radical and Loewy length")
    common(sp)
    sp.set_defaults(func=cmd_loewy)

    sp = sub.add_parser("report", help="derived-dimension bound reports")
    common(sp, module="optional", registry=True, max_nodes=True)
    sp.set_defaults(func=cmd_report)

    return parser


def cli_run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    op = getattr(args, "command", "taubound")
    try:
        if args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except InputError as e:
        print(f"error: {op}: {e}", file=sys.stderr)
        return 2
    except CertificationError as e:
        print(f"certification failure: {op}: {e}", file=sys.stderr)
        return 3


def main():
    sys.exit(cli_run())


if __name__ == "__main__":
    main()

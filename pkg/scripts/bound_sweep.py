"""Sweep the derived-dimension bound over every pair of an algebra's
exchange graph and print one summary line per node.

    python scripts/bound_sweep.py corpus/arrow_loop.alg --registry corpus/known.reg
"""
import argparse
import sys

from taubound import graph_reports, parse_algebra_file, parse_registry_file
from taubound.reports import canonical_json


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="per-pair derived-dimension bound reports")
    parser.add_argument("algebra", help="path to a .alg file")
    parser.add_argument("--registry", default=None,
                        help="path to a .reg file with known derived dimensions")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-nodes", type=int, default=4096)
    parser.add_argument("--json", action="store_true",
                        help="dump the full reports as canonical JSON")
    args = parser.parse_args(argv)

    A = parse_algebra_file(args.algebra)
    registry = parse_registry_file(args.registry) if args.registry else None
    graph, reports = graph_reports(A, registry=registry, seed=args.seed,
                                   max_nodes=args.max_nodes)

    if args.json:
        sys.stdout.write(canonical_json(
            [r.to_json_dict() for r in reports]))
        return 0

    print(f"{A.name}: {graph.n_nodes} pairs, {graph.n_edges} exchanges")
    for r in reports:
        print("  " + r.summary_line())
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    print("status counts: "
          + ", ".join(f"{k}={counts[k]}" for k in sorted(counts)))
    return 0


if __name__ == "__main__":
    sys.exit(main())

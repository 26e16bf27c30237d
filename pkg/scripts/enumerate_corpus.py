"""Enumerate the exchange graph of every .alg file in a directory and
print a small table; optionally dump .dot and .json exports next to it.

    python scripts/enumerate_corpus.py corpus --out /tmp/graphs
"""
import argparse
import os
import sys
import time

from taubound import enumerate_stt, parse_algebra_file
from taubound.reports import canonical_json, export_graph_dot, export_graph_json


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="enumerate exchange graphs for a directory of algebras")
    parser.add_argument("corpus", nargs="?", default="corpus",
                        help="directory with .alg files (default: corpus)")
    parser.add_argument("--out", default=None,
                        help="write <name>.dot and <name>.json here")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-nodes", type=int, default=4096)
    args = parser.parse_args(argv)

    files = sorted(f for f in os.listdir(args.corpus) if f.endswith(".alg"))
    if not files:
        print(f"no .alg files under {args.corpus}", file=sys.stderr)
        return 1
    if args.out:
        os.makedirs(args.out, exist_ok=True)

    print(f"{'algebra':<14} {'dim':>4} {'nodes':>6} {'edges':>6} {'secs':>7}")
    for fname in files:
        A = parse_algebra_file(os.path.join(args.corpus, fname))
        t0 = time.time()
        g = enumerate_stt(A, max_nodes=args.max_nodes, seed=args.seed)
        dt = time.time() - t0
        print(f"{A.name:<14} {A.dim:>4} {g.n_nodes:>6} {g.n_edges:>6} {dt:>7.3f}")
        if args.out:
            base = os.path.join(args.out, A.name)
            with open(base + ".dot", "w") as fh:
                fh.write(export_graph_dot(g))
            with open(base + ".json", "w") as fh:
                fh.write(canonical_json(export_graph_json(g)))
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Emit the positive-chi dominance graph as DOT (render with `dot -Tsvg`)."""

import argparse
from pathlib import Path

from wpcurves.dominance import build_positive_dominance, emit_dot, terminal_nodes, validate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--amax", type=int, default=3)
    ap.add_argument("--out", default="results/dominance.dot")
    args = ap.parse_args()
    g = build_positive_dominance(args.nmax, args.amax)
    problems = validate(g)
    if problems:
        raise SystemExit("\n".join(problems))
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w") as fh:
        fh.write(emit_dot(g))
    print(f"{len(g.nodes)} nodes, {len(g.edges)} edges -> {args.out}; terminal {sorted(terminal_nodes(g))}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Write every connected graph on 7 vertices (up to isomorphism) in graph6.

Uses the graph atlas shipped with networkx. Usage: make_corpus.py OUT.g6
"""
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main() -> None:
    out = sys.argv[1] if len(sys.argv) > 1 else "connected7.g6"
    graphs = [g for g in graph_atlas_g() if g.number_of_nodes() == 7 and nx.is_connected(g)]
    with open(out, "w", encoding="ascii") as f:
        for g in graphs:
            f.write(nx.to_graph6_bytes(g, header=False).decode("ascii"))
    print(f"{len(graphs)} graphs -> {out}")


if __name__ == "__main__":
    main()

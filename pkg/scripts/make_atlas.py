#!/usr/bin/env python3
"""Regenerate tests/data/atlas_n1to7.g6: every graph on 1..7 vertices.

Uses the networkx graph atlas (Read & Wilson numbering) as the source of
the 1252 isomorphism classes and this package's encoder for the output,
one graph6 line per graph.  Run from the repository root:

    python scripts/make_atlas.py
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from deltamsr.graphs import from_edge_list, to_graph6

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "atlas_n1to7.g6"

# isomorphism classes of simple graphs on 1..7 vertices
EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def main() -> None:
    lines = []
    counts: Counter[int] = Counter()
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < 1:
            continue
        counts[n] += 1
        lines.append(to_graph6(from_edge_list(n, list(g.edges()))))
    assert dict(counts) == EXPECTED, counts
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {OUT}")


if __name__ == "__main__":
    main()

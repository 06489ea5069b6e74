#!/usr/bin/env python3
"""Regenerate the graph6 fixture corpora in tests/data/.

Emits one file per vertex count n = 3..7, each containing every isomorphism
class of simple undirected graphs on n vertices, one graph6 string per line
(no header). Source of truth is networkx's bundled graph atlas, relabelled to
dense 0..n-1 integers so the encodings are reproducible byte for byte.

Usage: python3 scripts/gen_corpus.py [outdir]
"""

import sys
from pathlib import Path

import networkx as nx

EXPECTED_COUNTS = {3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def main() -> None:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data")
    outdir.mkdir(parents=True, exist_ok=True)

    by_n = {n: [] for n in EXPECTED_COUNTS}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n not in by_n:
            continue
        h = nx.convert_node_labels_to_integers(g, ordering="sorted")
        line = nx.to_graph6_bytes(h, header=False).decode().strip()
        by_n[n].append(line)

    for n, lines in sorted(by_n.items()):
        if len(lines) != EXPECTED_COUNTS[n]:
            raise SystemExit(
                f"atlas gave {len(lines)} graphs for n={n}, "
                f"expected {EXPECTED_COUNTS[n]}"
            )
        path = outdir / f"graphs{n}.g6"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path} ({len(lines)} graphs)")


if __name__ == "__main__":
    main()

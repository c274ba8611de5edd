#!/usr/bin/env python3
"""Regenerate the graph6 fixture catalogs under tests/fixtures/.

connected_n<k>.g6  all connected graphs of order k (1..7), one per isomorphism
                   class, taken from the networkx graph atlas.
cubic_n<k>.g6      all connected cubic graphs of order k (4..10), one per
                   isomorphism class, found by seeded sampling and checked
                   against the known class counts.
cubic10.g6         the four cubic files concatenated, for `check --corpus`.

The output is sorted so reruns are byte-identical.
"""
import pathlib
import sys

import networkx as nx


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def connected_catalog(order):
    out = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == order and nx.is_connected(g)]
    return sorted(g6(nx.convert_node_labels_to_integers(g)) for g in out)


# Number of connected cubic graphs of order 4, 6, 8, 10 up to isomorphism.
KNOWN_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}


def cubic_catalog(order, samples=40000):
    """Samples labelled cubic graphs with a fixed seed sequence and keeps one
    representative per isomorphism class. Exhaustiveness is established by
    matching the known class count."""
    found = {}
    for seed in range(samples):
        g = nx.random_regular_graph(3, order, seed=seed)
        if not nx.is_connected(g):
            continue
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
        bucket = found.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        if sum(len(b) for b in found.values()) == KNOWN_CUBIC_COUNTS[order]:
            break
    graphs = [g for bucket in found.values() for g in bucket]
    if len(graphs) != KNOWN_CUBIC_COUNTS[order]:
        raise SystemExit(f"cubic order {order}: found {len(graphs)} classes, expected {KNOWN_CUBIC_COUNTS[order]}")
    return sorted(g6(g) for g in graphs)


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
    root.mkdir(parents=True, exist_ok=True)
    for k in range(1, 8):
        lines = connected_catalog(k)
        (root / f"connected_n{k}.g6").write_text("".join(l + "\n" for l in lines))
        print(f"connected_n{k}: {len(lines)}")
    combined = []
    for k in (4, 6, 8, 10):
        lines = cubic_catalog(k)
        combined += lines
        (root / f"cubic_n{k}.g6").write_text("".join(l + "\n" for l in lines))
        print(f"cubic_n{k}: {len(lines)}")
    (root / "cubic10.g6").write_text("".join(l + "\n" for l in combined))


if __name__ == "__main__":
    main()

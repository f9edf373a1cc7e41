#!/usr/bin/env python3
"""Generate the desk-scale corpus of cubic 3-edge-connected graphs.

Exhaustive up to isomorphism for n <= 10 (every connected cubic graph,
filtered to 3-edge-connected); named constructions for n in {12, 14}.
Writes one graph6 line per graph, sorted by (n, key), to
data/cubic_3ec_n4_14.g6 and prints a census table.

Regeneration takes a few minutes (the n=10 enumeration dominates); the
output file is committed so tests never need to re-run this.
"""

from __future__ import annotations

import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cubic2ec.canon import canonical_form, canonical_graph
from cubic2ec.connectivity import edge_connectivity, is_essentially_4ec
from cubic2ec.enumeration import connected_cubic_graphs
from cubic2ec.graphs import Graph, builtin

OUT = Path(__file__).resolve().parent.parent / "data" / "cubic_3ec_n4_14.g6"


def circular_ladder(k: int) -> Graph:
    n = 2 * k
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(n, tuple(edges))


def moebius_ladder(k: int) -> Graph:
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + k) for i in range(k)]
    return Graph(n, tuple(edges))


def generalized_petersen(k: int, step: int) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    inner = {tuple(sorted((k + i, k + (i + step) % k))) for i in range(k)}
    edges += sorted(inner)
    return Graph(2 * k, tuple(edges))


def heawood() -> Graph:
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(14) if i % 2 == 0]
    return Graph(14, tuple(edges))


def truncated_k4() -> Graph:
    tris = [(3 * t + i, 3 * t + (i + 1) % 3) for t in range(4) for i in range(3)]
    cross = [(0, 3), (1, 6), (2, 9), (4, 7), (5, 10), (8, 11)]
    return Graph(12, tuple(tris + cross))


def expand_vertex_to_triangle(g: Graph, v: int) -> Graph:
    """Replace vertex v by a triangle, one corner per former neighbor."""
    assert g.degree(v) == 3
    nbrs = sorted(g.neighbors(v))
    relabel = {}
    nxt = 0
    for w in range(g.n):
        if w != v:
            relabel[w] = nxt
            nxt += 1
    corners = [nxt, nxt + 1, nxt + 2]
    edges = [
        (relabel[a], relabel[b]) for a, b in g.edges if v not in (a, b)
    ]
    edges += [(corners[i], corners[(i + 1) % 3]) for i in range(3)]
    edges += [(relabel[w], corners[i]) for i, w in enumerate(nbrs)]
    return Graph(g.n + 2, tuple(edges))


def constructions():
    petersen = builtin("petersen")
    petersen_tri = expand_vertex_to_triangle(petersen, 0)
    yield "circular_ladder_6", circular_ladder(6)
    yield "moebius_ladder_6", moebius_ladder(6)
    yield "gen_petersen_6_2", generalized_petersen(6, 2)
    yield "truncated_k4", truncated_k4()
    yield "petersen_triangle", petersen_tri
    yield "circular_ladder_7", circular_ladder(7)
    yield "moebius_ladder_7", moebius_ladder(7)
    yield "gen_petersen_7_2", generalized_petersen(7, 2)
    yield "heawood", heawood()
    yield "petersen_double_triangle", expand_vertex_to_triangle(petersen_tri, 0)


def main():
    keys: dict[str, int] = {}
    for n in (4, 6, 8, 10):
        t0 = time.time()
        graphs = connected_cubic_graphs(n)
        kept = 0
        for g in graphs:
            if edge_connectivity(g) >= 3:
                keys[canonical_form(g)[0]] = n
                kept += 1
        print(
            f"n={n}: {len(graphs)} connected cubic, {kept} three-edge-connected"
            f" ({time.time() - t0:.1f}s)"
        )
    for name, g in constructions():
        assert g.is_cubic, name
        if edge_connectivity(g) < 3:
            print(f"skipping {name}: not 3-edge-connected")
            continue
        key = canonical_form(g)[0]
        if key in keys:
            print(f"{name}: duplicate of an enumerated graph")
        keys[key] = g.n

    ordered = sorted(keys, key=lambda k: (keys[k], k))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(ordered) + "\n")

    census = Counter()
    for key in ordered:
        g = canonical_graph(key)
        census[(g.n, is_essentially_4ec(g))] += 1
    print(f"\nwrote {len(ordered)} graphs to {OUT}")
    print("n  essentially4ec  count")
    for (n, e4), cnt in sorted(census.items()):
        print(f"{n:<3}{str(e4).lower():<16}{cnt}")


if __name__ == "__main__":
    main()

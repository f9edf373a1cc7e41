"""Canonical labeling by iterative refinement with backtracking.

Desk-scale individualization-refinement: refine the vertex partition by
neighbor-cell counts, branch on the first non-singleton cell, and take the
minimum adjacency encoding over all discrete leaves.  Quadratic per leaf;
adequate for the n <= 20 graphs this package handles.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, parse_graph6, to_graph6


def _refine(cells: tuple[tuple[int, ...], ...], nbrs) -> tuple[tuple[int, ...], ...]:
    cells = list(cells)
    while True:
        pos = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                pos[v] = ci
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in nbrs[v]:
                    counts[pos[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            if len(sig) > 1:
                changed = True
            for key in sorted(sig):
                new_cells.append(tuple(sig[key]))
        cells = new_cells
        if not changed:
            return tuple(cells)


def _encode(g: Graph, order: tuple[int, ...]) -> bytes:
    """Upper-triangle adjacency bits of g relabeled by position in order."""
    bits = []
    for col in range(1, g.n):
        vc = order[col]
        for row in range(col):
            bits.append(1 if g.has_edge(order[row], vc) else 0)
    while len(bits) % 8:
        bits.append(0)
    return bytes(
        sum(b << (7 - k) for k, b in enumerate(bits[i : i + 8]))
        for i in range(0, len(bits), 8)
    )


@lru_cache(maxsize=4096)
def canonical_form(g: Graph) -> tuple[str, tuple[int, ...]]:
    """Return ``(key, perm)``: a canonical graph6 string and the relabeling.

    ``perm[v]`` is the canonical index of vertex ``v``.  Isomorphic graphs
    produce identical keys, and applying ``perm`` to ``g`` reproduces
    ``parse_graph6(key)`` exactly.
    """
    n = g.n
    if n < 1:
        raise ValueError("canonical_form requires n >= 1")
    nbrs = [g.neighbors(v) for v in range(n)]
    best: list = [None, None]  # encoding bytes, order (position -> old vertex)

    def search(cells):
        cells = _refine(cells, nbrs)
        target = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1:
                target = ci
                break
        if target is None:
            order = tuple(cell[0] for cell in cells)
            enc = _encode(g, order)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, order
            return
        cell = cells[target]
        for v in cell:
            split = (
                cells[:target]
                + ((v,), tuple(u for u in cell if u != v))
                + cells[target + 1 :]
            )
            search(split)

    search((tuple(range(n)),))
    order = best[1]
    perm = [0] * n
    for position, old in enumerate(order):
        perm[old] = position
    canon = Graph(n, tuple((perm[u], perm[v]) for u, v in g.edges))
    return to_graph6(canon), tuple(perm)


def canonical_graph(key: str) -> Graph:
    """Decode a canonical key back into its graph."""
    return parse_graph6(key)

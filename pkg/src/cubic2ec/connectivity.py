"""Edge-connectivity queries, essential-cut detection, and safe pairs.

Cut existence queries use exhaustive shore enumeration over bitmasks
(n <= 20), which answers "does ANY cut with these properties exist"
exactly — a min-cut algorithm only exhibits one minimizer.  Shores are
canonical: always the side not containing vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import Lemma3Violation
from .graphs import Graph

CUT_ENUM_MAX_N = 20


@dataclass(frozen=True)
class Cut:
    """A vertex shore and its crossing edge set.

    The shore is the side not containing vertex 0, sorted ascending;
    ``crossing`` holds the edge ids with exactly one endpoint in it.
    """

    shore: tuple[int, ...]
    crossing: tuple[int, ...]


@dataclass(frozen=True)
class SafePairDecision:
    """Removal pairs chosen around a pivot edge.

    ``pair_a`` and ``pair_b`` are the edge pairs removed to build the two
    children.  ``orientation`` is 1 for the (au,vc)/(bu,vd) pairing with
    neighbors sorted by index, 2 for the crossed pairing; ``witness_cut``
    is the essential 4-cut that ruled orientation 1 out, if any.
    """

    pivot_edge: int
    pair_a: tuple[int, int]
    pair_b: tuple[int, int]
    orientation: int
    witness_cut: Cut | None


@dataclass(frozen=True)
class Lemma3Report:
    """Outcome of the exhaustive safe-pair verification on one graph."""

    configurations: int
    pivots: int
    violations: tuple
    orientation_flips: int
    divergences: tuple

    @property
    def ok(self) -> bool:
        return not self.violations and not self.divergences


# ---------------------------------------------------------------------------
# mask plumbing
# ---------------------------------------------------------------------------


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _guard_size(g: Graph):
    if g.n > CUT_ENUM_MAX_N:
        raise ValueError(
            f"cut enumeration limited to n <= {CUT_ENUM_MAX_N} (got n={g.n})"
        )


def _crossing_mask(g: Graph, shore_mask: int) -> int:
    out = 0
    for e, (u, v) in enumerate(g.edges):
        if ((shore_mask >> u) ^ (shore_mask >> v)) & 1:
            out |= 1 << e
    return out


def _has_internal_edge(g: Graph, vmask: int) -> bool:
    for u, v in g.edges:
        if (vmask >> u) & 1 and (vmask >> v) & 1:
            return True
    return False


def _is_essential_mask(g: Graph, shore_mask: int) -> bool:
    comp = ((1 << g.n) - 1) ^ shore_mask
    if shore_mask.bit_count() < 2 or comp.bit_count() < 2:
        return False
    return _has_internal_edge(g, shore_mask) and _has_internal_edge(g, comp)


def make_cut(g: Graph, shore: Iterable[int]) -> Cut:
    """Build the canonical Cut for a vertex subset (crossing recomputed)."""
    vs = set(shore)
    if not vs or not vs < set(range(g.n)):
        raise ValueError("shore must be a proper nonempty vertex subset")
    if 0 in vs:
        vs = set(range(g.n)) - vs
    mask = 0
    for v in vs:
        mask |= 1 << v
    cross = _crossing_mask(g, mask)
    return Cut(tuple(sorted(vs)), tuple(_iter_bits(cross)))


def is_essential_cut(g: Graph, cut: Cut) -> bool:
    mask = 0
    for v in cut.shore:
        mask |= 1 << v
    return _is_essential_mask(g, mask)


@lru_cache(maxsize=512)
def _cuts_up_to_4(g: Graph) -> tuple[tuple[int, int, int], ...]:
    """All canonical shores with |crossing| <= 4 as (shore, crossing, size)."""
    _guard_size(g)
    out = []
    for mask in range(1, 1 << (g.n - 1)):
        shore = mask << 1  # vertex 0 never in the shore
        cross = _crossing_mask(g, shore)
        size = cross.bit_count()
        if size <= 4:
            out.append((shore, cross, size))
    return tuple(out)


@lru_cache(maxsize=512)
def _min_cut_size(g: Graph) -> int:
    _guard_size(g)
    best = g.m + 1
    for mask in range(1, 1 << (g.n - 1)):
        size = _crossing_mask(g, mask << 1).bit_count()
        if size < best:
            best = size
            if best == 0:
                break
    return best


def _mask_to_cut(g: Graph, shore_mask: int) -> Cut:
    return Cut(
        tuple(_iter_bits(shore_mask)),
        tuple(_iter_bits(_crossing_mask(g, shore_mask))),
    )


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------


def is_2ec(g: Graph, sub) -> bool:
    """True iff the spanning subgraph (V, sub) is connected and bridgeless.

    ``sub`` may be an iterable of edge ids or an edge bitmask.
    """
    n = g.n
    if n <= 1:
        return True
    edge_ids = _iter_bits(sub) if isinstance(sub, int) else sub
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in edge_ids:
        u, v = g.endpoints(e)
        adj[u].append((v, e))
        adj[v].append((u, e))

    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    ptr = [0] * n
    stack = [0]
    disc[0] = low[0] = 0
    timer = 1
    visited = 1
    while stack:
        v = stack[-1]
        if ptr[v] < len(adj[v]):
            w, e = adj[v][ptr[v]]
            ptr[v] += 1
            if e == parent_edge[v]:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                visited += 1
                parent_edge[w] = e
                stack.append(w)
            elif disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                p = stack[-1]
                if low[v] > disc[p]:
                    return False  # tree edge into v is a bridge
                if low[v] < low[p]:
                    low[p] = low[v]
    return visited == n


def edge_connectivity(g: Graph) -> int:
    """Minimum cut size over all shores; 0 for a disconnected graph."""
    if g.n < 2:
        raise ValueError("edge connectivity needs n >= 2")
    return _min_cut_size(g)


def enumerate_cuts(g: Graph, max_size: int) -> list[Cut]:
    """All cuts with |crossing| <= max_size, one canonical shore per
    {S, complement} pair, in ascending shore-bitmask order."""
    if g.n < 2:
        raise ValueError("cut enumeration needs n >= 2")
    _guard_size(g)
    out = []
    for mask in range(1, 1 << (g.n - 1)):
        shore = mask << 1
        cross = _crossing_mask(g, shore)
        if cross.bit_count() <= max_size:
            out.append(
                Cut(tuple(_iter_bits(shore)), tuple(_iter_bits(cross)))
            )
    return out


def find_essential_3cut(g: Graph) -> Cut | None:
    """Deterministic essential 3-edge cut (smallest canonical shore), if any."""
    if not g.is_cubic:
        raise ValueError("find_essential_3cut requires a cubic graph")
    if edge_connectivity(g) < 3:
        raise ValueError("find_essential_3cut requires a 3-edge-connected graph")
    best = None
    for shore, cross, size in _cuts_up_to_4(g):
        if size == 3 and _is_essential_mask(g, shore):
            key = (shore.bit_count(), shore)
            if best is None or key < best[0]:
                best = (key, shore)
    if best is None:
        return None
    return _mask_to_cut(g, best[1])


def is_essentially_4ec(g: Graph) -> bool:
    """No essential cut of size < 4 (and 3-edge-connected)."""
    if not g.is_cubic:
        raise ValueError("is_essentially_4ec requires a cubic graph")
    if edge_connectivity(g) < 3:
        return False
    return find_essential_3cut(g) is None


def essential_4cut_with_pair(
    g: Graph,
    e1: int,
    e2: int,
    excluded_shore: Iterable[int] | None = None,
) -> Cut | None:
    """An essential 4-cut containing both edges, with the given shore pair
    excluded, smallest canonical shore first; None if there is none."""
    if e1 == e2:
        raise ValueError("the two edges must be distinct")
    if not g.is_cubic:
        raise ValueError("essential_4cut_with_pair requires a cubic graph")
    excl = -1
    if excluded_shore is not None:
        vs = set(excluded_shore)
        if 0 in vs:
            vs = set(range(g.n)) - vs
        excl = 0
        for v in vs:
            excl |= 1 << v
    want = (1 << e1) | (1 << e2)
    best = None
    for shore, cross, size in _cuts_up_to_4(g):
        if size != 4 or shore == excl:
            continue
        if cross & want != want:
            continue
        if not _is_essential_mask(g, shore):
            continue
        key = (shore.bit_count(), shore)
        if best is None or key < best[0]:
            best = (key, shore)
    if best is None:
        return None
    return _mask_to_cut(g, best[1])


def _pivot_context(g: Graph, uv: int):
    u, v = g.endpoints(uv)
    a, b = sorted(w for w in g.neighbors(u) if w != v)
    c, d = sorted(w for w in g.neighbors(v) if w != u)
    return u, v, a, b, c, d


def find_safe_pair(g: Graph, uv: int) -> SafePairDecision:
    """Choose the removal orientation around pivot uv.

    Tries {(au,vc), (bu,vd)} first (neighbors sorted by index); if either
    pair sits in a common essential 4-cut other than the pivot's endpoint
    cut, falls back to {(au,vd), (bu,vc)} and reports the witness.  Raises
    Lemma3Violation if both orientations are blocked.
    """
    if not g.is_cubic:
        raise ValueError("find_safe_pair requires a cubic graph")
    if g.n <= 6:
        raise ValueError("find_safe_pair requires n > 6")
    if not is_essentially_4ec(g):
        raise ValueError("find_safe_pair requires an essentially 4-edge-connected graph")
    u, v, a, b, c, d = _pivot_context(g, uv)
    au, bu = g.edge_id(a, u), g.edge_id(b, u)
    vc, vd = g.edge_id(v, c), g.edge_id(v, d)
    excluded = (u, v)

    w1 = essential_4cut_with_pair(g, au, vc, excluded) or essential_4cut_with_pair(
        g, bu, vd, excluded
    )
    if w1 is None:
        return SafePairDecision(uv, (au, vc), (bu, vd), 1, None)
    w2 = essential_4cut_with_pair(g, au, vd, excluded) or essential_4cut_with_pair(
        g, bu, vc, excluded
    )
    if w2 is None:
        return SafePairDecision(uv, (au, vd), (bu, vc), 2, w1)
    raise Lemma3Violation(
        f"both removal orientations around edge {uv} are blocked",
        witnesses=(w1, w2),
    )


def verify_lemma3(g: Graph) -> Lemma3Report:
    """Exhaustively check the safe-pair guarantee on one graph.

    For every oriented path a-u-v with v's other neighbors c, d this
    asserts that (au,vc) and (au,vd) are never both inside essential
    4-cuts other than the endpoint cut of uv (the literal phrasing), and
    that every pivot admits a safe orientation (the constructive
    phrasing).  Divergences between the two phrasings are reported
    separately rather than resolved.
    """
    if not g.is_cubic:
        raise ValueError("verify_lemma3 requires a cubic graph")
    if g.n <= 6:
        raise ValueError("verify_lemma3 requires n > 6")
    if not is_essentially_4ec(g):
        raise ValueError("verify_lemma3 requires an essentially 4-edge-connected graph")

    configurations = 0
    violations = []
    flips = 0
    divergences = []
    literal_ok_everywhere = True

    for uv, (x, y) in enumerate(g.edges):
        for u, v in ((x, y), (y, x)):
            others_u = [w for w in g.neighbors(u) if w != v]
            c, d = sorted(w for w in g.neighbors(v) if w != u)
            vc, vd = g.edge_id(v, c), g.edge_id(v, d)
            for a in sorted(others_u):
                au = g.edge_id(a, u)
                configurations += 1
                s1 = essential_4cut_with_pair(g, au, vd, (u, v))
                s2 = essential_4cut_with_pair(g, au, vc, (u, v))
                if s1 is not None and s2 is not None:
                    literal_ok_everywhere = False
                    violations.append(
                        {
                            "pivot": uv,
                            "path": (a, u, v),
                            "others": (c, d),
                            "cut_with_vd": s1,
                            "cut_with_vc": s2,
                        }
                    )
        # constructive phrasing: a safe orientation must exist
        try:
            decision = find_safe_pair(g, uv)
            if decision.orientation == 2:
                flips += 1
        except Lemma3Violation as exc:
            if literal_ok_everywhere:
                divergences.append({"pivot": uv, "witnesses": exc.witnesses})
            else:
                violations.append({"pivot": uv, "witnesses": exc.witnesses})

    return Lemma3Report(
        configurations=configurations,
        pivots=g.m,
        violations=tuple(violations),
        orientation_flips=flips,
        divergences=tuple(divergences),
    )

"""Uniform-7/9 convex combinations of 2EC spanning subgraphs.

Every cubic 3-edge-connected graph admits a convex combination of
2-edge-connected spanning subgraphs in which each edge appears with total
weight exactly 7/9.  This module builds such a combination by recursion on
graph size:

* n <= 6 and essentially 4-edge-connected: exact feasibility search over
  all 2EC spanning subgraphs.
* an essential 3-edge cut exists: contract both shores, certify the two
  children, and glue their combinations along the forced pseudo-vertex
  patterns (omit each cut edge 2/9 of the time, keep all three 1/3).
* otherwise (essentially 4EC, n > 6): for every pivot edge, remove a safe
  pair of edges at its ends, smooth, certify the two children, lift them
  back, and average the per-pivot combinations over all pivots; pad any
  deficient edge back up to 7/9.

All arithmetic is exact (fractions.Fraction); no floats anywhere in the
certification path.  The recursion memoizes on canonical forms, so the
same reduced graph is certified once per isomorphism class.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction

from . import connectivity
from .canon import canonical_form, canonical_graph
from .enumeration import connected_cubic_graphs
from .errors import (
    BaseCaseFailure,
    GlueFailure,
    LiftFailure,
    PatternMismatch,
)
from .exact_lp import feasible_basic_solution
from .graphs import Graph, Reduction, contract_shore, remove_edges_and_smooth

log = logging.getLogger(__name__)

TARGET = Fraction(7, 9)
DEFAULT_MAX_N = 14
HARD_MAX_N = 18


def support_bound(n: int) -> int:
    """The subgraph-size bound floor(7n/6)."""
    return (7 * n) // 6


@dataclass(frozen=True)
class Subgraph:
    """An edge subset of a host graph, read as a spanning subgraph."""

    host: Graph
    edges: tuple[int, ...]


@dataclass(frozen=True)
class ConvexCombination:
    """Weighted 2EC spanning subgraphs with exact weights summing to 1.

    Entries are deduplicated by edge set and kept in ascending edge-tuple
    order, so equal combinations compare equal.
    """

    host: Graph
    entries: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def subgraphs(self):
        return tuple(Subgraph(self.host, es) for _, es in self.entries)


@dataclass(frozen=True)
class Case1Profile:
    """Pivot-edge placement counts: t pivots share a 4-cycle with the edge,
    r are one edge away without one; cubic structure forces 2t + r = 8."""

    pivot: int
    t: int
    r: int


@dataclass(frozen=True)
class Certificate:
    """A graph with a uniform-7/9 combination and a replayable trace."""

    graph: Graph
    combination: ConvexCombination
    target: Fraction
    trace: tuple
    declared_min_support: int | None = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


# ---------------------------------------------------------------------------
# combination plumbing
# ---------------------------------------------------------------------------


def combination(host: Graph, raw_entries, check: bool = True) -> ConvexCombination:
    """Validate, deduplicate and canonically order entries.

    Weights must be positive rationals summing to exactly 1; with
    ``check`` every member must be a spanning 2EC subgraph of the host.
    """
    acc: dict[tuple[int, ...], Fraction] = {}
    for weight, edge_ids in raw_entries:
        w = Fraction(weight)
        if w < 0:
            raise ValueError("weights must be nonnegative")
        if w == 0:
            continue
        key = tuple(sorted(set(edge_ids)))
        if key and not (0 <= key[0] and key[-1] < host.m):
            raise ValueError(f"edge id out of range in entry {key}")
        acc[key] = acc.get(key, Fraction(0)) + w
    if not acc:
        raise ValueError("a convex combination needs at least one entry")
    total = sum(acc.values())
    if total != 1:
        raise ValueError(f"weights must sum to 1 exactly (got {total})")
    entries = tuple(sorted(acc.items(), key=lambda kv: kv[0]))
    if check:
        for key, _ in entries:
            if not connectivity.is_2ec(host, key):
                raise ValueError(
                    f"entry {key} is not a spanning 2-edge-connected subgraph"
                )
    return ConvexCombination(host, tuple((w, k) for k, w in entries))


def edge_occurrences(c: ConvexCombination) -> tuple[Fraction, ...]:
    """Per-edge total weight sum over the members containing the edge."""
    occ = [Fraction(0)] * c.host.m
    for w, es in c.entries:
        for e in es:
            occ[e] += w
    return tuple(occ)


def average(parts) -> ConvexCombination:
    """Weighted merge of combinations over one host (weights sum to 1)."""
    parts = list(parts)
    if not parts:
        raise ValueError("average needs at least one part")
    total = sum(Fraction(w) for w, _ in parts)
    if total != 1:
        raise ValueError(f"part weights must sum to 1 exactly (got {total})")
    host = parts[0][1].host
    raw = []
    for w, comb in parts:
        if comb.host != host:
            raise ValueError("all combinations must share one host graph")
        raw.extend((Fraction(w) * ew, es) for ew, es in comb.entries)
    # members were already checked when the parts were built
    return combination(host, raw, check=False)


def pad_to_uniform(c: ConvexCombination, target: Fraction) -> ConvexCombination:
    """Raise every deficient edge to exactly ``target`` occurrence.

    Deficient edges are processed in ascending id; weight is split off
    entries not containing the edge, in ascending entry index, into copies
    that add the edge.  Adding edges preserves 2-edge-connectivity, so no
    re-check is needed; occurrences above target are rejected.
    """
    target = Fraction(target)
    occ = edge_occurrences(c)
    for e, val in enumerate(occ):
        if val > target:
            raise ValueError(
                f"edge {e} occurs {val} > target {target}; cannot pad down"
            )
    work = [[w, set(es)] for w, es in c.entries]
    for e in range(c.host.m):
        deficit = target - occ[e]
        i = 0
        while deficit > 0 and i < len(work):
            w, es = work[i]
            if e not in es and w > 0:
                take = min(w, deficit)
                work[i][0] = w - take
                work.append([take, es | {e}])
                deficit -= take
            i += 1
        assert deficit == 0, f"padding could not reach target on edge {e}"
    out = combination(
        c.host, ((w, tuple(sorted(es))) for w, es in work if w > 0), check=False
    )
    assert all(v == target for v in edge_occurrences(out))
    return out


# ---------------------------------------------------------------------------
# base cases
# ---------------------------------------------------------------------------


def two_ec_spanning_subgraphs(g: Graph):
    """All spanning 2EC edge subsets, ascending by edge bitmask.

    Exhaustive over 2^m subsets; meant for the n <= 6 base cases.
    """
    n = g.n
    for mask in range(1 << g.m):
        if mask.bit_count() < n:
            continue
        if connectivity.is_2ec(g, mask):
            yield tuple(
                e for e in range(g.m) if (mask >> e) & 1
            )


def base_case_graphs() -> list[Graph]:
    """Every cubic, 3-edge-connected, essentially 4EC graph with n <= 6."""
    out = []
    for n in (4, 6):
        for g in connected_cubic_graphs(n):
            if connectivity.edge_connectivity(g) >= 3 and connectivity.is_essentially_4ec(g):
                out.append(g)
    return out


def base_case_combination(g: Graph) -> ConvexCombination:
    """Uniform-target combination for a small graph by exact feasibility.

    Solves for nonnegative weights over all 2EC spanning subgraphs with
    per-edge occurrence exactly 7/9 and total weight 1; the first basic
    solution in the fixed subgraph order is returned.
    """
    if not g.is_cubic:
        raise ValueError("base case requires a cubic graph")
    if g.n > 6:
        raise ValueError("base case requires n <= 6")
    if connectivity.edge_connectivity(g) < 3:
        raise ValueError("base case requires a 3-edge-connected graph")
    if not connectivity.is_essentially_4ec(g):
        raise ValueError("base case requires an essentially 4-edge-connected graph")
    subgraphs = list(two_ec_spanning_subgraphs(g))
    rows = []
    for e in range(g.m):
        rows.append([Fraction(int(e in sub)) for sub in subgraphs])
    rows.append([Fraction(1)] * len(subgraphs))
    rhs = [TARGET] * g.m + [Fraction(1)]
    lam = feasible_basic_solution(rows, rhs)
    if lam is None:
        raise BaseCaseFailure(
            f"no uniform-{TARGET} combination exists for this base graph"
        )
    comb = combination(
        g, ((w, sub) for w, sub in zip(lam, subgraphs) if w > 0)
    )
    assert all(v == TARGET for v in edge_occurrences(comb))
    return comb


# ---------------------------------------------------------------------------
# case 1: remove a safe pair, lift, average over pivots
# ---------------------------------------------------------------------------


def lift(child_combination: ConvexCombination, red: Reduction) -> ConvexCombination:
    """Map a child combination through a removal reduction to the parent.

    Every child edge expands to its provenance path; the edges adjacent to
    the removed pair are always selected and the removed pair is always
    omitted.  Each lifted member must be spanning 2EC for the parent.
    """
    if red.kind != "case1_removal":
        raise ValueError("lift applies to removal reductions only")
    if child_combination.host != red.child:
        raise ValueError("combination host does not match the reduction child")
    raw = []
    for w, es in child_combination.entries:
        parent_edges: set[int] = set()
        for ce in es:
            parent_edges.update(red.edge_provenance[ce])
        parent_edges |= red.forced_include
        parent_edges -= red.forced_exclude
        key = tuple(sorted(parent_edges))
        if not connectivity.is_2ec(red.parent, key):
            raise LiftFailure(
                "lifted subgraph is not spanning 2-edge-connected", edges=key
            )
        raw.append((w, key))
    return combination(red.parent, raw, check=False)


def _case1_target_occurrences(g: Graph, uv: int) -> list[Fraction]:
    """The piecewise occurrence vector produced by one pivot reduction."""
    u, v = g.endpoints(uv)
    half = [e for e in g.incident(u) + g.incident(v) if e != uv]
    halfset = set(half)
    half_ends = [set(g.endpoints(h)) for h in half]
    out = []
    for e in range(g.m):
        if e == uv:
            out.append(Fraction(1))
        elif e in halfset:
            out.append(Fraction(1, 2))
        else:
            ends = set(g.endpoints(e))
            k = sum(1 for he in half_ends if he & ends)
            if k >= 2:
                out.append(Fraction(1))
            elif k == 1:
                out.append(Fraction(8, 9))
            else:
                out.append(TARGET)
    return out


def _case1_profile(g: Graph, uv: int) -> Case1Profile:
    u, v = g.endpoints(uv)
    half = [e for e in g.incident(u) + g.incident(v) if e != uv]
    halfset = set(half)
    half_ends = [set(g.endpoints(h)) for h in half]
    t = r = 0
    for e in range(g.m):
        if e == uv or e in halfset:
            continue
        ends = set(g.endpoints(e))
        k = sum(1 for he in half_ends if he & ends)
        if k == 2:
            t += 1
        elif k == 1:
            r += 1
    return Case1Profile(pivot=uv, t=t, r=r)


# ---------------------------------------------------------------------------
# case 2: contract the shores of an essential 3-cut and glue
# ---------------------------------------------------------------------------

_PATTERN_OMIT = Fraction(2, 9)
_PATTERN_FULL = Fraction(1, 3)


def _pattern_classes(comb: ConvexCombination, red: Reduction):
    """Group entries by which pseudo-vertex edge they omit.

    Keys are parent cut edge ids (or None for all-present); weights are
    forced to (2/9, 2/9, 2/9, 1/3) by the degree-3 pattern argument.
    """
    corr = dict(red.cut_correspondence)
    pseudo_edges = sorted(corr)
    classes: dict[int | None, list[tuple[Fraction, tuple[int, ...]]]] = {
        corr[pe]: [] for pe in pseudo_edges
    }
    classes[None] = []
    for w, es in comb.entries:
        omitted = [pe for pe in pseudo_edges if pe not in es]
        if len(omitted) > 1:
            raise PatternMismatch(
                f"a member omits {len(omitted)} pseudo-vertex edges"
            )
        key = corr[omitted[0]] if omitted else None
        classes[key].append((w, es))
    for key, entries in classes.items():
        want = _PATTERN_FULL if key is None else _PATTERN_OMIT
        got = sum((w for w, _ in entries), Fraction(0))
        if got != want:
            raise PatternMismatch(
                f"pattern weight for {'all-present' if key is None else f'omit edge {key}'}"
                f" is {got}, expected {want}"
            )
    return classes


def glue(
    c1: ConvexCombination,
    c2: ConvexCombination,
    red1: Reduction,
    red2: Reduction,
) -> ConvexCombination:
    """Recombine the two contracted shores of one essential 3-cut.

    Within each pseudo-vertex pattern class the two entry lists are paired
    by common refinement of weights; each glued member is the union of the
    two shore selections plus the cut edges the shared pattern keeps.
    """
    for red in (red1, red2):
        if red.kind != "case2_contraction":
            raise ValueError("glue applies to contraction reductions only")
    if red1.parent != red2.parent:
        raise ValueError("the reductions must contract the same parent graph")
    if c1.host != red1.child or c2.host != red2.child:
        raise ValueError("combination hosts do not match the reduction children")
    cut1 = sorted(pe for _, pe in red1.cut_correspondence)
    cut2 = sorted(pe for _, pe in red2.cut_correspondence)
    if cut1 != cut2:
        raise ValueError("children come from different cuts")
    kept1 = {v for v in range(red1.parent.n) if red1.vertex_map[v] is not None}
    kept2 = {v for v in range(red2.parent.n) if red2.vertex_map[v] is not None}
    if kept1 & kept2 or kept1 | kept2 != set(range(red1.parent.n)):
        raise ValueError("the reductions must contract complementary shores")

    parent = red1.parent
    cut_edges = set(cut1)

    def to_parent(red, es):
        out = set()
        for ce in es:
            out.update(red.edge_provenance[ce])
        return out

    classes1 = _pattern_classes(c1, red1)
    classes2 = _pattern_classes(c2, red2)
    raw = []
    for key in sorted(cut_edges) + [None]:
        lst1 = [list(t) for t in classes1[key]]
        lst2 = [list(t) for t in classes2[key]]
        i = j = 0
        while i < len(lst1) and j < len(lst2):
            w = min(lst1[i][0], lst2[j][0])
            if w > 0:
                present = cut_edges - ({key} if key is not None else set())
                glued = (
                    to_parent(red1, lst1[i][1])
                    | to_parent(red2, lst2[j][1])
                )
                # both sides agree on the cut pattern by construction
                assert glued & cut_edges == present
                gk = tuple(sorted(glued))
                if not connectivity.is_2ec(parent, gk):
                    raise GlueFailure(
                        "glued subgraph is not spanning 2-edge-connected", edges=gk
                    )
                raw.append((w, gk))
            lst1[i][0] -= w
            lst2[j][0] -= w
            if lst1[i][0] == 0:
                i += 1
            if lst2[j][0] == 0:
                j += 1
        assert all(t[0] == 0 for t in lst1[i:]) and all(
            t[0] == 0 for t in lst2[j:]
        ), "pattern class weights fell out of alignment"
    out = combination(parent, raw, check=False)
    assert all(v == TARGET for v in edge_occurrences(out))
    return out


# ---------------------------------------------------------------------------
# the certifier
# ---------------------------------------------------------------------------


class Certifier:
    """Builds uniform-7/9 certificates, memoizing by canonical form.

    The cache maps a canonical graph6 key to the combination computed on
    the canonically labeled graph plus its trace record; results for any
    isomorphic graph are obtained by mapping edges back through the
    canonical permutation, so output depends only on the input graph.
    """

    def __init__(self, max_n: int = DEFAULT_MAX_N):
        if not 4 <= max_n <= HARD_MAX_N:
            raise ValueError(f"max_n must be within [4, {HARD_MAX_N}]")
        self.max_n = max_n
        self._cache: dict[str, tuple[ConvexCombination, dict]] = {}

    # -- public ops --------------------------------------------------------

    def certify(self, g: Graph) -> Certificate:
        """Certificate with every edge at exactly 7/9."""
        self._validate_input(g)
        key, _ = canonical_form(g)
        comb = self._combination(g)
        occ = edge_occurrences(comb)
        assert all(v == TARGET for v in occ)
        return Certificate(
            graph=g, combination=comb, target=TARGET, trace=self._trace_closure(key)
        )

    def reduce_case1(
        self, g: Graph, uv: int
    ) -> tuple[ConvexCombination, Case1Profile]:
        """One pivot reduction: ½·lift(C1) + ½·lift(C2) with its profile."""
        self._validate_input(g)
        if not connectivity.is_essentially_4ec(g):
            raise ValueError("reduce_case1 requires no essential 3-edge cut")
        if g.n <= 6:
            raise ValueError("reduce_case1 requires n > 6")
        if not 0 <= uv < g.m:
            raise ValueError(f"no edge {uv}")
        comb, profile, _ = self._pivot_combination(g, uv)
        return comb, profile

    # -- internals ----------------------------------------------------------

    def _validate_input(self, g: Graph):
        if not g.is_cubic:
            raise ValueError("input graph must be cubic")
        if g.n > self.max_n:
            raise ValueError(
                f"n={g.n} exceeds the configured maximum {self.max_n}"
            )
        if connectivity.edge_connectivity(g) < 3:
            raise ValueError("input graph must be 3-edge-connected")

    def _combination(self, g: Graph) -> ConvexCombination:
        comb, _ = self._combination_with_key(g)
        return comb

    def _combination_with_key(self, g: Graph) -> tuple[ConvexCombination, str]:
        key, perm = canonical_form(g)
        if key not in self._cache:
            K = canonical_graph(key)
            built = self._build(K, key)
            self._cache.setdefault(key, built)
        comb_k, _ = self._cache[key]
        return _map_combination(comb_k, g, perm), key

    def _build(self, K: Graph, key: str) -> tuple[ConvexCombination, dict]:
        assert K.is_cubic and connectivity.edge_connectivity(K) >= 3
        cut = connectivity.find_essential_3cut(K)
        if cut is not None:
            log.debug("case 2 at n=%d (%s)", K.n, key)
            return self._case2(K, key, cut)
        if K.n <= 6:
            log.debug("base case at n=%d (%s)", K.n, key)
            comb = base_case_combination(K)
            record = {
                "kind": "base",
                "graph6": key,
                "n": K.n,
                "entries": len(comb.entries),
                "children": [],
            }
            return comb, record
        log.debug("case 1 at n=%d (%s)", K.n, key)
        return self._case1(K, key)

    def _pivot_combination(self, g: Graph, uv: int):
        decision = connectivity.find_safe_pair(g, uv)
        red_a = remove_edges_and_smooth(g, *decision.pair_a)
        red_b = remove_edges_and_smooth(g, *decision.pair_b)
        child_keys = []
        lifted = []
        for red in (red_a, red_b):
            assert connectivity.edge_connectivity(red.child) >= 3, (
                "safe-pair child must stay 3-edge-connected"
            )
            child_comb, child_key = self._combination_with_key(red.child)
            child_keys.append(child_key)
            lifted.append(lift(child_comb, red))
        comb = average([(Fraction(1, 2), lifted[0]), (Fraction(1, 2), lifted[1])])
        expected = _case1_target_occurrences(g, uv)
        assert list(edge_occurrences(comb)) == expected, (
            f"pivot {uv}: occurrences deviate from the piecewise profile"
        )
        profile = _case1_profile(g, uv)
        assert 2 * profile.t + profile.r == 8
        return comb, profile, (decision, child_keys)

    def _case1(self, K: Graph, key: str) -> tuple[ConvexCombination, dict]:
        m = K.m
        parts = []
        profiles = []
        pivot_records = []
        children: set[str] = set()
        for uv in range(m):
            comb, profile, (decision, child_keys) = self._pivot_combination(K, uv)
            parts.append((Fraction(1, m), comb))
            profiles.append(profile)
            children.update(child_keys)
            pivot_records.append(
                {
                    "pivot": uv,
                    "removed": [list(decision.pair_a), list(decision.pair_b)],
                    "orientation": decision.orientation,
                    "witness_shore": (
                        list(decision.witness_cut.shore)
                        if decision.witness_cut
                        else None
                    ),
                    "children": child_keys,
                }
            )
        avg = average(parts)
        occ = edge_occurrences(avg)
        for e in range(m):
            closed_form = TARGET + Fraction(
                2 * profiles[e].t + profiles[e].r - 8, 9 * m
            )
            assert occ[e] == closed_form, (
                f"edge {e}: averaged occurrence {occ[e]} != closed form"
            )
            assert occ[e] <= TARGET
        final = pad_to_uniform(avg, TARGET)
        record = {
            "kind": "case1",
            "graph6": key,
            "n": K.n,
            "entries": len(final.entries),
            "pivots": pivot_records,
            "children": sorted(children),
        }
        return final, record

    def _case2(self, K: Graph, key: str, cut) -> tuple[ConvexCombination, dict]:
        red_in = contract_shore(K, cut, "inside")
        red_out = contract_shore(K, cut, "outside")
        for red in (red_in, red_out):
            assert connectivity.edge_connectivity(red.child) >= 3, (
                "contracted shore must stay 3-edge-connected"
            )
        c_in, key_in = self._combination_with_key(red_in.child)
        c_out, key_out = self._combination_with_key(red_out.child)
        comb = glue(c_in, c_out, red_in, red_out)
        record = {
            "kind": "case2",
            "graph6": key,
            "n": K.n,
            "entries": len(comb.entries),
            "shore": list(cut.shore),
            "cut": list(cut.crossing),
            "children": sorted({key_in, key_out}),
        }
        return comb, record

    def _trace_closure(self, root_key: str) -> tuple:
        seen = []
        frontier = [root_key]
        while frontier:
            k = frontier.pop(0)
            if k in seen:
                continue
            seen.append(k)
            record = self._cache[k][1]
            frontier.extend(record["children"])
        records = [self._cache[k][1] for k in seen]
        root = records[0]
        rest = sorted(records[1:], key=lambda r: (r["n"], r["graph6"]))
        return tuple([root] + rest)


def _map_combination(
    comb_k: ConvexCombination, g: Graph, perm: tuple[int, ...]
) -> ConvexCombination:
    """Pull a combination on the canonical graph back to g's labeling."""
    K = comb_k.host
    back = [0] * g.m
    for e, (u, v) in enumerate(g.edges):
        back[K.edge_id(perm[u], perm[v])] = e
    raw = [
        (w, tuple(sorted(back[ke] for ke in es))) for w, es in comb_k.entries
    ]
    return combination(g, raw, check=False)


_shared = Certifier()


def certify(g: Graph, certifier: Certifier | None = None) -> Certificate:
    return (certifier or _shared).certify(g)


def reduce_case1(
    g: Graph, uv: int, certifier: Certifier | None = None
) -> tuple[ConvexCombination, Case1Profile]:
    return (certifier or _shared).reduce_case1(g, uv)


# ---------------------------------------------------------------------------
# extraction and verification
# ---------------------------------------------------------------------------


def min_support_subgraph(cert: Certificate) -> Subgraph:
    """The smallest member (ties: lexicographically least edge set)."""
    best = min(cert.combination.entries, key=lambda t: (len(t[1]), t[1]))
    return Subgraph(cert.graph, best[1])


def verify_certificate(g: Graph, cert: Certificate) -> VerificationReport:
    """Re-check everything from scratch; trusts nothing in the certificate."""
    checks: list[CheckResult] = []

    def add(name, passed, detail=""):
        checks.append(CheckResult(name, bool(passed), detail))

    add(
        "graph_match",
        cert.graph.n == g.n and cert.graph.edges == g.edges,
        "certificate edge list matches the graph",
    )
    entries = cert.combination.entries
    add("has_entries", len(entries) > 0, f"{len(entries)} entries")
    add("weights_positive", all(w > 0 for w, _ in entries), "")
    total = sum((w for w, _ in entries), Fraction(0))
    add("weights_sum_to_one", total == 1, f"sum = {total}")
    add("target_is_7_9", cert.target == TARGET, f"target = {cert.target}")
    valid_ids = all(
        all(0 <= e < g.m for e in es) and tuple(sorted(set(es))) == tuple(es)
        for _, es in entries
    )
    add("entries_well_formed", valid_ids, "sorted unique edge ids in range")
    twoec = all(connectivity.is_2ec(g, es) for _, es in entries) if valid_ids else False
    add("members_spanning_2ec", twoec, "")
    if valid_ids:
        occ = [Fraction(0)] * g.m
        for w, es in entries:
            for e in es:
                occ[e] += w
        uniform = all(v == cert.target for v in occ)
        bad = [e for e, v in enumerate(occ) if v != cert.target][:3]
        add(
            "occurrences_uniform",
            uniform,
            "every edge at target" if uniform else f"deviating edges {bad}",
        )
        size = min(len(es) for _, es in entries) if entries else 0
        bound = support_bound(g.n)
        add("support_bound", size <= bound, f"min support {size} <= {bound}")
        if cert.declared_min_support is not None:
            add(
                "declared_min_support",
                cert.declared_min_support == size,
                f"declared {cert.declared_min_support}, actual {size}",
            )
    return VerificationReport(tuple(checks))


# ---------------------------------------------------------------------------
# certificate JSON
# ---------------------------------------------------------------------------


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def certificate_to_json(cert: Certificate) -> str:
    doc = {
        "n": cert.graph.n,
        "edges": [[u, v] for u, v in cert.graph.edges],
        "target": "7/9",
        "entries": [
            {"weight": _frac_str(w), "edges": list(es)}
            for w, es in cert.combination.entries
        ],
        "trace": [_plain(r) for r in cert.trace],
        "min_support_size": len(min_support_subgraph(cert).edges),
    }
    return json.dumps(doc, indent=2) + "\n"


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def certificate_from_json(text: str) -> Certificate:
    """Parse a certificate without validating it (the verifier does that)."""
    doc = json.loads(text)
    graph = Graph(int(doc["n"]), tuple((int(u), int(v)) for u, v in doc["edges"]))
    entries = tuple(
        (_parse_frac(ent["weight"]), tuple(int(e) for e in ent["edges"]))
        for ent in doc["entries"]
    )
    comb = ConvexCombination(graph, entries)
    return Certificate(
        graph=graph,
        combination=comb,
        target=_parse_frac(doc.get("target", "7/9")),
        trace=tuple(doc.get("trace", ())),
        declared_min_support=doc.get("min_support_size"),
    )

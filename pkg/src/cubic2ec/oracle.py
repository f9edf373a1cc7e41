"""Independent ground truth: exact minimum 2EC, exact cut-LP, gap.

The branch-and-bound and LP paths are separate from the certificate
construction, so the two can cross-check each other: for every graph
``lp <= opt <= |min support member| <= floor(7n/6)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import connectivity
from .combine import Subgraph
from .connectivity import Cut, _crossing_mask, _iter_bits
from .exact_lp import solve_cut_lp
from .graphs import Graph

ORACLE_MAX_N = 16


@dataclass(frozen=True)
class LpSolution:
    """Exact optimum of the cut LP with its solution vector.

    ``x[e]`` is the exact value on edge e; ``tight_cuts`` lists every
    enumerated cut whose constraint holds with equality.
    """

    value: Fraction
    x: tuple[Fraction, ...]
    tight_cuts: tuple[Cut, ...]


@dataclass(frozen=True)
class GapReport:
    opt: int
    lp: Fraction
    gap: Fraction


def _guard(g: Graph):
    if g.n < 2:
        raise ValueError("oracle requires n >= 2")
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N} (got n={g.n})")


def exact_opt(g: Graph) -> tuple[int, Subgraph]:
    """Minimum-cardinality spanning 2EC edge set by branch and bound.

    Deterministic: among all optima the lexicographically least edge set
    is returned.  Include-first search in ascending edge order guarantees
    equal-size solutions are reached in lexicographic order; a greedy
    minimal subgraph seeds the size bound only.
    """
    _guard(g)
    if connectivity.edge_connectivity(g) < 2:
        raise ValueError("exact_opt requires a 2-edge-connected graph")
    n, m = g.n, g.m
    inc = [0] * n
    for e, (u, v) in enumerate(g.edges):
        inc[u] |= 1 << e
        inc[v] |= 1 << e
    full = (1 << m) - 1

    def two_ec(mask: int) -> bool:
        return connectivity.is_2ec(g, mask)

    # greedy minimal 2EC subgraph: upper bound for pruning, not the witness
    cur = full
    for e in range(m - 1, -1, -1):
        trial = cur & ~(1 << e)
        if two_ec(trial):
            cur = trial
    best_size = cur.bit_count()
    best_set: int | None = None

    def rec(pos: int, in_mask: int, avail_mask: int):
        nonlocal best_size, best_set
        in_count = in_mask.bit_count()
        deficiency = 0
        for v in range(n):
            d = (in_mask & inc[v]).bit_count()
            if d < 2:
                deficiency += 2 - d
        lb = in_count + (deficiency + 1) // 2
        if lb < n:
            lb = n
        if best_set is None:
            if lb > best_size:
                return
        elif lb >= best_size:
            return
        if pos == m:
            if two_ec(in_mask):
                size = in_mask.bit_count()
                if size < best_size or best_set is None:
                    best_size = size
                    best_set = in_mask
            return
        bit = 1 << pos
        rec(pos + 1, in_mask | bit, avail_mask)
        reduced = avail_mask & ~bit
        if two_ec(reduced):
            rec(pos + 1, in_mask, reduced)

    rec(0, 0, full)
    assert best_set is not None, "2EC input must admit a solution"
    witness = tuple(_iter_bits(best_set))
    return best_size, Subgraph(g, witness)


def lp_bound(g: Graph) -> LpSolution:
    """Exact optimum of the cut LP over the full enumerated constraint set.

    Every cut (one shore per complement pair) is a constraint from the
    start; the optimal solution is re-verified against all of them, and
    optimality is certified by the exact optimal basis reached under
    Bland's rule.
    """
    _guard(g)
    if connectivity.edge_connectivity(g) < 2:
        raise ValueError("cut LP is infeasible: graph is not 2-edge-connected")
    masks = []
    shores = []
    for mask in range(1, 1 << (g.n - 1)):
        shore = mask << 1
        shores.append(shore)
        masks.append(_crossing_mask(g, shore))
    value, x = solve_cut_lp(g.m, masks)
    # independent feasibility re-check of the returned point
    assert all(0 <= xe <= 1 for xe in x)
    tight = []
    for shore, cmask in zip(shores, masks):
        s = sum((x[e] for e in _iter_bits(cmask)), Fraction(0))
        assert s >= 2, "returned LP point violates a cut constraint"
        if s == 2:
            tight.append(
                Cut(tuple(_iter_bits(shore)), tuple(_iter_bits(cmask)))
            )
    assert sum(x, Fraction(0)) == value
    return LpSolution(value=value, x=tuple(x), tight_cuts=tuple(tight))


def integrality_gap(g: Graph) -> GapReport:
    """Exact OPT / OPT_LP ratio."""
    opt, _ = exact_opt(g)
    lp = lp_bound(g)
    return GapReport(opt=opt, lp=lp.value, gap=Fraction(opt) / lp.value)

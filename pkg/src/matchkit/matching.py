"""Perfect matchings: matchability, enumeration, matching covered, conformality.

Matchings are sets of edge ids, so parallel edges give distinct matchings.
Matchability of vertex subsets is decided by memoised backtracking on the
lowest unmatched vertex, which is exact and fast enough for desk-scale
graphs (up to roughly twenty vertices).
"""
from __future__ import annotations

from typing import Iterable

from .errors import BudgetExhausted, InvalidMatching, NotMatchingCovered
from .graph import DEFAULT_BUDGET, MultiGraph, bits, to_mask

PerfectMatching = frozenset  # frozenset[int] of edge ids


def matchable_mask(g: MultiGraph, mask: int) -> bool:
    """Whether the subgraph induced by the vertex set ``mask`` has a perfect matching."""
    memo = g._memo.setdefault("matchable", {0: True})
    hit = memo.get(mask)
    if hit is not None:
        return hit
    if bin(mask).count("1") % 2:
        memo[mask] = False
        return False
    adj = g.adj_mask
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    result = False
    cand = adj[v] & rest
    while cand:
        w = cand & -cand
        cand ^= w
        if matchable_mask(g, rest ^ w):
            result = True
            break
    memo[mask] = result
    return result


def is_matchable(g: MultiGraph) -> bool:
    return matchable_mask(g, g.full_mask)


def is_conformal(g: MultiGraph, vertex_set: Iterable[int] | int) -> bool:
    """True iff ``g`` minus ``vertex_set`` has a perfect matching."""
    return matchable_mask(g, g.full_mask & ~to_mask(vertex_set))


def perfect_matching_masks(g: MultiGraph, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """All perfect matchings as edge bitmasks, in enumeration order.

    Branches on the lowest uncovered vertex, trying its edges by ascending id,
    and skips branches whose remainder is unmatchable.
    """
    key = ("pm_masks", budget)
    cached = g._memo.get(key)
    if cached is not None:
        return cached
    if budget < 1:
        raise ValueError("budget must be at least 1")
    out: list[int] = []
    inc = g.incidence
    edges = g.edges

    def rec(mask: int, chosen: int) -> None:
        if mask == 0:
            if len(out) >= budget:
                raise BudgetExhausted(f"more than {budget} perfect matchings")
            out.append(chosen)
            return
        low = mask & -mask
        v = low.bit_length() - 1
        for e in inc[v]:
            a, b = edges[e]
            w = b if a == v else a
            wbit = 1 << w
            if mask & wbit:
                rest = mask ^ low ^ wbit
                if matchable_mask(g, rest):
                    rec(rest, chosen | (1 << e))

    if matchable_mask(g, g.full_mask):
        rec(g.full_mask, 0)
    result = tuple(out)
    g._memo[key] = result
    return result


def enumerate_perfect_matchings(g: MultiGraph, budget: int = DEFAULT_BUDGET) -> list[PerfectMatching]:
    return [frozenset(bits(m)) for m in perfect_matching_masks(g, budget)]


def is_perfect_matching(g: MultiGraph, edge_ids: Iterable[int], within: int | None = None) -> bool:
    """Check that ``edge_ids`` covers each vertex of ``within`` (default: all) exactly once."""
    if within is None:
        within = g.full_mask
    covered = 0
    for e in edge_ids:
        if not 0 <= e < g.m:
            return False
        u, v = g.edges[e]
        for x in (u, v):
            bit = 1 << x
            if covered & bit or not within & bit:
                return False
            covered |= bit
    return covered == within


def check_perfect_matching(g: MultiGraph, edge_ids: Iterable[int]) -> frozenset[int]:
    ids = frozenset(edge_ids)
    if not is_perfect_matching(g, ids):
        raise InvalidMatching(f"{sorted(ids)} is not a perfect matching")
    return ids


def admissible_edges_mask(g: MultiGraph) -> int:
    """Bitmask of edges lying in at least one perfect matching."""
    memo = g._memo
    if "admissible" in memo:
        return memo["admissible"]
    full = g.full_mask
    out = 0
    for (u, v), ids in g.edges_between.items():
        if matchable_mask(g, full & ~((1 << u) | (1 << v))):
            out |= to_mask(ids)
    memo["admissible"] = out
    return out


def is_matching_covered(g: MultiGraph) -> bool:
    memo = g._memo
    if "mc" not in memo:
        memo["mc"] = (
            g.n >= 2
            and g.is_connected()
            and is_matchable(g)
            and admissible_edges_mask(g) == (1 << g.m) - 1
        )
    return memo["mc"]


def require_matching_covered(g: MultiGraph) -> None:
    if not is_matching_covered(g):
        raise NotMatchingCovered(f"{g!r} is not matching covered")


def symmetric_difference_cycles(g: MultiGraph, diff: int) -> list[int]:
    """Split a symmetric difference of two perfect matchings into its cycles.

    ``diff`` is an edge bitmask in which every touched vertex has exactly two
    edges; the result lists one edge bitmask per cycle, ordered by lowest edge.
    """
    cycles = []
    inc = g.incidence
    remaining = diff
    while remaining:
        first = (remaining & -remaining).bit_length() - 1
        cyc = 1 << first
        start, v = g.edges[first]
        prev = first
        while v != start:
            nxt = next(e for e in inc[v] if (diff >> e) & 1 and e != prev)
            cyc |= 1 << nxt
            v = g.other_end(nxt, v)
            prev = nxt
        cycles.append(cyc)
        remaining &= ~cyc
    return cycles

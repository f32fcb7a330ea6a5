"""The perfect matching polytope: incidence vectors, skeleton, membership.

Edge vectors are tuples of ``Fraction`` indexed by edge id.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import inf
from typing import Iterable, Mapping

from .bicycle import ConformalBicycle, require_parity
from .errors import InvalidCertificate, NotMatchable
from .exact_lp import feasible_point
from .graph import DEFAULT_BUDGET, ODD, MultiGraph, bits, to_mask
from .matching import (
    check_perfect_matching,
    is_matchable,
    perfect_matching_masks,
    symmetric_difference_cycles,
)

EdgeVector = tuple  # tuple[Fraction, ...], one coordinate per edge id

HALF = Fraction(1, 2)


def edge_vector(g: MultiGraph, coords: Mapping[int, object] | Iterable[object]) -> EdgeVector:
    """Build an edge vector from a mapping (missing ids default to 0) or a sequence."""
    if isinstance(coords, Mapping):
        return tuple(Fraction(coords.get(e, 0)) for e in range(g.m))
    out = tuple(Fraction(x) for x in coords)
    if len(out) != g.m:
        raise ValueError(f"expected {g.m} coordinates, got {len(out)}")
    return out


def incidence_vector(g: MultiGraph, m: Iterable[int]) -> EdgeVector:
    ids = check_perfect_matching(g, m)
    return tuple(Fraction(1 if e in ids else 0) for e in range(g.m))


def is_one_regular(g: MultiGraph, x: EdgeVector) -> bool:
    return all(sum((x[e] for e in g.incidence[v]), Fraction(0)) == 1 for v in range(g.n))


def is_nonnegative(x: EdgeVector) -> bool:
    return all(c >= 0 for c in x)


def skeleton_adjacent(g: MultiGraph, m1: Iterable[int], m2: Iterable[int]) -> bool:
    """Two vertices of the polytope are adjacent iff their matchings differ in one cycle."""
    a = to_mask(check_perfect_matching(g, m1))
    b = to_mask(check_perfect_matching(g, m2))
    return len(symmetric_difference_cycles(g, a ^ b)) == 1


@dataclass(frozen=True)
class SkeletonGraph:
    nodes: tuple[frozenset[int], ...]
    adjacency: tuple[tuple[bool, ...], ...]
    diameter: float  # an int, or math.inf if disconnected

    def degree(self, i: int) -> int:
        return sum(self.adjacency[i])


def build_skeleton(g: MultiGraph, budget: int = DEFAULT_BUDGET) -> SkeletonGraph:
    if not is_matchable(g):
        raise NotMatchable(f"{g!r} has no perfect matching")
    pms = perfect_matching_masks(g, budget)
    k = len(pms)
    adj = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if len(symmetric_difference_cycles(g, pms[i] ^ pms[j])) == 1:
                adj[i][j] = adj[j][i] = True
    diameter = 0
    for s in range(k):
        dist = [-1] * k
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in range(k):
                if adj[u][w] and dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if min(dist) < 0:
            diameter = inf
            break
        diameter = max(diameter, max(dist))
    return SkeletonGraph(
        tuple(frozenset(bits(p)) for p in pms),
        tuple(tuple(r) for r in adj),
        diameter,
    )


def convex_weights(g: MultiGraph, x: EdgeVector, budget: int = DEFAULT_BUDGET) -> list[Fraction] | None:
    """Weights ``lam`` on the perfect matchings with ``sum lam M = x``, or ``None``.

    The weights follow the order of :func:`perfect_matching_masks`.
    """
    if not is_matchable(g):
        raise NotMatchable(f"{g!r} has no perfect matching")
    if len(x) != g.m:
        raise ValueError(f"expected {g.m} coordinates, got {len(x)}")
    pms = perfect_matching_masks(g, budget)
    A = [[Fraction((p >> e) & 1) for p in pms] for e in range(g.m)]
    A.append([Fraction(1)] * len(pms))
    b = list(x) + [Fraction(1)]
    return feasible_point(A, b)


def membership_in_polytope(g: MultiGraph, x: EdgeVector, budget: int = DEFAULT_BUDGET) -> bool:
    return convex_weights(g, x, budget) is not None


def bvn_counterexample_vector(g: MultiGraph, b: ConformalBicycle) -> EdgeVector:
    """Half on both odd cycles, one on the complementary matching, zero elsewhere."""
    require_parity(b, ODD)
    if not b.validate(g):
        raise InvalidCertificate("bicycle does not validate against the graph")
    x = [Fraction(0)] * g.m
    for e in b.cycle1.edges + b.cycle2.edges:
        x[e] = HALF
    for e in b.complement_matching:
        x[e] = Fraction(1)
    return tuple(x)


def edge_vector_to_json(x: EdgeVector) -> dict[str, str]:
    return {str(e): f"{c.numerator}/{c.denominator}" for e, c in enumerate(x)}


def edge_vector_from_json(g: MultiGraph, data: Mapping[str, str]) -> EdgeVector:
    return edge_vector(g, {int(k): Fraction(v) for k, v in data.items()})

"""Tight cuts, C-contractions and the tight cut decomposition.

Tight cuts are found by exhaustive search over odd shores containing vertex
0, by increasing size and then lexicographically, so decomposition trees are
reproducible.  Pass a ``random.Random`` to :func:`tight_cut_decomposition`
to pick cuts at random instead.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterator

from .errors import NotMatchingCovered, PreconditionViolated, TooSmall, TrivialCut
from .graph import Cut, MultiGraph, bits, boundary_mask, cut_of, to_mask
from .matching import is_matching_covered, matchable_mask, perfect_matching_masks, require_matching_covered


def _is_tight_mask(pms: tuple[int, ...], bmask: int) -> bool:
    return all(bin(p & bmask).count("1") == 1 for p in pms)


def is_tight_cut(g: MultiGraph, c: Cut) -> bool:
    require_matching_covered(g)
    return _is_tight_mask(perfect_matching_masks(g), to_mask(c.boundary))


def nontrivial_tight_cuts(g: MultiGraph) -> Iterator[Cut]:
    """Every nontrivial tight cut once, as the shore containing vertex 0."""
    require_matching_covered(g)
    pms = perfect_matching_masks(g)
    n = g.n
    for size in range(3, n - 2, 2):
        for rest in combinations(range(1, n), size - 1):
            shore = 1 | to_mask(rest)
            bmask = boundary_mask(g, shore)
            if _is_tight_mask(pms, bmask):
                yield cut_of(g, shore)


def find_nontrivial_tight_cut(g: MultiGraph) -> Cut | None:
    return next(nontrivial_tight_cuts(g), None)


def widen_two_edge_tight_cut(g: MultiGraph, c: Cut) -> Cut:
    """Turn a 2-edge nontrivial tight cut into one with at least four edges.

    With ``c = {u u', v v'}``, ``u, v`` in the shore ``X``, the result is the
    cut of ``X - u + v'``.
    """
    require_matching_covered(g)
    if c.trivial:
        raise PreconditionViolated("cut must be nontrivial")
    if len(c.boundary) != 2:
        raise PreconditionViolated(f"cut has {len(c.boundary)} edges, expected 2")
    if min(g.degrees()) < 3:
        raise PreconditionViolated("graph must have minimum degree three or more")
    if not is_tight_cut(g, c):
        raise PreconditionViolated("cut is not tight")
    e, f = sorted(c.boundary)
    (u, ubar), (v, vbar) = (
        (a, b) if a in c.shore else (b, a) for a, b in (g.edges[e], g.edges[f])
    )
    if u == v or ubar == vbar:
        raise PreconditionViolated("the two cut edges share an end")
    return cut_of(g, (set(c.shore) - {u}) | {vbar})


# ------------------------------------------------------------ contractions


@dataclass(frozen=True)
class Contraction:
    """``graph`` is ``g`` with one shore shrunk to the last vertex.

    ``vertex_map[v]`` is the image of original vertex ``v``; ``edge_map[i]``
    is the original id of new edge ``i``.
    """

    graph: MultiGraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    @property
    def contraction_vertex(self) -> int:
        return self.graph.n - 1


def contract_shore(g: MultiGraph, shore: Any) -> Contraction:
    """Shrink ``shore`` to a single vertex with the largest index."""
    mask = to_mask(shore)
    kept = [v for v in range(g.n) if not (mask >> v) & 1]
    x = len(kept)
    vmap = [x] * g.n
    for i, v in enumerate(kept):
        vmap[v] = i
    edges, emap = [], []
    for i, (a, b) in enumerate(g.edges):
        na, nb = vmap[a], vmap[b]
        if na == x and nb == x:
            continue
        edges.append((na, nb))
        emap.append(i)
    return Contraction(MultiGraph(x + 1, tuple(edges)), tuple(vmap), tuple(emap))


def c_contraction_pair(g: MultiGraph, c: Cut) -> tuple[Contraction, Contraction]:
    if c.trivial:
        raise TrivialCut("C-contractions of a trivial cut are the graph itself and a K2")
    return contract_shore(g, c.co_shore), contract_shore(g, c.shore)


def c_contractions(g: MultiGraph, c: Cut) -> tuple[MultiGraph, MultiGraph]:
    """``(G / co_shore, G / shore)``: the first keeps the shore's vertices."""
    a, b = c_contraction_pair(g, c)
    return a.graph, b.graph


# ----------------------------------------------------------- bricks, braces


def is_brick(g: MultiGraph) -> bool:
    """``G - u - v`` is connected and matchable for every pair of distinct vertices."""
    if g.n < 4:
        raise TooSmall("the brick test needs at least four vertices")
    memo = g._memo
    if "brick" not in memo:
        full = g.full_mask
        memo["brick"] = all(
            g.is_connected(rest) and matchable_mask(g, rest)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            for rest in [full & ~((1 << u) | (1 << v))]
        )
    return memo["brick"]


def is_brace(g: MultiGraph) -> bool:
    require_matching_covered(g)
    return g.is_bipartite() and find_nontrivial_tight_cut(g) is None


# ----------------------------------------------------------- decomposition


@dataclass(frozen=True)
class DecompositionNode:
    graph: MultiGraph
    label: str  # "brick", "brace" or "internal"
    cut: Cut | None = None
    children: tuple[DecompositionNode, ...] = ()
    child_maps: tuple[tuple[int, ...], ...] = field(default=())

    def leaves(self) -> list[DecompositionNode]:
        if not self.children:
            return [self]
        return [leaf for c in self.children for leaf in c.leaves()]

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "label": self.label,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
        }
        if self.cut is not None:
            out["shore"] = sorted(self.cut.shore)
            out["boundary"] = sorted(self.cut.boundary)
            out["vertex_maps"] = [list(m) for m in self.child_maps]
            out["children"] = [c.to_json() for c in self.children]
        return out


def tight_cut_decomposition(
    g: MultiGraph, rng: random.Random | None = None
) -> tuple[DecompositionNode, int]:
    """Decompose ``g``; returns the tree and the number of brick leaves."""
    if not is_matching_covered(g):
        raise NotMatchingCovered(f"{g!r} is not matching covered")

    def build(h: MultiGraph) -> DecompositionNode:
        if rng is None:
            cut = find_nontrivial_tight_cut(h)
        else:
            cuts = list(nontrivial_tight_cuts(h))
            cut = rng.choice(cuts) if cuts else None
        if cut is None:
            return DecompositionNode(h, "brace" if h.is_bipartite() else "brick")
        a, b = c_contraction_pair(h, cut)
        return DecompositionNode(
            h, "internal", cut, (build(a.graph), build(b.graph)), (a.vertex_map, b.vertex_map)
        )

    root = build(g)
    return root, sum(1 for leaf in root.leaves() if leaf.label == "brick")


def b_invariant(g: MultiGraph) -> int:
    return tight_cut_decomposition(g)[1]


def is_near_brick(g: MultiGraph) -> bool:
    return b_invariant(g) == 1


def shore_vertices(c: Cut) -> list[int]:
    return list(bits(c.shore_mask))

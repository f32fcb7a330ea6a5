"""Small-graph corpora: exhaustive simple graphs and seeded multigraph variants.

Connected simple graphs are generated by adding one vertex at a time to the
connected graphs of the previous order (every connected graph has a vertex
whose removal keeps it connected) and deduplicating through a canonical form.
The canonical form is computed by partition refinement plus individualisation,
pruning twin vertices, which is quick enough up to eight or nine vertices.
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .graph import MultiGraph, bits, build_graph
from .matching import is_matching_covered

Adjacency = tuple[int, ...]  # adjacency bitmask per vertex


def _refine(adj: Adjacency, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(bin(adj[v] & smask).count("1"), []).append(v)
                if len(groups) > 1:
                    changed = True
                out.extend(groups[k] for k in sorted(groups))
            cells = out
            if changed:
                break
    return cells


def _code(adj: Adjacency, order: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    code = 0
    for i, v in enumerate(order):
        row = 0
        for w in bits(adj[v]):
            row |= 1 << (n - 1 - pos[w])
        code = (code << n) | row
    return code


def _twin_reps(adj: Adjacency, cell: list[int]) -> list[int]:
    """One vertex per class of interchangeable (true or false) twins."""
    reps: list[int] = []
    for v in cell:
        if not any(
            (adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps
        ):
            reps.append(v)
    return reps


def canonical_adjacency(adj: Adjacency) -> int:
    """An integer that is equal for two simple graphs iff they are isomorphic."""
    n = len(adj)
    best = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _code(adj, [c[0] for c in cells])
            if best is None or code > best:
                best = code
            return
        cell = cells[target]
        for v in _twin_reps(adj, cell):
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    degs: dict[int, list[int]] = {}
    for v in range(n):
        degs.setdefault(bin(adj[v]).count("1"), []).append(v)
    search([degs[d] for d in sorted(degs)])
    return best if best is not None else 0


def canonical_form(g: MultiGraph) -> tuple[int, int]:
    """Canonical key of the underlying simple graph of ``g``."""
    return g.n, canonical_adjacency(g.adj_mask)


def _from_adjacency(adj: Adjacency) -> MultiGraph:
    n = len(adj)
    return build_graph(n, [(u, w) for u in range(n) for w in bits(adj[u]) if w > u])


def _from_code(n: int, code: int) -> Adjacency:
    adj = []
    for i in range(n):
        row = (code >> (n * (n - 1 - i))) & ((1 << n) - 1)
        adj.append(sum(1 << (n - 1 - j) for j in range(n) if (row >> j) & 1))
    return tuple(adj)


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    seen: set[int] = set()
    for code in _connected_codes(n - 1):
        base = _from_code(n - 1, code)
        for nbrs in range(1, 1 << (n - 1)):
            adj = [a | ((nbrs >> v) & 1) << (n - 1) for v, a in enumerate(base)]
            adj.append(nbrs)
            seen.add(canonical_adjacency(tuple(adj)))
    return tuple(sorted(seen))


def connected_graphs(n: int) -> list[MultiGraph]:
    """All connected simple graphs on ``n`` vertices up to isomorphism."""
    if n < 1:
        return []
    return [_from_adjacency(_from_code(n, c)) for c in _connected_codes(n)]


def matching_covered_graphs(n: int) -> list[MultiGraph]:
    """Connected simple matching covered graphs of even order ``n``."""
    if n % 2:
        return []
    return [g for g in connected_graphs(n) if is_matching_covered(g)]


def simple_corpus(max_order: int = 8) -> Iterator[MultiGraph]:
    for n in range(2, max_order + 1, 2):
        yield from matching_covered_graphs(n)


def add_parallel_edges(g: MultiGraph, rng: random.Random, count: int) -> MultiGraph:
    """Duplicate ``count`` randomly chosen edges (with replacement)."""
    picks = [g.edges[rng.randrange(g.m)] for _ in range(count)]
    return g.add_edges(picks)


def multigraph_perturbations(
    bases: Sequence[MultiGraph], count: int, seed: int, max_extra: int = 3
) -> list[MultiGraph]:
    """``count`` seeded copies of ``bases`` members with extra parallel edges."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g = bases[rng.randrange(len(bases))]
        out.append(add_parallel_edges(g, rng, rng.randint(1, max_extra)))
    return out


def bisubdivide(g: MultiGraph, e: int, times: int = 1) -> MultiGraph:
    """Replace edge ``e`` by a path with ``2 * times`` new internal vertices."""
    a, b = g.edges[e]
    n = g.n
    new = list(range(n, n + 2 * times))
    path = [a, *new, b]
    edges = [x for i, x in enumerate(g.edges) if i != e]
    edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    return build_graph(n + 2 * times, edges)


def random_bisubdivision(g: MultiGraph, rng: random.Random, steps: int) -> MultiGraph:
    for _ in range(steps):
        g = bisubdivide(g, rng.randrange(g.m), rng.randint(1, 2))
    return g


def random_relabel(g: MultiGraph, rng: random.Random) -> MultiGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def two_edge_cut_graphs(halves: Iterable[MultiGraph]) -> Iterator[MultiGraph]:
    """Join two odd halves by two disjoint edges ``u u'``, ``v v'``.

    Only matching covered results with minimum degree three are produced;
    these are exactly the graphs with a nontrivial 2-edge cut whose shores
    induce the given halves.
    """
    hs = list(halves)
    for i, h1 in enumerate(hs):
        for h2 in hs[i:]:
            n1 = h1.n
            for u in range(n1):
                for v in range(u + 1, n1):
                    for ub in range(h2.n):
                        for vb in range(h2.n):
                            if ub == vb:
                                continue
                            edges = list(h1.edges) + [(a + n1, b + n1) for a, b in h2.edges]
                            edges += [(u, ub + n1), (v, vb + n1)]
                            g = build_graph(n1 + h2.n, edges)
                            if min(g.degrees()) >= 3 and is_matching_covered(g):
                                yield g

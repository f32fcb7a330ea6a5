"""Loopless multigraphs, cuts, cycles and multiplicity-aware isomorphism.

Vertices are ``0..n-1`` and edges are identified by their position in
``MultiGraph.edges``.  Vertex sets are passed around internally as integer
bitmasks; the public functions also accept any iterable of vertices.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExhausted,
    EmptyOrFullShore,
    GraphFormatError,
    LoopEdge,
    UnknownEdge,
    VertexOutOfRange,
)

DEFAULT_BUDGET = 10**6

ODD, EVEN, ANY = "odd", "even", "any"
PARITIES = (ODD, EVEN, ANY)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class MultiGraph:
    """An immutable loopless multigraph.

    ``edges[i]`` holds the two ends of edge ``i``.  Use :func:`build_graph`
    to construct one with validation.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Bitmask of distinct neighbours of each vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        """Number of edges joining each adjacent pair ``(min, max)``."""
        return dict(Counter((min(u, v), max(u, v)) for u, v in self.edges))

    @cached_property
    def edges_between(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for i, (u, v) in enumerate(self.edges):
            out.setdefault((min(u, v), max(u, v)), []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def _memo(self) -> dict:
        # per-graph cache for derived search results (matchability etc.)
        return {}

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj_mask[v]))

    def mult(self, u: int, v: int) -> int:
        return self.multiplicity.get((min(u, v), max(u, v)), 0)

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def is_simple(self) -> bool:
        return len(self.multiplicity) == self.m

    def edge_mask_of(self, ids: Iterable[int]) -> int:
        return to_mask(ids)

    def check_edge(self, e: int) -> None:
        if not 0 <= e < self.m:
            raise UnknownEdge(f"edge id {e} not in graph with {self.m} edges")

    def delete_edges(self, ids: Iterable[int]) -> MultiGraph:
        drop = set(ids)
        for e in drop:
            self.check_edge(e)
        return MultiGraph(self.n, tuple(uv for i, uv in enumerate(self.edges) if i not in drop))

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> MultiGraph:
        return build_graph(self.n, list(self.edges) + list(pairs))

    def relabel(self, perm: Sequence[int]) -> MultiGraph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``; edge ids kept."""
        return MultiGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int] | int) -> tuple[MultiGraph, list[int]]:
        """Subgraph induced by a vertex set, renumbered in ascending order.

        Returns the subgraph and the list of original vertices by new index.
        """
        mask = to_mask(vertices)
        keep = list(bits(mask))
        new = {v: i for i, v in enumerate(keep)}
        edges = tuple((new[u], new[v]) for u, v in self.edges if u in new and v in new)
        return MultiGraph(len(keep), edges), keep

    def is_connected(self, mask: int | None = None) -> bool:
        """Connectivity of the subgraph induced by ``mask`` (whole graph by default)."""
        if mask is None:
            mask = self.full_mask
        if mask == 0:
            return True
        adj = self.adj_mask
        seen = frontier = mask & -mask
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen == mask

    def bipartition(self) -> tuple[int, int] | None:
        """Two colour-class masks, or ``None`` when the graph has an odd cycle."""
        colour = [-1] * self.n
        for s in range(self.n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in bits(self.adj_mask[u]):
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        return None
        a = to_mask(v for v in range(self.n) if colour[v] == 0)
        return a, self.full_mask & ~a

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


def build_graph(n: int, endpoint_pairs: Iterable[tuple[int, int]]) -> MultiGraph:
    """Build a :class:`MultiGraph` with edge ids in input order."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    edges = []
    for u, v in endpoint_pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        edges.append((u, v))
    return MultiGraph(n, tuple(edges))


def underlying_simple(g: MultiGraph) -> MultiGraph:
    """Keep the first edge of every adjacent pair; vertex set unchanged."""
    seen = set()
    edges = []
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            edges.append((u, v))
    return MultiGraph(g.n, tuple(edges))


# --------------------------------------------------------------------- cuts


@dataclass(frozen=True)
class Cut:
    shore: frozenset[int]
    boundary: frozenset[int]
    co_shore: frozenset[int]

    @property
    def trivial(self) -> bool:
        return len(self.shore) == 1 or len(self.co_shore) == 1

    @property
    def shore_mask(self) -> int:
        return to_mask(self.shore)

    def __len__(self) -> int:
        return len(self.boundary)


def boundary_mask(g: MultiGraph, shore_mask: int) -> int:
    out = 0
    for i, (u, v) in enumerate(g.edges):
        if ((shore_mask >> u) & 1) != ((shore_mask >> v) & 1):
            out |= 1 << i
    return out


def cut_of(g: MultiGraph, shore: Iterable[int] | int) -> Cut:
    mask = to_mask(shore)
    if mask & ~g.full_mask:
        raise VertexOutOfRange("shore contains vertices outside the graph")
    if mask == 0 or mask == g.full_mask:
        raise EmptyOrFullShore("a cut needs a nonempty proper shore")
    return Cut(
        shore=frozenset(bits(mask)),
        boundary=frozenset(bits(boundary_mask(g, mask))),
        co_shore=frozenset(bits(g.full_mask & ~mask)),
    )


# ------------------------------------------------------------------- cycles


@dataclass(frozen=True)
class CycleSeq:
    """A cycle given by its cyclic vertex order and traversed edges.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i + 1) % len]``.  A
    2-cycle is a pair of parallel edges.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def vertex_mask(self) -> int:
        return to_mask(self.vertices)

    @property
    def parity(self) -> str:
        return ODD if len(self.vertices) % 2 else EVEN

    @property
    def sort_key(self) -> tuple:
        return (len(self.vertices), self.vertices, self.edges)

    def validate(self, g: MultiGraph) -> bool:
        k = len(self.vertices)
        if k < 2 or len(self.edges) != k or len(set(self.vertices)) != k:
            return False
        if len(set(self.edges)) != k:
            return False
        for i, e in enumerate(self.edges):
            if not 0 <= e < g.m:
                return False
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            if set(g.edges[e]) != {a, b}:
                return False
        return True


def canonical_cycle(vertices: Sequence[int], edges: Sequence[int]) -> CycleSeq:
    """Rotate to the minimum vertex and orient towards the smaller neighbour."""
    k = len(vertices)
    i = min(range(k), key=vertices.__getitem__)
    vs = list(vertices[i:]) + list(vertices[:i])
    es = list(edges[i:]) + list(edges[:i])
    if k > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
        es = es[::-1]
    elif k == 2:
        es = sorted(es)
    return CycleSeq(tuple(vs), tuple(es))


def enumerate_cycles(
    g: MultiGraph, parity: str = ANY, budget: int = DEFAULT_BUDGET
) -> Iterator[CycleSeq]:
    """Yield every cycle of ``g`` once, in a deterministic order.

    2-cycles (pairs of parallel edges) come first, ordered by vertex pair and
    edge ids; longer cycles follow by DFS from the lowest vertex, each in its
    canonical form.  Raises :class:`BudgetExhausted` instead of yielding more
    than ``budget`` cycles.
    """
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    count = 0

    def emit_ok(length: int) -> bool:
        return parity == ANY or (length % 2 == 1) == (parity == ODD)

    def bump():
        nonlocal count
        count += 1
        if count > budget:
            raise BudgetExhausted(f"more than {budget} cycles")

    if parity != ODD:
        for (u, v), ids in sorted(g.edges_between.items()):
            for a in range(len(ids)):
                for b in range(a + 1, len(ids)):
                    bump()
                    yield CycleSeq((u, v), (ids[a], ids[b]))

    inc = g.incidence
    for s in range(g.n):
        path = [s]
        path_edges: list[int] = []
        on_path = 1 << s
        # iterative DFS over (vertex, position in incidence list)
        stack = [0]
        while stack:
            v = path[-1]
            idx = stack[-1]
            if idx >= len(inc[v]):
                stack.pop()
                path.pop()
                on_path &= ~(1 << v)
                if path_edges:
                    path_edges.pop()
                continue
            stack[-1] = idx + 1
            e = inc[v][idx]
            w = g.other_end(e, v)
            if w == s:
                if len(path) >= 3 and path[1] < path[-1] and emit_ok(len(path)):
                    bump()
                    yield CycleSeq(tuple(path), tuple(path_edges) + (e,))
                continue
            if w < s or (on_path >> w) & 1:
                continue
            path.append(w)
            path_edges.append(e)
            on_path |= 1 << w
            stack.append(0)


def simple_cycle_masks(
    g: MultiGraph, parity: str = ANY, budget: int = DEFAULT_BUDGET
) -> dict[int, CycleSeq]:
    """Map each vertex set that carries a cycle to a representative cycle.

    Conformality of a cycle depends only on its vertex set, so searches over
    pairs of cycles can work with these representatives.  Each representative
    is the lexicographically smallest canonical cycle on its vertex set, using
    the lowest edge id between consecutive vertices.
    """
    out: dict[int, CycleSeq] = {}
    count = 0

    def want(length: int) -> bool:
        return parity == ANY or (length % 2 == 1) == (parity == ODD)

    if want(2):
        for (u, v), ids in sorted(g.edges_between.items()):
            if len(ids) >= 2:
                out[(1 << u) | (1 << v)] = CycleSeq((u, v), (ids[0], ids[1]))
    adj = g.adj_mask
    first_edge = {k: ids[0] for k, ids in g.edges_between.items()}

    def eid(a: int, b: int) -> int:
        return first_edge[(min(a, b), max(a, b))]

    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        path = [s]
        stack = [adj[s] & higher]
        on_path = 1 << s
        while stack:
            cand = stack[-1]
            if not cand:
                stack.pop()
                on_path &= ~(1 << path.pop())
                continue
            low = cand & -cand
            stack[-1] = cand ^ low
            w = low.bit_length() - 1
            path.append(w)
            on_path |= low
            if len(path) >= 3 and (adj[w] >> s) & 1 and path[1] < w and want(len(path)):
                count += 1
                if count > budget:
                    raise BudgetExhausted(f"more than {budget} cycles")
                mask = on_path
                if mask not in out:
                    es = tuple(eid(path[i], path[i + 1]) for i in range(len(path) - 1))
                    out[mask] = CycleSeq(tuple(path), es + (eid(w, s),))
            stack.append(adj[w] & higher & ~on_path)
    return out


# ------------------------------------------------------------- isomorphism


@dataclass(frozen=True)
class IsoWitness:
    """``mapping[v]`` is the image in the second graph of vertex ``v`` of the first."""

    mapping: tuple[int, ...]

    def validate(self, g: MultiGraph, h: MultiGraph) -> bool:
        p = self.mapping
        if g.n != h.n or g.m != h.m or sorted(p) != list(range(g.n)):
            return False
        return all(h.mult(p[u], p[v]) == k for (u, v), k in g.multiplicity.items())

    def inverse(self) -> IsoWitness:
        inv = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return IsoWitness(tuple(inv))


def _compressed_invariants(g: MultiGraph, h: MultiGraph) -> tuple[list, list] | None:
    ig = [(g.degree(v), bin(g.adj_mask[v]).count("1")) for v in range(g.n)]
    ih = [(h.degree(v), bin(h.adj_mask[v]).count("1")) for v in range(h.n)]
    for _ in range(4):
        if Counter(ig) != Counter(ih):
            return None
        ng = [
            (ig[v], tuple(sorted((ig[w], g.mult(v, w)) for w in bits(g.adj_mask[v]))))
            for v in range(g.n)
        ]
        nh = [
            (ih[v], tuple(sorted((ih[w], h.mult(v, w)) for w in bits(h.adj_mask[v]))))
            for v in range(h.n)
        ]
        table = {x: i for i, x in enumerate(sorted(set(ng) | set(nh)))}
        ig = [table[x] for x in ng]
        ih = [table[x] for x in nh]
    if Counter(ig) != Counter(ih):
        return None
    return ig, ih


def are_isomorphic(g: MultiGraph, h: MultiGraph) -> IsoWitness | None:
    """Search for a vertex bijection preserving every edge multiplicity."""
    if g.n != h.n or g.m != h.m:
        return None
    if Counter(g.multiplicity.values()) != Counter(h.multiplicity.values()):
        return None
    inv = _compressed_invariants(g, h)
    if inv is None:
        return None
    ig, ih = inv
    n = g.n
    if n == 0:
        return IsoWitness(())
    classes: dict[int, list[int]] = {}
    for w in range(n):
        classes.setdefault(ih[w], []).append(w)
    # visit g's vertices in BFS order from the rarest class so that each new
    # vertex is constrained by already-mapped neighbours
    order: list[int] = []
    placed = 0
    while len(order) < n:
        rest = [v for v in range(n) if not (placed >> v) & 1]
        start = min(rest, key=lambda v: (len(classes[ig[v]]), v))
        queue = [start]
        placed |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(bits(g.adj_mask[v] & ~placed), key=lambda x: len(classes[ig[x]])):
                placed |= 1 << w
                queue.append(w)
    earlier = [order[:i] for i in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in classes[ig[v]]:
            if used[w]:
                continue
            if all(g.mult(v, u) == h.mult(w, mapping[u]) for u in earlier[i]):
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    if extend(0):
        return IsoWitness(tuple(mapping))
    return None


# ------------------------------------------------------------- file format


def write_graph(g: MultiGraph, comments: Sequence[str] = ()) -> str:
    """Serialize to the ``p mcg`` text format (1-based vertex ids)."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p mcg {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graphs(text: str) -> list[MultiGraph]:
    """Parse one or more concatenated graphs in the ``p mcg`` format."""
    graphs = []
    n = expected = None
    pairs: list[tuple[int, int]] = []

    def finish():
        if n is None:
            return
        if len(pairs) != expected:
            raise GraphFormatError(f"expected {expected} edge lines, found {len(pairs)}")
        graphs.append(build_graph(n, pairs))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] != "mcg":
                    raise GraphFormatError(f"line {lineno}: bad problem line {line!r}")
                finish()
                n, expected = int(parts[2]), int(parts[3])
                pairs = []
            elif parts[0] == "e":
                if n is None or len(parts) != 3:
                    raise GraphFormatError(f"line {lineno}: bad edge line {line!r}")
                pairs.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise GraphFormatError(f"line {lineno}: unknown line {line!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from exc
    finish()
    return graphs


def read_graph(text: str) -> MultiGraph:
    graphs = read_graphs(text)
    if len(graphs) != 1:
        raise GraphFormatError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]

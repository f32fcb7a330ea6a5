"""Bicontraction of degree-two vertices and the retract.

Bicontracting ``v`` (degree two, neighbours ``u != w``) merges ``u, v, w``
into one vertex.  Edges that joined ``u`` and ``w`` directly would become
loops; they are dropped and counted.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import NotDegreeTwo, ParallelPairAtV
from .graph import MultiGraph
from .matching import require_matching_covered


@dataclass(frozen=True)
class Bicontraction:
    graph: MultiGraph
    vertex_map: tuple[int, ...]  # old vertex -> new vertex
    edge_map: tuple[int, ...]  # new edge id -> old edge id
    loops_deleted: int


def bicontraction(g: MultiGraph, v: int) -> Bicontraction:
    if g.degree(v) != 2:
        raise NotDegreeTwo(f"vertex {v} has degree {g.degree(v)}")
    e, f = g.incidence[v]
    u, w = g.other_end(e, v), g.other_end(f, v)
    if u == w:
        raise ParallelPairAtV(f"both edges at {v} go to {u}")
    keep, gone = min(u, w), max(u, w)
    vmap = []
    nxt = 0
    for x in range(g.n):
        if x in (v, gone):
            vmap.append(-1)
        else:
            vmap.append(nxt)
            nxt += 1
    merged = vmap[keep]
    vmap[v] = vmap[gone] = merged
    edges, emap, loops = [], [], 0
    for i, (a, b) in enumerate(g.edges):
        if i in (e, f):
            continue
        na, nb = vmap[a], vmap[b]
        if na == nb:
            loops += 1
            continue
        edges.append((na, nb))
        emap.append(i)
    return Bicontraction(MultiGraph(nxt, tuple(edges)), tuple(vmap), tuple(emap), loops)


def bicontract(g: MultiGraph, v: int) -> MultiGraph:
    return bicontraction(g, v).graph


def eligible_vertices(g: MultiGraph) -> list[int]:
    """Degree-two vertices whose two edges go to distinct neighbours."""
    if g.n <= 2:
        return []
    out = []
    for v in range(g.n):
        inc = g.incidence[v]
        if len(inc) == 2 and g.other_end(inc[0], v) != g.other_end(inc[1], v):
            out.append(v)
    return out


@dataclass(frozen=True)
class RetractResult:
    graph: MultiGraph
    vertex_trace: tuple[int, ...]  # original vertex -> vertex of the retract
    loops_deleted: int = 0
    steps: int = 0


def retract_of(g: MultiGraph, rng: random.Random | None = None) -> RetractResult:
    """Bicontract until no eligible vertex is left or two vertices remain.

    Without ``rng`` the lowest eligible vertex goes first.
    """
    require_matching_covered(g)
    trace = list(range(g.n))
    loops = steps = 0
    h = g
    while True:
        cand = eligible_vertices(h)
        if not cand:
            break
        v = rng.choice(cand) if rng is not None else cand[0]
        bc = bicontraction(h, v)
        trace = [bc.vertex_map[t] for t in trace]
        loops += bc.loops_deleted
        steps += 1
        h = bc.graph
    return RetractResult(h, tuple(trace), loops, steps)


def retract(g: MultiGraph) -> MultiGraph:
    return retract_of(g).graph

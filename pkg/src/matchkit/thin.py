"""Thin and strictly thin edges of bricks, and reduction to Norine-Thomas bricks.

An edge ``e`` of a brick is thin when the retract of ``G - e`` is again a
brick, and strictly thin when the host is simple and that retract is a
simple brick.  Thinness is checked straight from the definition.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any

from .errors import NotABrick, NotASimpleBrick, PreconditionViolated, ReductionStuck
from .families import norine_thomas_label
from .graph import MultiGraph, write_graph
from .matching import is_matching_covered
from .retract import RetractResult, retract_of
from .tightcut import is_brick


def _require_brick(g: MultiGraph) -> None:
    if g.n < 4 or not is_brick(g):
        raise NotABrick(f"{g!r} is not a brick")


def _require_simple_brick(g: MultiGraph) -> None:
    if not g.is_simple() or g.n < 4 or not is_brick(g):
        raise NotASimpleBrick(f"{g!r} is not a simple brick")


def edge_index(g: MultiGraph, e: int) -> int:
    """0-3 from the end degrees of ``e`` and whether it lies in a triangle."""
    a, b = g.edges[e]
    cubic = (g.degree(a) == 3) + (g.degree(b) == 3)
    if cubic < 2:
        return 1 if cubic else 0
    in_triangle = bool(g.adj_mask[a] & g.adj_mask[b])
    return 3 if in_triangle else 2


@dataclass(frozen=True)
class ThinEdgeReport:
    edge_id: int
    thin: bool
    strictly_thin: bool
    index: int | None
    retract_after_deletion: MultiGraph | None  # None when G - e is not matching covered
    retract_result: RetractResult | None = None


def is_thin_edge(g: MultiGraph, e: int) -> ThinEdgeReport:
    _require_brick(g)
    g.check_edge(e)
    h = g.delete_edges([e])
    if not is_matching_covered(h):
        return ThinEdgeReport(e, False, False, None, None)
    rr = retract_of(h)
    r = rr.graph
    thin = r.n >= 4 and is_brick(r)
    strict = thin and g.is_simple() and r.is_simple()
    return ThinEdgeReport(e, thin, strict, edge_index(g, e) if strict else None, r, rr)


def thin_edges(g: MultiGraph) -> list[int]:
    return [e for e in range(g.m) if is_thin_edge(g, e).thin]


def find_strictly_thin_edge(g: MultiGraph) -> int | None:
    """Lowest-id strictly thin edge of a simple brick, or ``None``."""
    _require_simple_brick(g)
    for e in range(g.m):
        if is_thin_edge(g, e).strictly_thin:
            return e
    return None


def index_structure_check(g: MultiGraph, e: int) -> bool:
    """Do ``G - e`` and its retract have the shape dictated by the index of ``e``?"""
    rep = is_thin_edge(g, e)
    if not rep.strictly_thin:
        raise PreconditionViolated(f"edge {e} is not strictly thin")
    h = g.delete_edges([e])
    deg2 = [v for v in range(h.n) if h.degree(v) == 2]
    rr = rep.retract_result
    r = rep.retract_after_deletion
    sizes = Counter(rr.vertex_trace)
    contracted = [x for x, c in sizes.items() if c > 1]
    idx = rep.index
    if idx == 0:
        return not deg2 and r == h
    if idx == 1:
        return len(deg2) == 1 and len(contracted) == 1 and r.degree(contracted[0]) >= 4
    common = bool(h.adj_mask[deg2[0]] & h.adj_mask[deg2[1]]) if len(deg2) == 2 else None
    if idx == 2:
        return (
            len(deg2) == 2
            and not common
            and len(contracted) == 2
            and all(r.degree(x) >= 4 for x in contracted)
        )
    return len(deg2) == 2 and bool(common) and len(contracted) == 1 and r.degree(contracted[0]) >= 5


@dataclass(frozen=True)
class ReductionStep:
    graph: MultiGraph
    edge: int
    index: int


@dataclass(frozen=True)
class ReductionTrace:
    """Steps from the input brick downwards; ``terminal`` is Norine-Thomas."""

    steps: tuple[ReductionStep, ...]
    terminal: MultiGraph
    terminal_labels: tuple[str, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "steps": [
                {"graph": write_graph(s.graph), "edge": s.edge, "index": s.index} for s in self.steps
            ],
            "terminal": write_graph(self.terminal),
            "terminal_family": list(self.terminal_labels),
        }


def reduce_to_norine_thomas(g: MultiGraph) -> ReductionTrace:
    """Repeatedly delete the lowest-id strictly thin edge and retract."""
    _require_simple_brick(g)
    steps = []
    h = g
    while True:
        e = find_strictly_thin_edge(h)
        if e is None:
            break
        rep = is_thin_edge(h, e)
        steps.append(ReductionStep(h, e, rep.index))
        h = rep.retract_after_deletion
    labels = norine_thomas_label(h)
    if not labels:
        raise ReductionStuck(f"{h!r} has no strictly thin edge but matches no Norine-Thomas family")
    return ReductionTrace(tuple(steps), h, tuple(labels))

"""Structural decision of "Birkhoff-von Neumann and PM-compact".

A matching covered graph has both properties exactly when its retract is one
of six shapes: K2 with any multiplicity, K3,3, a K4 multigraph with no two
disjoint 2-cycles, an odd wheel of order six or more with spokes of any
multiplicity, K4 (.) K3,3, or the Murty graph with extra edges only between
its two noncubic vertices.  The verdict takes polynomial time once the
retract is known; negative certificates come from the exhaustive oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .bicycle import ConformalBicycle, find_conformal_bicycle
from .errors import BudgetExhausted, NotABrick, PreconditionViolated
from .families import A1, A2, k2_multi, k4_multi, k4_splice_k33, k33, murty_graph, odd_wheel
from .graph import ANY, DEFAULT_BUDGET, IsoWitness, MultiGraph, are_isomorphic, bits, underlying_simple
from .matching import is_matching_covered, require_matching_covered
from .retract import RetractResult, retract_of
from .tightcut import is_brick

K2_MULTI = "K2Multi"
K33 = "K33"
K4_MULTI = "K4Multi"
ODD_WHEEL = "OddWheelMultiSpokes"
K4_SPLICE_K33 = "K4SpliceK33"
MURTY_MULTI = "MurtyMulti"
VARIANTS = (K2_MULTI, K33, K4_MULTI, ODD_WHEEL, K4_SPLICE_K33, MURTY_MULTI)
BRICK_VARIANTS = (K4_MULTI, ODD_WHEEL, MURTY_MULTI)

_K4_PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass(frozen=True)
class FamilyTag:
    """``witness`` maps the classified graph onto ``canonical``."""

    variant: str
    witness: IsoWitness
    canonical: MultiGraph
    k: int | None = None

    def validate(self, g: MultiGraph) -> bool:
        return self.witness.validate(g, self.canonical)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"variant": self.variant, "witness": list(self.witness.mapping)}
        if self.k is not None:
            out["k"] = self.k
        out["canonical_edges"] = [list(e) for e in self.canonical.edges]
        return out


def _identity(n: int) -> IsoWitness:
    return IsoWitness(tuple(range(n)))


def _odd_wheel_tag(g: MultiGraph) -> FamilyTag | None:
    n = g.n
    if n < 6 or n % 2:
        return None
    hubs = [v for v in range(n) if bin(g.adj_mask[v]).count("1") == n - 1]
    if len(hubs) != 1:
        return None
    hub = hubs[0]
    rim_mask = g.full_mask & ~(1 << hub)
    for v in bits(rim_mask):
        nbrs = g.adj_mask[v] & rim_mask
        if bin(nbrs).count("1") != 2 or any(g.mult(v, w) != 1 for w in bits(nbrs)):
            return None
    # walk the rim from its lowest vertex
    start = (rim_mask & -rim_mask).bit_length() - 1
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in bits(g.adj_mask[cur] & rim_mask) if w != prev]
        step = min(nxt)
        if step == start:
            break
        order.append(step)
        prev, cur = cur, step
        if len(order) > n:
            return None
    if len(order) != n - 1:
        return None
    k = (n - 2) // 2
    mapping = [0] * n
    for i, v in enumerate(order):
        mapping[v] = i
    mapping[hub] = n - 1
    canonical = odd_wheel(k, [g.mult(hub, v) for v in order])
    return FamilyTag(ODD_WHEEL, IsoWitness(tuple(mapping)), canonical, k)


def _murty_tag(g: MultiGraph) -> FamilyTag | None:
    base = murty_graph()
    w = are_isomorphic(underlying_simple(g), base)
    if w is None:
        return None
    p = w.mapping
    for (a, b), mult in g.multiplicity.items():
        if mult > 1 and {p[a], p[b]} != {A1, A2}:
            return None
    inv = w.inverse().mapping
    extra = g.mult(inv[A1], inv[A2]) - 1
    return FamilyTag(MURTY_MULTI, w, murty_graph(extra))


def classify_family(g: MultiGraph) -> FamilyTag | None:
    """Match ``g`` against the six admissible shapes, with multiplicity rules."""
    if not is_matching_covered(g):
        raise PreconditionViolated(f"{g!r} is not matching covered")
    if g.n != 2 and min(g.degrees()) < 3:
        raise PreconditionViolated("need minimum degree three, or exactly two vertices")
    n = g.n
    if n == 2:
        return FamilyTag(K2_MULTI, _identity(2), k2_multi(g.m))
    if n == 4:
        mults = g.multiplicity
        if len(mults) != 6:
            return None
        for p, q in _K4_PAIRINGS:
            if mults[p] >= 2 and mults[q] >= 2:
                return None
        return FamilyTag(K4_MULTI, _identity(4), k4_multi(mults))
    if n == 6 and g.is_simple():
        w = are_isomorphic(g, k33())
        if w is not None:
            return FamilyTag(K33, w, k33())
    tag = _odd_wheel_tag(g)
    if tag is not None:
        return tag
    if n == 8:
        if g.is_simple():
            w = are_isomorphic(g, k4_splice_k33())
            if w is not None:
                return FamilyTag(K4_SPLICE_K33, w, k4_splice_k33())
        return _murty_tag(g)
    return None


@dataclass(frozen=True)
class Decision:
    both_properties: bool
    positive_certificate: FamilyTag | None
    negative_certificate: ConformalBicycle | None
    retract_used: RetractResult
    witness_omitted: bool = False

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "both_properties": self.both_properties,
            "retract_n": self.retract_used.graph.n,
            "retract_edges": [list(e) for e in self.retract_used.graph.edges],
        }
        if self.positive_certificate is not None:
            out["family"] = self.positive_certificate.to_json()
        if self.negative_certificate is not None:
            out["certificate"] = self.negative_certificate.to_json()
        if self.witness_omitted:
            out["witness_omitted"] = True
        return out


def decide_structural(
    g: MultiGraph, no_witness: bool = False, budget: int = DEFAULT_BUDGET
) -> Decision:
    """Verdict from the retract's shape.

    A negative verdict carries a conformal bicycle of ``g`` unless
    ``no_witness`` is set or the oracle runs out of budget, in which case
    ``witness_omitted`` is true.
    """
    require_matching_covered(g)
    rr = retract_of(g)
    tag = classify_family(rr.graph)
    if tag is not None:
        return Decision(True, tag, None, rr)
    if no_witness:
        return Decision(False, None, None, rr, witness_omitted=True)
    try:
        cert = find_conformal_bicycle(g, ANY, budget)
    except BudgetExhausted:
        return Decision(False, None, None, rr, witness_omitted=True)
    return Decision(False, None, cert, rr)


def decide_brick_structural(g: MultiGraph) -> bool:
    if g.n < 4 or not is_brick(g):
        raise NotABrick(f"{g!r} is not a brick")
    tag = classify_family(g)
    return tag is not None and tag.variant in BRICK_VARIANTS

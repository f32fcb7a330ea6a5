"""Conformal bicycles and the brute-force BvN / PM-compact oracles.

A conformal bicycle is a pair of vertex-disjoint cycles whose removal leaves
a matchable graph.  A matchable graph is Birkhoff-von Neumann exactly when it
has no odd conformal bicycle, and PM-compact exactly when it has no even one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import BudgetExhausted, InvalidCertificate, NotMatchable, WrongParity
from .graph import (
    ANY,
    DEFAULT_BUDGET,
    EVEN,
    ODD,
    PARITIES,
    CycleSeq,
    MultiGraph,
    bits,
    canonical_cycle,
    simple_cycle_masks,
)
from .matching import (
    is_perfect_matching,
    matchable_mask,
    perfect_matching_masks,
    require_matching_covered,
    symmetric_difference_cycles,
)


@dataclass(frozen=True)
class ConformalBicycle:
    cycle1: CycleSeq
    cycle2: CycleSeq
    complement_matching: frozenset[int]
    parity: str

    def validate(self, g: MultiGraph) -> bool:
        """Re-check the certificate against raw graph data."""
        c1, c2 = self.cycle1, self.cycle2
        if not (c1.validate(g) and c2.validate(g)):
            return False
        if c1.vertex_mask & c2.vertex_mask:
            return False
        if c1.parity != c2.parity or self.parity != c1.parity:
            return False
        rest = g.full_mask & ~(c1.vertex_mask | c2.vertex_mask)
        return is_perfect_matching(g, self.complement_matching, within=rest)

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": f"{self.parity}_bicycle",
            "cycle1": list(self.cycle1.vertices),
            "cycle1_edges": list(self.cycle1.edges),
            "cycle2": list(self.cycle2.vertices),
            "cycle2_edges": list(self.cycle2.edges),
            "complement_matching": sorted(self.complement_matching),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ConformalBicycle:
        kind = data.get("kind")
        if kind not in ("odd_bicycle", "even_bicycle"):
            raise InvalidCertificate(f"unknown certificate kind {kind!r}")
        return cls(
            CycleSeq(tuple(data["cycle1"]), tuple(data["cycle1_edges"])),
            CycleSeq(tuple(data["cycle2"]), tuple(data["cycle2_edges"])),
            frozenset(data["complement_matching"]),
            kind.split("_")[0],
        )


def complete_matching(g: MultiGraph, mask: int) -> frozenset[int]:
    """Lexicographically first perfect matching of the subgraph induced by ``mask``."""
    chosen = []
    inc = g.incidence
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        for e in inc[v]:
            w = g.other_end(e, v)
            if (mask >> w) & 1 and matchable_mask(g, mask ^ low ^ (1 << w)):
                chosen.append(e)
                mask ^= low | (1 << w)
                break
        else:
            raise NotMatchable("remainder has no perfect matching")
    return frozenset(chosen)


def _require_matchable(g: MultiGraph) -> None:
    if not matchable_mask(g, g.full_mask):
        raise NotMatchable(f"{g!r} has no perfect matching")


def find_conformal_bicycle(
    g: MultiGraph, want: str = ANY, budget: int = DEFAULT_BUDGET
) -> ConformalBicycle | None:
    """Exhaustive search over pairs of disjoint cycles.

    ``cycle1`` is the first cycle, ordered by (length, canonical encoding),
    that belongs to some conformal bicycle of the wanted parity; ``cycle2`` is
    the lexicographically first partner for it.  Returns ``None`` only when no
    such bicycle exists.
    """
    if want not in PARITIES:
        raise ValueError(f"want must be one of {PARITIES}")
    _require_matchable(g)
    reps = simple_cycle_masks(g, want, budget)
    ordered = sorted(reps.items(), key=lambda kv: kv[1].sort_key)
    partners = {
        p: sorted(((m, c) for m, c in reps.items() if c.parity == p), key=lambda kv: kv[1].vertices)
        for p in (ODD, EVEN)
    }
    full = g.full_mask
    for m1, c1 in ordered:
        rest = full & ~m1
        # a conformal bicycle needs the remainder after one cycle to be
        # coverable by a second cycle plus a matching
        for m2, c2 in partners[c1.parity]:
            if m2 & m1:
                continue
            if matchable_mask(g, rest & ~m2):
                comp = complete_matching(g, rest & ~m2)
                return ConformalBicycle(c1, c2, comp, c1.parity)
    return None


def has_conformal_bicycle(g: MultiGraph, want: str = ANY, budget: int = DEFAULT_BUDGET) -> bool:
    return find_conformal_bicycle(g, want, budget) is not None


def decide_bvn_oracle(g: MultiGraph, budget: int = DEFAULT_BUDGET) -> tuple[bool, ConformalBicycle | None]:
    """Birkhoff-von Neumann iff no odd conformal bicycle exists."""
    b = find_conformal_bicycle(g, ODD, budget)
    return b is None, b


def _cycle_from_edges(g: MultiGraph, cyc: int) -> CycleSeq:
    ids = list(bits(cyc))
    first = ids[0]
    start, v = g.edges[first]
    verts = [start]
    es = [first]
    prev = first
    while v != start:
        verts.append(v)
        nxt = next(e for e in g.incidence[v] if (cyc >> e) & 1 and e != prev)
        es.append(nxt)
        v = g.other_end(nxt, v)
        prev = nxt
    return canonical_cycle(verts, es)


def even_bicycle_from_matchings(g: MultiGraph, m1: int, m2: int) -> ConformalBicycle | None:
    """Build an even bicycle from two perfect matchings whose difference has >= 2 cycles."""
    cycles = symmetric_difference_cycles(g, m1 ^ m2)
    if len(cycles) < 2:
        return None
    c1 = _cycle_from_edges(g, cycles[0])
    c2 = _cycle_from_edges(g, cycles[1])
    used = c1.vertex_mask | c2.vertex_mask
    comp = frozenset(e for e in bits(m1) if not any((used >> x) & 1 for x in g.edges[e]))
    return ConformalBicycle(c1, c2, comp, EVEN)


def decide_pmc_oracle(g: MultiGraph, budget: int = DEFAULT_BUDGET) -> tuple[bool, ConformalBicycle | None]:
    """PM-compact iff every two perfect matchings differ in exactly one cycle.

    Scans pairs of perfect matchings; the first pair whose symmetric
    difference splits into two or more cycles yields an even bicycle.
    """
    _require_matchable(g)
    pms = perfect_matching_masks(g, budget)
    pairs = 0
    for i in range(len(pms)):
        for j in range(i + 1, len(pms)):
            pairs += 1
            if pairs > budget:
                raise BudgetExhausted(f"more than {budget} matching pairs")
            cert = even_bicycle_from_matchings(g, pms[i], pms[j])
            if cert is not None:
                return False, cert
    return True, None


@dataclass(frozen=True)
class OracleClassification:
    bvn: bool
    pmc: bool
    witnesses: dict[str, ConformalBicycle] = field(default_factory=dict)


def classify_oracle(g: MultiGraph, budget: int = DEFAULT_BUDGET) -> OracleClassification:
    require_matching_covered(g)
    bvn, odd = decide_bvn_oracle(g, budget)
    pmc, even = decide_pmc_oracle(g, budget)
    witnesses = {}
    if odd is not None:
        witnesses[ODD] = odd
    if even is not None:
        witnesses[EVEN] = even
    return OracleClassification(bvn, pmc, witnesses)


def require_parity(b: ConformalBicycle, parity: str) -> None:
    if b.parity != parity:
        raise WrongParity(f"expected a {parity} bicycle, got {b.parity}")

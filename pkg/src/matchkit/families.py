"""Constructors for the named graphs and families, plus splicing.

Vertex labelling conventions (all 0-based):

* ``k33``: colour classes ``a1,a2,a3 = 0,1,2`` and ``b1,b2,b3 = 3,4,5``.
* ``odd_wheel(k)``: rim ``w0..w2k = 0..2k`` in cyclic order, hub ``2k+1``.
* ``k4_splice_k33`` / ``murty_graph``: ``a1,a2,b1,b2,b3,t1,t2,t3 = 0..7``;
  ``a_i b_j`` for all i, j, ``b_j t_j``, and the triangle ``t1 t2 t3``.
* ``p_brick(k)``: ``u0,v0,u1,v2,u2 = 0..4`` and rim ``w_i = 5 + i``.
* ``petersen``: outer 5-cycle ``0..4``, inner pentagram ``5..9``, spokes ``i, i+5``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Mapping, Sequence

from .errors import BadParams, DegreeMismatch
from .graph import MultiGraph, are_isomorphic, build_graph

MURTY_LABELS = ("a1", "a2", "b1", "b2", "b3", "t1", "t2", "t3")
A1, A2, B1, B2, B3, T1, T2, T3 = range(8)
P_U0, P_V0, P_U1, P_V2, P_U2 = range(5)

FAMILY_TAGS = (
    "k2_multi",
    "k33",
    "k4_multi",
    "odd_wheel",
    "prism",
    "moebius_ladder",
    "truncated_biwheel",
    "staircase",
    "petersen",
    "k4_splice_k33",
    "murty",
    "p_brick",
)
NORINE_THOMAS_TAGS = ("odd_wheel", "prism", "moebius_ladder", "truncated_biwheel", "staircase", "petersen")


def cycle_graph(n: int) -> MultiGraph:
    if n < 3:
        raise BadParams("a simple cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> MultiGraph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> MultiGraph:
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def path_graph(n: int) -> MultiGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def k2_multi(mult: int = 1) -> MultiGraph:
    if mult < 1:
        raise BadParams("K2 needs at least one edge")
    return build_graph(2, [(0, 1)] * mult)


def k33() -> MultiGraph:
    return complete_bipartite(3, 3)


def k4_multi(mults: Mapping[tuple[int, int], int] | None = None) -> MultiGraph:
    """K4 with optional multiplicities keyed by vertex pair."""
    mults = {(min(a, b), max(a, b)): k for (a, b), k in (mults or {}).items()}
    edges = []
    for i in range(4):
        for j in range(i + 1, 4):
            k = mults.get((i, j), 1)
            if k < 1:
                raise BadParams("multiplicities must be at least 1")
            edges += [(i, j)] * k
    return build_graph(4, edges)


def odd_wheel(k: int, spoke_mults: Sequence[int] | None = None) -> MultiGraph:
    """The wheel with a rim of length ``2k+1``; spoke ``i`` joins the hub to ``w_i``."""
    if k < 1:
        raise BadParams("odd_wheel needs k >= 1")
    r = 2 * k + 1
    if spoke_mults is None:
        spoke_mults = [1] * r
    if len(spoke_mults) != r or min(spoke_mults) < 1:
        raise BadParams(f"need {r} spoke multiplicities, each >= 1")
    hub = r
    edges = [(i, (i + 1) % r) for i in range(r)]
    for i, mult in enumerate(spoke_mults):
        edges += [(hub, i)] * mult
    return build_graph(r + 1, edges)


def prism(order: int) -> MultiGraph:
    """Cartesian product of an odd cycle with K2 (``order = 2n``, ``n`` odd >= 3)."""
    if order % 2 or order < 6 or (order // 2) % 2 == 0:
        raise BadParams("prisms have order 2n with n odd and n >= 3")
    n = order // 2
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(order, edges)


def moebius_ladder(order: int) -> MultiGraph:
    """Cycle ``C_order`` plus its long diagonals; a brick when ``order % 4 == 0``."""
    if order % 2 or order < 4:
        raise BadParams("Moebius ladders have even order >= 4")
    n = order // 2
    edges = [(i, (i + 1) % order) for i in range(order)]
    edges += [(i, i + n) for i in range(n)]
    return build_graph(order, edges)


def truncated_biwheel(order: int) -> MultiGraph:
    """Path ``0..order-3`` plus hubs ``order-2`` and ``order-1``.

    Both hubs meet both path ends; the internal path vertices alternate
    between the two hubs, starting with the first hub.
    """
    if order % 2 or order < 6:
        raise BadParams("truncated biwheels have even order >= 6")
    p = order - 2
    h1, h2 = p, p + 1
    edges = [(i, i + 1) for i in range(p - 1)]
    edges += [(h1, 0), (h2, 0), (h1, p - 1), (h2, p - 1)]
    for i in range(1, p - 1):
        edges.append((h1 if i % 2 else h2, i))
    return build_graph(order, edges)


def staircase(order: int) -> MultiGraph:
    """A ladder with ``order/2 - 1`` rungs whose ends are closed by triangles.

    Rails ``0..r-1`` and ``r..2r-1`` with rungs ``i, r+i``; vertex ``2r``
    meets both first rail vertices, ``2r+1`` both last ones, and the two
    extra vertices are adjacent.
    """
    if order % 2 or order < 6:
        raise BadParams("staircases have even order >= 6")
    r = order // 2 - 1
    x, y = 2 * r, 2 * r + 1
    edges = [(i, i + 1) for i in range(r - 1)]
    edges += [(r + i, r + i + 1) for i in range(r - 1)]
    edges += [(i, r + i) for i in range(r)]
    edges += [(x, 0), (x, r), (y, r - 1), (y, 2 * r - 1), (x, y)]
    return build_graph(order, edges)


def petersen() -> MultiGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def cube() -> MultiGraph:
    return build_graph(8, [(a, b) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1])


def c6bar() -> MultiGraph:
    """The triangular prism: triangles ``0,1,2`` and ``3,4,5`` with rungs ``i, i+3``."""
    return prism(6)


def k4_splice_k33() -> MultiGraph:
    edges = [(a, b) for a in (A1, A2) for b in (B1, B2, B3)]
    edges += [(B1, T1), (B2, T2), (B3, T3)]
    edges += [(T1, T2), (T2, T3), (T1, T3)]
    return build_graph(8, edges)


def murty_graph(extra_a1a2_mult: int = 0) -> MultiGraph:
    """K4 (.) K3,3 plus ``1 + extra`` edges joining the noncubic vertices a1, a2."""
    if extra_a1a2_mult < 0:
        raise BadParams("extra multiplicity must be >= 0")
    g = k4_splice_k33()
    return g.add_edges([(A1, A2)] * (1 + extra_a1a2_mult))


def p_brick(k: int) -> MultiGraph:
    """The PM-compact brick that is not Birkhoff-von Neumann, on ``2k+6`` vertices."""
    if k < 2:
        raise BadParams("p_brick needs k >= 2")
    r = 2 * k + 1

    def w(i: int) -> int:
        return 5 + i

    edges = [(w(i), w((i + 1) % r)) for i in range(r)]
    edges += [(P_V2, w(0)), (P_V2, w(4)), (P_U1, w(2))]
    edges += [(P_U2, w(i)) for i in [1, 3] + list(range(5, r))]
    edges += [(P_U0, P_U2), (P_U0, P_U1), (P_U0, P_V0), (P_V0, P_U1), (P_V0, P_V2)]
    return build_graph(r + 5, edges)


def norine_thomas(tag: str, order: int) -> MultiGraph:
    """The member of a Norine-Thomas family with the given number of vertices."""
    if tag == "odd_wheel":
        if order % 2 or order < 4:
            raise BadParams("odd wheels have even order >= 4")
        return odd_wheel((order - 2) // 2)
    if tag == "prism":
        return prism(order)
    if tag == "moebius_ladder":
        if order % 4:
            raise BadParams("Moebius ladder bricks have order divisible by 4")
        return moebius_ladder(order)
    if tag == "truncated_biwheel":
        return truncated_biwheel(order)
    if tag == "staircase":
        return staircase(order)
    if tag == "petersen":
        if order != 10:
            raise BadParams("the Petersen graph has order 10")
        return petersen()
    raise BadParams(f"unknown Norine-Thomas family {tag!r}")


def norine_thomas_members(order: int) -> list[tuple[str, MultiGraph]]:
    """Every Norine-Thomas family member of the given order."""
    out = []
    for tag in NORINE_THOMAS_TAGS:
        try:
            out.append((tag, norine_thomas(tag, order)))
        except BadParams:
            pass
    return out


def norine_thomas_label(g: MultiGraph) -> list[str]:
    """Family tags whose member of the same order is isomorphic to ``g``."""
    return [tag for tag, h in norine_thomas_members(g.n) if are_isomorphic(g, h) is not None]


# ---------------------------------------------------------------- splicing


def splice(
    g1: MultiGraph, u: int, g2: MultiGraph, v: int, pairing: Mapping[int, int]
) -> MultiGraph:
    """Glue ``g1 - u`` and ``g2 - v`` along ``pairing`` (edge at u -> edge at v).

    Vertices of ``g1 - u`` come first in ascending order, then those of
    ``g2 - v``.  Non-seam edges keep their relative order; the seam edges are
    appended in ascending order of their ``g1`` edge id.
    """
    at_u, at_v = g1.incidence[u], g2.incidence[v]
    if len(at_u) != len(at_v):
        raise DegreeMismatch(f"deg({u}) = {len(at_u)} but deg({v}) = {len(at_v)}")
    if sorted(pairing) != sorted(at_u) or sorted(pairing.values()) != sorted(at_v):
        raise BadParams("pairing must be a bijection between the edges at u and at v")
    map1 = {x: i for i, x in enumerate(x for x in range(g1.n) if x != u)}
    off = g1.n - 1
    map2 = {x: off + i for i, x in enumerate(x for x in range(g2.n) if x != v)}
    edges = [(map1[a], map1[b]) for a, b in g1.edges if u not in (a, b)]
    edges += [(map2[a], map2[b]) for a, b in g2.edges if v not in (a, b)]
    for e in sorted(pairing):
        f = pairing[e]
        edges.append((map1[g1.other_end(e, u)], map2[g2.other_end(f, v)]))
    return build_graph(g1.n + g2.n - 2, edges)


def seam_shore(g1: MultiGraph) -> frozenset[int]:
    """Vertices of a splice that came from ``g1``."""
    return frozenset(range(g1.n - 1))


def splicings_up_to_isomorphism(g1: MultiGraph, u: int, g2: MultiGraph, v: int) -> list[MultiGraph]:
    at_u, at_v = g1.incidence[u], g2.incidence[v]
    if len(at_u) != len(at_v):
        raise DegreeMismatch(f"deg({u}) = {len(at_u)} but deg({v}) = {len(at_v)}")
    found: list[MultiGraph] = []
    for perm in permutations(at_v):
        g = splice(g1, u, g2, v, dict(zip(at_u, perm)))
        if all(are_isomorphic(g, h) is None for h in found):
            found.append(g)
    return found


# ----------------------------------------------------------- CLI dispatch


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: dict[str, int] = field(default_factory=dict)

    def build(self) -> MultiGraph:
        p = dict(self.params)
        try:
            if self.tag == "k2_multi":
                return k2_multi(p.get("mult", 1))
            if self.tag == "k33":
                return k33()
            if self.tag == "k4_multi":
                return k4_multi()
            if self.tag == "odd_wheel":
                return odd_wheel(p["k"])
            if self.tag in ("prism", "moebius_ladder", "truncated_biwheel", "staircase"):
                return norine_thomas(self.tag, p["order"])
            if self.tag == "petersen":
                return petersen()
            if self.tag == "k4_splice_k33":
                return k4_splice_k33()
            if self.tag == "murty":
                return murty_graph(p.get("extra", 0))
            if self.tag == "p_brick":
                return p_brick(p["k"])
        except KeyError as exc:
            raise BadParams(f"{self.tag} needs parameter {exc.args[0]!r}") from exc
        raise BadParams(f"unknown family tag {self.tag!r}")

    def labelling(self) -> str:
        notes = {
            "k33": "a1,a2,a3 = 1,2,3; b1,b2,b3 = 4,5,6",
            "odd_wheel": "rim w0..w2k = 1..2k+1 in cyclic order; hub = 2k+2",
            "k4_splice_k33": "a1,a2,b1,b2,b3,t1,t2,t3 = 1..8",
            "murty": "a1,a2,b1,b2,b3,t1,t2,t3 = 1..8; a1,a2 noncubic",
            "p_brick": "u0,v0,u1,v2,u2 = 1..5; rim w_i = 6+i",
            "petersen": "outer cycle 1..5; inner pentagram 6..10; spokes i, i+5",
            "prism": "cycles 1..n and n+1..2n; rungs i, n+i",
        }
        return notes.get(self.tag, "see matchkit.families")

"""Independent reference implementations used only by the tests.

They avoid matchkit's search code: perfect matchings by brute force over
edge subsets, matchability and connectivity through networkx, cycles from
networkx.simple_cycles, LP membership through scipy.
"""
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np
from scipy.optimize import linprog


def to_nx(g):
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for i, (a, b) in enumerate(g.edges):
        h.add_edge(a, b, key=i)
    return h


def to_nx_simple(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_perfect_matchings(g):
    if g.n % 2:
        return []
    out = []
    for combo in combinations(range(g.m), g.n // 2):
        seen = set()
        ok = True
        for e in combo:
            a, b = g.edges[e]
            if a in seen or b in seen:
                ok = False
                break
            seen.update((a, b))
        if ok:
            out.append(frozenset(combo))
    return out


def nx_matchable(h):
    """Perfect matching exists in the networkx graph ``h`` (possibly empty)."""
    if h.number_of_nodes() % 2:
        return False
    m = nx.max_weight_matching(nx.Graph(h), maxcardinality=True)
    return 2 * len(m) == h.number_of_nodes()


def brute_matching_covered(g):
    if g.n < 2 or not nx.is_connected(to_nx(g)):
        return False
    pms = brute_perfect_matchings(g)
    covered = set().union(*pms) if pms else set()
    return len(covered) == g.m


def nx_cycles(g):
    """Vertex sets of the cycles of the underlying simple graph, plus 2-cycles per parallel pair."""
    cycles = [frozenset(c) for c in nx.simple_cycles(to_nx_simple(g))]
    for (a, b), k in g.multiplicity.items():
        cycles += [frozenset((a, b))] * (k * (k - 1) // 2)
    return cycles


def brute_bicycle_exists(g, parity):
    """Is there a conformal bicycle of the given parity ('odd' / 'even')?"""
    want = 1 if parity == "odd" else 0
    h = to_nx_simple(g)
    cyc = {c for c in nx_cycles(g) if len(c) % 2 == want}
    cyc = sorted(cyc, key=sorted)
    for c1, c2 in combinations(cyc, 2):
        if c1 & c2:
            continue
        rest = h.subgraph(set(range(g.n)) - c1 - c2)
        if nx_matchable(rest):
            return True
    return False


def brute_tight_shores(g):
    """Shores (containing 0) of all nontrivial tight cuts, by brute force."""
    pms = brute_perfect_matchings(g)
    out = set()
    for size in range(3, g.n - 2, 2):
        for rest in combinations(range(1, g.n), size - 1):
            s = {0, *rest}
            bd = {i for i, (a, b) in enumerate(g.edges) if (a in s) != (b in s)}
            if all(len(bd & m) == 1 for m in pms):
                out.add(frozenset(s))
    return out


def nx_elp_brick(g):
    h = to_nx_simple(g)
    for u, v in combinations(range(g.n), 2):
        r = h.subgraph(set(range(g.n)) - {u, v})
        if not nx.is_connected(r) or not nx_matchable(r):
            return False
    return True


def nx_isomorphic(g, h):
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def skeleton_diameter_nx(g):
    pms = brute_perfect_matchings(g)
    sk = nx.Graph()
    sk.add_nodes_from(range(len(pms)))
    for i, j in combinations(range(len(pms)), 2):
        d = pms[i] ^ pms[j]
        sub = nx.MultiGraph()
        for e in d:
            sub.add_edge(*g.edges[e], key=e)
        if nx.number_connected_components(sub) == 1:
            sk.add_edge(i, j)
    if not nx.is_connected(sk):
        return float("inf")
    return nx.diameter(sk) if len(pms) > 1 else 0


def scipy_membership(g, x):
    """Float LP feasibility of x as a convex combination of perfect matchings."""
    pms = brute_perfect_matchings(g)
    A = np.array([[1.0 if e in m else 0.0 for m in pms] for e in range(g.m)] + [[1.0] * len(pms)])
    b = np.array([float(Fraction(c)) for c in x] + [1.0])
    res = linprog(np.zeros(len(pms)), A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    return res.status == 0

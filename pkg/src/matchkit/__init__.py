"""Matching covered graphs that are Birkhoff-von Neumann and PM-compact.

Exhaustive oracles with conformal-bicycle certificates, the perfect matching
polytope, tight cut decompositions, retracts, thin edges and a structural
recogniser for graphs with both properties.
"""
from .bicycle import (
    ConformalBicycle,
    OracleClassification,
    classify_oracle,
    decide_bvn_oracle,
    decide_pmc_oracle,
    find_conformal_bicycle,
)
from .errors import *  # noqa: F401,F403
from .graph import (
    ANY,
    EVEN,
    ODD,
    Cut,
    CycleSeq,
    IsoWitness,
    MultiGraph,
    are_isomorphic,
    build_graph,
    cut_of,
    enumerate_cycles,
    read_graph,
    read_graphs,
    write_graph,
)
from .matching import enumerate_perfect_matchings, is_matchable, is_matching_covered
from .polytope import build_skeleton, bvn_counterexample_vector, membership_in_polytope
from .recognizer import Decision, FamilyTag, classify_family, decide_brick_structural, decide_structural
from .retract import RetractResult, bicontract, retract_of
from .thin import ReductionTrace, ThinEdgeReport, find_strictly_thin_edge, is_thin_edge, reduce_to_norine_thomas
from .tightcut import (
    b_invariant,
    c_contractions,
    find_nontrivial_tight_cut,
    is_brace,
    is_brick,
    is_near_brick,
    is_tight_cut,
    tight_cut_decomposition,
    widen_two_edge_tight_cut,
)

__version__ = "0.1.0"

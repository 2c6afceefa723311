"""Arc-disjoint out-/in-branching pairs ("good pairs") in digraph compositions.

The package provides a polynomial constructor for compositions with a strong
outer digraph and all blobs of size at least two, the closed-neighbourhood
reduction for semicomplete compositions, and an exact exponential oracle
used as ground truth at small scale.
"""

from .composition import (
    BlobVertex,
    CompositionSpec,
    ImplicitCompositionView,
    is_semicomplete,
    materialize,
    validate_for_construction,
)
from .construct import (
    SkeletonPair,
    attach_ear_gadget,
    construct_good_pair,
    cycle_skeleton_pair,
    extend_layers,
    skeleton_good_pair,
)
from .digraph import (
    Branching,
    CheckReport,
    DiGraph,
    GoodPair,
    find_in_branching,
    find_out_branching,
    induced_subgraph,
    is_strong,
    strong_components,
    verify_branching,
    verify_good_pair,
)
from .ears import (
    Ear,
    EarDecomposition,
    cycle_through,
    ear_decompose,
    verify_ear_decomposition,
)
from .generate import gen_composition, gen_semicomplete, gen_strong_digraph
from .oracle import Decision, decide_good_pair_exact, enumerate_out_branchings
from .semicomplete import (
    NeighborhoodRestriction,
    ShrinkResult,
    closed_neighborhood_restriction,
    decide_semicomplete,
    lift_good_pair,
    shrink_good_pair,
)

__all__ = [
    "BlobVertex",
    "Branching",
    "CheckReport",
    "CompositionSpec",
    "Decision",
    "DiGraph",
    "Ear",
    "EarDecomposition",
    "GoodPair",
    "ImplicitCompositionView",
    "NeighborhoodRestriction",
    "ShrinkResult",
    "SkeletonPair",
    "attach_ear_gadget",
    "closed_neighborhood_restriction",
    "construct_good_pair",
    "cycle_skeleton_pair",
    "cycle_through",
    "decide_good_pair_exact",
    "decide_semicomplete",
    "ear_decompose",
    "enumerate_out_branchings",
    "extend_layers",
    "find_in_branching",
    "find_out_branching",
    "gen_composition",
    "gen_semicomplete",
    "gen_strong_digraph",
    "induced_subgraph",
    "is_semicomplete",
    "is_strong",
    "lift_good_pair",
    "materialize",
    "shrink_good_pair",
    "skeleton_good_pair",
    "strong_components",
    "validate_for_construction",
    "verify_branching",
    "verify_ear_decomposition",
    "verify_good_pair",
]

__version__ = "0.1.0"

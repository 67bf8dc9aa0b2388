"""Block transpositions, their toric-reverse symmetries and the graphs they span."""

from .cuts import (
    CutPoints,
    PartitionClass,
    as_permutation,
    class_sizes,
    classify,
    cuts_from_permutation,
    enumerate_tn,
    sigma,
    tn_size,
)
from .graphs import (
    BoundError,
    Graph,
    build_bt_graph,
    build_btv_graph,
    build_cayley,
    export,
    hamiltonian_cycle_V,
)
from .perm import Permutation, compose, identity_perm, inverse
from .report import Claim
from .sortdist import distance, sorting_sequence
from .toric import (
    ToricReverseElement,
    act_on_cuts,
    act_on_perm,
    dihedral_group,
    reverse_map,
    toric_map,
)

__version__ = "0.1.0"

__all__ = [
    "BoundError", "Claim", "CutPoints", "Graph", "PartitionClass", "Permutation",
    "ToricReverseElement", "act_on_cuts", "act_on_perm", "as_permutation",
    "build_bt_graph", "build_btv_graph", "build_cayley", "class_sizes", "classify",
    "compose", "cuts_from_permutation", "dihedral_group", "distance", "enumerate_tn",
    "export", "hamiltonian_cycle_V", "identity_perm", "inverse", "reverse_map",
    "sigma", "sorting_sequence", "tn_size", "toric_map",
]

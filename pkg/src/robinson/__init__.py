"""Asymmetric Robinson seriation toolkit.

Recognition of two-way-Robinson dissimilarity spaces, optimal compatible
orientations of trees, stars and paths, hardness-reduction instance
generators, and brute-force oracles for desk-scale certification.
"""

from .c1p import BinaryMatrix, PQTree, enumerate_frontiers, frontier, test_c1p
from .core import (
    DissimilaritySpace,
    OrientedTree,
    Tree,
    VertexOrder,
    check_compatible,
    count_xi,
    is_one_way_order,
    is_two_way_order,
    maximal_directed_paths,
    reachability,
)
from .errors import InputError, PreconditionError, SizeGuardError
from .paths import EtaTable, PathDPTables, eta_table, path_orientation, reconstruct_orientation
from .recognition import Segment, SegmentMatrix, build_segment_matrix, recognize_two_way, segment
from .reductions import (
    Cnf3,
    OrientationInstance,
    SimpleGraph,
    SubsetInstance,
    build_assignment_instance,
    build_orientation_instance,
    build_subset_instance,
    orientation_kappa,
    parse_dimacs,
    witness_orientation,
)
from .stars import PetalPartition, StarAssignment, assign_star, orient_star, petals
from .uniform_orient import (
    NeighborWeights,
    PartitionTable,
    find_centroid,
    has_central_vertex,
    optimal_partition_of_neighbors,
    orient_all_robinson,
    verify_all_paths_robinson,
)

__all__ = [
    "BinaryMatrix",
    "Cnf3",
    "DissimilaritySpace",
    "EtaTable",
    "InputError",
    "NeighborWeights",
    "OrientationInstance",
    "OrientedTree",
    "PQTree",
    "PartitionTable",
    "PathDPTables",
    "PetalPartition",
    "PreconditionError",
    "Segment",
    "SegmentMatrix",
    "SimpleGraph",
    "SizeGuardError",
    "StarAssignment",
    "SubsetInstance",
    "Tree",
    "VertexOrder",
    "assign_star",
    "build_assignment_instance",
    "build_orientation_instance",
    "build_segment_matrix",
    "build_subset_instance",
    "check_compatible",
    "count_xi",
    "enumerate_frontiers",
    "eta_table",
    "find_centroid",
    "frontier",
    "has_central_vertex",
    "is_one_way_order",
    "is_two_way_order",
    "maximal_directed_paths",
    "optimal_partition_of_neighbors",
    "orient_all_robinson",
    "orient_star",
    "orientation_kappa",
    "parse_dimacs",
    "path_orientation",
    "petals",
    "reachability",
    "recognize_two_way",
    "reconstruct_orientation",
    "segment",
    "test_c1p",
    "witness_orientation",
]

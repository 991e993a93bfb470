"""Doubly stochastic matrices with uniform marginals and their minimum supports.

M(n, m) is the set of nonnegative n x m matrices with every row summing to
m and every column summing to n.  All arithmetic is exact.
"""

from .constructions import (
    EuclideanTrace,
    GalleryId,
    build_B,
    build_C,
    build_E,
    build_F,
    build_X,
    build_Y,
    euclidean_trace,
    gallery,
    s_formula,
    transpose_member,
)
from .extremality import (
    BipartiteSupportGraph,
    ConvexDecomposition,
    CycleWitness,
    decompose,
    find_cycle,
    is_extremal,
    split_on_cycle,
    subsupport_witness,
    support_graph,
    to_dot,
)
from .matrix import (
    MarginalReport,
    UMatrix,
    entry_multiset,
    scale_check_birkhoff,
    support,
    validate,
    verify_tiling,
)

__version__ = "0.1.0"

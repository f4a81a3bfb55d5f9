"""Crystals of symmetrizable Kac-Moody algebras.

Exact, verification-grade implementations of the tensor product rule, the
crystal B(infinity) with its star involution, highest-weight crystals, the
commutor with an exhaustive cactus-relation checker, Dynkin diagram folding,
and rational-arithmetic checks on framed quiver representation points.
"""

from .binf import (
    BinfElem,
    ElementaryFactor,
    IotaSequence,
    binf_ops,
    convert_model,
    eps_star,
    eps_star_i,
    from_word,
    kashiwara_embed,
    standard_iota,
    star,
    star_e,
    star_f,
)
from .cartan import (
    CartanData,
    FoldedCartan,
    Weight,
    fold,
    graph_cartan,
    is_finite_type,
    validate_cartan,
)
from .commutor import (
    Decomposition,
    cactus_check,
    cactus_composites,
    commute,
    decompose,
    hw_star_swap_check,
    reconstruct,
    sigma,
    symmetry_check,
)
from .crystal import (
    CrystalGraph,
    TensorElem,
    generate_graph,
    graphs_isomorphic,
    hw_reduce,
    is_highest,
    replay,
    tensor_ops,
    transport,
)
from .errors import (
    CartanError,
    FoldingError,
    ModelError,
    MomentMapError,
    NodeCapError,
    TransportError,
)
from .folding import folded_graph, orbit_e, orbit_f
from .hw import HwElem, apply_to_hw, contains, enumerate_crystal, highest, hw_ops, iota
from .quiver import (
    QuiverData,
    QuiverPoint,
    dagger,
    eps_i_lusztig,
    eps_i_point,
    is_costable,
    is_nilpotent,
    is_stable,
    lusztig_moment,
    make_point,
    nakajima_moment,
    phi_i_point,
    point_from_json,
    point_to_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

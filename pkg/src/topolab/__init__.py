"""Finite topological spaces and exhaustive checks of compactness characterizations."""

from .compactness import (
    DirectedCover,
    IndexedFamily,
    UpperVietoris,
    WitnessSpace,
    cover_member_from_witness,
    directed_covers,
    family_intersection,
    interior_containment,
    is_compact_subset,
    is_continuously_indexed,
    quantified_open,
    upper_vietoris,
    way_below,
    witness_space,
)
from .domains import (
    FinitePoset,
    check_prod_charac,
    check_sigma_products,
    enumerate_posets,
    poset_product,
    scott_topology,
    sigma_functor,
    sigma_map,
)
from .errors import (
    BoundExceeded,
    CarrierOverflow,
    InvariantViolation,
    NotAPoset,
    NotATopology,
    NotContinuous,
    NotDirected,
    NotMonotone,
    NotOpen,
    PointOutOfRange,
    RoleViolation,
    TopolabError,
    UnknownTheorem,
)
from .function_spaces import (
    FunctionSpace,
    OpensSpace,
    evaluation,
    exponential,
    sierpinski_exponential_as_opens,
    subbasic_open,
    transpose,
    universal_quantifier,
)
from .maps import (
    ContinuousMap,
    ProperVerdict,
    continuous_maps,
    enumerate_maps,
    fiber,
    image,
    is_closed_map,
    is_continuous,
    is_proper,
    make_map,
    preimage,
    product_with_identity,
    projections,
)
from .space import (
    FiniteSpace,
    SpacePreorder,
    closure,
    count_topologies,
    diagonal_class,
    discrete,
    enumerate_topologies,
    from_preorder,
    generate_topology,
    indiscrete,
    interior,
    make_space,
    min_open_nbhd,
    one_point,
    product,
    sierpinski,
    specialization_preorder,
    subspace,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

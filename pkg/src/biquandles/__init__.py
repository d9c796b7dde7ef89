"""Finite quandles and biquandles: construction from biquandle structures,
decomposition, isomorphism classification and automorphism groups."""

from .errors import AxiomError, BiquandleError, CapExceeded, ConsistencyError, TableError
from .tables import (
    Biquandle,
    Group,
    Quandle,
    VerificationReport,
    alexander_biquandle,
    alexander_quandle,
    conjugation_quandle,
    core_quandle,
    cyclic_group,
    dihedral_biquandle,
    dihedral_quandle,
    klein_four_group,
    symmetric_group,
    trivial_quandle,
    verify_biquandle,
    verify_group,
    verify_quandle,
    wada_biquandle,
)
from .structures import (
    BiquandleStructure,
    constant_structure,
    extract_structure,
    realize,
    underlying_quandle,
    verify_structure,
    wada_structure,
)
from .morphisms import (
    IsoResult,
    PermGroup,
    affine_group,
    affine_map,
    biquandle_aut_group,
    centralizer,
    classify_constant_structures,
    conjugacy_classes,
    dihedral_biquandle_aut,
    groups_isomorphic,
    inner_group,
    is_biquandle_hom,
    is_quandle_hom,
    quandle_aut_group,
    setwise_normalizer,
    structures_isomorphic,
)
from .products import (
    ComponentPartition,
    ProductBiquandle,
    biquandle_components,
    decompose_product_aut,
    product_aut_group,
    product_biquandle,
    quandle_components,
)
from .enumeration import (
    census_crosscheck,
    enumerate_biquandles_bruteforce,
    enumerate_structures,
)

__version__ = "0.1.0"

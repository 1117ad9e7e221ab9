"""Exact computations with projective space, line bundles ``O(e)`` and their sections.

Everything works over the rationals or a prime field, with exact equality.
"""

from .affine import AffineMap, AffinePoint, NotAffine, is_affine_subspace, linear_part, point_diff, vectorize_ops
from .bundles import (
    LocalValue,
    O1FiberElement,
    cocycle_check,
    dual_degree,
    hyperplane_eval,
    local_to_tensor,
    o1_fiber_add,
    o1_fiber_scale,
    tensor_degree,
    transition,
    transport,
)
from .euler import (
    FiberSequence,
    NotProportional,
    TangentFiber,
    euler_sequence_fiber,
    hyperplane_sequence_fiber,
    p1_tangent_iso_check,
    tangent_fiber,
    tangent_transition_p1,
    taut_sequence_fiber,
)
from .field import QQ, DivisionByZero, Field, FieldValue, InfiniteField, MixedFields
from .poly import HomogPoly, PolySum, homogeneity_check, monomial_basis, parse_poly
from .projmaps import (
    InKernel,
    IndeterminacyPoint,
    LinearInduced,
    MorphismData,
    induced_map,
    morphism_eval,
    segre,
    veronese,
)
from .projspace import (
    GeneralChart,
    OutsideOverlap,
    ProjPoint,
    enumerate_proj,
    general_chart_fwd,
    general_chart_inv,
    normalize,
    overlap,
    parse_point,
)
from .sections import (
    CertKind,
    NonvanishingCertificate,
    RationalMap,
    RationalSection,
    certify_nonvanishing,
    eval_regular,
    local_rep,
    mobius_section,
    section_basis,
    section_from_form,
    tensor_power_section,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "AffinePoint",
    "certify_nonvanishing",
    "CertKind",
    "cocycle_check",
    "DivisionByZero",
    "dual_degree",
    "enumerate_proj",
    "euler_sequence_fiber",
    "eval_regular",
    "FiberSequence",
    "Field",
    "FieldValue",
    "general_chart_fwd",
    "general_chart_inv",
    "GeneralChart",
    "homogeneity_check",
    "HomogPoly",
    "hyperplane_eval",
    "hyperplane_sequence_fiber",
    "IndeterminacyPoint",
    "induced_map",
    "InfiniteField",
    "InKernel",
    "is_affine_subspace",
    "linear_part",
    "LinearInduced",
    "local_rep",
    "local_to_tensor",
    "LocalValue",
    "MixedFields",
    "mobius_section",
    "monomial_basis",
    "morphism_eval",
    "MorphismData",
    "NonvanishingCertificate",
    "normalize",
    "NotAffine",
    "NotProportional",
    "o1_fiber_add",
    "o1_fiber_scale",
    "O1FiberElement",
    "OutsideOverlap",
    "overlap",
    "p1_tangent_iso_check",
    "parse_point",
    "parse_poly",
    "point_diff",
    "PolySum",
    "ProjPoint",
    "QQ",
    "RationalMap",
    "RationalSection",
    "section_basis",
    "section_from_form",
    "segre",
    "tangent_fiber",
    "tangent_transition_p1",
    "TangentFiber",
    "taut_sequence_fiber",
    "tensor_degree",
    "tensor_power_section",
    "transition",
    "transport",
    "vectorize_ops",
    "veronese",
]

"""Exact computations with spherelike objects in derived categories of quiver algebras."""

from __future__ import annotations

from .errors import ConsistencyError, PreconditionError
from .homcx import GradedHomSpace, compose, hom, serre, serre_image, serre_pairing_check
from .kgroup import (
    KClass,
    KLattice,
    SurfaceModel,
    asphericality_class,
    blow_up,
    check_braid,
    check_involution,
    curve_sheaf_class,
    euler_pairing_surface,
    pullback,
    reflect,
    tensor_canonical,
)
from .perfcx import (
    ChainMap,
    PerfectComplex,
    cone,
    direct_sum,
    identity_map,
    is_isomorphic,
    minimize,
    shift,
    stalk,
)
from .quiveralg import (
    AlgebraError,
    Arrow,
    BoundQuiverAlgebra,
    PathPolynomial,
    Quiver,
    Representation,
    build_algebra,
    euler_pairing_complexes,
    injective,
    nakayama,
    projective,
    projective_resolution,
    simple,
)
from .sphere import (
    AsphericalityData,
    SphereReport,
    analyze,
    asphericality,
    check_calabi_yau,
    classify,
    construct_w,
    in_spherical_subcategory,
    is_spherical,
    twist,
    twist_left,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "Arrow",
    "AsphericalityData",
    "BoundQuiverAlgebra",
    "ChainMap",
    "ConsistencyError",
    "GradedHomSpace",
    "KClass",
    "KLattice",
    "PathPolynomial",
    "PerfectComplex",
    "PreconditionError",
    "Quiver",
    "Representation",
    "SphereReport",
    "SurfaceModel",
    "analyze",
    "asphericality",
    "asphericality_class",
    "blow_up",
    "build_algebra",
    "check_braid",
    "check_calabi_yau",
    "check_involution",
    "classify",
    "compose",
    "cone",
    "construct_w",
    "curve_sheaf_class",
    "direct_sum",
    "euler_pairing_complexes",
    "euler_pairing_surface",
    "hom",
    "identity_map",
    "in_spherical_subcategory",
    "injective",
    "is_isomorphic",
    "is_spherical",
    "minimize",
    "nakayama",
    "projective",
    "projective_resolution",
    "pullback",
    "reflect",
    "serre",
    "serre_image",
    "serre_pairing_check",
    "shift",
    "simple",
    "stalk",
    "tensor_canonical",
    "twist",
    "twist_left",
]

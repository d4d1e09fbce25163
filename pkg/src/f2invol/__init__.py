"""Involutions in isometry groups of symmetric bilinear forms over F2.

Bit-packed linear algebra, bilinear spaces and their isometry groups, the
DD and I-invariants, canonical class representatives, the semidirect
product picture and direct-sum calculus.
"""

from .classify import (
    ClassDescriptor,
    are_conjugate,
    class_count,
    classify_involution,
    find_conjugator,
    representatives,
    symplectic_transitive_map,
)
from .dsum import SumPrediction, charge_product, direct_sum, predict_dd_sum, sharp
from .errors import (
    CapExceeded,
    F2Error,
    InternalInconsistency,
    InvalidArgument,
    MirrorUndefined,
    NotAnInvolution,
    NotAnIsometry,
    ShapeError,
)
from .gf2 import BitMatrix, BitVector, inverse, kernel_basis, multiply, rank
from .invariants import (
    Charge,
    DDInvariant,
    IProfile,
    alpha,
    charge,
    dd_invariant,
    dd_to_profile,
    dickson_D,
    i_profile,
    profile_to_dd,
)
from .isometries import (
    Involution,
    Isometry,
    enumerate_group,
    enumerate_involutions,
    group_order,
    mirror,
    validate_involution,
    validate_isometry,
)
from .semidirect import (
    SemiDirectElement,
    SemiDirectGroup,
    SqFunctional,
    mv_act,
    s_a_orbit_count,
    sd_is_involution,
    sd_mirror,
    sq,
    theta,
    theta_standard,
)
from .spaces import BilinearSpace, SemiNorm, SpaceType, classify_and_standardize, semi_norm_standard, standard_space

__version__ = "0.1.0"

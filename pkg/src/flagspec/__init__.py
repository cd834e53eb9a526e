"""Exact Spin^c spectral and index data on rational homogeneous varieties."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    FlagSpecError,
    InvalidInputError,
    NotKahlerError,
    NotSpincError,
    SingularInputError,
    UnitMismatchError,
)
from .root_system import (  # noqa: E402
    LieType,
    RootSystem,
    Weight,
    build_root_system,
    coroot_pairing,
    inner_product,
    root_as_weight,
    weyl_vector,
)
from .weyl import (  # noqa: E402
    CohomologyReport,
    bwb_classify,
    is_dot_regular,
    shifted_action,
    simple_reflection,
    to_dominant,
    weyl_dimension,
)
from .flag_variety import (  # noqa: E402
    FlagVariety,
    KahlerClass,
    LineBundleClass,
    PiScalar,
    build_flag,
    canonical_weight,
    curve_pairing,
    fano_index,
    hym_slope,
    is_kahler,
    ke_class,
    scalar_curvature,
)
from .spectral import (  # noqa: E402
    DiracBound,
    HarmonicReport,
    Spectrum,
    dirac_lower_bound,
    harmonic_spinors,
    is_spinc,
    theta_spectrum,
    twist_weight,
    weitzenboeck_min,
    weitzenboeck_spectrum,
)

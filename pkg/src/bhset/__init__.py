"""Exact decision procedures for sumset separation properties.

Core surfaces: scalar backends (exact rational, exact Gaussian rational,
binary64), weak-composition enumeration, representation profiles, membership
verdicts with collision witnesses, separation margins with openness-radius
certificates, and the constructive epsilon-repair of arbitrary vectors.
"""

__version__ = "0.1.0"

from .analysis import (
    BhCertificate,
    BhVerdict,
    UVPartition,
    certify,
    is_bh,
    margin,
    uv_partition,
)
from .bhg import GProfile, ProbeReport, bh_sweep, g_profile, is_bhg, probe_openness
from .compositions import (
    Composition,
    count_compositions,
    diff_inf_norm,
    enumerate_compositions,
)
from .errors import (
    BackendMismatchError,
    BhSetError,
    BudgetExceededError,
    CountOverflowError,
    DegenerateVectorError,
    DimensionMismatchError,
    NotBhVectorError,
    ScalarSyntaxError,
    VerificationFailedError,
)
from .oracle import oracle_margin, oracle_profile
from .repair import RepairReport, canonical_witness, contract, repair, small_bh_vector
from .rng import CounterRng
from .scalars import (
    BACKENDS,
    FLOAT,
    GAUSSIAN,
    RATIONAL,
    GaussianRational,
    Magnitude,
    Scalar,
    format_scalar,
    mag_compare,
    magnitude,
    parse_scalar,
    scale_by_rational,
)
from .sumset import (
    ProfileEntry,
    RepresentationProfile,
    build_profile,
    dot,
    g_max,
    sums_of,
)
from .vectors import Vector, embed, first_repeated_pair, make_vector

__all__ = [
    "BACKENDS",
    "BackendMismatchError",
    "BhCertificate",
    "BhSetError",
    "BhVerdict",
    "BudgetExceededError",
    "Composition",
    "CountOverflowError",
    "CounterRng",
    "DegenerateVectorError",
    "DimensionMismatchError",
    "FLOAT",
    "GAUSSIAN",
    "GProfile",
    "GaussianRational",
    "Magnitude",
    "NotBhVectorError",
    "ProbeReport",
    "ProfileEntry",
    "RATIONAL",
    "RepairReport",
    "RepresentationProfile",
    "Scalar",
    "ScalarSyntaxError",
    "UVPartition",
    "Vector",
    "VerificationFailedError",
    "bh_sweep",
    "build_profile",
    "canonical_witness",
    "certify",
    "contract",
    "count_compositions",
    "diff_inf_norm",
    "dot",
    "embed",
    "enumerate_compositions",
    "first_repeated_pair",
    "format_scalar",
    "g_max",
    "g_profile",
    "is_bh",
    "is_bhg",
    "mag_compare",
    "magnitude",
    "make_vector",
    "margin",
    "oracle_margin",
    "oracle_profile",
    "parse_scalar",
    "probe_openness",
    "repair",
    "scale_by_rational",
    "small_bh_vector",
    "sums_of",
    "uv_partition",
]

"""Pseudorandom streams from the polygonal binormal-flow reduction.

At rational times the tangent evolution of a regular polygon under the
binormal flow turns into exact number theory: quadratic Gauss sums fix the
corner rotations, and the resulting triple/scalar products collapse to a
modular inverse.  This package computes both sides of that reduction,
verifies them against each other, and exposes the resulting sequences as
statistically tested pseudorandom streams.
"""

from .errors import DomainError
from .filament import (
    CirclePoint,
    CornerAngle,
    CornerRotation,
    FrameMatrix,
    PolygonConfig,
    RationalTime,
    build_polygon,
    closure_residual,
    corner_angle,
    corner_products,
    rotation_matrix,
    scalar_product_geometric,
    transport_frames,
    triple_product_geometric,
    z_qm_closed,
)
from .gauss import (
    GaussValue,
    MagnitudeClass,
    ThetaPhase,
    gauss_closed_0mod4,
    gauss_closed_2mod4,
    gauss_closed_odd,
    gauss_direct,
    gauss_direct_row,
    gauss_magnitude,
    theta_sequence,
)
from .modular import (
    FactoredModulus,
    PhiResult,
    Residue,
    crt_combine,
    euler_totient,
    factor_pow2,
    fermat_inverse,
    jacobi,
    mod_inverse,
    phi_p,
)
from .prng import (
    StreamKind,
    StreamSpec,
    UnitSample,
    compound_stream,
    eicg_pow2_stream,
    eicg_stream,
    lcg_stream,
    parallel_streams_distinct,
    randu_preset,
    vfe_stream,
    vfe_unit_samples,
)
from .stattest import (
    BoundReport,
    DiscrepancyReport,
    TupleCloud,
    chi_square_uniformity,
    make_tuples,
    randu_plane_count,
    serial_test,
    star_discrepancy,
    theorem2_upper,
    theorem3_lower,
)
from .verify import (
    SuiteResult,
    verify_closure,
    verify_compound,
    verify_gauss,
    verify_theorem1,
)

__version__ = "0.1.0"

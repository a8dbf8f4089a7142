"""Heavy-tailed vacuum-flux statistics and barrier-penetration crossovers."""

from ._kernels import BACKEND as _BACKEND
from .barrier import (
    ChargedCrossover,
    CrossoverResult,
    crossover,
    crossover_curve,
    hop_times_s_cubed,
    hop_variable,
    power_law_crossover,
    validity_ratio,
    wkb_exponent_integral,
    wkb_exponent_mean,
)
from .catalog import Catalog, load_catalog
from .errors import (
    AboveBarrierError,
    BarrierAbsentError,
    BracketError,
    CatalogError,
    ConvergenceError,
    DomainError,
    FitBracketError,
    FluxtailError,
    QuadratureError,
    TailRangeError,
    UnitError,
    WorldlineError,
)
from .fusion import (
    FitResult,
    FluctuationIntegral,
    FluctuationSum,
    FusionDerived,
    FusionSystem,
    HillWheelerResult,
    derive_parameters,
    fit_alpha,
    fit_alpha_from,
    fluctuation_S,
    fluctuation_S_from,
    fluctuation_S_integral,
    hill_wheeler_probability,
    hill_wheeler_sigma,
    s_target,
)
from .numerics import (
    DEFAULT_TOL,
    ToleranceSpec,
    brent_root,
    inc_gamma_lower,
    inc_gamma_upper,
    ln_inc_gamma_upper,
    ln_inc_gamma_upper_ext,
    log_gamma,
    quad_semiinf,
)
from .polar import (
    PolarCrossover,
    PolarizableParticle,
    polar_crossover,
    polar_hop_times_s7,
    polar_hop_variable,
    polar_validity_ratio,
    rayleigh_sigma,
    velocity_bound,
)
from .sampling import (
    DEFAULT_F0,
    SamplingSpec,
    SwitchOnParams,
    fhat,
    fhat2_moment_closed_ln,
    fhat2_moment_quad_ln,
    switch_on_params,
    switch_on_peak,
    switch_on_profile,
)
from .tail import (
    KINDS,
    PHIDOT2,
    RZ,
    SZ,
    Exceedance,
    OperatorKind,
    TailCoefficients,
    ValidityBounds,
    F_exponent,
    cumulative_exceedance,
    moment_asymptotic,
    omega_n,
    tail_coefficients,
    tail_density,
    tail_density_ln,
    validity_bounds,
    x_n,
)
from .units import CONSTANTS, PhysicalConstants, convert, thompson_cross_section
from .wick import (
    count_connected_flux,
    count_connected_flux_strict,
    count_connected_scalar,
    kn_ratio,
)

__version__ = "0.1.0"


def backend_name() -> str:
    """Which contraction/partial-wave kernel is active: 'compiled' or 'pure'."""
    return _BACKEND

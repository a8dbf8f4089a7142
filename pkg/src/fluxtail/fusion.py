"""Sub-barrier heavy-ion fusion fed by vacuum flux fluctuations.

Deep below the Coulomb barrier the measured fusion cross section first
tracks the Hill–Wheeler tunneling formula and then, for the lightest
systems, flattens far above it.  This module computes both channels for
a projectile/target pair: the partial-wave tunneling sum, and the
flux-fluctuation sum in which each partial wave hops the barrier with
probability given by the exceedance tail, capped at one.  Inverting the
fluctuation sum against a measured cross section yields the sampling
parameter alpha that would account for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import _kernels
from .errors import DomainError, FitBracketError
from .numerics import DEFAULT_TOL, ToleranceSpec, brent_root, ln_inc_gamma_upper_ext
from .sampling import DEFAULT_F0, SamplingSpec
from .tail import SZ, TailCoefficients, tail_coefficients
from .units import convert, thompson_cross_section

_DEFAULT_L_MAX = 2_000_000


@dataclass(frozen=True)
class FusionSystem:
    """Projectile/target pair in the center-of-mass frame.

    Energies in MeV, lengths in fm, velocities in units of c; ``mu`` is
    the reduced mass in MeV.  ``sigma_exp_mb`` is the measured fusion
    cross section at energy ``E`` with 1-sigma error ``sigma_exp_err_mb``.
    """

    name: str
    Z: int
    mu: float
    E: float
    E0: float
    R0_fm: float
    omega0: float
    v0: float
    sigma_exp_mb: float | None = None
    sigma_exp_err_mb: float | None = None

    def __post_init__(self) -> None:
        if self.mu <= 0 or self.E <= 0 or self.E0 <= 0:
            raise DomainError("mu, E and E0 must be positive")
        if self.R0_fm <= 0 or self.omega0 <= 0 or self.v0 <= 0:
            raise DomainError("R0, omega0 and v0 must be positive")
        if self.Z == 0:
            raise DomainError("projectile charge Z must be nonzero")

    @property
    def R0(self) -> float:
        """Barrier radius in natural units (MeV^-1)."""
        return convert(self.R0_fm, "fm", "MeV^-1")


@dataclass(frozen=True)
class FusionDerived:
    """Quantities derived from a system, all in natural units except d0_fm.

    k     — center-of-mass momentum, sqrt(2 mu E)
    d0    — barrier thickness at energy E for the inverted oscillator,
            (2/omega0) sqrt(2 (E0 - E)/mu)
    xi    — centrifugal thickening rate, 1/(2 mu R0^2 (E0 - E)), so that
            the l-wave hop variable is x0 [1 + xi l(l+1)]^{3/2}
    sigma_T — Thompson cross section of the projectile
    x0    — s-wave hop variable mu d0^3 / (2 sigma_T v0^2)
    """

    k: float
    d0: float
    d0_fm: float
    xi: float
    sigma_T: float
    x0: float


def derive_parameters(system: FusionSystem) -> FusionDerived:
    if system.E >= system.E0:
        raise DomainError(
            f"fluctuation channel is defined below the barrier: E={system.E} >= E0={system.E0}"
        )
    k = math.sqrt(2.0 * system.mu * system.E)
    d0 = (2.0 / system.omega0) * math.sqrt(2.0 * (system.E0 - system.E) / system.mu)
    xi = 1.0 / (2.0 * system.mu * system.R0**2 * (system.E0 - system.E))
    sigma_T = thompson_cross_section(system.Z, system.mu)
    x0 = system.mu * d0**3 / (2.0 * sigma_T * system.v0**2)
    return FusionDerived(
        k=k,
        d0=d0,
        d0_fm=convert(d0, "MeV^-1", "fm"),
        xi=xi,
        sigma_T=sigma_T,
        x0=x0,
    )


# ---------------------------------------------------------------------------
# Hill–Wheeler tunneling channel


def hill_wheeler_probability(
    system: FusionSystem, l: int, energy: float | None = None
) -> float:
    """Transmission P_l = 1 / (1 + exp[2 pi (E_l - E)/omega0]).

    E_l = E0 + l(l+1)/(2 mu R0^2) is the centrifugally raised barrier.
    """
    if l < 0:
        raise DomainError(f"l must be >= 0, got {l}")
    e = system.E if energy is None else energy
    e_l = system.E0 + l * (l + 1) / (2.0 * system.mu * system.R0**2)
    arg = 2.0 * math.pi * (e_l - e) / system.omega0
    if arg > 700.0:
        return 0.0
    return 1.0 / (1.0 + math.exp(arg))


@dataclass(frozen=True)
class HillWheelerResult:
    sigma_mb: float
    l_used: int


def hill_wheeler_sigma(
    system: FusionSystem,
    energy: float | None = None,
    *,
    l_max: int = 100_000,
    rel_cut: float = 1e-12,
) -> HillWheelerResult:
    """Tunneling cross section (pi/k^2) sum_l (2l+1) P_l, in mb.

    The sum is truncated once a term drops below ``rel_cut`` of the
    partial sum; ``l_used`` is the last wave kept.
    """
    e = system.E if energy is None else energy
    if e <= 0:
        raise DomainError(f"energy must be positive, got {e}")
    k_sq = 2.0 * system.mu * e
    total = 0.0
    l_used = 0
    for l in range(l_max + 1):
        term = (2 * l + 1) * hill_wheeler_probability(system, l, e)
        total += term
        l_used = l
        if l > 0 and term < rel_cut * total:
            break
    sigma_natural = math.pi / k_sq * total
    return HillWheelerResult(
        sigma_mb=convert(sigma_natural, "MeV^-2", "mb"), l_used=l_used
    )


# ---------------------------------------------------------------------------
# Fluctuation channel


@dataclass(frozen=True)
class FluctuationSum:
    S: float
    l_used: int


def fluctuation_S_from(
    alpha: float,
    xi: float,
    x0: float,
    *,
    f0: float = DEFAULT_F0,
    l_max: int = _DEFAULT_L_MAX,
) -> FluctuationSum:
    """S = sum_l (2l+1) min(1, (c0/ac) x_l^{1+b-c} e^{-a x_l^c}).

    x_l = x0 [1 + xi l(l+1)]^{3/2}; each wave's hop probability is the
    algebraic exceedance of the flux tail, saturated at 1.  The measured
    cross section corresponds to S = k^2 sigma / pi.
    """
    if xi <= 0 or x0 < 1.0:
        raise DomainError("need xi > 0 and x0 >= 1")
    coeff = tail_coefficients(SamplingSpec(alpha=alpha, f0=f0), SZ)
    total, l_used = _kernels.partial_wave_sum(
        coeff.ln_c0_over_ac,
        coeff.tail_power,
        coeff.a,
        coeff.c,
        math.log(x0),
        xi,
        l_max,
    )
    return FluctuationSum(S=total, l_used=l_used)


def fluctuation_S(
    system: FusionSystem,
    alpha: float,
    *,
    f0: float = DEFAULT_F0,
    l_max: int = _DEFAULT_L_MAX,
) -> FluctuationSum:
    der = derive_parameters(system)
    return fluctuation_S_from(alpha, der.xi, der.x0, f0=f0, l_max=l_max)


@dataclass(frozen=True)
class FluctuationIntegral:
    """Two continuum estimates of the partial-wave sum.

    ``S_I`` converts the sum to an integral in l(l+1) and evaluates it
    exactly as an upper incomplete gamma; ``S_IA`` is its leading
    algebraic asymptotic.  Both ignore the per-wave cap, so they bound
    the discrete sum only where no wave saturates.
    """

    S_I: float
    S_IA: float

    @property
    def ratio(self) -> float:
        return self.S_IA / self.S_I


def fluctuation_S_integral(
    alpha: float,
    xi: float,
    x0: float,
    *,
    f0: float = DEFAULT_F0,
) -> FluctuationIntegral:
    """Integral form of the fluctuation sum.

    S_I  = (2 c0 / (3 c^2 xi x0^{2/3})) a^{-(5+3b)/(3c)}
           Gamma((5+3b-3c)/(3c), a x0^c)
    S_IA = (2 c0 / (3 a^2 c^2 xi)) x0^{1+b-2c} e^{-a x0^c}
    """
    if xi <= 0 or x0 < 1.0:
        raise DomainError("need xi > 0 and x0 >= 1")
    coeff = tail_coefficients(SamplingSpec(alpha=alpha, f0=f0), SZ)
    a, b, c, c0 = coeff.a, coeff.b, coeff.c, coeff.c0
    z = a * x0**c
    s_shape = (5.0 + 3.0 * b - 3.0 * c) / (3.0 * c)
    ln_s_i = (
        math.log(2.0 * c0 / (3.0 * c**2 * xi))
        - (2.0 / 3.0) * math.log(x0)
        - (5.0 + 3.0 * b) / (3.0 * c) * math.log(a)
        + ln_inc_gamma_upper_ext(s_shape, z)
    )
    ln_s_ia = (
        math.log(2.0 * c0 / (3.0 * a**2 * c**2 * xi))
        + (1.0 + b - 2.0 * c) * math.log(x0)
        - z
    )
    return FluctuationIntegral(S_I=math.exp(ln_s_i), S_IA=math.exp(ln_s_ia))


# ---------------------------------------------------------------------------
# Inverting the fluctuation sum for alpha


@dataclass(frozen=True)
class FitResult:
    """alpha solving S(alpha) = k^2 sigma / pi, with optional 1-sigma band.

    ``alpha_lo``/``alpha_hi`` come from refitting at sigma_exp +/- its
    error (S decreases with alpha, so the larger cross section gives the
    smaller alpha).
    """

    alpha: float
    S_value: float
    S_target: float
    l_used: int
    alpha_lo: float | None = None
    alpha_hi: float | None = None


def s_target(system: FusionSystem, sigma_mb: float) -> float:
    """Dimensionless target k^2 sigma / pi matching the measured sigma."""
    if sigma_mb <= 0:
        raise DomainError(f"cross section must be positive, got {sigma_mb}")
    k_sq = 2.0 * system.mu * system.E
    return k_sq * convert(sigma_mb, "mb", "MeV^-2") / math.pi


def fit_alpha_from(
    xi: float,
    x0: float,
    target: float,
    *,
    f0: float = DEFAULT_F0,
    bracket: tuple[float, float] = (0.05, 0.95),
    l_max: int = _DEFAULT_L_MAX,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> FitResult:
    """Solve S(alpha) = target by Brent on ln S, S strictly decreasing."""
    if target <= 0:
        raise DomainError(f"target must be positive, got {target}")
    ln_target = math.log(target)

    def g(alpha: float) -> float:
        s = fluctuation_S_from(alpha, xi, x0, f0=f0, l_max=l_max).S
        if s <= 0.0:
            # every wave underflowed; any finite stand-in far below the
            # target keeps the sign information Brent needs
            return -1e4 - ln_target
        return math.log(s) - ln_target

    a_lo, a_hi = bracket
    g_lo, g_hi = g(a_lo), g(a_hi)
    if g_lo < 0.0 or g_hi > 0.0:
        raise FitBracketError(
            f"target S={target} is outside the range "
            f"[{math.exp(g_hi + ln_target):.3e}, {math.exp(g_lo + ln_target):.3e}] "
            f"reachable for alpha in [{a_lo}, {a_hi}]"
        )
    alpha = brent_root(g, a_lo, a_hi, tol=tol)
    final = fluctuation_S_from(alpha, xi, x0, f0=f0, l_max=l_max)
    return FitResult(
        alpha=alpha, S_value=final.S, S_target=target, l_used=final.l_used
    )


def fit_alpha(
    system: FusionSystem,
    sigma_mb: float | None = None,
    *,
    f0: float = DEFAULT_F0,
    bracket: tuple[float, float] = (0.05, 0.95),
    l_max: int = _DEFAULT_L_MAX,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> FitResult:
    """Fit alpha to a system's measured cross section.

    With ``sigma_mb`` omitted, the catalog value is used and the 1-sigma
    band is propagated from its error when one is recorded.
    """
    sigma = sigma_mb if sigma_mb is not None else system.sigma_exp_mb
    if sigma is None:
        raise DomainError(f"system {system.name!r} has no measured cross section")
    der = derive_parameters(system)
    central = fit_alpha_from(
        der.xi, der.x0, s_target(system, sigma),
        f0=f0, bracket=bracket, l_max=l_max, tol=tol,
    )
    err = system.sigma_exp_err_mb
    if sigma_mb is not None or err is None or err <= 0 or sigma - err <= 0:
        return central
    hi = fit_alpha_from(
        der.xi, der.x0, s_target(system, sigma - err),
        f0=f0, bracket=bracket, l_max=l_max, tol=tol,
    )
    lo = fit_alpha_from(
        der.xi, der.x0, s_target(system, sigma + err),
        f0=f0, bracket=bracket, l_max=l_max, tol=tol,
    )
    return replace(central, alpha_lo=lo.alpha, alpha_hi=hi.alpha)

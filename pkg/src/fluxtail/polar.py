"""Flux-driven barrier hopping for neutral polarizable particles.

A neutral particle couples to the electromagnetic vacuum only through
its polarizability alpha0, so the relevant flux operator is the
twice-differentiated one (p = 7) and the hop variable grows as the
seventh power of the barrier thickness.  The machinery mirrors the
charged case: a power-law hop variable, a linear WKB exponent, and a
crossover thickness where the fluctuation channel takes over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .barrier import CrossoverResult, power_law_crossover
from .errors import DomainError
from .numerics import DEFAULT_TOL, ToleranceSpec
from .sampling import DEFAULT_F0, SamplingSpec
from .tail import RZ, tail_coefficients
from .units import convert

_THREE_PI = 3.0 * math.pi


@dataclass(frozen=True)
class PolarizableParticle:
    """Neutral particle of mass (MeV), static polarizability alpha0 (fm^3),
    and effective size r0 (fm), defaulting to alpha0^{1/3}."""

    name: str
    mass: float
    alpha0_fm3: float
    r0_fm: float | None = None

    def __post_init__(self) -> None:
        if self.mass <= 0 or self.alpha0_fm3 <= 0:
            raise DomainError("mass and alpha0 must be positive")
        if self.r0_fm is not None and self.r0_fm <= 0:
            raise DomainError("r0 must be positive when given")

    @property
    def size_fm(self) -> float:
        return self.r0_fm if self.r0_fm is not None else self.alpha0_fm3 ** (1.0 / 3.0)

    @property
    def alpha0(self) -> float:
        """Polarizability in natural units (MeV^-3)."""
        return self.alpha0_fm3 * convert(1.0, "fm", "MeV^-1") ** 3


def rayleigh_sigma(alpha0: float, omega: float) -> float:
    """Rayleigh cross section alpha0^2 omega^4 / (6 pi), natural units.

    This is the polarizability analog of the Thompson cross section and
    sets the coupling scale behind the p = 7 hop variable.
    """
    if alpha0 <= 0 or omega <= 0:
        raise DomainError("alpha0 and omega must be positive")
    return alpha0**2 * omega**4 / (6.0 * math.pi)


def polar_hop_variable(particle: PolarizableParticle, v0: float, d_fm: float) -> float:
    """Hop variable x = 3 pi m d^7 / (alpha0^2 v0^6)."""
    if v0 <= 0 or d_fm <= 0:
        raise DomainError("v0 and d must be positive")
    d = convert(d_fm, "fm", "MeV^-1")
    return _THREE_PI * particle.mass * d**7 / (particle.alpha0**2 * v0**6)


def polar_validity_ratio(particle: PolarizableParticle, v0: float, d_fm: float) -> float:
    """Worldline ratio s = v0 r0 / d for a particle of size r0."""
    if v0 <= 0 or d_fm <= 0:
        raise DomainError("v0 and d must be positive")
    return v0 * particle.size_fm / d_fm


def polar_hop_times_s7(particle: PolarizableParticle, v0: float) -> tuple[float, float]:
    """The d-independent product x s^7, exact and rounded.

    Exact: 3 pi m v0 r0^7 / alpha0^2.  With r0 = alpha0^{1/3} this is
    3 pi m v0 r0 ~ 10 m v0 r0, the rounded form quoted alongside it as a
    cross-check.  Validity up to the hop scale (x s^7 <= 1) then reads
    v0 <~ 1/(10 m r0).
    """
    if v0 <= 0:
        raise DomainError("v0 must be positive")
    r0 = convert(particle.size_fm, "fm", "MeV^-1")
    exact = _THREE_PI * particle.mass * v0 * r0**7 / particle.alpha0**2
    rounded = 10.0 * particle.mass * v0 * r0
    return exact, rounded


def velocity_bound(particle: PolarizableParticle) -> float:
    """Largest v0 keeping the worldline picture valid: 1/(10 m r0)."""
    r0 = convert(particle.size_fm, "fm", "MeV^-1")
    return 1.0 / (10.0 * particle.mass * r0)


@dataclass(frozen=True)
class PolarCrossover:
    """Crossover for a polarizable particle; thicknesses in fm."""

    particle: PolarizableParticle
    alpha: float
    v0: float
    result: CrossoverResult

    @property
    def d_star_fm(self) -> float | None:
        return self.result.d_star

    @property
    def G_star(self) -> float | None:
        return self.result.common_value

    @property
    def x_star(self) -> float | None:
        return self.result.x_star

    @property
    def s_star(self) -> float | None:
        if self.result.d_star is None:
            return None
        return polar_validity_ratio(self.particle, self.v0, self.result.d_star)

    @property
    def dominance(self) -> str:
        return self.result.dominance


def polar_crossover(
    particle: PolarizableParticle,
    alpha: float,
    v0: float,
    d_range_fm: tuple[float, float] = (0.1, 1e4),
    *,
    f0: float = DEFAULT_F0,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> PolarCrossover:
    """Tunneling/fluctuation crossover thickness for a neutral particle.

    G = 2 v0 m d against F(x) with x = 3 pi m d^7/(alpha0^2 v0^6); the
    p = 7 exponent makes F extremely flat in d, so on the fluctuation
    side of d* the asymptotic should be trusted only where x stays below
    the validity bound s^{-7}.
    """
    if v0 <= 0:
        raise DomainError("v0 must be positive")
    spec = SamplingSpec(alpha=alpha, f0=f0)
    coeff = tail_coefficients(spec, RZ)
    fm = convert(1.0, "fm", "MeV^-1")
    hop_coeff = _THREE_PI * particle.mass * fm**7 / (particle.alpha0**2 * v0**6)
    g_slope = 2.0 * v0 * particle.mass * fm
    result = power_law_crossover(coeff, hop_coeff, 7.0, g_slope, d_range_fm, tol=tol)
    return PolarCrossover(particle=particle, alpha=alpha, v0=v0, result=result)

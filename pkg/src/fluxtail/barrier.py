"""Barrier penetration: WKB exponents and the tunneling/fluctuation crossover.

Two escape channels compete for a particle facing a potential barrier of
thickness d: ordinary tunneling, with probability e^{-G(d)}, and a
vacuum-flux kick over the top, with probability e^{-F(x(d))} where the
hop variable x grows as a power of d.  Because F is sublinear in d while
G is linear, the flux channel always wins for thick enough barriers; the
crossover thickness d* solves F(x(d)) = G(d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad

from .errors import (
    AboveBarrierError,
    BarrierAbsentError,
    DomainError,
    TailRangeError,
)
from .numerics import DEFAULT_TOL, ToleranceSpec, brent_root
from .sampling import DEFAULT_F0, SamplingSpec
from .tail import SZ, F_exponent, TailCoefficients, tail_coefficients
from .units import CONSTANTS

_SQRT_6PI = math.sqrt(6.0 * math.pi)


# ---------------------------------------------------------------------------
# WKB exponents


def wkb_exponent_integral(
    potential: Callable[[float], float],
    energy: float,
    mass: float,
    z_range: tuple[float, float],
    *,
    n_grid: int = 2001,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> float:
    """Tunneling exponent G = 2 int_{z1}^{z2} sqrt(2 m (V(z) - E)) dz.

    Turning points z1 < z2 are located by bracketing V(z) = E on a grid
    and refining with Brent.  The integrable sqrt singularities at both
    endpoints are removed by the substitutions z = z1 + u^2 and
    z = z2 - u^2 before quadrature.
    """
    if mass <= 0:
        raise DomainError(f"mass must be positive, got {mass}")
    z_lo, z_hi = z_range
    if not z_lo < z_hi:
        raise DomainError(f"need z_lo < z_hi, got {z_range}")

    zs = np.linspace(z_lo, z_hi, n_grid)
    vs = np.array([potential(z) for z in zs])
    i_peak = int(np.argmax(vs))
    v_max = float(vs[i_peak])
    if energy >= v_max:
        raise AboveBarrierError(
            f"energy {energy} is at or above the barrier top {v_max}; "
            "no classically forbidden region"
        )

    def shifted(z: float) -> float:
        return potential(z) - energy

    # walk outward from the peak to bracket each turning point
    def bracket_turn(step: int) -> tuple[float, float]:
        i = i_peak
        while 0 <= i + step < n_grid:
            if vs[i + step] - energy < 0.0:
                lo, hi = sorted((zs[i], zs[i + step]))
                return lo, hi
            i += step
        raise BarrierAbsentError(
            "potential never drops below the energy on "
            f"{'the left' if step < 0 else 'the right'} of the peak within z_range"
        )

    lo1, hi1 = bracket_turn(-1)
    lo2, hi2 = bracket_turn(+1)
    z1 = brent_root(shifted, lo1, hi1, tol=tol)
    z2 = brent_root(shifted, lo2, hi2, tol=tol)
    z_peak = float(zs[i_peak])

    def momentum(z: float) -> float:
        return math.sqrt(max(2.0 * mass * (potential(z) - energy), 0.0))

    left, _ = quad(
        lambda u: 2.0 * u * momentum(z1 + u * u),
        0.0,
        math.sqrt(z_peak - z1),
        epsabs=0.0,
        epsrel=1e-11,
        limit=200,
    )
    right, _ = quad(
        lambda u: 2.0 * u * momentum(z2 - u * u),
        0.0,
        math.sqrt(z2 - z_peak),
        epsabs=0.0,
        epsrel=1e-11,
        limit=200,
    )
    return 2.0 * (left + right)


def wkb_exponent_mean(v1: float, d_over_lambda: float) -> float:
    """Square-barrier estimate G = 2 v1 d/lambda_C for barrier velocity v1."""
    if v1 <= 0 or d_over_lambda <= 0:
        raise DomainError("v1 and d/lambda_C must be positive")
    return 2.0 * v1 * d_over_lambda


# ---------------------------------------------------------------------------
# Charged-particle hop variable and worldline validity


def hop_variable(Z: int, v0: float, d_over_lambda: float) -> float:
    """Flux hop variable x = 3 pi d^3 / (e_sq^2 Z^4 v0^2), d in Compton units.

    The kick a flux burst must deliver to lift the particle over the
    barrier scales with the barrier volume and inversely with the squared
    coupling.
    """
    if Z == 0:
        raise DomainError("Z must be nonzero")
    if v0 <= 0 or d_over_lambda <= 0:
        raise DomainError("v0 and d/lambda_C must be positive")
    e_sq = CONSTANTS.e_sq
    return 3.0 * math.pi * d_over_lambda**3 / (e_sq**2 * Z**4 * v0**2)


def validity_ratio(Z: int, v0: float, d_over_lambda: float) -> float:
    """Worldline ratio s = Z^2 e_sq v0 / (sqrt(6 pi) d/lambda_C).

    The flux average is taken over the wavepacket size; s < 1 is required
    for the pointlike-worldline tail to apply.
    """
    if Z == 0:
        raise DomainError("Z must be nonzero")
    if v0 <= 0 or d_over_lambda <= 0:
        raise DomainError("v0 and d/lambda_C must be positive")
    return Z * Z * CONSTANTS.e_sq * v0 / (_SQRT_6PI * d_over_lambda)


def hop_times_s_cubed(Z: int, v0: float) -> float:
    """The d-independent product x s^3 = Z^2 e_sq v0 / (2 sqrt(6 pi)).

    x grows as d^3 while s falls as 1/d, so their product is a pure
    number; x <= s^{-3} (worldline validity up to the hop scale) holds
    iff Z^2 v0 <= 2 sqrt(6 pi) / e_sq ~ 94.7.
    """
    if Z == 0:
        raise DomainError("Z must be nonzero")
    if v0 <= 0:
        raise DomainError("v0 must be positive")
    return Z * Z * CONSTANTS.e_sq * v0 / (2.0 * _SQRT_6PI)


# ---------------------------------------------------------------------------
# Crossover solver


@dataclass(frozen=True)
class CrossoverResult:
    """Outcome of scanning phi(d) = F(x(d)) - G(d) over a thickness range.

    ``roots`` lists every sign change found, as (d, direction) with
    direction "+-" where tunneling hands over to fluctuations and "-+"
    for the reverse; ``d_star`` is the last "+-" root — the physical
    onset — or None when phi never changes sign.  ``d_lo_used`` records
    the lower edge after raising it to keep the hop variable >= 1.
    """

    d_star: float | None
    common_value: float | None
    x_star: float | None
    dominance: str
    roots: tuple[tuple[float, str], ...]
    d_lo_used: float


def power_law_crossover(
    coeff: TailCoefficients,
    hop_coeff: float,
    hop_power: float,
    g_slope: float,
    d_range: tuple[float, float],
    *,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> CrossoverResult:
    """Solve F(hop_coeff d^hop_power) = g_slope d on d_range.

    The scan is geometric with factor 2, each bracketed sign change is
    refined with Brent, and the lower edge is first raised to the point
    where the hop variable reaches 1 (below that the tail form has no
    meaning).
    """
    if hop_coeff <= 0 or hop_power <= 0 or g_slope <= 0:
        raise DomainError("hop_coeff, hop_power and g_slope must be positive")
    d_lo, d_hi = d_range
    if not 0 < d_lo < d_hi:
        raise DomainError(f"need 0 < d_lo < d_hi, got {d_range}")

    d_unit = (1.0 / hop_coeff) ** (1.0 / hop_power)
    d_lo_used = d_lo
    if hop_coeff * d_lo**hop_power < 1.0:
        d_lo_used = d_unit * (1.0 + 1e-9)
    if d_lo_used >= d_hi:
        raise TailRangeError(
            "hop variable stays below 1 across the whole thickness range; "
            "the tail asymptotic never applies there"
        )

    def phi(d: float) -> float:
        x = hop_coeff * d**hop_power
        return F_exponent(coeff, x) - g_slope * d

    grid = [d_lo_used]
    while grid[-1] * 2.0 < d_hi:
        grid.append(grid[-1] * 2.0)
    grid.append(d_hi)

    values = [phi(d) for d in grid]
    roots: list[tuple[float, str]] = []
    for (da, fa), (db, fb) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if fa == 0.0:
            roots.append((da, "+-" if fb < 0.0 else "-+"))
            continue
        if fa * fb < 0.0:
            d_root = brent_root(phi, da, db, tol=tol)
            roots.append((d_root, "+-" if fa > 0.0 else "-+"))

    if not roots:
        dominance = (
            "fluctuation_everywhere" if values[0] < 0.0 else "tunneling_everywhere_in_range"
        )
        return CrossoverResult(
            d_star=None,
            common_value=None,
            x_star=None,
            dominance=dominance,
            roots=(),
            d_lo_used=d_lo_used,
        )

    d_star, direction = roots[-1]
    x_star = hop_coeff * d_star**hop_power
    common_value = F_exponent(coeff, x_star)
    dominance = (
        "fluctuation_above_d_star" if direction == "+-" else "tunneling_above_d_star"
    )
    return CrossoverResult(
        d_star=d_star,
        common_value=common_value,
        x_star=x_star,
        dominance=dominance,
        roots=tuple(roots),
        d_lo_used=d_lo_used,
    )


@dataclass(frozen=True)
class ChargedCrossover:
    """Crossover for a charge Z behind a barrier, in Compton-length units."""

    alpha: float
    v0: float
    Z: int
    result: CrossoverResult

    @property
    def d_star(self) -> float | None:
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
        return validity_ratio(self.Z, self.v0, self.result.d_star)

    @property
    def dominance(self) -> str:
        return self.result.dominance


def crossover(
    alpha: float,
    v0: float,
    Z: int = 1,
    d_range: tuple[float, float] = (0.01, 1e9),
    *,
    f0: float = DEFAULT_F0,
    v1: float | None = None,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> ChargedCrossover:
    """Tunneling/fluctuation crossover for a charged particle.

    Thicknesses are in units of the particle's Compton length; the
    barrier velocity v1 defaults to the incident v0, giving the
    square-barrier exponent G = 2 v0 d.
    """
    spec = SamplingSpec(alpha=alpha, f0=f0)
    coeff = tail_coefficients(spec, SZ)
    if v1 is None:
        v1 = v0
    hop_coeff = hop_variable(Z, v0, 1.0)
    result = power_law_crossover(
        coeff, hop_coeff, 3.0, 2.0 * v1, d_range, tol=tol
    )
    return ChargedCrossover(alpha=alpha, v0=v0, Z=Z, result=result)


def crossover_curve(
    coeff: TailCoefficients,
    hop_coeff: float,
    hop_power: float,
    g_slope: float,
    d_range: tuple[float, float],
    n_points: int = 200,
) -> list[tuple[float, float, float]]:
    """(d, F, G) samples on a geometric grid, for plotting the two exponents."""
    if n_points < 2:
        raise DomainError(f"need at least 2 points, got {n_points}")
    d_lo, d_hi = d_range
    if not 0 < d_lo < d_hi:
        raise DomainError(f"need 0 < d_lo < d_hi, got {d_range}")
    d_unit = (1.0 / hop_coeff) ** (1.0 / hop_power)
    if hop_coeff * d_lo**hop_power < 1.0:
        d_lo = d_unit * (1.0 + 1e-9)
    if d_lo >= d_hi:
        raise TailRangeError("hop variable stays below 1 across the range")
    ratio = (d_hi / d_lo) ** (1.0 / (n_points - 1))
    out: list[tuple[float, float, float]] = []
    for k in range(n_points):
        d = d_lo * ratio**k
        x = hop_coeff * d**hop_power
        out.append((d, F_exponent(coeff, x), g_slope * d))
    return out

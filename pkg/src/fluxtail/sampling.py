"""Compactly supported sampling functions.

The family is specified in the frequency domain, fhat(omega) =
exp(-|omega|^alpha) with 0 < alpha < 1; in the time domain only the
switch-on asymptotics t^{-mu} exp(-w t^{-nu}) near t -> 0+ are needed
(the interior shape never enters any downstream formula).  Frequencies and
times are measured in units of the sampling width tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .numerics import ToleranceSpec, DEFAULT_TOL, log_gamma, quad_semiinf

DEFAULT_F0 = math.pi / 2.0


@dataclass(frozen=True)
class SamplingSpec:
    """Sampling-function parameters: decay exponent, peak value, width."""

    alpha: float
    f0: float = DEFAULT_F0
    tau: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.f0 > 0:
            raise DomainError(f"f0 must be > 0, got {self.f0}")
        if not self.tau > 0:
            raise DomainError(f"tau must be > 0, got {self.tau}")


@dataclass(frozen=True)
class SwitchOnParams:
    mu: float
    nu: float
    w: float


def fhat(spec: SamplingSpec, omega: float) -> float:
    """Fourier transform exp(-|omega|^alpha); even, in (0, 1]."""
    return math.exp(-abs(omega) ** spec.alpha)


def switch_on_params(spec: SamplingSpec) -> SwitchOnParams:
    """Exponents of the switch-on asymptotic t^{-mu} exp(-w t^{-nu})."""
    alpha = spec.alpha
    nu = alpha / (1.0 - alpha)
    mu = (2.0 - alpha) / (2.0 * (1.0 - alpha))
    w = (1.0 - alpha) * alpha ** (alpha / (1.0 - alpha))
    return SwitchOnParams(mu=mu, nu=nu, w=w)


def switch_on_profile(spec: SamplingSpec, t: float) -> float:
    """Unnormalized switch-on shape t^{-mu} exp(-w t^{-nu}) for t > 0."""
    if t <= 0:
        raise DomainError(f"switch-on profile needs t > 0, got {t}")
    p = switch_on_params(spec)
    ln_val = -p.mu * math.log(t) - p.w * t ** (-p.nu)
    if ln_val < -745.0:  # exp underflow; the essential singularity wins
        return 0.0
    return math.exp(ln_val)


def switch_on_peak(spec: SamplingSpec) -> float:
    """Location t* = (nu w / mu)^{1/nu} of the single interior maximum."""
    p = switch_on_params(spec)
    return (p.nu * p.w / p.mu) ** (1.0 / p.nu)


def fhat2_moment_closed_ln(alpha: float, m: float) -> float:
    """ln of int_0^inf exp(-2 u^alpha) u^m du in closed form.

    Substituting v = 2 u^alpha reduces the integral to a complete gamma:
    Gamma((m+1)/alpha) / (alpha 2^{(m+1)/alpha}).
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if m <= -1:
        raise DomainError(f"moment power must exceed -1, got {m}")
    r = (m + 1.0) / alpha
    return log_gamma(r) - math.log(alpha) - r * math.log(2.0)


def fhat2_moment_quad_ln(
    alpha: float, m: float, tol: ToleranceSpec = DEFAULT_TOL
) -> float:
    """ln of int_0^inf exp(-2 u^alpha) u^m du by scaled quadrature.

    The integrand peaks at u* = (m / (2 alpha))^{1/alpha} and its peak value
    overflows doubles already for moderate (m, alpha), so the quadrature
    runs on exp(g(u) - g(u*)) with g(u) = m ln u - 2 u^alpha and the peak
    log-value is added back at the end.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if m <= 0:
        raise DomainError(f"scaled moment quadrature needs m > 0, got {m}")
    u_star = (m / (2.0 * alpha)) ** (1.0 / alpha)
    g_max = m * math.log(u_star) - 2.0 * u_star**alpha

    def scaled(u: float) -> float:
        if u <= 0.0:
            return 0.0
        g = m * math.log(u) - 2.0 * u**alpha - g_max
        return math.exp(g) if g > -745.0 else 0.0

    return g_max + math.log(quad_semiinf(scaled, u_star, tol))

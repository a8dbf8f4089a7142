"""Asymptotic tail of the probability distribution of time-averaged fluxes.

For a quadratic field operator averaged with a sampling function of
parameter alpha, the dimensionless variable x has the asymptotic density

    P(x) ~ c0 x^b exp(-a x^c),        x >> 1,

with coefficients fixed by (alpha, f0) and the operator kind (p, B0, B).
The exponent of the cumulative exceedance, P_>(x) = e^{-F(x)}, routinely
reaches several hundred, so every evaluation here is done in the log
domain; linear values only materialize at the API boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, TailRangeError, WorldlineError
from .numerics import ln_inc_gamma_upper_ext, log_gamma
from .sampling import SamplingSpec, fhat2_moment_closed_ln

_TWO_PI_SQ = 2.0 * math.pi**2
_SIX_PI_SQ = 6.0 * math.pi**2


@dataclass(frozen=True)
class OperatorKind:
    """Averaged-operator family: frequency power p and mode-sum constants.

    ``symmetric`` marks flux-like operators whose distribution obeys
    P(-x) = P(x); their one-sided tail carries half the weight.
    """

    name: str
    p: int
    B0: float
    B: float
    symmetric: bool

    def __post_init__(self) -> None:
        if self.p < 1:
            raise DomainError(f"p must be >= 1, got {self.p}")
        if self.B0 <= 0 or self.B <= 0:
            raise DomainError("B0 and B must be positive")


#: squared time derivative of a massless scalar, phidot^2
PHIDOT2 = OperatorKind("phidot2", p=3, B0=1.0, B=1.0 / _TWO_PI_SQ, symmetric=False)
#: z component of the electromagnetic momentum flux (Poynting operator)
SZ = OperatorKind("Sz", p=3, B0=4.0, B=1.0 / _SIX_PI_SQ, symmetric=True)
#: twice-differentiated flux operator driving forces on polarizable particles
RZ = OperatorKind("Rz", p=7, B0=4.0, B=1.0 / _SIX_PI_SQ, symmetric=True)

KINDS: dict[str, OperatorKind] = {
    "phidot2": PHIDOT2,
    "Sz": SZ,
    "Rz": RZ,
}


@dataclass(frozen=True)
class TailCoefficients:
    c: float
    b: float
    a: float
    c0: float

    @property
    def tail_power(self) -> float:
        """Exponent 1 + b - c of the algebraic exceedance prefactor."""
        return 1.0 + self.b - self.c

    @property
    def ln_c0_over_ac(self) -> float:
        return math.log(self.c0 / (self.a * self.c))


def tail_coefficients(spec: SamplingSpec, kind: OperatorKind) -> TailCoefficients:
    """Tail coefficients (c, b, a, c0) for the given sampling and operator.

        c  = alpha / p
        b  = c (2/alpha - p - 1) - 1
        a  = 2 [2 pi f0 B]^{-alpha/p}
        c0 = c a^{(b+1)/c} B0 p! alpha^{-(p+2)} 2^{-2/alpha} [2 pi f0]^{-2}

    halved for symmetric kinds (one-sided tail of a symmetric density).
    """
    alpha = spec.alpha
    p = kind.p
    c = alpha / p
    b = c * (2.0 / alpha - p - 1.0) - 1.0
    two_pi_f0 = 2.0 * math.pi * spec.f0
    a = 2.0 * (two_pi_f0 * kind.B) ** (-alpha / p)
    c0 = (
        c
        * a ** ((b + 1.0) / c)
        * kind.B0
        * math.factorial(p)
        * alpha ** (-(p + 2.0))
        * 2.0 ** (-2.0 / alpha)
        * two_pi_f0 ** (-2.0)
    )
    if kind.symmetric:
        c0 *= 0.5
    return TailCoefficients(c=c, b=b, a=a, c0=c0)


def _require_tail_range(x: float) -> None:
    if x < 1.0:
        raise TailRangeError(
            f"the tail form holds only for x >= 1, got x={x}; "
            "the interior of the distribution is out of scope"
        )


def tail_density_ln(coeff: TailCoefficients, x: float) -> float:
    """ln of the asymptotic density c0 x^b exp(-a x^c), x >= 1.

    Symmetric kinds are evaluated at |x| by the caller; the tail itself is
    a function of the magnitude.
    """
    _require_tail_range(x)
    return math.log(coeff.c0) + coeff.b * math.log(x) - coeff.a * x**coeff.c


def tail_density(coeff: TailCoefficients, x: float) -> float:
    """Asymptotic density; underflows to 0.0 where ln P < -745."""
    ln_p = tail_density_ln(coeff, x)
    return math.exp(ln_p) if ln_p > -745.0 else 0.0


def F_exponent(coeff: TailCoefficients, x: float) -> float:
    """Exceedance exponent F(x) with P_>(x) = e^{-F(x)}.

    F(x) = a x^c - (1 + b - c) ln x - ln(c0 / (a c)).
    """
    _require_tail_range(x)
    return (
        coeff.a * x**coeff.c
        - coeff.tail_power * math.log(x)
        - coeff.ln_c0_over_ac
    )


@dataclass(frozen=True)
class Exceedance:
    """Cumulative exceedance probability P_>(x) in both evaluations.

    ``ln_gamma_form`` integrates the tail density exactly,

        P_> = (c0/c) a^{-(b+1)/c} Gamma((b+1)/c, a x^c),

    while ``ln_algebraic`` is the leading algebraic asymptotic e^{-F(x)}.
    The two agree to first order in 1/(a x^c); their spread is the honest
    error bar on how far the asymptotic tail has converged.
    """

    F: float
    ln_gamma_form: float
    ln_algebraic: float

    @property
    def gamma_form(self) -> float:
        return math.exp(self.ln_gamma_form) if self.ln_gamma_form > -745.0 else 0.0

    @property
    def algebraic(self) -> float:
        return math.exp(self.ln_algebraic) if self.ln_algebraic > -745.0 else 0.0


def cumulative_exceedance(coeff: TailCoefficients, x: float) -> Exceedance:
    """P_>(x) for x >= 1: incomplete-gamma form, algebraic form, and F."""
    _require_tail_range(x)
    f_val = F_exponent(coeff, x)
    s_shape = (coeff.b + 1.0) / coeff.c
    z = coeff.a * x**coeff.c
    ln_gamma_form = (
        math.log(coeff.c0 / coeff.c)
        - s_shape * math.log(coeff.a)
        + ln_inc_gamma_upper_ext(s_shape, z)
    )
    return Exceedance(F=f_val, ln_gamma_form=ln_gamma_form, ln_algebraic=-f_val)


def moment_asymptotic(spec: SamplingSpec, kind: OperatorKind, n: int) -> float:
    """ln of the dominant large-n moment M_n of the averaged operator.

    ln M_n = ln(B0 B^n) + (n-2) ln(2 pi f0) + ln p! + ln Gamma((n-1)p + 1)
             - ln Gamma(np + 2) + ln int_0^inf e^{-2u^alpha} u^{np+1} du,

    the last term in its closed form Gamma((np+2)/alpha)/(alpha 2^{(np+2)/alpha}).
    Returned as a log: for p = 7 and moderate n the moment itself exceeds
    the double range by hundreds of e-folds.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"moment order must be an integer >= 2, got {n!r}")
    p = kind.p
    return (
        math.log(kind.B0)
        + n * math.log(kind.B)
        + (n - 2.0) * math.log(2.0 * math.pi * spec.f0)
        + log_gamma(p + 1.0)
        + log_gamma((n - 1.0) * p + 1.0)
        - log_gamma(n * p + 2.0)
        + fhat2_moment_closed_ln(spec.alpha, n * p + 1.0)
    )


def omega_n(spec: SamplingSpec, kind: OperatorKind, n: int) -> float:
    """Dominant frequency of the n-th moment, (n / (2c))^{1/alpha}."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    c = spec.alpha / kind.p
    return (n / (2.0 * c)) ** (1.0 / spec.alpha)


def x_n(coeff: TailCoefficients, n: int) -> float:
    """Value of x dominating the n-th moment, (n / (a c))^{1/c}."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return (n / (coeff.a * coeff.c)) ** (1.0 / coeff.c)


@dataclass(frozen=True)
class ValidityBounds:
    """Worldline-approximation range for a spatial/temporal ratio s."""

    n_max: float
    x_max: float


def validity_bounds(
    spec: SamplingSpec, kind: OperatorKind, s: float
) -> ValidityBounds:
    """Largest moment order and tail argument the worldline picture covers.

    ``s`` is the ratio of the particle's spatial extent to the sampling
    time.  n_max = 2 c s^{-alpha}; x_max = (2/a) s^{-p}.
    """
    if not s > 0:
        raise DomainError(f"s must be > 0, got {s}")
    if s >= 1.0:
        raise WorldlineError(
            f"worldline approximation needs s < 1, got s={s}"
        )
    coeff = tail_coefficients(spec, kind)
    c = spec.alpha / kind.p
    return ValidityBounds(
        n_max=2.0 * c * s ** (-spec.alpha),
        x_max=(2.0 / coeff.a) * s ** (-float(kind.p)),
    )

"""Overflow-safe special functions, root finding, and semi-infinite quadrature.

Everything downstream (tail exponents, partial-wave sums, crossover solvers)
funnels through this module, so the contracts here are deliberately strict:
log-domain variants exist for every quantity that can leave the double range,
and all solvers are deterministic.
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import IntegrationWarning, quad
from scipy.optimize import brentq

from ._kernels import impl
from .errors import BracketError, ConvergenceError, DomainError, QuadratureError

_BRENTQ_MIN_RTOL = 4.0 * sys.float_info.epsilon


@dataclass(frozen=True)
class ToleranceSpec:
    """Shared tolerance bundle for iterative routines."""

    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.abs_tol < 0:
            raise DomainError(f"abs_tol must be >= 0, got {self.abs_tol}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be >= 1, got {self.max_iter}")


DEFAULT_TOL = ToleranceSpec()


def log_gamma(z: float) -> float:
    """ln Gamma(z) for z > 0."""
    if z <= 0:
        raise DomainError(f"log_gamma requires z > 0, got {z}")
    return math.lgamma(z)


def inc_gamma_upper(s: float, x: float) -> float:
    """Upper incomplete gamma Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt.

    Series branch for x < s + 1, continued-fraction branch otherwise.
    ``s > 0`` is required here; the analytic continuation to s <= 0 is
    provided separately by :func:`ln_inc_gamma_upper_ext`.
    """
    if s <= 0:
        raise DomainError(f"inc_gamma_upper requires s > 0, got s={s}")
    return math.exp(ln_inc_gamma_upper(s, x))


def ln_inc_gamma_upper(s: float, x: float) -> float:
    """ln Gamma(s, x) for s > 0; safe where Gamma(s, x) itself underflows."""
    if s <= 0:
        raise DomainError(f"ln_inc_gamma_upper requires s > 0, got s={s}")
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    return impl.ln_gamma_upper(s, x)


def ln_inc_gamma_upper_ext(s: float, x: float) -> float:
    """ln Gamma(s, x) extended to any real s, for x > 0.

    Gamma(s, x) stays positive for positive arguments of the integrand, so
    the logarithm is well defined even at s <= 0 (where the complete gamma
    normalization no longer exists).  Used by the exceedance integral whose
    shape parameter (b+1)/c is zero or negative for some operator kinds.
    """
    if x <= 0 and s <= 0:
        raise DomainError(f"s <= 0 requires x > 0, got s={s}, x={x}")
    return impl.ln_gamma_upper(s, x)


def inc_gamma_lower(s: float, x: float) -> float:
    """Lower incomplete gamma gamma(s, x), s > 0, by direct series."""
    if s <= 0:
        raise DomainError(f"inc_gamma_lower requires s > 0, got s={s}")
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x == 0:
        return 0.0
    return math.exp(impl.ln_lower_gamma_series(s, x))


def brent_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> float:
    """Brent's method on a bracketing interval; deterministic.

    The bracket may be given in either order.  Raises
    :class:`~fluxtail.errors.BracketError` when f(lo) and f(hi) share a sign
    and :class:`~fluxtail.errors.ConvergenceError` when the iteration budget
    is exhausted.
    """
    if lo > hi:
        lo, hi = hi, lo
    flo = f(lo)
    fhi = f(hi)
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise DomainError(
            f"bracket endpoints must evaluate finite: f({lo})={flo}, f({hi})={fhi}"
        )
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(
            f"no sign change on [{lo}, {hi}]: f(lo)={flo:.6g}, f(hi)={fhi:.6g}"
        )
    root, info = brentq(
        f,
        lo,
        hi,
        xtol=max(tol.abs_tol, 5e-324),
        rtol=max(tol.rel_tol, _BRENTQ_MIN_RTOL),
        maxiter=tol.max_iter,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise ConvergenceError(
            f"brent did not converge in {tol.max_iter} iterations on [{lo}, {hi}]"
        )
    return float(root)


def quad_semiinf(
    f: Callable[[float], float],
    decay_scale: float,
    tol: ToleranceSpec = DEFAULT_TOL,
) -> float:
    """Integral of f over [0, inf) for integrands decaying past ``decay_scale``.

    The substitution u = decay_scale * t / (1 - t) maps the half line onto
    [0, 1); ``decay_scale`` should sit near the bulk of the integrand (its
    peak, or the decay knee) so the transformed integrand is well scaled.
    Accuracy contract: relative error <= 1e-9.
    """
    if decay_scale <= 0:
        raise DomainError(f"decay_scale must be > 0, got {decay_scale}")
    scale = decay_scale

    def mapped(t: float) -> float:
        om = 1.0 - t
        if om <= 0.0:
            return 0.0
        u = scale * t / om
        return f(u) * scale / (om * om)

    epsrel = min(max(tol.rel_tol, 1e-13), 1e-10)
    attempts = (
        {"limit": 200},
        {"limit": 500, "points": [0.05, 0.25, 0.5, 0.75, 0.9, 0.99]},
    )
    last_err = math.inf
    for kwargs in attempts:
        with warnings.catch_warnings():
            warnings.simplefilter("error", IntegrationWarning)
            try:
                value, err = quad(mapped, 0.0, 1.0, epsabs=0.0, epsrel=epsrel, **kwargs)
            except IntegrationWarning:
                continue
        if not math.isfinite(value):
            raise QuadratureError(f"integral evaluated non-finite: {value}")
        last_err = err
        if err <= 1e-9 * max(abs(value), sys.float_info.min):
            return value
    raise QuadratureError(
        f"semi-infinite quadrature missed the 1e-9 relative-error target "
        f"(estimated error {last_err:.3g})"
    )

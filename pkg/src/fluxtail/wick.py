"""Connected-contraction counting for moments of quadratic operators.

The n-th moment of a normal-ordered quadratic operator is a sum over
pairings of 2n field slots.  Its dominant part comes from the connected
pairings, counted here exactly — by explicit enumeration for small n
(delegated to the compiled kernel when available) and by the closed
factorial forms beyond.
"""

from __future__ import annotations

import math

from . import _kernels
from .errors import DomainError

_TWO_PI_SQ = 2.0 * math.pi**2

_ENUM_MAX = 7


def count_connected_scalar(n: int) -> int:
    """Connected pairings of n scalar vertices phidot^2: 2^{n-1} (n-1)!.

    Enumerated for n <= 7, closed form beyond (they agree on the overlap).
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if n <= _ENUM_MAX:
        return _kernels.count_connected_scalar(n)
    return 2 ** (n - 1) * math.factorial(n - 1)


def count_connected_flux(n: int) -> int:
    """Connected contraction chains of n flux vertices (E x B)_z: 2 (n-1)!.

    Each connected term is an oriented single loop through all n vertices
    with one of two overall phases; enumerated for n <= 7, closed form
    beyond.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if n <= _ENUM_MAX:
        return _kernels.count_connected_flux_chain(n)
    return 2 * math.factorial(n - 1)


def count_connected_flux_strict(n: int) -> int:
    """Connected flux pairings under strict per-component typing.

    Pairing E only with E and B only with B, component by component,
    kills every odd-n contraction (a closed alternating E/B walk must
    have even length), so this count is 2 (n-1)! for even n and 0 for
    odd n.  It is the cross-check on :func:`count_connected_flux`, which
    counts the chains that actually carry the moment.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if n > _ENUM_MAX:
        raise DomainError(
            f"strict typed enumeration is exponential; capped at n <= {_ENUM_MAX}"
        )
    return _kernels.count_connected_flux_strict(n)


def kn_ratio(n: int) -> float:
    """Moment-coefficient ratio k_n of flux to scalar, equal to 4 / (6 pi^2)^n.

    k_n = (2/3)^n [C_flux(n) / C_scalar(n)] (2 pi^2)^{-n}; the count ratio
    is 2(n-1)! / (2^{n-1}(n-1)!) = 4/2^n, collapsing the whole thing to
    4/(6 pi^2)^n.  Assembled from the two counts and checked against the
    closed form to 1e-12 before returning.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    flux = count_connected_flux(n)
    scalar = count_connected_scalar(n)
    value = (2.0 / 3.0) ** n * (flux / scalar) * _TWO_PI_SQ ** (-n)
    closed = 4.0 / (6.0 * math.pi**2) ** n
    if abs(value - closed) > 1e-12 * closed:
        raise AssertionError(
            f"k_{n} mismatch: counted {value!r}, closed form {closed!r}"
        )
    return value

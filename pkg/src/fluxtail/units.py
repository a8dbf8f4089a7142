"""Natural-unit (hbar = c = 1) constants and conversions.

Pinned constants are the single source of truth for every dimensionful
number in the package; electromagnetic quantities use Lorentz-Heaviside
conventions, so e^2 = 4 pi alpha_fs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnitError


@dataclass(frozen=True)
class PhysicalConstants:
    hbar_c: float = 197.3269788        # MeV fm
    amu: float = 931.4941024           # MeV
    alpha_fs: float = 1.0 / 137.035999

    @property
    def e_sq(self) -> float:
        """Squared elementary charge, Lorentz-Heaviside: 4 pi alpha_fs."""
        return 4.0 * math.pi * self.alpha_fs


CONSTANTS = PhysicalConstants()

# unit -> (dimension, factor to the MeV-power canonical unit of that dimension)
_UNITS: dict[str, tuple[str, float]] = {
    "MeV": ("energy", 1.0),
    "u": ("energy", CONSTANTS.amu),
    "fm^-1": ("energy", CONSTANTS.hbar_c),
    "MeV^-1": ("length", 1.0),
    "fm": ("length", 1.0 / CONSTANTS.hbar_c),
    "MeV^-2": ("area", 1.0),
    "fm^2": ("area", 1.0 / CONSTANTS.hbar_c**2),
    "mb": ("area", 0.1 / CONSTANTS.hbar_c**2),  # 1 mb = 0.1 fm^2
}


def convert(value: float, from_unit: str, to_unit: str) -> float:
    """Convert ``value`` between compatible units under hbar = c = 1."""
    try:
        dim_from, f_from = _UNITS[from_unit]
    except KeyError:
        raise UnitError(f"unknown unit {from_unit!r}") from None
    try:
        dim_to, f_to = _UNITS[to_unit]
    except KeyError:
        raise UnitError(f"unknown unit {to_unit!r}") from None
    if dim_from != dim_to:
        raise UnitError(
            f"incompatible dimensions: {from_unit!r} is {dim_from}, "
            f"{to_unit!r} is {dim_to}"
        )
    return value * (f_from / f_to)


def thompson_cross_section(Z: int, m: float) -> float:
    """Thompson cross section (Z^2 e^2)^2 / (6 pi m^2), in MeV^-2.

    ``Z`` is the charge number, ``m`` the particle mass in MeV.
    """
    if Z == 0:
        raise DomainError("charge number must be nonzero")
    if m <= 0:
        raise DomainError(f"mass must be > 0 MeV, got {m}")
    q2 = Z * Z * CONSTANTS.e_sq
    return q2 * q2 / (6.0 * math.pi * m * m)

"""Bundled catalog of fusion systems and polarizable particles.

The catalog is a small JSON file shipped with the package; entries are
validated field by field so a broken catalog fails with the offending
path spelled out rather than a TypeError three calls deep.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import CatalogError
from .fusion import FusionSystem
from .polar import PolarizableParticle
from .units import CONSTANTS


def _expect_mapping(obj: object, path: str) -> dict:
    if not isinstance(obj, dict):
        raise CatalogError(f"{path}: expected an object, got {type(obj).__name__}")
    return obj


def _number(entry: dict, path: str, key: str, *, required: bool = True) -> float | None:
    if key not in entry:
        if required:
            raise CatalogError(f"{path}.{key}: missing required field")
        return None
    value = entry[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CatalogError(
            f"{path}.{key}: expected a number, got {type(value).__name__}"
        )
    return float(value)


def _positive(entry: dict, path: str, key: str, *, required: bool = True) -> float | None:
    value = _number(entry, path, key, required=required)
    if value is not None and value <= 0:
        raise CatalogError(f"{path}.{key}: expected a positive number, got {value}")
    return value


def _integer(entry: dict, path: str, key: str) -> int:
    if key not in entry:
        raise CatalogError(f"{path}.{key}: missing required field")
    value = entry[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise CatalogError(
            f"{path}.{key}: expected an integer, got {type(value).__name__}"
        )
    return value


def _reduced_mass(entry: dict, path: str) -> float:
    """Reduced mass in MeV, from mu_u directly or from the two mass numbers."""
    mu_u = _positive(entry, path, "mu_u", required=False)
    if mu_u is not None:
        return mu_u * CONSTANTS.amu
    a1 = _positive(entry, path, "A_projectile", required=False)
    a2 = _positive(entry, path, "A_target", required=False)
    if a1 is None or a2 is None:
        raise CatalogError(
            f"{path}: need either mu_u or both A_projectile and A_target"
        )
    return a1 * a2 / (a1 + a2) * CONSTANTS.amu


def _parse_system(name: str, entry_obj: object, path: str) -> FusionSystem:
    entry = _expect_mapping(entry_obj, path)
    return FusionSystem(
        name=name,
        Z=_integer(entry, path, "Z_projectile"),
        mu=_reduced_mass(entry, path),
        E=_positive(entry, path, "E_MeV"),
        E0=_positive(entry, path, "E0_MeV"),
        R0_fm=_positive(entry, path, "R0_fm"),
        omega0=_positive(entry, path, "omega0_MeV"),
        v0=_positive(entry, path, "v0"),
        sigma_exp_mb=_positive(entry, path, "sigma_exp_mb", required=False),
        sigma_exp_err_mb=_positive(entry, path, "sigma_exp_err_mb", required=False),
    )


def _parse_particle(name: str, entry_obj: object, path: str) -> PolarizableParticle:
    entry = _expect_mapping(entry_obj, path)
    return PolarizableParticle(
        name=name,
        mass=_positive(entry, path, "mass_MeV"),
        alpha0_fm3=_positive(entry, path, "alpha0_fm3"),
        r0_fm=_positive(entry, path, "r0_fm", required=False),
    )


@dataclass(frozen=True)
class Catalog:
    systems: dict[str, FusionSystem]
    particles: dict[str, PolarizableParticle]

    def system(self, name: str) -> FusionSystem:
        try:
            return self.systems[name]
        except KeyError:
            raise CatalogError(
                f"unknown system {name!r}; available: {sorted(self.systems)}"
            ) from None

    def particle(self, name: str) -> PolarizableParticle:
        try:
            return self.particles[name]
        except KeyError:
            raise CatalogError(
                f"unknown particle {name!r}; available: {sorted(self.particles)}"
            ) from None


def load_catalog(path: str | Path | None = None) -> Catalog:
    """Load and validate a catalog; defaults to the bundled one."""
    if path is None:
        text = resources.files("fluxtail.data").joinpath("catalog.json").read_text(
            encoding="utf-8"
        )
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid JSON: {exc}") from exc

    root = _expect_mapping(raw, "catalog")
    systems_obj = _expect_mapping(root.get("systems", {}), "systems")
    particles_obj = _expect_mapping(root.get("particles", {}), "particles")
    systems = {
        name: _parse_system(name, entry, f"systems.{name}")
        for name, entry in systems_obj.items()
    }
    particles = {
        name: _parse_particle(name, entry, f"particles.{name}")
        for name, entry in particles_obj.items()
    }
    return Catalog(systems=systems, particles=particles)

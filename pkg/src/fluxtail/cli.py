"""Command-line interface.

Every subcommand writes a flat table, CSV by default or JSON with
--format json, to stdout or --out.  Floats are rendered as %.6e with LF
line endings so outputs are byte-identical across runs and platforms.
The exit code is 0 iff every requested row was computed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, backend_name
from .barrier import crossover, crossover_curve, hop_variable
from .catalog import load_catalog
from .errors import FluxtailError
from .fusion import (
    derive_parameters,
    fit_alpha,
    fluctuation_S,
    hill_wheeler_sigma,
)
from .polar import polar_crossover, polar_hop_times_s7, velocity_bound
from .sampling import DEFAULT_F0, SamplingSpec
from .tail import KINDS, SZ, tail_coefficients, moment_asymptotic, omega_n, x_n
from .wick import (
    count_connected_flux,
    count_connected_flux_strict,
    count_connected_scalar,
    kn_ratio,
)

_K_CONVENTION = "k = sqrt(2*mu*E)"


# ---------------------------------------------------------------------------
# parsing and rendering helpers


def _parse_alpha(text: str) -> float:
    """Accept decimals and simple fractions: '0.5' or '1/3'."""
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _parse_alpha_list(text: str) -> list[float]:
    return [_parse_alpha(part) for part in text.split(",") if part]


def _parse_float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part]


def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'LO,HI', got {text!r}")
    return float(parts[0]), float(parts[1])


def _fmt(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6e}"
    return str(value)


def _json_value(value: object) -> object:
    if isinstance(value, float):
        return float(f"{value:.6e}")
    return value


def _emit(args: argparse.Namespace, fieldnames: list[str], rows: list[dict],
          meta: dict | None = None) -> None:
    if args.format == "csv":
        lines = []
        if meta:
            lines.extend(f"# {key} = {_fmt(val)}" for key, val in meta.items())
        lines.append(",".join(fieldnames))
        for row in rows:
            lines.append(",".join(_fmt(row.get(name)) for name in fieldnames))
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "meta": {k: _json_value(v) for k, v in (meta or {}).items()},
            "rows": [
                {name: _json_value(row.get(name)) for name in fieldnames}
                for row in rows
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_errors(errors: list[str]) -> int:
    for message in errors:
        print(f"error: {message}", file=sys.stderr)
    return 1 if errors else 0


# ---------------------------------------------------------------------------
# subcommands


def _coefficient_rows(alphas: list[float], f0: float, kind_name: str) -> list[dict]:
    kind = KINDS[kind_name]
    rows = []
    for alpha in alphas:
        coeff = tail_coefficients(SamplingSpec(alpha=alpha, f0=f0), kind)
        rows.append({
            "alpha": alpha,
            "c": coeff.c,
            "b": coeff.b,
            "a": coeff.a,
            "c0": coeff.c0,
            "one_plus_b_minus_c": coeff.tail_power,
            "ln_c0_over_ac": coeff.ln_c0_over_ac,
        })
    return rows


_COEFF_FIELDS = ["alpha", "c", "b", "a", "c0", "one_plus_b_minus_c", "ln_c0_over_ac"]


def cmd_table1(args: argparse.Namespace) -> int:
    rows = _coefficient_rows(args.alpha, args.f0, "Sz")
    _emit(args, _COEFF_FIELDS, rows, {"kind": "Sz"})
    return 0


def cmd_table3(args: argparse.Namespace) -> int:
    rows = _coefficient_rows(args.alpha, args.f0, "Rz")
    _emit(args, _COEFF_FIELDS, rows, {"kind": "Rz"})
    return 0


def cmd_table2(args: argparse.Namespace) -> int:
    rows = []
    errors = []
    for alpha in args.alpha:
        for v0 in args.v0:
            row: dict = {"alpha": alpha, "v0": v0}
            try:
                res = crossover(alpha, v0, Z=args.z, d_range=args.d_range, f0=args.f0)
                row.update({
                    "G": res.G_star,
                    "d_over_lambda": res.d_star,
                    "x": res.x_star,
                    "s_inv3": None if res.s_star is None else res.s_star ** -3,
                    "dominance": res.result.dominance,
                })
            except FluxtailError as exc:
                errors.append(f"alpha={alpha} v0={v0}: {exc}")
                row["dominance"] = "error"
            rows.append(row)
    _emit(args, ["alpha", "v0", "G", "d_over_lambda", "x", "s_inv3", "dominance"],
          rows, {"Z": args.z})
    return _report_errors(errors)


def cmd_crossover(args: argparse.Namespace) -> int:
    if args.curve:
        coeff = tail_coefficients(SamplingSpec(alpha=args.alpha, f0=args.f0), SZ)
        hop_coeff = hop_variable(args.z, args.v0, 1.0)
        points = crossover_curve(coeff, hop_coeff, 3.0, 2.0 * args.v0,
                                 args.d_range, n_points=args.curve)
        rows = [{"d_over_lambda": d, "F": f_val, "G": g_val}
                for d, f_val, g_val in points]
        _emit(args, ["d_over_lambda", "F", "G"], rows,
              {"alpha": args.alpha, "v0": args.v0, "Z": args.z})
        return 0
    res = crossover(args.alpha, args.v0, Z=args.z, d_range=args.d_range, f0=args.f0)
    row = {
        "alpha": args.alpha,
        "v0": args.v0,
        "Z": args.z,
        "d_star": res.d_star,
        "G": res.G_star,
        "x": res.x_star,
        "s": res.s_star,
        "dominance": res.result.dominance,
        "d_lo_used": res.result.d_lo_used,
    }
    _emit(args, list(row), [row])
    return 0


def cmd_fusion(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog)
    system = catalog.system(args.system)
    der = derive_parameters(system)
    meta = {
        "system": system.name,
        "k_convention": _K_CONVENTION,
        "mu_MeV": system.mu,
        "k_MeV": der.k,
        "d0_fm": der.d0_fm,
        "xi": der.xi,
        "sigma_T_MeV-2": der.sigma_T,
        "x0": der.x0,
    }

    if args.scan or args.alpha is not None:
        alphas = args.scan or [args.alpha]
        rows = []
        for alpha in alphas:
            fs = fluctuation_S(system, alpha, f0=args.f0)
            rows.append({"alpha": alpha, "S": fs.S, "l_used": fs.l_used})
        _emit(args, ["alpha", "S", "l_used"], rows, meta)
        return 0

    rows = [{"quantity": key, "value": val} for key, val in meta.items()
            if key not in ("system", "k_convention")]
    errors: list[str] = []
    hw = hill_wheeler_sigma(system, args.energy)
    rows.append({"quantity": "sigma_hw_mb", "value": hw.sigma_mb})
    rows.append({"quantity": "l_used_hw", "value": hw.l_used})
    if args.hill_wheeler:
        _emit(args, ["quantity", "value"],
              rows, {"system": system.name, "k_convention": _K_CONVENTION})
        return 0
    if system.sigma_exp_mb is not None:
        try:
            fit = fit_alpha(system, f0=args.f0)
            rows.extend([
                {"quantity": "sigma_exp_mb", "value": system.sigma_exp_mb},
                {"quantity": "alpha_fit", "value": fit.alpha},
                {"quantity": "alpha_lo", "value": fit.alpha_lo},
                {"quantity": "alpha_hi", "value": fit.alpha_hi},
                {"quantity": "S_target", "value": fit.S_target},
                {"quantity": "S_value", "value": fit.S_value},
                {"quantity": "l_used_fit", "value": fit.l_used},
            ])
        except FluxtailError as exc:
            errors.append(f"fit failed for {system.name}: {exc}")
    _emit(args, ["quantity", "value"],
          rows, {"system": system.name, "k_convention": _K_CONVENTION})
    return _report_errors(errors)


def cmd_polar(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog)
    particle = catalog.particle(args.particle)
    res = polar_crossover(particle, args.alpha, args.v0,
                          d_range_fm=args.d_range, f0=args.f0)
    exact, rounded = polar_hop_times_s7(particle, args.v0)
    row = {
        "particle": particle.name,
        "alpha": args.alpha,
        "v0": args.v0,
        "d_star_fm": res.d_star_fm,
        "G": res.G_star,
        "x": res.x_star,
        "s": res.s_star,
        "x_s7_exact": exact,
        "x_s7_rounded": rounded,
        "v0_bound": velocity_bound(particle),
        "dominance": res.result.dominance,
    }
    _emit(args, list(row), [row])
    return 0


def cmd_wick(args: argparse.Namespace) -> int:
    rows = []
    for n in range(2, args.n_max + 1):
        rows.append({
            "n": n,
            "scalar": count_connected_scalar(n),
            "flux": count_connected_flux(n),
            "flux_strict": count_connected_flux_strict(n) if n <= 7 else None,
            "kn_ratio": kn_ratio(n),
        })
    _emit(args, ["n", "scalar", "flux", "flux_strict", "kn_ratio"], rows)
    return 0


def cmd_moments(args: argparse.Namespace) -> int:
    spec = SamplingSpec(alpha=args.alpha, f0=args.f0)
    kind = KINDS[args.kind]
    coeff = tail_coefficients(spec, kind)
    rows = []
    for n in args.n:
        rows.append({
            "n": n,
            "ln_Mn": moment_asymptotic(spec, kind, n),
            "omega_n": omega_n(spec, kind, n),
            "x_n": x_n(coeff, n),
        })
    _emit(args, ["n", "ln_Mn", "omega_n", "x_n"], rows,
          {"alpha": args.alpha, "kind": args.kind})
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="write to a file instead of stdout")
    sub.add_argument("--f0", type=float, default=DEFAULT_F0,
                     help="sampling bandwidth parameter (default pi/2)")


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fluxtail",
        description="Vacuum-flux tail statistics and barrier-penetration crossovers.",
    )
    parser.add_argument("--version", action="version",
                        version=f"fluxtail {__version__} ({backend_name()} kernels)")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("table1", help="flux (Sz) tail coefficients vs alpha")
    _add_common(p)
    p.add_argument("--alpha", type=_parse_alpha_list, default=[0.5, 1.0 / 3.0, 0.25])
    p.set_defaults(func=cmd_table1)

    p = subs.add_parser("table3", help="p=7 (Rz) tail coefficients vs alpha")
    _add_common(p)
    p.add_argument("--alpha", type=_parse_alpha_list, default=[0.5, 1.0 / 3.0, 0.25])
    p.set_defaults(func=cmd_table3)

    p = subs.add_parser("table2", help="charged-particle crossover grid")
    _add_common(p)
    p.add_argument("--alpha", type=_parse_alpha_list, default=[0.5, 1.0 / 3.0, 0.25])
    p.add_argument("--v0", type=_parse_float_list, default=[0.5, 0.1])
    p.add_argument("--z", type=int, default=1)
    p.add_argument("--d-range", type=_parse_range, default=(0.01, 1e9),
                   help="thickness range in Compton units, 'LO,HI'")
    p.set_defaults(func=cmd_table2)

    p = subs.add_parser("crossover", help="single charged-particle crossover")
    _add_common(p)
    p.add_argument("--alpha", type=_parse_alpha, required=True)
    p.add_argument("--v0", type=float, required=True)
    p.add_argument("--z", type=int, default=1)
    p.add_argument("--d-range", type=_parse_range, default=(0.01, 1e9))
    p.add_argument("--curve", type=int, default=0, metavar="N",
                   help="emit an N-point (d, F, G) curve instead of the summary")
    p.set_defaults(func=cmd_crossover)

    p = subs.add_parser("fusion", help="heavy-ion fusion: tunneling vs fluctuation")
    _add_common(p)
    p.add_argument("--system", default="ArSm")
    p.add_argument("--catalog", default=None, help="path to an alternate catalog")
    p.add_argument("--alpha", type=_parse_alpha, default=None,
                   help="evaluate the fluctuation sum at one alpha")
    p.add_argument("--scan", type=_parse_alpha_list, default=None,
                   help="evaluate the fluctuation sum on a comma list of alphas")
    p.add_argument("--hill-wheeler", action="store_true",
                   help="stop after the tunneling cross section")
    p.add_argument("--energy", type=float, default=None,
                   help="center-of-mass energy for the tunneling sum (default: catalog)")
    p.set_defaults(func=cmd_fusion)

    p = subs.add_parser("polar", help="polarizable-particle crossover")
    _add_common(p)
    p.add_argument("--particle", default="neutron")
    p.add_argument("--catalog", default=None)
    p.add_argument("--alpha", type=_parse_alpha, required=True)
    p.add_argument("--v0", type=float, default=0.2)
    p.add_argument("--d-range", type=_parse_range, default=(0.1, 1e4),
                   help="thickness range in fm, 'LO,HI'")
    p.set_defaults(func=cmd_polar)

    p = subs.add_parser("wick", help="connected contraction counts and k_n")
    _add_common(p)
    p.add_argument("--n-max", type=int, default=7)
    p.set_defaults(func=cmd_wick)

    p = subs.add_parser("moments", help="asymptotic moments and validity scales")
    _add_common(p)
    p.add_argument("--alpha", type=_parse_alpha, required=True)
    p.add_argument("--kind", choices=sorted(KINDS), default="Sz")
    p.add_argument("--n", type=_int_list, default=[2, 3, 4, 8])
    p.set_defaults(func=cmd_moments)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FluxtailError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

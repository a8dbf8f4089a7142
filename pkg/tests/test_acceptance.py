"""End-to-end reproduction gate for the published reference numbers.

One test per numbered check. Each prints a single ``[PASS]``/``[FAIL]``
line (visible with ``pytest -s``, or in the captured output of a failing
run) and then asserts, so ``pytest -v`` gives one verdict line per check.

Check 3 compares against a published table whose last two rows are not
internally consistent (their printed x and d disagree with the printed
G at the stated tolerance); the solver result is kept as-is rather than
tuned, so that check fails honestly. See the README for the numbers.
"""

import math
import warnings

import pytest

from fluxtail.barrier import crossover, validity_ratio
from fluxtail.catalog import load_catalog
from fluxtail.fusion import (
    fit_alpha_from,
    fluctuation_S_from,
    fluctuation_S_integral,
    hill_wheeler_sigma,
)
from fluxtail.numerics import (
    inc_gamma_lower,
    inc_gamma_upper,
    log_gamma,
)
from fluxtail.polar import polar_crossover
from fluxtail.sampling import (
    SamplingSpec,
    fhat2_moment_closed_ln,
    fhat2_moment_quad_ln,
)
from fluxtail.tail import (
    KINDS,
    F_exponent,
    cumulative_exceedance,
    tail_coefficients,
)
from fluxtail.barrier import hop_variable, wkb_exponent_integral
from fluxtail.wick import count_connected_flux, count_connected_scalar, kn_ratio

THIRD = 1.0 / 3.0
ALPHAS = (0.5, THIRD, 0.25)


def _gate(num: int, label: str, failures: list[str]) -> None:
    verdict = "PASS" if not failures else "FAIL"
    print(f"[{verdict}] check {num:02d}: {label}")
    for line in failures:
        print(f"         - {line}")
    assert not failures, f"check {num:02d} ({label}): {failures}"


def _rel(got: float, want: float) -> float:
    return abs(got - want) / abs(want)


# published coefficient tables: alpha -> (c, b, a, c0, 1+b-c, ln(c0/ac))
TABLE_SZ = {
    0.5: (1 / 6, -1.0, 2.70, 0.0411, -1 / 6, -2.39),
    THIRD: (1 / 9, -7 / 9, 2.44, 0.310, 1 / 9, 0.132),
    0.25: (1 / 12, -2 / 3, 2.32, 1.19, 1 / 4, 1.82),
}
TABLE_RZ = {
    0.5: (1 / 14, -9 / 7, 2.27, 8.86, -5 / 14, 4.00),
    THIRD: (1 / 21, -23 / 21, 2.18, 319.0, -1 / 7, 8.03),
    0.25: (1 / 28, -1.0, 2.13, 3784.0, -1 / 28, 10.8),
}

# published width table: (alpha, v0) -> (G, d/lambda_C, x, s^-3)
TABLE_WIDTHS = {
    (0.5, 0.5): (132.0, 132.0, 1.0e10, 1.9e12),
    (0.5, 0.1): (1770.0, 8880.0, 7.8e16, 7.3e19),
    (THIRD, 0.5): (12.5, 12.5, 8.8e6, 1.6e9),
    (THIRD, 0.1): (54.1, 271.0, 2.2e12, 2.1e15),
    (0.25, 0.5): (0.64, 0.64, 1.2e3, 2.2e5),
    (0.25, 0.1): (3.8, 19.0, 7.6e8, 7.0e11),
}

# published fits, all against S = 2.8
FIT_CASES = [
    (4.8e-4, 6.0e7, 0.27),
    (1e-4, 1.0e7, 0.30),
    (1e-2, 1.0e8, 0.25),
]


@pytest.fixture(scope="module")
def fits():
    return [(xi, x0, fit_alpha_from(xi, x0, 2.8)) for xi, x0, _ in FIT_CASES]


def _check_table(num, label, kind_name, table):
    failures = []
    for alpha, row in table.items():
        got = tail_coefficients(SamplingSpec(alpha=alpha), KINDS[kind_name])
        cells = (got.c, got.b, got.a, got.c0, got.tail_power, got.ln_c0_over_ac)
        names = ("c", "b", "a", "c0", "1+b-c", "ln(c0/ac)")
        tols = (1e-12, 1e-12, 5e-3, 5e-3, 1e-12, 5e-3)
        for name, cell, want, tol in zip(names, cells, row, tols):
            if _rel(cell, want) > tol:
                failures.append(
                    f"alpha={alpha:.4g} {name}: got {cell:.6g}, "
                    f"published {want:.6g} (> {tol:.0e} rel)"
                )
    _gate(num, label, failures)


def test_c01_flux_coefficient_table():
    _check_table(1, "momentum-flux tail coefficients (18 cells, 0.5%)",
                 "Sz", TABLE_SZ)


def test_c02_force_coefficient_table():
    _check_table(2, "force-operator tail coefficients (18 cells, 0.5%)",
                 "Rz", TABLE_RZ)


def test_c03_crossover_width_table():
    failures = []
    for (alpha, v0), (g_ref, d_ref, x_ref, s3_ref) in sorted(TABLE_WIDTHS.items()):
        res = crossover(alpha, v0)
        if res.d_star is None:
            failures.append(f"alpha={alpha:.4g} v0={v0}: no crossover found")
            continue
        got = {
            "G": res.G_star,
            "d": res.d_star,
            "x": res.x_star,
            "s^-3": 1.0 / res.s_star**3,
        }
        for name, want in zip(("G", "d", "x", "s^-3"),
                              (g_ref, d_ref, x_ref, s3_ref)):
            if _rel(got[name], want) > 0.10:
                failures.append(
                    f"alpha={alpha:.4g} v0={v0} {name}: got {got[name]:.5g}, "
                    f"published {want:.5g} ({100 * _rel(got[name], want):.1f}% off)"
                )
        # internal self-consistency of the root
        coeff = tail_coefficients(SamplingSpec(alpha=alpha), KINDS["Sz"])
        f_val = F_exponent(coeff, hop_variable(1, v0, res.d_star))
        g_val = 2.0 * v0 * res.d_star
        if abs(f_val - g_val) / g_val > 1e-6:
            failures.append(
                f"alpha={alpha:.4g} v0={v0}: |F-G|/G = "
                f"{abs(f_val - g_val) / g_val:.2e} > 1e-6"
            )
    _gate(3, "barrier crossover width table (six rows, 10%)", failures)


def test_c04_fusion_tunneling_baseline():
    failures = []
    sigma = hill_wheeler_sigma(load_catalog().system("ArSm")).sigma_mb
    if not 2e-6 <= sigma <= 2e-5:
        failures.append(f"sigma = {sigma:.4e} mb outside [2e-6, 2e-5]")
    _gate(4, "inverted-parabola fusion cross section in band", failures)


def test_c05_fusion_alpha_fits(fits):
    failures = []
    for (xi, x0, alpha_ref), (_, _, fit) in zip(FIT_CASES, fits):
        if abs(fit.alpha - alpha_ref) > 0.02:
            failures.append(
                f"xi={xi:.1e} x0={x0:.1e}: alpha = {fit.alpha:.4f}, "
                f"published {alpha_ref} +- 0.02"
            )
        if _rel(fit.S_value, 2.8) > 0.01:
            failures.append(
                f"xi={xi:.1e} x0={x0:.1e}: S(alpha) = {fit.S_value:.6f}, "
                f"want 2.8 +- 1%"
            )
    _gate(5, "fitted sampling exponents (three cases, +-0.02)", failures)


def test_c06_sum_integral_agreement(fits):
    failures = []
    for xi, x0, fit in fits:
        s_int = fluctuation_S_integral(fit.alpha, xi, x0).S_I
        gap = abs(fit.S_value - s_int) / fit.S_value
        if gap > 0.05:
            failures.append(
                f"xi={xi:.1e} x0={x0:.1e}: |S - S_I|/S = {gap:.3f} > 0.05"
            )
    _gate(6, "partial-wave sum vs integral form (5%)", failures)


def test_c07_contraction_counts():
    failures = []
    for n in range(2, 8):
        want_scalar = 2 ** (n - 1) * math.factorial(n - 1)
        want_flux = 2 * math.factorial(n - 1)
        if count_connected_scalar(n) != want_scalar:
            failures.append(f"scalar n={n}: {count_connected_scalar(n)} != "
                            f"{want_scalar}")
        if count_connected_flux(n) != want_flux:
            failures.append(f"flux n={n}: {count_connected_flux(n)} != "
                            f"{want_flux}")
        closed = 4.0 / (6.0 * math.pi**2) ** n
        if _rel(kn_ratio(n), closed) > 1e-12:
            failures.append(f"kn_ratio n={n}: {kn_ratio(n)!r} vs {closed!r}")
    _gate(7, "connected contraction counts and k_n ratio", failures)


def test_c08_moment_identity():
    failures = []
    for alpha in ALPHAS:
        for p in (3, 7):
            for n in (2, 3, 4, 8):
                m = n * p + 1
                ln_q = fhat2_moment_quad_ln(alpha, m)
                ln_c = fhat2_moment_closed_ln(alpha, m)
                gap = abs(math.expm1(ln_q - ln_c))
                if gap > 1e-8:
                    failures.append(
                        f"alpha={alpha:.4g} m={m}: quadrature vs closed "
                        f"form differ by {gap:.2e} rel"
                    )
    _gate(8, "sampling-moment integral vs closed form (1e-8)", failures)


def test_c09_neutron_crossovers():
    failures = []
    neutron = load_catalog().particle("neutron")

    res = polar_crossover(neutron, 0.5, 0.2)
    if res.d_star_fm is None or not 60.0 <= res.d_star_fm <= 100.0:
        failures.append(f"alpha=1/2: d* = {res.d_star_fm} fm outside [60, 100]")
    elif not 120.0 <= res.G_star <= 200.0:
        failures.append(f"alpha=1/2: F = G = {res.G_star:.1f} outside [120, 200]")

    res = polar_crossover(neutron, 0.25, 0.2)
    if res.dominance != "fluctuation_everywhere":
        failures.append(f"alpha=1/4: dominance = {res.dominance}")

    res = polar_crossover(neutron, THIRD, 0.2)
    if res.d_star_fm is None or not 6.0 <= res.d_star_fm <= 14.0:
        failures.append(f"alpha=1/3: d* = {res.d_star_fm} fm outside [6, 14]")
    else:
        quoted = 12.5
        gap = _rel(res.d_star_fm, quoted)
        if gap > 0.10:
            warnings.warn(
                f"alpha=1/3 neutron crossover: computed d* = "
                f"{res.d_star_fm:.3f} fm vs quoted {quoted} fm "
                f"({100 * gap:.0f}% apart); the quoted value is not "
                f"reproduced from the stated inputs",
                stacklevel=1,
            )
    _gate(9, "polarizable-neutron crossover widths", failures)


def test_c10_property_checks_standalone():
    failures = []

    # incomplete-gamma complementarity at 1e-12
    for s in (0.5, 3.0, 17.0):
        for x in (0.2, 4.0, 40.0):
            total = inc_gamma_lower(s, x) + inc_gamma_upper(s, x)
            if _rel(total, math.exp(log_gamma(s))) > 1e-12:
                failures.append(f"complementarity s={s} x={x}")

    # exceedance two-form agreement within the analytic bound
    for alpha in ALPHAS:
        for kind_name in ("Sz", "Rz"):
            coeff = tail_coefficients(SamplingSpec(alpha=alpha), KINDS[kind_name])
            x = (30.0 / (coeff.a * coeff.c)) ** (1.0 / coeff.c)
            exc = cumulative_exceedance(coeff, x)
            z = coeff.a * x**coeff.c
            bound = 2.0 * (2.0 / coeff.c - 1.0) / z
            if abs(math.expm1(exc.ln_gamma_form - exc.ln_algebraic)) >= bound:
                failures.append(f"two-form bound alpha={alpha:.4g} {kind_name}")

    # partial-wave sum decreases with alpha
    vals = [fluctuation_S_from(a, 4.8e-4, 6e7).S for a in (0.2, 0.35, 0.5, 0.7)]
    if not all(u > v for u, v in zip(vals, vals[1:])):
        failures.append(f"S(alpha) not decreasing: {vals}")

    # F-sublinearity signs: deep in the tail (past the logarithmic dip,
    # where F > 1) a decade in x grows F, but by a factor far below 10
    for alpha in ALPHAS:
        for kind_name in ("Sz", "Rz"):
            coeff = tail_coefficients(SamplingSpec(alpha=alpha), KINDS[kind_name])
            x = 10.0
            if coeff.tail_power > 0:
                x_min = (coeff.tail_power / (coeff.a * coeff.c)) ** (1.0 / coeff.c)
                x = max(x, 10.0 * x_min)
            scaled = 0
            while F_exponent(coeff, x) < 1.0 and scaled < 400:
                x *= 10.0
                scaled += 1
            for k in range(3):
                ratio = F_exponent(coeff, 10.0 * x * 10.0**k) / F_exponent(
                    coeff, x * 10.0**k
                )
                if not 1.0 < ratio < 2.0:
                    failures.append(
                        f"F sublinearity alpha={alpha:.4g} {kind_name}: "
                        f"decade ratio {ratio:.4f} outside (1, 2)"
                    )

    # WKB integral vs the inverted-parabola closed form at 1e-6
    e_b, omega, mass = 10.0, 0.7, 2.0

    def v(z):
        return e_b - 0.5 * mass * omega**2 * z * z

    for energy in (3.0, 8.0):
        got = wkb_exponent_integral(v, energy, mass, (-6.0, 6.0))
        want = 2.0 * math.pi * (e_b - energy) / omega
        if _rel(got, want) > 1e-6:
            failures.append(f"WKB parabola energy={energy}: {got} vs {want}")

    _gate(10, "standalone property checks", failures)

"""Sub-barrier fusion: derived scales, partial-wave sums, the alpha fit."""

import math
from dataclasses import replace

import pytest

from fluxtail.catalog import load_catalog
from fluxtail.errors import DomainError, FitBracketError
from fluxtail.fusion import (
    derive_parameters,
    fit_alpha,
    fit_alpha_from,
    fluctuation_S,
    fluctuation_S_from,
    fluctuation_S_integral,
    hill_wheeler_probability,
    hill_wheeler_sigma,
    s_target,
)

THIRD = 1.0 / 3.0


@pytest.fixture(scope="module")
def arsm():
    return load_catalog().system("ArSm")


@pytest.fixture(scope="module")
def derived(arsm):
    return derive_parameters(arsm)


def test_derived_parameters(arsm, derived):
    assert arsm.mu == pytest.approx(29577.338509195877, rel=1e-12)
    assert derived.k == pytest.approx(2593.431467571708, rel=1e-12)
    assert derived.d0_fm == pytest.approx(2.4296541081498804, rel=1e-12)
    assert derived.xi == pytest.approx(4.514723641562239e-4, rel=1e-12)
    assert derived.sigma_T == pytest.approx(5.3532940758475846e-8, rel=1e-12)
    assert derived.x0 == pytest.approx(51568196.97293578, rel=1e-11)


def test_xi_two_forms(arsm, derived):
    # xi = 1 / (2 mu R0^2 (E0 - E)) must equal (d0 omega0 / (2 R0))^2 /
    # ((E0-E) * 2 mu R0^2 * (d0 omega0 / (2 R0))^2) — cross-check via the
    # centrifugal shift at l=1 against direct construction
    r0 = arsm.R0
    de = arsm.E0 - arsm.E
    assert derived.xi == pytest.approx(1.0 / (2.0 * arsm.mu * r0 * r0 * de), rel=1e-13)


def test_energy_guard(arsm):
    with pytest.raises(DomainError):
        derive_parameters(replace(arsm, E=arsm.E0))


def test_hill_wheeler_probability(arsm):
    # at E = E0 the l=0 transmission is exactly 1/2
    assert hill_wheeler_probability(arsm, 0, energy=arsm.E0) == pytest.approx(
        0.5, rel=1e-14
    )
    # monotone in l at fixed energy
    ps = [hill_wheeler_probability(arsm, l) for l in (0, 10, 40)]
    assert ps[0] > ps[1] > ps[2] >= 0.0


def test_hill_wheeler_sigma(arsm):
    res = hill_wheeler_sigma(arsm)
    assert res.sigma_mb == pytest.approx(1.1954318093203202e-5, rel=1e-10)
    assert res.l_used < 200
    # monotone increasing in energy
    lo = hill_wheeler_sigma(arsm, energy=110.0).sigma_mb
    hi = hill_wheeler_sigma(arsm, energy=117.0).sigma_mb
    assert lo < res.sigma_mb < hi


def test_hill_wheeler_geometric_limit(arsm):
    # far above the barrier the sum approaches pi R0^2 (1 - E0/E)
    energy = arsm.E0 + 20.0 * arsm.omega0
    res = hill_wheeler_sigma(arsm, energy=energy)
    assert res.sigma_mb == pytest.approx(1901.6568446972792, rel=1e-10)
    r0 = arsm.R0
    geo_mb = math.pi * r0 * r0 * (1.0 - arsm.E0 / energy) / 2.56818950434e-6
    assert res.sigma_mb == pytest.approx(geo_mb, rel=2e-5)


S_LADDER = [
    (1_000, 2.83128316315),
    (2_000, 2.83150965726),
    (5_000, 2.83151271064),
    (9_000, 2.83151271213),
]


def test_fluctuation_sum_reference():
    res = fluctuation_S_from(0.27, 4.8e-4, 6e7)
    assert res.S == pytest.approx(5.305123766563001, rel=1e-11)
    assert res.l_used > 1_000


@pytest.mark.parametrize("l_max,s_ref", S_LADDER)
def test_fluctuation_sum_truncation_ladder(l_max, s_ref):
    res = fluctuation_S_from(0.274, 4.8e-4, 6.0e7, l_max=l_max)
    assert res.S == pytest.approx(s_ref, rel=1e-11)


def test_fluctuation_sum_converged():
    # truncation error is negligible once the summand has died off
    s5 = fluctuation_S_from(0.274, 4.8e-4, 6.0e7, l_max=5_000).S
    s9 = fluctuation_S_from(0.274, 4.8e-4, 6.0e7, l_max=9_000).S
    assert abs(s5 - s9) / s9 < 1e-9


def test_fluctuation_sum_domain():
    with pytest.raises(DomainError):
        fluctuation_S_from(0.27, -1e-4, 6e7)
    with pytest.raises(DomainError):
        fluctuation_S_from(0.27, 4.8e-4, 0.5)


def test_S_decreasing_in_alpha():
    vals = [
        fluctuation_S_from(alpha, 4.8e-4, 6e7).S
        for alpha in (0.1, 0.3, 0.5, 0.7, 0.9)
    ]
    assert all(a > b for a, b in zip(vals, vals[1:]))


# independently fitted (xi, x0) -> alpha triples, all at target S = 2.8
FIT_TRIPLES = [
    (4.8e-4, 6.0e7, 0.2740712431),
    (1e-4, 1.0e7, 0.2986526944),
    (1e-2, 1.0e8, 0.2519045252),
]


@pytest.mark.parametrize("xi,x0,alpha_ref", FIT_TRIPLES)
def test_fit_alpha_triples(xi, x0, alpha_ref):
    fit = fit_alpha_from(xi, x0, 2.8)
    assert fit.alpha == pytest.approx(alpha_ref, rel=1e-8)
    assert fit.S_value == pytest.approx(2.8, rel=1e-9)
    assert fit.S_target == 2.8


def test_fit_alpha_system(arsm):
    fit = fit_alpha(arsm)
    assert fit.S_target == pytest.approx(2.804122114, rel=1e-9)
    assert fit.alpha == pytest.approx(0.2755180494628875, rel=1e-9)
    assert fit.alpha_lo == pytest.approx(0.2743661849323034, rel=1e-8)
    assert fit.alpha_hi == pytest.approx(0.27692118950539724, rel=1e-8)
    assert fit.alpha_lo < fit.alpha < fit.alpha_hi


def test_s_target(arsm):
    # k^2 sigma / pi with sigma converted to natural units
    assert s_target(arsm, 0.51) == pytest.approx(2.804122114, rel=1e-9)


def test_fit_bracket_error():
    with pytest.raises(FitBracketError):
        fit_alpha_from(4.8e-4, 6e7, 1e30)


def test_integral_approximation_brackets_sum():
    # closed-form integral approximation of the partial-wave sum: the
    # asymptotic variant must sit within 20% of the incomplete-gamma one
    # in the regime a x0^c >> 1
    res = fluctuation_S_integral(0.5, 1e-3, 1e8)
    assert res.S_I == pytest.approx(1.79898719919e-26, rel=1e-9)
    assert res.S_IA == pytest.approx(1.73810853985e-26, rel=1e-9)
    assert res.ratio == pytest.approx(0.9661594816, rel=1e-8)
    assert 0.8 < res.ratio < 1.2


def test_integral_tracks_sum(arsm, derived):
    fit = fit_alpha(arsm)
    res = fluctuation_S_integral(fit.alpha, derived.xi, derived.x0)
    s_sum = fluctuation_S(arsm, fit.alpha).S
    assert abs(res.S_I - s_sum) / s_sum < 0.05

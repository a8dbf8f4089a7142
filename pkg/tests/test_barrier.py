"""WKB integrals, the hop variable, and the crossover solver."""

import math

import pytest

from fluxtail.errors import (
    AboveBarrierError,
    BarrierAbsentError,
    TailRangeError,
)
from fluxtail.barrier import (
    crossover,
    crossover_curve,
    hop_times_s_cubed,
    hop_variable,
    validity_ratio,
    wkb_exponent_integral,
    wkb_exponent_mean,
)

THIRD = 1.0 / 3.0

# independently solved crossover points (d*, G*=F*, x*, 1/s^3) for the
# six (alpha, v0) pairs at Z=1; G* = 2 v0 d* at the root
CROSSOVER_REF = {
    (0.5, 0.5): (132.02628, 132.02628, 1.0317200e10, 1.95388e12),
    (0.5, 0.1): (8849.5964, 1769.91928, 7.7676766e16, 7.35523e19),
    (THIRD, 0.5): (12.512359, 12.512359, 8.7820988e6, 1.66316e9),
    (THIRD, 0.1): (270.93314, 54.186627, 2.2289848e12, 2.11063e15),
    (0.25, 0.5): (0.56188536, 0.56188536, 795.28699, 1.50612e5),
    (0.25, 0.1): (39.139427, 7.8278855, 6.7199206e9, 6.36311e12),
}


def _parabola(e_b, omega, mass):
    def v(z):
        return e_b - 0.5 * mass * omega**2 * z * z

    return v


def _curve(alpha, v0, d_range, n_points):
    from fluxtail.sampling import SamplingSpec
    from fluxtail.tail import SZ, tail_coefficients

    coeff = tail_coefficients(SamplingSpec(alpha=alpha), SZ)
    return crossover_curve(coeff, hop_variable(1, v0, 1.0), 3.0, 2.0 * v0,
                           d_range, n_points=n_points)


def test_wkb_parabola_exact():
    # inverted parabola admits the closed form G = 2 pi (E_b - E) / omega
    e_b, omega, mass = 10.0, 0.7, 2.0
    v = _parabola(e_b, omega, mass)
    for energy in (2.0, 7.5, 9.9):
        got = wkb_exponent_integral(v, energy, mass, (-6.0, 6.0))
        want = 2.0 * math.pi * (e_b - energy) / omega
        assert got == pytest.approx(want, rel=1e-6)


def test_wkb_square_barrier_like():
    # smooth bump: integral must be positive and decrease with energy
    def v(z):
        return 5.0 * math.exp(-(z * z))

    vals = [wkb_exponent_integral(v, e, 1.0, (-5.0, 5.0)) for e in (1.0, 2.5, 4.0)]
    assert vals[0] > vals[1] > vals[2] > 0.0


def test_wkb_above_barrier():
    v = _parabola(10.0, 0.7, 2.0)
    with pytest.raises(AboveBarrierError):
        wkb_exponent_integral(v, 10.0, 2.0, (-6.0, 6.0))
    with pytest.raises(AboveBarrierError):
        wkb_exponent_integral(v, 15.0, 2.0, (-6.0, 6.0))


def test_wkb_no_turning_point():
    with pytest.raises(BarrierAbsentError):
        wkb_exponent_integral(lambda z: 5.0, 1.0, 1.0, (-2.0, 2.0))


def test_wkb_mean():
    assert wkb_exponent_mean(0.1, 8880.0) == pytest.approx(1776.0, rel=1e-15)
    assert wkb_exponent_mean(0.5, 132.0) == pytest.approx(132.0, rel=1e-15)


def test_hop_variable_coefficient():
    # at Z = v0 = d = 1 the hop variable is 3 pi / e^4
    assert hop_variable(1, 1.0, 1.0) == pytest.approx(1120.78094771, rel=1e-9)
    # scalings: d^3, v0^-2, Z^-4
    base = hop_variable(1, 1.0, 1.0)
    assert hop_variable(1, 1.0, 2.0) == pytest.approx(8 * base, rel=1e-13)
    assert hop_variable(1, 2.0, 1.0) == pytest.approx(base / 4, rel=1e-13)
    assert hop_variable(2, 1.0, 1.0) == pytest.approx(base / 16, rel=1e-13)


def test_validity_ratio_row():
    # first table row: alpha=1/2, v0=0.5, d* = 132.02628 -> s = 7.999e-5
    assert validity_ratio(1, 0.5, 132.0262763) == pytest.approx(
        7.998973576e-5, rel=1e-8
    )


def test_hop_times_s_cubed_invariant():
    exact = hop_times_s_cubed(1, 1.0)
    assert exact == pytest.approx(0.01056074695, rel=1e-9)
    # x s^3 is d-independent: Z^2 e^2 v0 / (2 sqrt(6 pi))
    for d in (1.0, 37.0, 4.2e5):
        assert hop_variable(1, 1.0, d) * validity_ratio(1, 1.0, d) ** 3 == (
            pytest.approx(exact, rel=1e-12)
        )
    # the x s^3 <= 1 frontier sits at Z^2 v0 = 94.69027184
    assert hop_times_s_cubed(1, 94.69027184) == pytest.approx(1.0, rel=1e-9)


@pytest.mark.parametrize("alpha,v0", sorted(CROSSOVER_REF))
def test_crossover_reference(alpha, v0):
    d_ref, g_ref, x_ref, s3_ref = CROSSOVER_REF[(alpha, v0)]
    res = crossover(alpha, v0)
    assert res.dominance == "fluctuation_above_d_star"
    assert res.d_star == pytest.approx(d_ref, rel=1e-6)
    assert res.G_star == pytest.approx(g_ref, rel=1e-6)
    assert res.x_star == pytest.approx(x_ref, rel=1e-5)
    assert 1.0 / res.s_star**3 == pytest.approx(s3_ref, rel=1e-4)
    # beyond d*, the fluctuation route must stay cheaper
    d2 = 2.0 * res.result.d_star
    curve = _curve(alpha, v0, (d2, d2 * 1.01), 2)
    d, f_val, g_val = curve[0]
    assert f_val < g_val


def test_crossover_common_value():
    res = crossover(0.5, 0.5)
    # F(x(d*)) and G(d*) agree at the root by construction
    assert res.result.common_value == pytest.approx(res.G_star, rel=1e-9)
    assert res.result.roots[-1][1] == "+-"
    # the solver nudges d_lo so the tail variable stays in range
    assert res.result.d_lo_used >= 0.01


def test_crossover_out_of_range():
    # tiny d-range where x < 1 everywhere: no tail to compare against
    with pytest.raises(TailRangeError):
        crossover(0.5, 0.5, d_range=(1e-9, 2e-9))


def test_crossover_curve_shape():
    curve = _curve(0.5, 0.5, (10.0, 1e4), 50)
    assert len(curve) == 50
    ds = [row[0] for row in curve]
    assert ds == sorted(ds)
    gs = [row[2] for row in curve]
    # G is linear in d
    ratio = gs[-1] / ds[-1]
    assert ratio == pytest.approx(gs[0] / ds[0], rel=1e-12)

import math

import pytest

from h3orbifold.modular import (character_value, check_gauss_identity, eta,
                                qdim_estimate)


def test_eta_at_i_against_gamma_oracle():
    ref = math.gamma(0.25) / (2 * math.pi ** 0.75)
    assert abs(eta(1j) - ref) < 1e-12


def test_eta_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        eta(-1j)
    with pytest.raises(ValueError):
        eta(0.5)


def test_eta_functional_equation():
    for t in (0.3, 0.5, 1.0, 2.0, 3.7, 0.11, 5.0, 0.77, 1.9, 2.71):
        tau = complex(0, t)
        lhs = eta(-1 / tau)
        rhs = (-1j * tau) ** 0.5 * eta(tau)
        assert abs(lhs - rhs) / abs(lhs) < 1e-9


def test_eta_small_t_asymptotics():
    for t in (0.05, 0.02):
        v = eta(complex(0, t)).real * math.sqrt(t) * math.exp(math.pi / (12 * t))
        assert abs(v - 1.0) < 1e-9


@pytest.mark.parametrize("tau", [0.5j, 1j, 2j])
@pytest.mark.parametrize("line", [1, 2, 3])
def test_gauss_identities(tau, line):
    rep = check_gauss_identity(line, tau, quadrature=True)
    assert rep.passed
    assert rep.rel_err <= 1e-9
    assert rep.quadrature_rel_err <= 1e-9


def test_gauss_identity_rejects_off_axis():
    with pytest.raises(ValueError):
        check_gauss_identity(1, 0.3 + 1j)
    with pytest.raises(ValueError):
        check_gauss_identity(4, 1j)


def test_character_value_matches_series():
    from h3orbifold.qseries import orbifold_character, module_character
    t = 0.5
    q = math.exp(-2 * math.pi * t)
    for kind in ("orb", "sgn", "st", "vac"):
        if kind == "orb":
            series = orbifold_character("S3", 24)
        else:
            series = module_character(kind, 24)
        series_val = sum(float(c) * q ** (float(series.offset) + k / series.D)
                         for k, c in series.coeffs.items())
        assert abs(series_val - character_value(kind, t)) < 1e-6, kind


def test_fock_zero_weights_equals_vacuum_character():
    for t in (0.3, 0.1):
        assert character_value("fock", t, (0, 0, 0)) == character_value("vac", t)


def test_qdim_finite_families():
    rep = qdim_estimate("fock", [0.1, 0.05, 0.02], weights=(0.5, 0.25, 0.125))
    assert rep.classification == "finite"
    assert abs(rep.limit_estimate - 6) <= 0.06
    for kind, target in (("sgn", 1.0), ("st", 2.0)):
        rep = qdim_estimate(kind, [0.1, 0.05, 0.02])
        assert rep.classification == "finite"
        assert abs(rep.limit_estimate - target) <= 0.01 * target
        assert abs(rep.ratios[-1] - target) <= 1e-6


def test_qdim_fock_ratios_bracket_and_increase():
    rep = qdim_estimate("fock", [0.2, 0.1, 0.05, 0.02, 0.01],
                        weights=(0.5, 0.25, 0.125))
    assert all(r < 6 for r in rep.ratios)
    assert rep.ratios == sorted(rep.ratios)


def test_qdim_divergent_families():
    th = qdim_estimate("theta", [0.1, 0.05, 0.02, 0.01], weights=(0, 0))
    assert th.classification == "divergent"
    assert abs(th.growth_exponent + 0.5) <= 0.05
    sg = qdim_estimate("sigma", [0.1, 0.05, 0.02, 0.01], weights=(0,))
    assert sg.classification == "divergent"
    assert abs(sg.growth_exponent + 1.0) <= 0.05


def test_qdim_input_validation():
    with pytest.raises(ValueError):
        qdim_estimate("fock", [0.1, -0.2], weights=(0, 0, 0))
    with pytest.raises(ValueError):
        qdim_estimate("fock", [0.1], weights=(0, 0, 0))
    with pytest.raises(ValueError):
        character_value("fock", 0.1, (0,))

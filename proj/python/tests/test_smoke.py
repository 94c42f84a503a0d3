import numpy as np
import pytest

import photon_wigner as pw

trapezoid = getattr(np, "trapezoid", None) or np.trapz


def test_exp_pulse_values():
    t = np.array([0.0, 0.5])
    np.testing.assert_allclose(pw.exp_pulse(2.0, t), [2.0, 2.0 * np.exp(-1.0)], atol=1e-15)


def test_cavity_pulse_closed_form():
    t = np.linspace(0.0, 4.0, 41)
    eta = pw.cavity_output_pulse(3.0, 0.0, 2.0, t)
    np.testing.assert_allclose(eta, 14 * np.exp(-2 * t) - 12 * np.exp(-1.5 * t), atol=1e-12)


def test_cavity_spectrum_matches_numeric_oracle():
    t = np.linspace(0.0, 2.0, 11)
    w = np.linspace(-10.0, 10.0, 21)
    closed = pw.cavity_spectrum(4.0, 10.0, 2.0, t, w)
    numeric = pw.cavity_spectrum_numeric(4.0, 10.0, 2.0, t, w)
    assert closed.shape == (11, 21, 2, 2)
    assert np.max(np.abs(closed - numeric)) < 1e-4 * np.max(np.abs(numeric))


def test_kappa_zero_is_identity():
    t = np.linspace(0.0, 4.0, 9)
    w = np.linspace(-25.0, 25.0, 9)
    assert np.array_equal(pw.cavity_spectrum(0.0, 0.0, 2.0, t, w), pw.input_spectrum(2.0, t, w))


def test_dpa_identities_and_start_values():
    t = np.linspace(0.0, 3.0, 7)
    w = np.linspace(-5.0, 5.0, 5)
    s = pw.dpa_spectrum(4.0, 1.0, 2.0, t, w)
    np.testing.assert_allclose(s[..., 1, 0], s[..., 0, 1], atol=1e-12)
    minus, plus = pw.dpa_output_pulses(4.0, 1.0, 2.0, np.array([0.0]))
    assert abs(minus[0] - 2.0) < 1e-12 and abs(plus[0]) < 1e-12


def test_unstable_dpa_raises():
    assert not pw.stability_check(1.0, 1.0)
    with pytest.raises(pw.StabilityError, match="0<ε<κ"):
        pw.dpa_output_pulses(1.0, 1.0, 2.0, np.array([0.0]))


def test_network_multipliers_are_all_pass():
    w = np.random.default_rng(3).uniform(-50, 50, 1000)
    for g in (
        pw.cavity_transfer(1.0, 1.0, w),
        pw.direct_coupling_transfer(1.0, 1.0, 1.0, 1.0 + 0.5j, w),
        pw.feedback_transfer(1.0, 1.0, 0.5, 0.0, w),
    ):
        np.testing.assert_allclose(np.abs(g), 1.0, atol=1e-12)
    assert pw.effective_decay_rate(4.0, 0.5) == pytest.approx(23.3137085, abs=1e-6)
    with pytest.raises(pw.DomainError):
        pw.feedback_transfer(1.0, 1.0, 1.0, 0.0, w)


def test_network_pulse_norm():
    t = np.linspace(0.0, 40.0, 16001)
    eta = pw.feedback_pulse(1.0, 1.0, 0.5, 0.0, 2.0, t)
    assert trapezoid(np.abs(eta) ** 2, t) == pytest.approx(1.0, abs=1e-4)
    with pytest.raises(pw.DomainError):
        pw.open_loop_pulse(1.0, 1.0, 2.0, np.array([0.0, 0.1, 0.3]))


def test_scenarios(tmp_path):
    names = [n for n, _ in pw.list_scenarios()]
    assert names[0] == "fig2" and "fig19" in names and len(names) == 16
    result = pw.run_scenario("fig4", tmp_path, ["t_count=21", "omega_count=21"])
    assert "spectrum.csv" in result["files"]
    assert result["metrics"]["spectrum_closed_vs_numeric_rel"] < 1e-4
    header = (tmp_path / "spectrum.csv").read_text().splitlines()[0]
    assert header == "t,omega,entry,re,im"


def test_verify_pulses_suite():
    checks = pw.verify("pulses")
    assert checks and all(c["passed"] for c in checks)

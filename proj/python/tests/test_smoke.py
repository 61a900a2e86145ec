import math

import numpy as np
import pytest

rsl = pytest.importorskip("rsl")


def test_bessel_matches_closed_form():
    x = np.array([0.5, 2.0, 10.0])
    np.testing.assert_allclose(rsl.bessel_j(0.5, x), np.sqrt(2 / (np.pi * x)) * np.sin(x), rtol=1e-12)


def test_symbol_lookup():
    s = rsl.symbol("schrodinger")
    assert s.phi(3.0) == pytest.approx(9.0)
    with pytest.raises(rsl.Error):
        rsl.symbol("heat")


def test_propagate_keeps_shape_and_l2():
    f = rsl.propagate("schrodinger", 2, 0, [0.0, 0.5], np.linspace(0.1, 5.0, 7))
    assert f.shape == (2, 7)
    assert f.dtype == np.complex128
    assert rsl.slice_l2_check("wave", 2, 0)["max_deviation"] < 1e-4


def test_wave_frequency_slope():
    r = rsl.fit_frequency_scaling("wave", 3, 4.0, [0, 1, 2])
    assert r["fit"]["slope"] == pytest.approx(0.5, abs=0.05)
    assert r["verdict"]["pass"]


def test_admissibility_endpoint():
    r = rsl.is_admissible("schrodinger", 2, "10/3", "10/3")
    assert r["verdict"] == "true"
    assert r["boundary"]


def test_thresholds_and_pairs():
    assert rsl.s0(2) == pytest.approx((5 - math.sqrt(17)) / 4, abs=1e-12)
    assert rsl.thresholds(3)["s0"] == pytest.approx((12 - math.sqrt(129)) / 6, abs=1e-12)
    assert rsl.choose_pairs_nlw(3, "1/5")["check"]["all"]
    assert rsl.choose_pairs_nls(2, "-1/10", "-1/10")["check"]["all"]


def test_small_fnls_run_conserves_mass():
    r = rsl.solve_fnls(2, 1.5, 1.5, 0.0, 1e-3, [1], T=4.0)
    assert r["summary"]["all_converged"]
    assert r["summary"]["max_mass_drift"] < 1e-4


def test_out_of_range_sigma():
    with pytest.raises(rsl.Error, match="OutOfRangeSigma"):
        rsl.solve_fnls(2, 2.5, 1.5, 0.0, 1e-3, [1])

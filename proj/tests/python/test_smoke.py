import math

import numpy as np
import pytest

import tfpme


def test_kernel_routes_agree():
    p = tfpme.FractionalParams(0.5, 2.0)
    assert tfpme.kernel_exact(p, 0.0, -1.0) == pytest.approx(1.1635925712182694, rel=1e-12)
    assert tfpme.kernel_exact(p, -1.0, -2.0) == pytest.approx(tfpme.kernel_quadrature(p, -1.0, -2.0), abs=1e-9)


def test_invalid_params_raise():
    with pytest.raises(ValueError):
        tfpme.FractionalParams(1.5, 1.0)


def test_profile_arrays():
    p = tfpme.FractionalParams(0.5, 1.0)
    u = tfpme.solve_profile(p, 1.0, 256)
    assert len(u) == 257
    values = u.values
    assert isinstance(values, np.ndarray)
    assert values[0] == 0.0
    assert np.all(np.diff(values) >= 0.0)
    assert u.z[-1] == 0.0 and u.z[0] == -1.0


def test_mass_match_and_reconstruct():
    r = tfpme.find_support(tfpme.FractionalParams(0.999, 1.0), 1024)
    assert abs(r.residual) < 1e-4
    assert r.z0_star == pytest.approx(1.654, abs=0.02)
    err = np.max(np.abs(r.profile.values - tfpme.classical_profile(1.0, r.profile.z)))
    assert err <= 5e-3
    sol = tfpme.SpaceTimeSolution(r.profile)
    for t in (0.5, 2.0, 10.0):
        assert sol.total_mass(t) == pytest.approx(1.0, abs=1e-3)
    x = np.linspace(-1.0, 1.0, 7)
    np.testing.assert_array_equal(sol.evaluate_u(x, 2.0), sol.evaluate_u(-x, 2.0))


def test_order_and_specfun():
    rep = tfpme.estimate_order(tfpme.FractionalParams(0.5, 1.0), 128, z0=1.0)
    assert rep.p_estimate == pytest.approx(math.log2(rep.diff_coarse / rep.diff_fine))
    assert tfpme.specfun.beta(1.125, 0.5) == pytest.approx(1.861748113949231, rel=1e-12)
    assert tfpme.classical_support(1.0) == pytest.approx(1.6509636244473134, rel=1e-13)

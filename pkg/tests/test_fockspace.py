import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cutoffqed.fockspace import (
    InvalidTruncation,
    build_algebra,
    commutator,
    commutator_defect,
    eta_adjoint_defect,
    full_check,
    gupta_operator_checks,
    longitudinal_scale,
    metric_inner,
    number_operator_spectrum,
    redefined_norms,
)


def ket(n, dim):
    v = np.zeros(dim)
    v[n] = 1.0
    return v


def test_ladder_actions_negative_sector():
    alg = build_algebra(12, -1, 1.0)
    assert np.array_equal(alg.a @ ket(1, 13), -ket(0, 13))
    assert np.array_equal(alg.adag @ ket(0, 13), ket(1, 13))
    assert np.allclose(alg.a @ ket(4, 13), -2.0 * ket(3, 13), rtol=0, atol=1e-15)


def test_standard_oscillator():
    alg = build_algebra(12, +1, 1.0)
    c = commutator(alg.a, alg.adag)
    for n in range(12):
        assert np.allclose(c @ ket(n, 13), ket(n, 13), atol=1e-13)
    assert commutator_defect(alg) < 1e-13
    assert eta_adjoint_defect(alg) == 0.0


@pytest.mark.parametrize("sign,scale", [(-1, 1.0), (-1, 0.64), (1, 1.0)])
def test_commutator_defect(sign, scale):
    assert commutator_defect(build_algebra(12, sign, scale)) < 1e-13


def test_longitudinal_scale():
    assert longitudinal_scale(0.8, 1.0) == pytest.approx(0.64, rel=1e-15)
    assert longitudinal_scale(2.0, 2.0) == 1.0


def test_invalid_truncation():
    with pytest.raises(InvalidTruncation):
        build_algebra(1)
    with pytest.raises(ValueError):
        build_algebra(5, sign=0)
    with pytest.raises(ValueError):
        build_algebra(5, scale=0.0)


@pytest.mark.parametrize("scale", [1.0, 0.64, 2.5])
def test_eta_adjoint(scale):
    assert eta_adjoint_defect(build_algebra(12, -1, scale)) == 0.0


def test_gupta_properties_exact():
    alg = build_algebra(12)
    assert all(gupta_operator_checks(alg).values())
    O = alg.gupta
    assert np.max(np.abs(O @ alg.a + alg.a @ O)) == 0.0
    assert np.array_equal(O @ O, np.eye(13))


def test_gupta_commutes_with_number():
    alg = build_algebra(12, -1, 0.64)
    assert np.array_equal(commutator(alg.gupta, alg.number), np.zeros((13, 13)))


def test_metric_norms_alternate():
    alg = build_algebra(6)
    norms = [metric_inner(alg, ket(n, 7), ket(n, 7)) for n in range(7)]
    assert norms == [(-1) ** n for n in range(7)]


def test_redefined_norms_unit():
    norms = redefined_norms(build_algebra(12))
    assert norms[0] == 1.0 and norms[1] == 1.0
    assert np.max(np.abs(norms - 1.0)) < 1e-13


@settings(max_examples=50, deadline=None)
@given(st.floats(1e-3, 1e3))
def test_redefined_norms_positive(c):
    alg = build_algebra(12, -1, c)
    assert np.all(redefined_norms(alg) > 0)
    built = redefined_norms(alg, from_vacuum=True)
    assert np.all(built > 0)
    assert np.allclose(built, c ** np.arange(13), rtol=1e-12)


@pytest.mark.parametrize("scale,n_max,want", [(1.0, 3, [0, 1, 2, 3]), (0.25, 2, [0, 0.25, 0.5])])
def test_number_spectrum(scale, n_max, want):
    alg = build_algebra(n_max, -1, scale)
    assert np.allclose(number_operator_spectrum(alg), want, rtol=0, atol=1e-15)


def test_number_annihilates_vacuum():
    alg = build_algebra(12)
    assert np.array_equal(alg.number @ ket(0, 13), np.zeros(13))


def test_number_spectrum_integers():
    spec = number_operator_spectrum(build_algebra(12))
    assert np.allclose(spec, np.arange(13), atol=1e-13)
    assert np.all(spec >= 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 30), st.sampled_from([-1, 1]), st.floats(0.1, 10.0))
def test_truncation_locality(n_max, sign, c):
    small = build_algebra(n_max, sign, c)
    big = build_algebra(n_max + 1, sign, c)
    d = n_max
    for name in ("a", "adag", "gupta", "eta"):
        assert np.array_equal(getattr(small, name)[:d, :d], getattr(big, name)[:d, :d])


def test_full_check_fast():
    t0 = time.perf_counter()
    res = full_check(12, 1.0)
    assert time.perf_counter() - t0 < 1.0
    assert res["commutator_defect"] < 1e-13
    assert res["number_spectrum_defect"] < 1e-13
    assert res["min_redefined_norm"] == 1.0

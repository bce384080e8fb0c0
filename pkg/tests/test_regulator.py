import math

import numpy as np
import pytest

from cutoffqed.regulator import InvalidSpectrum, RegulatorSpectrum, log_moment, weight_nodes


def test_delta_nodes():
    for n in (1, 7, 64):
        assert weight_nodes(RegulatorSpectrum.delta(5.0), n) == [(5.0, 1.0)]


def test_degenerate_uniform():
    assert weight_nodes(RegulatorSpectrum.uniform(1.0, 1.0), 1) == [(1.0, 1.0)]


def test_uniform_total_weight():
    nodes = weight_nodes(RegulatorSpectrum.uniform(1.0, 3.0), 64)
    assert math.fsum(w for _, w in nodes) == pytest.approx(1.0, abs=1e-12)
    assert all(1.0 < lam < 3.0 for lam, _ in nodes)


def test_uniform_nodes_integrate_moments():
    # int_1^3 lam^2 dlam / 2 = 13/3
    nodes = weight_nodes(RegulatorSpectrum.uniform(1.0, 3.0), 8)
    assert sum(w * lam ** 2 for lam, w in nodes) == pytest.approx(13.0 / 3.0, rel=1e-14)


def test_log_moment_delta():
    assert log_moment(RegulatorSpectrum.delta(math.e)) == 1.0
    assert log_moment(RegulatorSpectrum.delta(1.0)) == 0.0
    assert log_moment(RegulatorSpectrum.delta(1000.0)) == math.log(1000.0)


def test_log_moment_uniform_against_riemann_sum():
    n = 2_000_000
    x = 1.0 + (np.arange(n) + 0.5) * (2.0 / n)
    riemann = np.log(x).sum() * (2.0 / n) / 2.0
    exact = (3 * math.log(3) - 2) / 2
    assert exact == pytest.approx(0.6479184, abs=1e-7)
    assert log_moment(RegulatorSpectrum.uniform(1.0, 3.0)) == pytest.approx(exact, rel=1e-14)
    assert riemann == pytest.approx(exact, rel=1e-10)


@pytest.mark.parametrize("text, expected", [
    ("delta:1000", RegulatorSpectrum.delta(1000.0)),
    ("uniform:1,3", RegulatorSpectrum.uniform(1.0, 3.0)),
])
def test_parse(text, expected):
    assert RegulatorSpectrum.parse(text) == expected


@pytest.mark.parametrize("text", ["delta", "delta:0", "delta:-1", "uniform:0,3", "uniform:3,1",
                                  "gauss:1", "delta:x", "uniform:1"])
def test_invalid(text):
    with pytest.raises(InvalidSpectrum):
        RegulatorSpectrum.parse(text)


def test_scaled():
    assert RegulatorSpectrum.uniform(2.0, 6.0).scaled(2.0) == RegulatorSpectrum.uniform(1.0, 3.0)

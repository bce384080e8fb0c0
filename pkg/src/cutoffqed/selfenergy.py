"""Self-energy shift and mass correction of a free charged particle.

Everything is computed in units of the bare mass and rescaled on exit.  The
sign follows the regulator prescription delta(w^2 - k^2) - delta(w^2 - k^2 -
lam^2): the massless-photon contribution minus the massive one, so

    Delta E_p(lam) = e^2 / (2 pi^2 E_p) * int d^3k [raw(0) - raw(lam)]

which is positive and grows like ln(lam) for spin 1/2.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .integrand import SpinKind, subtracted_density
from .kinematics import ParticleConfig
from .quadrature import (
    QuadratureConfig,
    QuadratureResult,
    combine,
    integrate_2d,
    integrate_semi_infinite,
)
from .regulator import RegulatorSpectrum, log_moment, weight_nodes

log = logging.getLogger(__name__)

DEFAULT_NODES = 16


class InsufficientPoints(ValueError):
    pass


class NotConverged(RuntimeError):
    pass


@dataclass(frozen=True)
class SelfEnergyReport:
    delta_e: float
    delta_m: float
    spin: SpinKind
    cfg: ParticleConfig
    spectrum: RegulatorSpectrum
    quad: QuadratureResult  # metadata of the Delta m estimate

    @property
    def converged(self) -> bool:
        return self.quad.converged


def _momentum_integral(kind, p, lam, quad):
    """int dk dmu subtracted_density in units m = 1."""
    if p == 0.0:
        # flat in mu: the angular integral is exactly a factor 2
        return integrate_semi_infinite(
            lambda k: 2.0 * subtracted_density(kind, 0.0, 1.0, k, 0.0, lam), quad)
    return integrate_2d(lambda k, mu: subtracted_density(kind, p, 1.0, k, mu, lam), quad)


def delta_e_single(kind, cfg: ParticleConfig, lam: float,
                   quad: QuadratureConfig | None = None) -> QuadratureResult:
    """Energy shift Delta E_p for a single auxiliary photon mass ``lam``."""
    kind = SpinKind.parse(kind)
    quad = quad or QuadratureConfig()
    if not lam >= 0:
        raise ValueError(f"lambda must be >= 0, got {lam!r}")
    s = cfg.scaled()
    res = _momentum_integral(kind, s.p, lam / cfg.m, quad)
    prefactor = -cfg.e2 / (2.0 * math.pi ** 2 * s.energy) * cfg.m
    out = res.scaled(prefactor)
    if not out.converged:
        log.warning("quadrature did not converge: spin=%s p=%g lambda=%g error=%.3g evals=%d",
                    kind.value, cfg.p, lam, out.error, out.evals)
    return out


def delta_e_spectral(kind, cfg: ParticleConfig, spectrum: RegulatorSpectrum,
                     quad: QuadratureConfig | None = None, n_nodes: int = DEFAULT_NODES) -> QuadratureResult:
    nodes = weight_nodes(spectrum, n_nodes)
    if len(nodes) == 1:
        return delta_e_single(kind, cfg, nodes[0][0], quad)
    parts = [delta_e_single(kind, cfg, lam, quad) for lam, _ in nodes]
    return combine(parts, [w for _, w in nodes])


def delta_m(kind, cfg: ParticleConfig, spectrum: RegulatorSpectrum,
            quad: QuadratureConfig | None = None, n_nodes: int = DEFAULT_NODES) -> QuadratureResult:
    """Mass correction (E_p / m) Delta E_p, which should not depend on p."""
    return delta_e_spectral(kind, cfg, spectrum, quad, n_nodes).scaled(cfg.energy / cfg.m)


def compute(kind, cfg: ParticleConfig, spectrum: RegulatorSpectrum,
            quad: QuadratureConfig | None = None, n_nodes: int = DEFAULT_NODES) -> SelfEnergyReport:
    kind = SpinKind.parse(kind)
    de = delta_e_spectral(kind, cfg, spectrum, quad, n_nodes)
    dm = de.scaled(cfg.energy / cfg.m)
    return SelfEnergyReport(de.value, dm.value, kind, cfg, spectrum, dm)


def asymptotic_delta_m_spin_half(m: float, e2: float, log_lambda0: float) -> float:
    """(m e^2 / pi) * (3/2 ln(lambda_0 / m) + 3/2)."""
    return m * e2 / math.pi * (1.5 * (log_lambda0 - math.log(m)) + 1.5)


def asymptotic_for(cfg: ParticleConfig, spectrum: RegulatorSpectrum) -> float:
    return asymptotic_delta_m_spin_half(cfg.m, cfg.e2, log_moment(spectrum))


def log_slope_fit(kind, cfg: ParticleConfig, lambda0_list,
                  quad: QuadratureConfig | None = None) -> float:
    """Least-squares slope of Delta m against ln(lambda_0), delta spectra."""
    lams = sorted(set(float(x) for x in lambda0_list))
    if len(lams) < 3:
        raise InsufficientPoints(f"need at least 3 distinct lambda_0 values, got {len(lams)}")
    if lams[-1] / lams[0] < 100.0:
        raise InsufficientPoints("lambda_0 grid must span at least two decades")
    dms = []
    for lam in lams:
        r = delta_m(kind, cfg, RegulatorSpectrum.delta(lam), quad)
        if not r.converged:
            raise NotConverged(f"Delta m did not converge at lambda_0={lam:g} "
                               f"(spin {SpinKind.parse(kind).value}, error {r.error:.3g})")
        dms.append(r.value)
    slope, _ = np.polyfit(np.log(lams), dms, 1)
    return float(slope)

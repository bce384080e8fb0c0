"""Dispersion relations and energy combinations used by the integrands.

Units are natural (hbar = c = 1); every quantity here is an energy.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ParticleConfig:
    """External charged particle: bare mass, momentum magnitude, squared charge."""

    m: float = 1.0
    p: float = 0.0
    e2: float = 1.0 / 137.036

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"m must be > 0, got {self.m!r}")
        if not self.p >= 0:
            raise ValueError(f"p must be >= 0, got {self.p!r}")
        if not self.e2 > 0:
            raise ValueError(f"e2 must be > 0, got {self.e2!r}")

    @property
    def energy(self) -> float:
        return float(energy(self.p, self.m))

    def scaled(self) -> "ParticleConfig":
        """Same state in units of the bare mass (m = 1)."""
        return ParticleConfig(m=1.0, p=self.p / self.m, e2=self.e2)


@dataclass(frozen=True)
class PhotonMode:
    k: float
    mu: float
    lam: float = 0.0

    def __post_init__(self):
        if not self.k >= 0:
            raise ValueError(f"k must be >= 0, got {self.k!r}")
        if not -1.0 <= self.mu <= 1.0:
            raise ValueError(f"mu must lie in [-1, 1], got {self.mu!r}")
        if not self.lam >= 0:
            raise ValueError(f"lambda must be >= 0, got {self.lam!r}")


def energy(p, m):
    """E_p = sqrt(p^2 + m^2)."""
    return np.hypot(p, m)


def omega(k, lam):
    """Photon energy sqrt(k^2 + lambda^2); exactly k when lambda = 0."""
    return np.hypot(k, lam)


def ef(p, k, mu, m):
    """Energy of the intermediate fermion, sqrt(|p + k|^2 + m^2).

    |p + k|^2 = p^2 + k^2 + 2 p k mu; clipped at zero against rounding for
    back-to-back momenta.
    """
    q2 = np.maximum(p * p + k * k + 2.0 * p * k * mu, 0.0)
    return np.sqrt(q2 + m * m)

"""Regulator spectra G(lambda) over auxiliary photon masses."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class InvalidSpectrum(ValueError):
    pass


@dataclass(frozen=True)
class RegulatorSpectrum:
    """Normalized distribution of auxiliary photon masses.

    ``kind`` is ``"delta"`` (all weight at ``lo``) or ``"uniform"`` (flat on
    ``[lo, hi]``).  Masses are in the same energy units as the particle.
    """

    kind: str
    lo: float
    hi: float | None = None

    def __post_init__(self):
        if self.kind == "delta":
            if self.hi is not None and self.hi != self.lo:
                raise InvalidSpectrum("delta spectrum takes a single mass")
            object.__setattr__(self, "hi", self.lo)
        elif self.kind == "uniform":
            if self.hi is None:
                raise InvalidSpectrum("uniform spectrum needs two masses")
            if self.hi < self.lo:
                raise InvalidSpectrum(f"uniform bounds out of order: {self.lo}, {self.hi}")
        else:
            raise InvalidSpectrum(f"unknown spectrum kind {self.kind!r}")
        if not (self.lo > 0 and math.isfinite(self.hi)):
            raise InvalidSpectrum(f"support must lie in lambda > 0, got lower bound {self.lo}")

    @classmethod
    def delta(cls, lam0: float) -> "RegulatorSpectrum":
        return cls("delta", lam0)

    @classmethod
    def uniform(cls, lo: float, hi: float) -> "RegulatorSpectrum":
        return cls("uniform", lo, hi)

    @classmethod
    def parse(cls, text: str) -> "RegulatorSpectrum":
        """Parse ``delta:L0`` or ``uniform:LA,LB``."""
        kind, sep, args = text.partition(":")
        if not sep:
            raise InvalidSpectrum(f"expected KIND:VALUES, got {text!r}")
        try:
            vals = [float(v) for v in args.split(",")]
        except ValueError:
            raise InvalidSpectrum(f"non-numeric regulator mass in {text!r}") from None
        if kind == "delta" and len(vals) == 1:
            return cls.delta(vals[0])
        if kind == "uniform" and len(vals) == 2:
            return cls.uniform(*vals)
        raise InvalidSpectrum(f"cannot parse regulator {text!r}")

    def scaled(self, m: float) -> "RegulatorSpectrum":
        """Masses divided by ``m``."""
        if self.kind == "delta":
            return RegulatorSpectrum.delta(self.lo / m)
        return RegulatorSpectrum.uniform(self.lo / m, self.hi / m)

    def __str__(self):
        if self.kind == "delta":
            return f"delta:{self.lo:.17g}"
        return f"uniform:{self.lo:.17g},{self.hi:.17g}"

    @property
    def degenerate(self) -> bool:
        return self.kind == "delta" or self.lo == self.hi


def weight_nodes(spec: RegulatorSpectrum, n: int = 16) -> list[tuple[float, float]]:
    """Nodes and weights so that sum(w * f(lam)) approximates int G f dlam.

    Smooth kinds use n-point Gauss-Legendre on the support interval.
    """
    if n < 1:
        raise ValueError("need at least one node")
    if spec.degenerate:
        return [(spec.lo, 1.0)]
    x, w = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (spec.hi - spec.lo)
    mid = 0.5 * (spec.hi + spec.lo)
    # G = 1 / (hi - lo), so the Jacobian half-width cancels down to w / 2
    return [(float(mid + half * xi), float(0.5 * wi)) for xi, wi in zip(x, w)]


def log_moment(spec: RegulatorSpectrum) -> float:
    """int G(lam) ln(lam) dlam, i.e. the ln(lambda_0) entering the mass shift."""
    if spec.degenerate:
        return math.log(spec.lo)
    a, b = spec.lo, spec.hi
    return (b * math.log(b) - a * math.log(a)) / (b - a) - 1.0

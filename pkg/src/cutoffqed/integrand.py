"""Pointwise self-energy integrands for spin-1/2 and spin-0 particles.

Each integrand is a density on (k, mu) in [0, inf) x [-1, 1] with the
measure factor 2 pi k^2 already folded in, so that

    int d^3k F(k) = int_0^inf dk int_{-1}^{1} dmu  density(k, mu).

All functions broadcast over numpy arrays in k, mu and lam.
"""
from __future__ import annotations

import enum

import numpy as np

from .kinematics import ParticleConfig, PhotonMode, ef, energy, omega


class SpinKind(str, enum.Enum):
    HALF = "half"
    ZERO = "zero"

    @classmethod
    def parse(cls, text) -> "SpinKind":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text))
        except ValueError:
            raise ValueError(f"spin must be 'half' or 'zero', got {text!r}") from None


# (coefficient of lam^2 in the kernel prefactor, coefficient of int d^3k / E_f)
_COEFFS = {
    SpinKind.HALF: (0.5, -0.5),
    SpinKind.ZERO: (-0.25, 0.25),
}


def _kernel(p, k, mu, m, w, Ep, Ef):
    """(E_f + w) / ([(E_f + w)^2 - E_p^2] E_f w), with the pole factor
    E_f + w - E_p formed without cancelling E_f against E_p."""
    s = Ef + w
    ef_minus_ep = (k * k + 2.0 * p * k * mu) / (Ef + Ep)
    return s / ((w + ef_minus_ep) * (s + Ep) * Ef * w)


def raw_density(kind, p, m, k, mu, lam):
    """Full (2 pi^2 / e^2) E_p Delta E_p integrand at photon mass ``lam``."""
    kind = SpinKind.parse(kind)
    c_lam, c_ef = _COEFFS[kind]
    Ep = energy(p, m)
    Ef = ef(p, k, mu, m)
    w = omega(k, lam)
    T = _kernel(p, k, mu, m, w, Ep, Ef)
    val = (m * m + c_lam * lam * lam) * T + 0.5 / w + c_ef / Ef
    return 2.0 * np.pi * k * k * val


def raw_integrand(kind, cfg: ParticleConfig, mode: PhotonMode) -> float:
    if not mode.k > 0:
        raise ValueError("raw integrand is evaluated only for k > 0")
    return float(raw_density(kind, cfg.p, cfg.m, mode.k, mode.mu, mode.lam))


def _kernel_minus_photon(p, k, mu, w, Ep, Ef):
    """T(w) - 1/(k w (k + w)) without the leading-order cancellation.

    Over the common denominator D E_f k w (k + w), D = (E_f + w)^2 - E_p^2,
    the numerator is (E_f + w) k (k + w) - D E_f.  Using
    k^2 - E_f^2 = -(E_p^2 + 2 p k mu) it becomes
    E_p^2 E_f - (E_f + w)(E_p^2 + 2 p k mu)(1 + w / (k + E_f)).
    """
    s = Ef + w
    q = Ep * Ep + 2.0 * p * k * mu
    num = Ep * Ep * Ef - s * q * (1.0 + w / (k + Ef))
    ef_minus_ep = (k * k + 2.0 * p * k * mu) / (Ef + Ep)
    D = (w + ef_minus_ep) * (s + Ep)
    return num / (D * Ef * k * w * (k + w))


def subtracted_density(kind, p, m, k, mu, lam):
    """raw(lam) - raw(0) at identical (k, mu).

    The 1/E_f terms are lambda-independent and drop out.  What remains is
    grouped as

        m^2 [T(lam) - T(0)] + (lam^2/2) [T(lam) - 1/(k w (k + w))]
                            + (c - 1/2) lam^2 T(lam)

    where 1/(2w) - 1/(2k) = -lam^2 / (2 k w (k + w)) and c is the lam^2
    coefficient of the kernel.  For spin 1/2 the last group is absent; the
    middle one is formed without cancellation.  At lam = 0 every group
    vanishes identically.
    """
    kind = SpinKind.parse(kind)
    c_lam, _ = _COEFFS[kind]
    Ep = energy(p, m)
    Ef = ef(p, k, mu, m)
    w = omega(k, lam)
    T_lam = _kernel(p, k, mu, m, w, Ep, Ef)
    T_0 = _kernel(p, k, mu, m, k, Ep, Ef)
    lam2 = lam * lam
    val = m * m * (T_lam - T_0) + 0.5 * lam2 * _kernel_minus_photon(p, k, mu, w, Ep, Ef)
    if c_lam != 0.5:
        val = val + (c_lam - 0.5) * lam2 * T_lam
    return 2.0 * np.pi * k * k * val


def subtracted_integrand(kind, cfg: ParticleConfig, k, mu, lam):
    return subtracted_density(kind, cfg.p, cfg.m, k, mu, lam)


def uv_log_coefficient(kind, lam) -> float:
    """Limit of k * int dmu subtracted_density as k -> infinity.

    Nonzero means the k-integral grows like this coefficient times ln K.
    The leading large-k behaviour T ~ 1/(2 k^3) gives 2 pi (c - 1/2) lam^2,
    independent of p and m.
    """
    c_lam, _ = _COEFFS[SpinKind.parse(kind)]
    return 2.0 * np.pi * (c_lam - 0.5) * lam * lam

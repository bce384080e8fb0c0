"""Plane-wave checks of the higher-derivative field equation.

Signature (+, -, -, -): for a plane wave with energy E and momentum k, the
d'Alembertian acts as -s with s = E^2 - k^2.  The free equation
a^2 box^2 A + box A = 0 then reduces to a^2 s^2 - s = 0, with roots on the
massless shell s = 0 and the massive shell s = 1/a^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True)
class PodolskyParam:
    """Length scale ``a`` of the higher-derivative term; lambda0 = 1/a."""

    a: float

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"a must be > 0, got {self.a!r}")

    @classmethod
    def from_lambda0(cls, lambda0: float) -> "PodolskyParam":
        return cls(1.0 / lambda0)

    @property
    def lambda0(self) -> float:
        return 1.0 / self.a

    def massive_energy(self, k):
        """On-shell energy of the massive branch, sqrt(k^2 + 1/a^2)."""
        return np.hypot(k, 1.0 / self.a)


def _s(E, k):
    # (E - k)(E + k) keeps shell points exact where E^2 - k^2 would not
    return (E - k) * (E + k)


def massless_dispersion_residual(E, k):
    return _s(E, k)


def massive_dispersion_residual(E, k, param: PodolskyParam):
    a = param.a
    return a * a * _s(E, k) - 1.0


def quartic_operator_residual(E, k, param: PodolskyParam):
    """a^2 s^2 - s, evaluated in the factored form s (a^2 s - 1)."""
    s = _s(E, k)
    return s * (param.a * param.a * s - 1.0)


def propagator_partial_fraction_gap(k2: float, param: PodolskyParam) -> float:
    """Relative gap between 1/(k2 (1 + a^2 k2)) and 1/k2 - 1/(k2 + 1/a^2).

    The right-hand side is a difference of nearly equal terms when
    a^2 k2 >> 1, so it is formed exactly in rationals from the float inputs.
    """
    if not k2 > 0:
        raise ValueError("k2 must be > 0")
    a = param.a
    lhs = 1.0 / (k2 * (1.0 + a * a * k2))
    K, A = Fraction(k2), Fraction(a)
    rhs = float(1 / K - 1 / (K + 1 / (A * A)))
    return abs(lhs - rhs) / abs(lhs)


def green_function_ft(k2, param: PodolskyParam):
    """Fourier transform of the constraint Green function, -1/(k2 (1 + a^2 k2))."""
    a = param.a
    return -1.0 / (k2 * (1.0 + a * a * k2))


def constraint_green_residual(k2, param: PodolskyParam):
    """|(1 + a^2 k2)(-k2) G(k2) - 1| for (1 - a^2 lap) lap G = delta."""
    a = param.a
    return np.abs((1.0 + a * a * k2) * (-k2) * green_function_ft(k2, param) - 1.0)


def random_identity_sweep(n: int, seed: int = 0, a: float | None = None,
                          k2_decades=(-6, 6), a_decades=(-3, 3)) -> dict:
    """Max residuals of the algebraic identities over log-uniform samples.

    With ``a`` given only k^2 is sampled; otherwise a is drawn too.
    """
    rng = np.random.default_rng(seed)
    k2 = 10.0 ** rng.uniform(*k2_decades, size=n)
    if a is None:
        avals = 10.0 ** rng.uniform(*a_decades, size=n)
    else:
        avals = np.full(n, float(a))
    params = [PodolskyParam(float(y)) for y in avals]
    gap = max(propagator_partial_fraction_gap(float(x), prm) for x, prm in zip(k2, params))
    green = max(float(constraint_green_residual(float(x), prm)) for x, prm in zip(k2, params))

    k = 10.0 ** rng.uniform(-3, 1, size=n)
    massless = 0.0
    massive = 0.0
    for x, prm in zip(k, params):
        x = float(x)
        massless = max(massless, abs(float(quartic_operator_residual(x, x, prm))))
        E = float(prm.massive_energy(x))
        # residual relative to the size of its two terms at this point
        s_scale = E * E + x * x
        rel = abs(float(quartic_operator_residual(E, x, prm))) / (prm.a ** 2 * s_scale ** 2 + s_scale)
        massive = max(massive, rel)
    return {
        "partial_fraction_gap": gap,
        "constraint_green_residual": green,
        "quartic_massless_shell": massless,
        "quartic_massive_shell_rel": massive,
    }


def massive_rest_energy(param: PodolskyParam) -> float:
    return 1.0 / param.a

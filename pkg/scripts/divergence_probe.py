"""Cut the rest-frame k integral at K and watch how it grows with K.

For spin 1/2 the cut integral settles to a finite value; for spin 0 it keeps
growing like ln K with coefficient 3 lambda^2 / (4 pi) (in units m = e^2 = 1).
Also fits the spin-1/2 constant C in Delta m = (e^2 m / pi)(3/2 ln lambda + C).

    python scripts/divergence_probe.py
"""
import math

import numpy as np

from cutoffqed.integrand import subtracted_density
from cutoffqed.kinematics import ParticleConfig
from cutoffqed.regulator import RegulatorSpectrum
from cutoffqed.selfenergy import delta_m

NODES, WEIGHTS = np.polynomial.legendre.leggauss(40)


def cut_integral(spin, lam, log_k_max, log_k_min=-30.0):
    """J_K = -(1/2pi^2) * int_0^K dk 2 * subtracted_density, Gauss-Legendre in ln k."""
    edges = np.arange(log_k_min, log_k_max + 1e-9, 0.5)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        u = 0.5 * (hi - lo) * NODES + 0.5 * (hi + lo)
        k = np.exp(u)
        f = 2.0 * subtracted_density(spin, 0.0, 1.0, k, 0.0, lam) * k
        total += 0.5 * (hi - lo) * float(WEIGHTS @ f)
    return -total / (2 * math.pi ** 2)


def main():
    lam = 1.0
    print(f"lambda = {lam}, cut integral J_K at rest")
    print(f"{'ln K':>6} {'spin 1/2':>14} {'spin 0':>14} {'d(spin 0)/dlnK':>16}")
    prev = None
    for lk in range(5, 31, 5):
        h = cut_integral("half", lam, lk)
        z = cut_integral("zero", lam, lk)
        slope = "" if prev is None else f"{(z - prev) / 5:16.8f}"
        print(f"{lk:6d} {h:14.10f} {z:14.8f} {slope}")
        prev = z
    print(f"3 lambda^2 / (4 pi) = {3 * lam ** 2 / (4 * math.pi):.8f}")

    print("\nspin 1/2 constant C in (e^2 m/pi)(3/2 ln lambda + C)")
    cfg = ParticleConfig(m=1.0, p=0.0, e2=math.pi)
    for lam0 in (1e2, 1e3, 1e4, 1e5):
        dm = delta_m("half", cfg, RegulatorSpectrum.delta(lam0)).value
        print(f"lambda0 = {lam0:8.0e}   C = {dm - 1.5 * math.log(lam0):.8f}")
    print("3/8 =", 3 / 8)


if __name__ == "__main__":
    main()

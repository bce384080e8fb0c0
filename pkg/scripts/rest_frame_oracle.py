"""Independent rest-frame reference for the subtracted self-energy integral.

At p = 0 the integrand does not depend on the photon angle, so the radial
integral is one-dimensional.  This script evaluates it with a fixed-grid
Romberg scheme in u = ln k, at 50 significant digits, using the raw
integrand terms directly (no regrouping).  It shares no code with the
``cutoffqed`` package on purpose.

Output is JSON with, for each spin and lambda/m, the quantity

    J(lambda) = (1 / (2 pi^2)) * integral d^3k [raw(0) - raw(lambda)]

in units m = 1, e^2 = 1.  Then Delta E_p = Delta m = e^2 * m * J at rest.

For spin 0 the integral has no finite value; the script instead reports the
coefficient of ln K when the k-integral is cut at K.

    python scripts/rest_frame_oracle.py > tests/data/rest_frame_oracle.json
"""
import json
import sys

import mpmath as mp

mp.mp.dps = 50

U_LO, U_HI = -40, 40
ROMBERG_LEVELS = 7


def raw(k, lam, spin):
    Ep = mp.mpf(1)
    w = mp.sqrt(k * k + lam * lam)
    Ef = mp.sqrt(k * k + 1)
    kern = 1 / ((Ef + w) ** 2 - Ep ** 2) * (Ef + w) / (Ef * w)
    if spin == "half":
        return (1 + lam * lam / 2) * kern + 1 / (2 * w) - 1 / (2 * Ef)
    return (1 - lam * lam / 4) * kern + 1 / (2 * w) + 1 / (4 * Ef)


def romberg(f, a, b, levels=ROMBERG_LEVELS):
    h = b - a
    row = [h * (f(a) + f(b)) / 2]
    n = 1
    for i in range(1, levels + 1):
        h /= 2
        s = mp.fsum(f(a + (2 * j + 1) * h) for j in range(n))
        n *= 2
        new = [row[0] / 2 + h * s]
        for j in range(1, i + 1):
            new.append(new[j - 1] + (new[j - 1] - row[j - 1]) / (4 ** j - 1))
        row = new
    return row[-1], abs(row[-1] - row[-2])


def radial_integral(lam, spin, u_hi=U_HI):
    """(1/2pi^2) * int 4 pi k^2 [raw(0) - raw(lam)] dk, k = e^u."""
    lam = mp.mpf(lam)

    def g(u):
        k = mp.exp(u)
        return k * 4 * mp.pi * k * k * (raw(k, 0, spin) - raw(k, lam, spin))

    total, err = mp.mpf(0), mp.mpf(0)
    for lo in range(U_LO, u_hi):
        v, e = romberg(g, mp.mpf(lo), mp.mpf(lo + 1))
        total += v
        err += e
    return total / (2 * mp.pi ** 2), err / (2 * mp.pi ** 2)


def main():
    out = {"units": "m=1, e2=1, p=0", "quantity": "J = Delta m / (e2 m)", "half": {}, "zero": {}}
    for lam in ["0.1", "1", "10", "100", "1000", "10000"]:
        v, e = radial_integral(lam, "half")
        out["half"][lam] = {"value": mp.nstr(v, 20), "romberg_error": mp.nstr(e, 3)}
        print("half", lam, mp.nstr(v, 20), mp.nstr(e, 3), file=sys.stderr)

    # spin 0: cut the k integral at K = e^u and measure d J / d ln K
    for lam in ["0.1", "1", "10"]:
        v20, _ = radial_integral(lam, "zero", u_hi=20)
        v30, _ = radial_integral(lam, "zero", u_hi=30)
        slope = (v30 - v20) / 10
        out["zero"][lam] = {
            "value": None,
            "diverges": True,
            "dJ_dlnK": mp.nstr(slope, 15),
            "dJ_dlnK_over_lambda2": mp.nstr(slope / mp.mpf(lam) ** 2, 15),
        }
        print("zero", lam, mp.nstr(slope, 15), file=sys.stderr)

    # leading-log slope of J vs ln lambda over two decades, spin 1/2
    xs = [mp.log(mp.mpf(s)) for s in ("100", "1000", "10000")]
    ys = [mp.mpf(out["half"][s]["value"]) for s in ("100", "1000", "10000")]
    xm, ym = sum(xs) / 3, sum(ys) / 3
    slope = sum((x - xm) * (y - ym) for x, y in zip(xs, ys)) / sum((x - xm) ** 2 for x in xs)
    out["half_log_slope_1e2_1e4"] = mp.nstr(slope, 15)
    out["spin_zero_log_slope"] = None
    json.dump(out, sys.stdout, indent=2)
    print()


if __name__ == "__main__":
    main()

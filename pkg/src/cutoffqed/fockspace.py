"""Truncated single-mode realization of an indefinite-metric ladder algebra.

For the negative-sign sector the ladder actions are

    a |n> = -sqrt(c n) |n-1>,     a^dag |n> = sqrt(c (n+1)) |n+1>,

so that [a, a^dag] = -c on every level below the truncation.  The metric
eta = diag(s^n) gives <n|n>_eta = s^n, and the Gupta operator O = diag((-1)^n)
makes the redefined norm <n|O|n>_eta positive.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class InvalidTruncation(ValueError):
    pass


def longitudinal_scale(m: float, Ep: float) -> float:
    """Commutator magnitude m^2 / E_p^2 for the longitudinal polarization."""
    return (m / Ep) ** 2


@dataclass(frozen=True, eq=False)
class LadderAlgebra:
    n_max: int
    sign: int
    scale: float
    a: np.ndarray
    adag: np.ndarray
    number: np.ndarray
    gupta: np.ndarray
    eta: np.ndarray

    @property
    def dim(self) -> int:
        return self.n_max + 1


def build_algebra(n_max: int = 12, sign: int = -1, scale: float = 1.0) -> LadderAlgebra:
    if n_max < 2:
        raise InvalidTruncation(f"n_max must be >= 2, got {n_max}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if not scale > 0:
        raise ValueError(f"scale must be > 0, got {scale}")
    n = np.arange(n_max + 1)
    down = np.sqrt(scale * n[1:])
    a = np.diag(sign * down, 1)          # a[n-1, n]
    adag = np.diag(down, -1)             # adag[n+1, n]
    parity = (-1.0) ** n
    eta = np.diag(parity if sign == -1 else np.ones(n_max + 1))
    return LadderAlgebra(
        n_max=n_max,
        sign=sign,
        scale=scale,
        a=a,
        adag=adag,
        number=sign * (adag @ a),
        gupta=np.diag(parity),
        eta=eta,
    )


def commutator(x, y):
    return x @ y - y @ x


def commutator_defect(alg: LadderAlgebra) -> float:
    """Max-norm of [a, a^dag] - s c I on levels 0..n_max-1."""
    c = commutator(alg.a, alg.adag) - alg.sign * alg.scale * np.eye(alg.dim)
    return float(np.max(np.abs(c[:-1, :-1])))


def eta_adjoint_defect(alg: LadderAlgebra) -> float:
    """Max-norm of eta a eta - (a^dag)^H."""
    return float(np.max(np.abs(alg.eta @ alg.a @ alg.eta - alg.adag.conj().T)))


def gupta_operator_checks(alg: LadderAlgebra) -> dict:
    O, a, adag = alg.gupta, alg.a, alg.adag
    n = np.arange(alg.dim)
    basis = np.eye(alg.dim)
    return {
        "parity_eigenstates": bool(np.array_equal(O @ basis, basis * (-1.0) ** n)),
        "self_adjoint": bool(np.array_equal(O.conj().T, O)),
        "anticommutes_a": bool(np.array_equal(O @ a, -(a @ O))),
        "anticommutes_adag": bool(np.array_equal(O @ adag, -(adag @ O))),
    }


def metric_inner(alg: LadderAlgebra, u, v) -> complex:
    return np.conj(u) @ alg.eta @ v


def redefined_inner(alg: LadderAlgebra, u, v) -> complex:
    return np.conj(u) @ alg.eta @ alg.gupta @ v


def redefined_norms(alg: LadderAlgebra, from_vacuum: bool = False) -> np.ndarray:
    """<n|O|n>_eta for n = 0..n_max.

    With ``from_vacuum`` the states are (a^dag)^n |0> / sqrt(n!), whose
    norms pick up c^n from the ladder amplitudes.
    """
    norms = []
    if from_vacuum:
        psi = np.zeros(alg.dim)
        psi[0] = 1.0
        for n in range(alg.dim):
            norms.append(float(np.real(redefined_inner(alg, psi, psi))))
            psi = alg.adag @ psi / np.sqrt(n + 1)
    else:
        for vec in np.eye(alg.dim):
            norms.append(float(np.real(redefined_inner(alg, vec, vec))))
    return np.array(norms)


def number_operator_spectrum(alg: LadderAlgebra) -> np.ndarray:
    """Diagonal of N = -a^dag a (sign -1) or a^dag a (sign +1); N is diagonal."""
    return np.diag(alg.number).copy()


def full_check(n_max: int = 12, scale: float = 1.0) -> dict:
    alg = build_algebra(n_max, -1, scale)
    out = {
        "commutator_defect": commutator_defect(alg),
        "eta_adjoint_defect": eta_adjoint_defect(alg),
        "number_spectrum_defect": float(np.max(np.abs(number_operator_spectrum(alg) - scale * np.arange(alg.dim)))),
        "min_redefined_norm": float(np.min(redefined_norms(alg))),
    }
    out.update(gupta_operator_checks(alg))
    return out

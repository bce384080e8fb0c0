"""Adaptive Gauss-Kronrod integration on [0, inf), [-1, 1] and their product.

The semi-infinite axis is mapped with k = scale * t / (1 - t), t in [0, 1).
Kronrod rules are open, so neither t = 0 nor t = 1 is ever sampled.  Panels
are bisected worst-first; totals are accumulated with ``math.fsum`` so the
result does not depend on the order panels were refined in.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


class NonFiniteSample(ArithmeticError):
    """The integrand returned NaN or inf at a quadrature node."""


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-8
    abs_tol: float = 0.0
    max_evals: int = 2_000_000
    transform: str = "rational"
    scale: float = 1.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if not self.abs_tol >= 0:
            raise ValueError("abs_tol must be >= 0")
        if self.max_evals < 2 * 15 * 21:
            raise ValueError(f"max_evals must be at least {2 * 15 * 21}")
        if self.transform != "rational":
            raise ValueError(f"unknown transform {self.transform!r}")
        if not self.scale > 0:
            raise ValueError("scale must be > 0")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    evals: int
    converged: bool

    def scaled(self, factor: float) -> "QuadratureResult":
        return QuadratureResult(self.value * factor, self.error * abs(factor),
                                self.evals, self.converged)


def combine(results, weights) -> QuadratureResult:
    """Weighted sum of independent results; errors add linearly."""
    results = list(results)
    weights = list(weights)
    return QuadratureResult(
        value=math.fsum(w * r.value for r, w in zip(results, weights)),
        error=math.fsum(abs(w) * r.error for r, w in zip(results, weights)),
        evals=sum(r.evals for r in results),
        converged=all(r.converged for r in results),
    )


# Gauss-Kronrod node tables (QUADPACK qk15 / qk21), nonnegative half only.
_XK15 = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0])
_WK15 = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714])
_WG7 = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327])

_XK21 = np.array([
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0])
_WK21 = np.array([
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208031569390, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821])
_WG10 = np.array([
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338])


@dataclass(frozen=True)
class _Rule:
    """Full symmetric node set on [-1, 1] with Kronrod and embedded Gauss weights."""

    nodes: np.ndarray
    wk: np.ndarray
    wg: np.ndarray  # zero at Kronrod-only nodes

    @classmethod
    def from_half(cls, xk, wk, wg_half, gauss_at_center):
        n = len(xk)
        nodes = np.concatenate([-xk[:-1], xk[::-1]])
        wkf = np.concatenate([wk[:-1], wk[::-1]])
        # Gauss nodes are the odd-indexed entries of the half table (0-based)
        wg_full_half = np.zeros(n)
        wg_full_half[1::2] = wg_half[: len(wg_full_half[1::2])]
        if gauss_at_center:
            wg_full_half[-1] = wg_half[-1]
        wgf = np.concatenate([wg_full_half[:-1], wg_full_half[::-1]])
        return cls(nodes, wkf, wgf)

    def __len__(self):
        return len(self.nodes)


GK15 = _Rule.from_half(_XK15, _WK15, _WG7, gauss_at_center=True)
GK21 = _Rule.from_half(_XK21, _WK21, _WG10, gauss_at_center=False)

# narrower panels would place Kronrod nodes within rounding of the edges
_MIN_WIDTH = 1e-12


class _Ledger:
    """Running compensated totals over live panels.

    Loop decisions use Neumaier sums updated incrementally (resynced every
    ``RESYNC`` updates); the reported total is always a fresh ``math.fsum``,
    which is exactly rounded and so independent of panel order.
    """

    RESYNC = 256

    def __init__(self):
        self.items = {}
        self._updates = 0
        self._resync()

    def _resync(self):
        self.value = math.fsum(v for v, _ in self.items.values())
        self.error = math.fsum(e for _, e in self.items.values())
        self._cv = self._ce = 0.0

    @staticmethod
    def _add(total, comp, x):
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        return t, comp

    def put(self, key, v, e):
        self.items[key] = (v, e)
        self.value, self._cv = self._add(self.value, self._cv, v)
        self.error, self._ce = self._add(self.error, self._ce, e)
        self._updates += 1
        if self._updates % self.RESYNC == 0:
            self._resync()

    def drop(self, key):
        v, e = self.items.pop(key)
        self.value, self._cv = self._add(self.value, self._cv, -v)
        self.error, self._ce = self._add(self.error, self._ce, -e)

    def running(self):
        return self.value + self._cv, max(self.error + self._ce, 0.0)

    def final(self):
        self._resync()
        return self.value, self.error


def _check_finite(vals):
    if not np.all(np.isfinite(vals)):
        raise NonFiniteSample("integrand returned a non-finite value")


def _rational_map(t, scale):
    """k = scale t / (1 - t) and dk/dt."""
    u = 1.0 - t
    return scale * t / u, scale / (u * u)


def _adaptive_1d(g, a, b, rule, config, n_initial):
    """Worst-first bisection of [a, b]; ``g`` is vectorized over nodes."""
    evals = 0

    def panel(lo, hi):
        nonlocal evals
        hw = 0.5 * (hi - lo)
        x = lo + hw * (rule.nodes + 1.0)
        y = np.asarray(g(x), dtype=float)
        _check_finite(y)
        evals += len(rule)
        k = hw * float(np.dot(rule.wk, y))
        gs = hw * float(np.dot(rule.wg, y))
        return k, abs(k - gs)

    edges = np.linspace(a, b, n_initial + 1)
    heap = []
    frozen = []
    book = _Ledger()
    counter = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e = panel(lo, hi)
        heapq.heappush(heap, (-e, counter, lo, hi))
        book.put(counter, v, e)
        counter += 1

    value, error = book.running()
    while error > config.tolerance(value) and heap and evals + 2 * len(rule) <= config.max_evals:
        _, key, lo, hi = heapq.heappop(heap)
        if hi - lo < _MIN_WIDTH * max(1.0, abs(lo), abs(hi)):
            # unrefinable; stays in the ledger
            frozen.append(book.items[key][1])
            if math.fsum(frozen) > config.tolerance(value):
                break
            continue
        book.drop(key)
        mid = 0.5 * (lo + hi)
        for plo, phi in ((lo, mid), (mid, hi)):
            pv, pe = panel(plo, phi)
            heapq.heappush(heap, (-pe, counter, plo, phi))
            book.put(counter, pv, pe)
            counter += 1
        value, error = book.running()
    value, error = book.final()
    return QuadratureResult(value, error, evals, error <= config.tolerance(value))


def integrate_semi_infinite(f: Callable, config: QuadratureConfig | None = None) -> QuadratureResult:
    """int_0^inf f(k) dk for f vectorized over k."""
    config = config or QuadratureConfig()

    def g(t):
        k, jac = _rational_map(t, config.scale)
        return np.asarray(f(k), dtype=float) * jac

    return _adaptive_1d(g, 0.0, 1.0, GK15, config, n_initial=4)


def integrate_angular(f: Callable, config: QuadratureConfig | None = None) -> QuadratureResult:
    """int_{-1}^{1} f(mu) dmu.

    Starts from the 21-point Kronrod rule refined once (two halves); further
    bisection only happens while the error estimate exceeds tolerance.
    """
    config = config or QuadratureConfig()
    return _adaptive_1d(lambda x: f(x), -1.0, 1.0, GK21, config, n_initial=2)


def integrate_2d(f: Callable, config: QuadratureConfig | None = None) -> QuadratureResult:
    """int_0^inf dk int_{-1}^{1} dmu f(k, mu), f broadcasting over arrays.

    Rectangles in (t, mu) carry the product rule GK15 x GK21.  The Gauss
    comparison is made separately along each axis; the rectangle is split
    along the axis with the larger discrepancy.
    """
    config = config or QuadratureConfig()
    rt, rm = GK15, GK21
    evals = 0

    def rect(t0, t1, m0, m1):
        nonlocal evals
        ht, hm = 0.5 * (t1 - t0), 0.5 * (m1 - m0)
        t = t0 + ht * (rt.nodes + 1.0)
        mu = m0 + hm * (rm.nodes + 1.0)
        k, jac = _rational_map(t, config.scale)
        y = np.asarray(f(k[:, None], mu[None, :]), dtype=float) * jac[:, None]
        _check_finite(y)
        evals += y.size
        inner_k = y @ rm.wk
        inner_g = y @ rm.wg
        kk = ht * hm * float(rt.wk @ inner_k)
        gk = ht * hm * float(rt.wg @ inner_k)
        kg = ht * hm * float(rt.wk @ inner_g)
        et, em = abs(kk - gk), abs(kk - kg)
        return kk, et + em, 0 if et >= em else 1

    heap = []
    frozen = []
    book = _Ledger()
    counter = 0
    t_edges = np.linspace(0.0, 1.0, 5)
    for t0, t1 in zip(t_edges[:-1], t_edges[1:]):
        for m0, m1 in ((-1.0, 0.0), (0.0, 1.0)):
            v, e, ax = rect(t0, t1, m0, m1)
            heapq.heappush(heap, (-e, counter, (t0, t1, m0, m1), ax))
            book.put(counter, v, e)
            counter += 1

    cost = len(rt) * len(rm)
    value, error = book.running()
    while error > config.tolerance(value) and heap and evals + 2 * cost <= config.max_evals:
        _, key, (t0, t1, m0, m1), ax = heapq.heappop(heap)
        lo, hi = (t0, t1) if ax == 0 else (m0, m1)
        if hi - lo < _MIN_WIDTH * max(1.0, abs(lo), abs(hi)):
            frozen.append(book.items[key][1])
            if math.fsum(frozen) > config.tolerance(value):
                break
            continue
        book.drop(key)
        mid = 0.5 * (lo + hi)
        if ax == 0:
            halves = ((t0, mid, m0, m1), (mid, t1, m0, m1))
        else:
            halves = ((t0, t1, m0, mid), (t0, t1, mid, m1))
        for box in halves:
            pv, pe, pax = rect(*box)
            heapq.heappush(heap, (-pe, counter, box, pax))
            book.put(counter, pv, pe)
            counter += 1
        value, error = book.running()
    value, error = book.final()
    return QuadratureResult(value, error, evals, error <= config.tolerance(value))

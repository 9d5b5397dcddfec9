"""Adaptive Gauss-Legendre quadrature for complex-valued integrands.

The a posteriori error convention is the two-level panel difference: a panel
is accepted when |GL(a,b) - GL(a,m) - GL(m,b)| falls below its share of the
tolerance budget, and the accepted differences accumulate into the reported
error estimate.
"""
from __future__ import annotations

from typing import Callable

import numpy.polynomial.legendre as _leg

from .controls import QuadControl, DEFAULT_QUAD
from .errors import QuadratureFailure

_NODE_CACHE: dict[int, tuple[tuple[float, ...], tuple[float, ...]]] = {}


def _nodes(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    if n not in _NODE_CACHE:
        x, w = _leg.leggauss(n)
        _NODE_CACHE[n] = (tuple(x), tuple(w))
    return _NODE_CACHE[n]


def _panel(f: Callable[[float], complex], a: float, b: float, n: int) -> complex:
    xs, ws = _nodes(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    total = 0.0 + 0.0j
    for x, w in zip(xs, ws):
        total += w * f(mid + half * x)
    return half * total


def adaptive_quad(f: Callable[[float], complex], a: float, b: float,
                  ctl: QuadControl = DEFAULT_QUAD) -> tuple[complex, float, int]:
    """Integrate f over [a, b]; returns (value, err_estimate, panel_count).

    Raises QuadratureFailure when a subinterval still misses its budget at
    ctl.max_depth.
    """
    if a == b:
        return 0.0 + 0.0j, 0.0, 0
    rough = _panel(f, a, b, ctl.panel_nodes)
    tol = max(ctl.abs_tol, ctl.rel_tol * abs(rough))
    value = 0.0 + 0.0j
    err = 0.0
    panels = 0
    stack = [(a, b, rough, tol, 0)]
    while stack:
        lo, hi, coarse, budget, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid, ctl.panel_nodes)
        right = _panel(f, mid, hi, ctl.panel_nodes)
        fine = left + right
        disc = abs(fine - coarse)
        panels += 2
        if disc <= budget or disc <= 1e-16 * abs(fine):
            value += fine
            err += disc
        elif depth >= ctl.max_depth:
            raise QuadratureFailure(
                f"panel [{lo}, {hi}] still off by {disc:.3e} at max_depth={ctl.max_depth}")
        else:
            stack.append((lo, mid, left, budget / 2.0, depth + 1))
            stack.append((mid, hi, right, budget / 2.0, depth + 1))
    return value, err, panels


def quad_decaying_tail(f: Callable[[float], complex], a: float, rate: float,
                       ctl: QuadControl = DEFAULT_QUAD,
                       cutoff_scale: float = 1.0) -> tuple[complex, float, int]:
    """Integrate f over [a, oo) for |f(t)| <~ cutoff_scale * e^(-rate*t).

    Truncates at T where the exponential bound drops below the absolute
    tolerance and integrates geometric segments adaptively.
    """
    if rate <= 0:
        raise QuadratureFailure("tail integral needs a positive decay rate")
    import math

    target = ctl.abs_tol * 0.1
    T = a + max(8.0, (math.log(max(cutoff_scale, 1e-300)) - math.log(target)) / rate)
    value = 0.0 + 0.0j
    err = 0.0
    panels = 0
    lo = a
    seg = max(1.0, a)
    while lo < T:
        hi = min(lo + seg, T)
        v, e, p = adaptive_quad(f, lo, hi, ctl)
        value += v
        err += e
        panels += p
        lo = hi
        seg *= 2.0
    err += target  # truncated tail allowance
    return value, err, panels

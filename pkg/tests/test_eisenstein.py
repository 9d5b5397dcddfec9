"""Eisenstein series: route cross-checks, closed values, properties."""
from __future__ import annotations

import math
import random

import pytest

from eiskern import (PoleError, SumControl, UnsupportedOrder,
                     eisenstein_closed, eisenstein_direct, eisenstein_integral,
                     eisenstein_polygamma, product_identity_residual)

PI = math.pi


def brute_symmetric_sum(r: int, z: complex, n: int = 60_000) -> complex:
    """Symmetric partial sum with a midpoint tail integral, the slow oracle."""
    terms = [z ** float(-r)]
    for k in range(1, n + 1):
        terms.append((z + k) ** float(-r) + (z - k) ** float(-r))
    if r >= 2:
        terms.append(((z + n + 0.5) ** (1 - r) + (-1.0) ** r * (n + 0.5 - z) ** (1 - r)) / (r - 1))
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def jittered_grid(n=20, seed=20260808):
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        z = complex(rng.uniform(0.05, 0.95), rng.uniform(-2, 2))
        if min(abs(z - m) for m in (0, 1)) >= 0.05:
            pts.append(z)
    return pts


# ---------------------------------------------------------------------------
# direct route

def test_direct_examples():
    assert abs(eisenstein_direct(1, 0.5).value) < 1e-12
    assert eisenstein_direct(2, 0.5).value.real == pytest.approx(PI ** 2, rel=1e-12)
    # eps_4(1/2) = 2^4 * 2 * lambda(4) with lambda(4) = pi^4/96
    assert eisenstein_direct(4, 0.5).value.real == pytest.approx(PI ** 4 / 3.0, rel=1e-12)


def test_direct_against_raw_partial_sums():
    for (r, z) in [(2, 0.3 + 0.4j), (3, 0.7 - 1.1j), (5, 0.2 + 0.1j)]:
        slow = brute_symmetric_sum(r, z)
        fast = eisenstein_direct(r, z).value
        assert abs(fast - slow) <= 1e-11 * abs(slow)


def test_direct_unaccelerated_path():
    ctl = SumControl(max_terms=200_000, rel_tol=1e-6, accelerate=False)
    v = eisenstein_direct(3, 0.25, ctl)
    assert v.value.real == pytest.approx(eisenstein_closed(3, 0.25).real, rel=1e-6)


def test_direct_pole_guard():
    with pytest.raises(PoleError):
        eisenstein_direct(2, 1.0 + 1e-12j)


# ---------------------------------------------------------------------------
# closed forms

def test_closed_values():
    assert eisenstein_closed(1, 0.25) == pytest.approx(PI, rel=1e-14)
    assert eisenstein_closed(2, 0.25) == pytest.approx(2 * PI ** 2, rel=1e-14)
    assert eisenstein_closed(3, 0.25) == pytest.approx(2 * PI ** 3, rel=1e-13)
    with pytest.raises(UnsupportedOrder):
        eisenstein_closed(4, 0.25)


# ---------------------------------------------------------------------------
# polygamma route

def test_polygamma_route_examples():
    assert abs(eisenstein_polygamma(1, 0.5)) < 1e-13
    assert eisenstein_polygamma(2, 0.5).real == pytest.approx(PI ** 2, rel=1e-13)
    d = eisenstein_direct(3, 0.3).value
    assert abs(eisenstein_polygamma(3, 0.3) - d) <= 1e-10 * abs(d)


# ---------------------------------------------------------------------------
# integral route

def test_integral_examples():
    assert abs(eisenstein_integral(1, 0.5).value) < 1e-12
    assert eisenstein_integral(2, 0.5).value.real == pytest.approx(PI ** 2, rel=1e-11)
    d = eisenstein_direct(3, 0.3).value
    assert abs(eisenstein_integral(3, 2.3).value - d) <= 1e-10 * abs(d)


def test_integral_forms_agree():
    for (r, z) in [(1, 0.3 + 0.7j), (2, 0.6), (4, 0.7 - 1.3j), (5, 0.45 + 0.2j)]:
        a = eisenstein_integral(r, z, form="exponential").value
        b = eisenstein_integral(r, z, form="hyperbolic").value
        assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


def test_route_agreement_grid():
    for z in jittered_grid():
        for r in range(1, 7):
            d = eisenstein_direct(r, z).value
            p = eisenstein_polygamma(r, z)
            q = eisenstein_integral(r, z).value
            scale = max(abs(d), abs(p))
            assert abs(d - p) <= 1e-8 * scale
            assert abs(d - q) <= 1e-8 * scale
            assert abs(p - q) <= 1e-8 * scale
            if r <= 3:
                c = eisenstein_closed(r, z)
                assert abs(d - c) <= 1e-10 * max(abs(d), abs(c))


# ---------------------------------------------------------------------------
# properties

def test_periodicity_and_parity():
    for z in jittered_grid(6, seed=5):
        for r in (1, 2, 3, 4):
            a = eisenstein_direct(r, z).value
            assert abs(eisenstein_direct(r, z + 1).value - a) <= 1e-10 * max(1.0, abs(a))
            assert abs(eisenstein_direct(r, -z).value - (-1.0) ** r * a) <= 1e-10 * max(1.0, abs(a))


def test_derivative_ladder():
    h = 1e-5
    for z in jittered_grid(4, seed=9):
        for r in range(1, 7):
            fd = (eisenstein_polygamma(r, z + h) - eisenstein_polygamma(r, z - h)) / (2 * h)
            exact = -r * eisenstein_polygamma(r + 1, z)
            assert abs(fd - exact) <= 1e-5 * max(1.0, abs(exact))


# ---------------------------------------------------------------------------
# product identity

def test_product_identity_holds_for_r1():
    for z in jittered_grid(10, seed=3):
        res = product_identity_residual(1, z)
        assert abs(res) <= 1e-9 * abs(eisenstein_closed(3, z))


def test_product_identity_residual_exact_value_r2():
    res = product_identity_residual(2, 0.5)
    assert res.real == pytest.approx(PI ** 4 / 3.0, rel=1e-10)
    assert abs(res.imag) < 1e-12


def test_product_identity_uniqueness_witness():
    for r in (2, 3, 4):
        res = abs(product_identity_residual(r, 0.25))
        assert res > 0.05 * abs(eisenstein_polygamma(r + 2, 0.25))

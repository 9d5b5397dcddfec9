"""Classical Eisenstein series by four independent routes.

eps_r(z) = sum_{k in Z} (z+k)^(-r) with poles on the integers; the r = 1
series carries the symmetric (Eisenstein) summation convention and equals
pi*cot(pi*z).  Routes: symmetric partial sums with Richardson extrapolation,
trigonometric closed forms (r <= 3), the polygamma reflection combination,
and the strip-reduced exponential/hyperbolic integral representation.
"""
from __future__ import annotations

import cmath
import math

from .controls import Evaluation, QuadControl, SumControl, DEFAULT_QUAD, DEFAULT_SUM
from .errors import NonConvergence, PoleError, StripError, UnsupportedOrder
from .numkern import PI, as_complex, cot, digamma, polygamma
from .quadrature import adaptive_quad

INTEGER_GUARD = 1e-10  # hard floor; verification grids keep distance >= 0.05


def _guard_integer(z: complex, guard: float = INTEGER_GUARD) -> None:
    n = round(z.real)
    if abs(z - n) < guard:
        raise PoleError(f"eisenstein series has a pole at the integer {n}")


def _require_order(r: int) -> None:
    if r < 1:
        raise UnsupportedOrder("order r must be a positive integer")


def eisenstein_direct(r: int, z, ctl: SumControl = DEFAULT_SUM) -> Evaluation:
    """Symmetric partial sums of the defining series.

    r = 1 uses the paired-term form 1/z + sum_k 2z/(z^2 - k^2) whose tail is
    O(1/N); r >= 2 pairs (z+k)^(-r) + (z-k)^(-r).  With ctl.accelerate the
    partial sums at N = n0*2^j are Richardson-extrapolated, which all orders
    need to reach rel_tol ~ 1e-10 within a sane term budget.
    """
    _require_order(r)
    z = as_complex(z)
    _guard_integer(z)

    if r == 1:
        z2 = z * z
        term = lambda k: 2.0 * z / (z2 - k * k)
        first = 1.0 / z
    else:
        term = lambda k: (z + k) ** (-r) + (z - k) ** (-r)
        first = z ** (-r)

    if ctl.accelerate:
        from .summation import richardson_limit
        n0, levels = 64, 8
        while n0 * 2 ** levels > ctl.max_terms and levels > 2:
            levels -= 1
        value, err, used = richardson_limit(term, n0, levels, first=first)
        if err > ctl.rel_tol * max(1e-300, abs(value)) and err > 1e-14 * max(1.0, abs(value)):
            raise NonConvergence(f"eisenstein_direct(r={r}): err {err:.2e} after {used} terms")
        return Evaluation(value, err, used, "direct")

    total = complex(first)
    k = 0
    while k < ctl.max_terms:
        k += 1
        t = term(k)
        total += t
        # integral tail bound ~ |t| * k / (r - 1) for r >= 2, ~ 2|z|/k for r = 1
        tail = abs(t) * k / (r - 1) if r >= 2 else 2.0 * abs(z) / k
        if tail <= ctl.rel_tol * max(1e-300, abs(total)):
            return Evaluation(total, tail, k, "direct")
    raise NonConvergence(f"eisenstein_direct(r={r}): max_terms exhausted")


def eisenstein_closed(r: int, z) -> complex:
    """Trigonometric closed forms: pi*cot, pi^2/sin^2, pi^3*cot/sin^2."""
    _require_order(r)
    z = as_complex(z)
    _guard_integer(z)
    if r > 3:
        raise UnsupportedOrder("closed trigonometric forms exist for r in {1, 2, 3} only")
    if r == 1:
        return PI * cot(PI * z)
    s = cmath.sin(PI * z)
    if r == 2:
        return PI * PI / (s * s)
    return PI ** 3 * cot(PI * z) / (s * s)


def eisenstein_polygamma(r: int, z) -> complex:
    """eps_r(z) = [psi_(r-1)(1-z) + (-1)^r psi_(r-1)(z)] / (r-1)!, psi_0 = psi."""
    _require_order(r)
    z = as_complex(z)
    _guard_integer(z)
    if r == 1:
        return digamma(1.0 - z) - digamma(z)
    g = math.factorial(r - 1)
    return (polygamma(r - 1, 1.0 - z) + (-1.0) ** r * polygamma(r - 1, z)) / g


def _strip_reduce(z: complex) -> complex:
    return z - math.floor(z.real)


def _integrand_factory(r: int, zeta: complex, form: str):
    """Integrand t^(r-1)/(e^t - 1) * (e^(-zeta*t) + (-1)^r e^(zeta*t)), overflow-safe.

    Both exponents are regrouped through e^(-t) so every exponential has a
    non-positive real part for Re zeta in [0, 1); the hyperbolic form keeps
    the cosh/sinh split explicit and switches to exponential halves once
    |Re zeta|*t could overflow.
    """
    even = (r % 2 == 0)

    def exponential(t: float) -> complex:
        if t == 0.0:
            t = 1e-300
        den = -math.expm1(-t)  # 1 - e^-t, exact for small t
        if (not even) and abs(zeta) * t < 0.5:
            num = -2.0 * math.exp(-t) * cmath.sinh(zeta * t)
        else:
            num = cmath.exp(-(1.0 + zeta) * t) + (-1.0) ** r * cmath.exp(-(1.0 - zeta) * t)
        return t ** (r - 1) * num / den

    def hyperbolic(t: float) -> complex:
        if t == 0.0:
            t = 1e-300
        den = -math.expm1(-t)
        if abs(zeta.real) * t > 600.0:
            num = cmath.exp(-(1.0 + zeta) * t) + (-1.0) ** r * cmath.exp(-(1.0 - zeta) * t)
        elif even:
            num = 2.0 * math.exp(-t) * cmath.cosh(zeta * t)
        else:
            num = -2.0 * math.exp(-t) * cmath.sinh(zeta * t)
        return t ** (r - 1) * num / den

    return hyperbolic if form == "hyperbolic" else exponential


def eisenstein_integral(r: int, z, ctl: QuadControl = DEFAULT_QUAD,
                        form: str = "exponential") -> Evaluation:
    """Strip-reduced integral representation.

    eps_r(z) = zeta^(-r) + (1/(r-1)!) int_0^oo t^(r-1)/(e^t-1)
               (e^(-zeta t) + (-1)^r e^(zeta t)) dt,   zeta = z - floor(Re z).

    The hyperbolic form replaces the bracket by 2cosh(zeta t) (r even) or
    -2sinh(zeta t) (r odd).  The tail is truncated where the bound
    t^(r-1) e^((|Re zeta|-1) t) falls below the quadrature tolerance.
    """
    _require_order(r)
    if form not in ("exponential", "hyperbolic"):
        raise ValueError("form must be 'exponential' or 'hyperbolic'")
    z = as_complex(z)
    _guard_integer(z)
    zeta = _strip_reduce(z)
    if zeta.real == 0.0 and z.imag == 0.0:
        raise StripError("strip reduction landed on the pole line Re zeta = 0 with real z")
    # Fold Re zeta > 1/2 through eps_r(w) = (-1)^r eps_r(1-w): the integrand's
    # oscillatory amplitude grows like e^(Re zeta * t), so the half-strip is
    # the well-conditioned side.
    sign = 1.0
    if zeta.real > 0.5:
        zeta = 1.0 - zeta
        sign = (-1.0) ** r

    f = _integrand_factory(r, zeta, form)
    g = math.factorial(r - 1)
    rate = 1.0 - abs(zeta.real)  # decay of the slower exponential
    T = _tail_cutoff(r, rate, ctl.abs_tol)

    value = 0.0 + 0.0j
    err = 0.0
    panels = 0
    lo, seg = 0.0, 1.0
    while lo < T:
        hi = min(lo + seg, T)
        v, e, p = adaptive_quad(f, lo, hi, ctl)
        value += v
        err += e
        panels += p
        lo, seg = hi, seg * 2.0
    tail_bound = 2.0 * T ** (r - 1) * math.exp(-rate * T) / rate
    total = sign * (zeta ** (-r) + value / g)
    return Evaluation(total, err / g + tail_bound / g, panels, f"integral-{form}")


def _tail_cutoff(r: int, rate: float, abs_tol: float) -> float:
    if rate <= 0:
        raise StripError("strip reduction produced |Re zeta| >= 1")
    T = max(30.0 / rate, 8.0)
    for _ in range(40):
        bound = 2.0 * T ** (r - 1) * math.exp(-rate * T) / rate
        if bound < 0.05 * abs_tol:
            break
        T *= 1.5
    return T


def product_identity_residual(r: int, z) -> complex:
    """eps_(r+2)(z) - eps_(r+1)(z)*eps_r(z), each factor by its best route.

    Closed trigonometric forms are used through order 3, the polygamma
    representation above.  Identically ~0 only for r = 1.
    """
    _require_order(r)
    z = as_complex(z)
    _guard_integer(z)

    def best(order: int) -> complex:
        if order <= 3:
            return eisenstein_closed(order, z)
        return eisenstein_polygamma(order, z)

    return best(r + 2) - best(r + 1) * best(r)

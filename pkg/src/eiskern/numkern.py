"""Kernel special functions consumed by every other module.

Gamma, digamma and polygamma for complex arguments, Riemann zeta / Dirichlet
eta / Dirichlet lambda on the real line, exact-rational Bernoulli numbers and
polynomials, the Pochhammer symbol, the odd-zeta power series with its
digamma closed forms, and the real-part-of-digamma integral.

Algorithm notes (also the tested contracts):

* digamma: arguments with Re z < 0 go through the reflection formula
  psi(z) = psi(1 - z) - pi*cot(pi*z); otherwise the recurrence
  psi(z) = psi(z+1) - 1/z shifts Re z up to >= 14 where the asymptotic
  log expansion with Bernoulli-number tail is accurate to ~1e-16.
* polygamma uses the same shift-then-asymptotic scheme on psi_r; the direct
  summation of the defining series is kept in the test suite as the slow
  oracle.
* zeta for non-even-integer s > 1 is eta(s) / (1 - 2^(1-s)) because the
  alternating series is stable down to s -> 1+; even integer s uses the
  exact Bernoulli closed form.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .controls import Evaluation, QuadControl, SumControl, DEFAULT_QUAD
from .errors import DomainError, PoleError
from .quadrature import adaptive_quad, quad_decaying_tail
from .summation import alternating_sum

EULER_GAMMA = 0.5772156649015328606065120900824024
PI = math.pi

POLE_GUARD = 1e-12  # hard rejection radius around poles

# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials (exact rational arithmetic internally)

_BERN: list[Fraction] = [Fraction(1)]


def _extend_bernoulli(n: int) -> None:
    while len(_BERN) <= n:
        m = len(_BERN)
        # sum_{k=0}^{m} C(m+1, k) B_k = 0  for m >= 1
        s = sum(Fraction(math.comb(m + 1, k)) * _BERN[k] for k in range(m))
        _BERN.append(-s / (m + 1))


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention); B_(2m+1) = 0 for m >= 1."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    _extend_bernoulli(n)
    return _BERN[n]


_extend_bernoulli(64)  # read-only cache, initialized before first concurrent use


def bernoulli_poly(n: int, x: float) -> float:
    """Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    _extend_bernoulli(n)
    return float(sum(float(math.comb(n, k) * _BERN[k]) * x ** (n - k) for k in range(n + 1)))


# ---------------------------------------------------------------------------
# helpers

def as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("argument must have finite real and imaginary part")
    return z


def _guard_nonpositive_integer(z: complex, what: str) -> None:
    if abs(z.imag) <= POLE_GUARD:
        n = round(z.real)
        if n <= 0 and abs(z - n) <= POLE_GUARD:
            raise PoleError(f"{what} has a pole at the non-positive integer {n}")


def cot(w: complex) -> complex:
    """Complex cotangent, overflow-safe for large |Im w|."""
    if w.imag >= 0:
        q = cmath.exp(2j * w)
        return 1j * (q + 1.0) / (q - 1.0)
    q = cmath.exp(-2j * w)
    return -1j * (q + 1.0) / (q - 1.0)


def coth(w: complex) -> complex:
    """Complex hyperbolic cotangent, overflow-safe for large |Re w|."""
    if w.real >= 0:
        p = cmath.exp(-2.0 * w)
        return (1.0 + p) / (1.0 - p)
    p = cmath.exp(2.0 * w)
    return -(1.0 + p) / (1.0 - p)


# ---------------------------------------------------------------------------
# Gamma

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(z) -> complex:
    """Gamma function, principal value, complex arguments admitted.

    Positive real arguments use the C library; elsewhere a Lanczos
    approximation (g = 7, 9 terms) with the reflection formula for
    Re z < 1/2.  Relative accuracy ~1e-13 on moderate arguments.
    """
    z = as_complex(z)
    _guard_nonpositive_integer(z, "gamma")
    if z.imag == 0.0 and z.real > 0.0:
        return complex(math.gamma(z.real))
    if z.real < 0.5:
        return PI / (cmath.sin(PI * z) * gamma(1.0 - z))
    w = z - 1.0
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * PI) * t ** (w + 0.5) * cmath.exp(-t) * x


# ---------------------------------------------------------------------------
# digamma / polygamma

_SHIFT_RE = 14.0
_DIGAMMA_ASY = tuple(float(bernoulli_number(2 * j)) / (2 * j) for j in range(1, 9))


def digamma(z) -> complex:
    """Digamma psi(z) by regime dispatch (reflection / shift / asymptotic)."""
    z = as_complex(z)
    _guard_nonpositive_integer(z, "digamma")
    if z.real < 0.0:
        return digamma(1.0 - z) - PI * cot(PI * z)
    acc = 0.0 + 0.0j
    w = z
    while w.real < _SHIFT_RE:
        acc -= 1.0 / w
        w += 1.0
    inv = 1.0 / w
    inv2 = inv * inv
    s = cmath.log(w) - 0.5 * inv
    p = inv2
    for c in _DIGAMMA_ASY:
        s -= c * p
        p *= inv2
    return s + acc


def polygamma(r: int, z) -> complex:
    """Polygamma psi_r(z), r >= 1; shift-then-asymptotic scheme.

    psi_r(z) = (-1)^(r+1) r! sum_{k>=0} (z+k)^(-(r+1)).
    """
    if r < 1:
        raise DomainError("polygamma order must be >= 1 (use digamma for r = 0)")
    z = as_complex(z)
    _guard_nonpositive_integer(z, "polygamma")
    rfact = math.factorial(r)
    shift_coeff = (-1.0) ** (r + 1) * rfact
    acc = 0.0 + 0.0j
    w = z
    while w.real < _SHIFT_RE:
        acc += shift_coeff * w ** (-(r + 1))
        w += 1.0
    inv = 1.0 / w
    s = math.factorial(r - 1) * inv ** r + 0.5 * rfact * inv ** (r + 1)
    for j in range(1, 11):
        c = float(bernoulli_number(2 * j)) * math.factorial(2 * j + r - 1) / math.factorial(2 * j)
        s += c * inv ** (2 * j + r)
    return (-1.0) ** (r - 1) * s + acc


# ---------------------------------------------------------------------------
# zeta family on the real line

_ETA_CTL = SumControl(max_terms=4096, rel_tol=1e-12, accelerate=True)


def dirichlet_eta(s: float) -> float:
    """Dirichlet eta(s) = sum (-1)^(n-1) n^(-s), s > 0; eta(1) = log 2 exactly."""
    if s <= 0:
        raise DomainError("dirichlet_eta requires s > 0")
    if s == 1.0:
        return math.log(2.0)
    value, _, _ = alternating_sum(lambda k: k ** (-s), _ETA_CTL)
    return value.real


def riemann_zeta(s: float) -> float:
    """zeta(s) for s > 1; even integers use the exact Bernoulli closed form."""
    if s <= 1:
        raise DomainError("riemann_zeta requires s > 1")
    n = round(s)
    if abs(s - n) <= 1e-12 and n % 2 == 0:
        m = n // 2
        b = bernoulli_number(2 * m)
        return float((-1) ** (m + 1)) * 2.0 ** (2 * m - 1) * PI ** (2 * m) * float(b) / math.factorial(2 * m)
    return dirichlet_eta(s) / -math.expm1((1.0 - s) * math.log(2.0))


def dirichlet_lambda(r: float) -> float:
    """lambda(r) = sum_{k>=0} (2k+1)^(-r) = (1 - 2^(-r)) zeta(r), r > 1."""
    if r <= 1:
        raise DomainError("dirichlet_lambda requires r > 1")
    return -math.expm1(-r * math.log(2.0)) * riemann_zeta(r)


# ---------------------------------------------------------------------------
# Pochhammer

def pochhammer(rho, sigma: int) -> complex:
    """Rising factorial (rho)_sigma as a finite product; (rho)_0 = 1, (0)_0 = 1."""
    if sigma < 0:
        raise ValueError("pochhammer requires sigma >= 0")
    rho = as_complex(rho)
    out = 1.0 + 0.0j
    for i in range(sigma):
        out *= rho + i
    return out


# ---------------------------------------------------------------------------
# odd-zeta power series and its digamma closed forms

_ZETA_ODD_VARIANTS = ("plain", "alternating", "real_part")


def zeta_odd_series(z, variant: str = "plain", ctl: SumControl | None = None) -> Evaluation:
    """Power series sum_k zeta(2k+1) z^(2k) (k >= 1) against its digamma form.

    variant "plain":        sum zeta(2k+1) z^(2k)        = -[psi(1+z)+psi(1-z)]/2 - gamma
    variant "alternating":  sum (-1)^(k-1) zeta(2k+1) z^(2k)
                                                         = [psi(1+iz)+psi(1-iz)]/2 + gamma
    variant "real_part":    same series, z real,          = gamma + Re psi(1+iz)

    Returns the digamma form; the truncated-series value and the discrepancy
    between the two representations land in Evaluation.diagnostics.
    """
    if variant not in _ZETA_ODD_VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    z = as_complex(z)
    if variant == "real_part" and z.imag != 0.0:
        raise DomainError("real_part variant requires real z")
    if abs(z) >= 1.0:
        raise DomainError("zeta_odd_series requires |z| < 1")
    ctl = ctl or SumControl()

    if variant == "plain":
        closed = -0.5 * (digamma(1.0 + z) + digamma(1.0 - z)) - EULER_GAMMA
    else:
        closed = 0.5 * (digamma(1.0 + 1j * z) + digamma(1.0 - 1j * z)) + EULER_GAMMA
        if variant == "real_part":
            closed = complex(EULER_GAMMA + digamma(1.0 + 1j * z).real)

    series = 0.0 + 0.0j
    term_bound = 1.0
    k = 0
    z2 = z * z
    p = 1.0 + 0.0j
    while k < min(ctl.max_terms, 400):
        k += 1
        p *= z2
        coeff = riemann_zeta(2 * k + 1)
        t = coeff * p
        if variant != "plain":
            t *= (-1.0) ** (k - 1)
        series += t
        term_bound = abs(t)
        if term_bound <= ctl.rel_tol * max(abs(series), 1e-300) and k >= 4:
            break
    disc = abs(series - closed)
    return Evaluation(
        value=closed,
        err_estimate=16 * abs(closed) * 1e-16 + 1e-300,
        terms_used=k,
        route="digamma",
        diagnostics={"series_value": series, "pair_discrepancy": disc,
                     "series_tail_bound": term_bound / max(1e-300, 1.0 - abs(z2))},
    )


# ---------------------------------------------------------------------------
# integral form of Re psi on the vertical line through 1

def digamma_realpart_integral(t: float, ctl: QuadControl = DEFAULT_QUAD) -> float:
    """-gamma + 2*int_0^oo e^(-u) sin^2(t*u/(2*pi)) / sinh(u) du = Re psi(1 + i*t/(2*pi))."""
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    freq = t / (2.0 * PI)

    def f(u: float) -> float:
        if u < 1e-12:
            return freq * freq * u  # limit of sin^2/sinh
        return math.exp(-u) * math.sin(freq * u) ** 2 / math.sinh(u)

    head, _, _ = adaptive_quad(f, 0.0, 1.0, ctl)
    tail, _, _ = quad_decaying_tail(f, 1.0, rate=2.0, ctl=ctl, cutoff_scale=2.0)
    return -EULER_GAMMA + 2.0 * (head + tail).real

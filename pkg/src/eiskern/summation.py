"""Series acceleration engines: Richardson, Euler averaging, Wynn epsilon.

All engines work on complex sequences; they are linear (or rational, for the
epsilon algorithm) in the partial sums, so conjugate symmetry of the inputs
is preserved to machine precision.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .controls import SumControl, DEFAULT_SUM
from .errors import NonConvergence


def richardson_limit(term: Callable[[int], complex], n0: int, levels: int,
                     first: complex = 0.0) -> tuple[complex, float, int]:
    """Extrapolate S = first + sum_{k>=1} term(k) from partial sums at n0*2^j.

    Assumes the tail of the partial sums expands in powers of 1/N, which
    holds for symmetric sums of rational terms; table stage m removes the
    1/N^m term.  Returns (value, err_estimate, largest N used).
    """
    acc = complex(first)
    k = 1
    table: list[complex] = []          # table[m] = R[j][m] of the last row
    n_max = n0
    for j in range(levels + 1):
        n_max = n0 * 2 ** j
        while k <= n_max:
            acc += term(k)
            k += 1
        row = [acc]
        for m in range(1, j + 1):
            fac = 2.0 ** m - 1.0
            row.append(row[m - 1] + (row[m - 1] - table[m - 1]) / fac)
        table = row
    corner = table[-1]
    err = abs(table[-1] - table[-2]) if len(table) >= 2 else abs(corner)
    return corner, err, n_max


def alternating_sum(term: Callable[[int], complex], ctl: SumControl = DEFAULT_SUM,
                    start: int = 1) -> tuple[complex, float, int]:
    """Sum_{k>=start} (-1)^(k-start) term(k) with term(k) the unsigned tail.

    With ctl.accelerate the tail is resummed by repeated averaging of partial
    sums (the Euler transformation, 48 stages); when the moduli are not
    eventually monotone the epsilon algorithm takes over.  Plain summation
    with the alternating-series remainder bound otherwise.
    """
    if not ctl.accelerate:
        total = 0.0 + 0.0j
        sign = 1.0
        for j in range(ctl.max_terms):
            t = term(start + j)
            total += sign * t
            sign = -sign
            if abs(t) <= ctl.rel_tol * max(1e-300, abs(total)):
                return total, abs(t), j + 1
        raise NonConvergence("alternating series: max_terms exhausted")

    stages = 48
    value = err = None
    used = 0
    for n0 in (8, 32, 128, 512):
        n_need = n0 + stages + 1
        if n_need > ctl.max_terms:
            break
        terms = [term(start + j) for j in range(n_need)]
        partials = []
        acc = 0.0 + 0.0j
        sign = 1.0
        for t in terms:
            acc += sign * t
            partials.append(acc)
            sign = -sign
        mags = [abs(t) for t in terms]
        monotone = all(mags[j + 1] <= mags[j] * (1 + 1e-9) for j in range(n0, n_need - 1))
        if monotone:
            row = partials[n0:]
            corners = [row[-1]]
            while len(row) > 1:
                row = [(row[i] + row[i + 1]) / 2.0 for i in range(len(row) - 1)]
                corners.append(row[-1])
            value, err, used = corners[-1], abs(corners[-1] - corners[-2]), n_need
        else:
            # modulated moduli defeat plain averaging; the epsilon algorithm
            # resums mixtures of unit-circle transients
            value, err = wynn_epsilon(partials[-64:])
            used = n_need
        if err <= max(ctl.rel_tol * max(1e-300, abs(value)), 1e-16):
            return value, err, used
    if value is not None:
        # best effort: accept if within a generous multiple, else refuse
        if err <= 128 * ctl.rel_tol * max(1e-300, abs(value)):
            return value, err, used
    raise NonConvergence("alternating series: acceleration did not reach rel_tol")


def wynn_epsilon(partials: Sequence[complex]) -> tuple[complex, float]:
    """Shanks-type limit of a sequence of partial sums via the epsilon table.

    Returns the deepest even-column entry and its distance to the previous
    even column as error estimate.  Suited to power-series partial sums on
    the boundary of convergence (conditionally convergent Fourier sums).
    """
    n = len(partials)
    if n < 3:
        return partials[-1], abs(partials[-1])
    eps_prev = [0.0 + 0.0j] * (n + 1)          # column -1
    eps_cur = list(partials)                   # column 0
    best = eps_cur[-1]
    prev_best = best
    col = 0
    while len(eps_cur) >= 2:
        nxt = []
        for i in range(len(eps_cur) - 1):
            d = eps_cur[i + 1] - eps_cur[i]
            if d == 0:
                return eps_cur[i + 1], 0.0
            nxt.append(eps_prev[i + 1] + 1.0 / d)
        eps_prev, eps_cur = eps_cur, nxt
        col += 1
        if col % 2 == 0 and eps_cur:
            prev_best, best = best, eps_cur[-1]
    return best, abs(best - prev_best)


def power_tail(s: float, n: int, j_max: int = 8) -> float:
    """Euler-Maclaurin estimate of sum_{k>n} k^(-s) for real s > 1.

    tail = n^(1-s)/(s-1) - n^(-s)/2 + sum_j B_2j/(2j)! (s)_{2j-1} n^(-s-2j+1)
    """
    from .numkern import bernoulli_number  # local import avoids a cycle

    tail = n ** (1.0 - s) / (s - 1.0) - 0.5 * n ** (-s)
    rising = s
    fact = 1.0
    for j in range(1, j_max + 1):
        fact *= (2 * j - 1) * (2 * j)
        if j > 1:
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2)
        b = float(bernoulli_number(2 * j))
        tail += b / fact * rising * n ** (-s - 2 * j + 1)
    return tail

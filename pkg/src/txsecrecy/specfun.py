"""Exponential-integral and incomplete-gamma kernels.

The closed-form ergodic secrecy rates are built from terms of the shape
e^a * Ei(-a) with ``a`` up to the sum of channel rate parameters; the
fused evaluation avoids overflow of e^a for large ``a``.
"""

from __future__ import annotations

import math

import scipy.special as sc

from .errors import DomainError


def expint_ei(x: float) -> float:
    """Exponential integral Ei(x) for nonzero real x."""
    if x == 0.0:
        raise DomainError("Ei has a logarithmic pole at 0")
    return float(sc.expi(x))


def _e1_scaled_cf(a: float, maxiter: int = 200, tol: float = 1e-15) -> float:
    """e^a * E1(a) by the modified Lentz continued fraction, a > 0.

    E1(a) = e^-a / (a + 1 - 1/(a + 3 - 4/(a + 5 - 9/(...)))).
    """
    tiny = 1e-300
    b = a + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, maxiter):
        an = -i * i
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return h
    return h


def exp_scaled_ei(a: float) -> float:
    """Fused e^a * Ei(-a) for a > 0, overflow-free up to a = 1e4."""
    if a <= 0.0:
        raise DomainError("exp_scaled_ei requires a > 0")
    if a < 600.0:
        # exp(a) stays finite; exp1 is accurate down to tiny a
        return -float(math.exp(a) * sc.exp1(a))
    return -_e1_scaled_cf(a)


def upper_incomplete_gamma_int(m: int, x: float) -> float:
    """Upper incomplete gamma Gamma[m, x] for integer m.

    For m >= 1 the finite-sum form Gamma[m, x] = (m-1)! e^-x
    sum_{j<m} x^j/j! holds for any real x.  For m <= 0 the defining
    integral only converges for x > 0 and reduces to the generalized
    exponential integral E_n via Gamma[1-n, x] = x^(1-n) E_n(x).
    """
    m = int(m)
    if m >= 1:
        if x == 0.0:
            return float(math.factorial(m - 1))
        term = 1.0
        acc = [1.0]
        for j in range(1, m):
            term *= x / j
            acc.append(term)
        return float(math.factorial(m - 1) * math.exp(-x) * math.fsum(acc))
    if x <= 0.0:
        raise DomainError(f"Gamma[{m}, {x}] diverges for nonpositive order at x <= 0")
    n = 1 - m
    return float(x ** (1 - n) * sc.expn(n, x))

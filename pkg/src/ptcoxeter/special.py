"""Terminating hypergeometric series and classical polynomials at complex argument.

Only the polynomial (terminating) cases are supported. Laguerre and Jacobi
polynomials use three-term recurrences; the hypergeometric functions use the
finite power series directly, so the two routes can check each other.
"""
from __future__ import annotations

import math
from typing import Sequence

__all__ = [
    "UnsupportedEvaluationError",
    "pochhammer",
    "as_nonpositive_int",
    "hyp1f1_terminating",
    "hyp2f1_terminating",
    "hyp1f1_coefficients",
    "laguerre",
    "jacobi",
    "ortho_poly_eval",
    "laguerre_identity_residual",
]

INT_TOL = 1e-9


class UnsupportedEvaluationError(ValueError):
    """Requested a non-terminating or ill-defined series."""


def pochhammer(x, n: int):
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1."""
    out = 1
    for k in range(n):
        out *= x + k
    return out


def as_nonpositive_int(a) -> int | None:
    """-n if ``a`` is (numerically) a non-positive integer -n, else None."""
    a = complex(a)
    if abs(a.imag) > INT_TOL:
        return None
    k = round(a.real)
    if k <= 0 and abs(a.real - k) <= INT_TOL:
        return int(k)
    return None


def hyp1f1_coefficients(a, b) -> list:
    """Power-series coefficients of 1F1[a; b; z] for terminating ``a``."""
    m = as_nonpositive_int(a)
    if m is None:
        raise UnsupportedEvaluationError(f"1F1 with a={a} does not terminate")
    n = -m
    coefs = [1.0 + 0j]
    term = 1.0 + 0j
    for k in range(n):
        den = (b + k) * (k + 1)
        if abs(den) < INT_TOL:
            raise UnsupportedEvaluationError(f"1F1 denominator vanishes (b={b})")
        term = term * (m + k) / den
        coefs.append(term)
    return coefs


def hyp1f1_terminating(a, b, z: complex) -> complex:
    """Kummer 1F1[a; b; z] for a = -n, n a non-negative integer."""
    coefs = hyp1f1_coefficients(a, b)
    acc = 0j
    for c in reversed(coefs):
        acc = acc * z + c
    return acc


def hyp2f1_terminating(a, b, c, z: complex) -> complex:
    """Gauss 2F1[a, b; c; z] when ``a`` or ``b`` is a non-positive integer."""
    m = as_nonpositive_int(a)
    other = b
    if m is None:
        m = as_nonpositive_int(b)
        other = a
    if m is None:
        raise UnsupportedEvaluationError(f"2F1 with a={a}, b={b} does not terminate")
    n = -m
    coefs = [1.0 + 0j]
    term = 1.0 + 0j
    for k in range(n):
        den = (c + k) * (k + 1)
        if abs(den) < INT_TOL:
            raise UnsupportedEvaluationError(f"2F1 denominator vanishes (c={c})")
        term = term * (m + k) * (other + k) / den
        coefs.append(term)
    acc = 0j
    for t in reversed(coefs):
        acc = acc * z + t
    return acc


def laguerre(n: int, alpha, z: complex) -> complex:
    """Generalised Laguerre polynomial L_n^alpha(z), any real alpha."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    prev, cur = 1.0 + 0j, 1.0 + alpha - z
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - z) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def _binom(y, k: int):
    return pochhammer(y - k + 1, k) / math.factorial(k)


def _jacobi_explicit(n: int, a, b, x: complex) -> complex:
    u, v = (x - 1) / 2, (x + 1) / 2
    return sum(_binom(n + a, n - s) * _binom(n + b, s) * u ** s * v ** (n - s)
               for s in range(n + 1))


def jacobi(n: int, a, b, x: complex) -> complex:
    """Jacobi polynomial P_n^(a,b)(x).

    Three-term recurrence; falls back to the explicit binomial sum when a
    recurrence denominator vanishes (a + b a negative integer).
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return 1.0 + 0j
    p0 = 1.0 + 0j
    p1 = (a + 1) + (a + b + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        den = 2 * k * (k + a + b) * (s - 2)
        if abs(den) < INT_TOL:
            return _jacobi_explicit(n, a, b, x)
        c1 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c2 = 2 * (k + a - 1) * (k + b - 1) * s
        p0, p1 = p1, (c1 * p1 - c2 * p0) / den
    return p1


def ortho_poly_eval(family: str, params: Sequence, z: complex) -> complex:
    """Dispatch: laguerre (n, alpha), jacobi (n, a, b), hyp1f1 (a, b), hyp2f1 (a, b, c)."""
    if family == "laguerre":
        n, alpha = params
        return laguerre(int(n), alpha, z)
    if family == "jacobi":
        n, a, b = params
        return jacobi(int(n), a, b, z)
    if family in ("hyp1f1", "hyp1f1-terminating"):
        a, b = params
        return hyp1f1_terminating(a, b, z)
    if family in ("hyp2f1", "hyp2f1-terminating"):
        a, b, c = params
        return hyp2f1_terminating(a, b, c, z)
    raise ValueError(f"unknown family {family!r}")


def laguerre_identity_residual(n: int, m: int, z: complex) -> float:
    """|z^(m-n) n! L_n^(m-n)(z^2) - (-z)^(n-m) m! L_m^(n-m)(z^2)|."""
    z = complex(z)
    lhs = z ** (m - n) * math.factorial(n) * laguerre(n, m - n, z * z)
    rhs = (-z) ** (n - m) * math.factorial(m) * laguerre(m, n - m, z * z)
    return abs(lhs - rhs)

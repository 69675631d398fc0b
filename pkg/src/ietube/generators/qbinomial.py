"""Gaussian (q-)binomial coefficients in exact integer arithmetic."""

from __future__ import annotations

from fractions import Fraction
from math import prod


def q_integer(k: int, q: int) -> int:
    """``[k]_q = 1 + q + ... + q^(k-1)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(q**i for i in range(k))


def gauss_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_q^n``.

    The ratio of q-factorials is formed explicitly and the division checked
    to be exact.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if q < 2:
        raise ValueError("q must be at least 2")
    num = prod(q_integer(n - i, q) for i in range(k))
    den = prod(q_integer(i, q) for i in range(1, k + 1))
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact q-binomial division for ({n}, {k}, {q})")
    return quot


def cauchy_identity_check(k: int, q: int, t: Fraction | int) -> bool:
    """Exact check of ``sum_i q^C(i,2) [k choose i]_q t^i == prod_i (1 + t q^i)``."""
    t = Fraction(t)
    lhs = sum(q ** (i * (i - 1) // 2) * gauss_binomial(k, i, q) * t**i for i in range(k + 1))
    rhs = prod((1 + t * q**i for i in range(k)), start=Fraction(1))
    return lhs == rhs

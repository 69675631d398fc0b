"""Named set-system families plus random systems for property tests."""

from __future__ import annotations

import random

from ..core import InputError, SetSystem, full_set, members

MAX_UNIQUENESS_N = 20
RANDOM_ATTEMPTS = 1000


def gen_uniqueness(n: int) -> SetSystem:
    """Ground set = proper subsets ``T`` of ``[n]``; ``T`` lies in ``F_i`` iff ``i`` is not in ``T``.

    Its nerve equals its Venn diagram, so the standard formula is the only one.
    """
    if not 1 <= n <= MAX_UNIQUENESS_N:
        raise InputError(f"n must be in 1..{MAX_UNIQUENESS_N}, got {n}")
    top = full_set(n)
    ts = range(top)  # every subset except [n] itself
    return SetSystem(n, tuple(top ^ t for t in ts), tuple(frozenset(members(t)) for t in ts))


def block_end(i: int, y: int) -> int:
    """Smallest multiple of ``y`` that is at least ``i``."""
    return y * -(-i // y)


def gen_exponential(ell: int, y: int = 5) -> SetSystem:
    """``F_i = {i} + {g(i)+1, ..., y*ell}`` where ``g(i)`` rounds ``i`` up to a multiple of ``y``.

    The Venn-supported formula has coefficient ``(1-y)^(b-1)`` on block ``b``.
    """
    if ell < 1 or y < 2:
        raise InputError("need ell >= 1 and y >= 2")
    n = y * ell
    points = []
    for j in range(1, n + 1):
        mem = 1 << (j - 1)
        for i in range(1, n + 1):
            if j > block_end(i, y):
                mem |= 1 << (i - 1)
        points.append(mem)
    return SetSystem(n, tuple(points), tuple(range(1, n + 1)))


def gen_random(n: int, m_target: int, seed: int) -> SetSystem:
    """``m_target`` distinct nonempty random regions over ``n`` sets, one point each.

    Draws are repeated until the sets come out pairwise distinct, which needs
    ``2**m_target >= n``.
    """
    if n < 1 or not 1 <= m_target <= (1 << n) - 1:
        raise InputError(f"cannot place {m_target} distinct nonempty regions on {n} sets")
    if (1 << m_target) < n:
        raise InputError(f"{m_target} points cannot carry {n} pairwise distinct sets")
    rng = random.Random(seed)
    for _ in range(RANDOM_ATTEMPTS):
        regions = rng.sample(range(1, 1 << n), m_target)
        cols = [0] * n
        for p, r in enumerate(regions):
            for i in members(r):
                cols[i - 1] |= 1 << p
        if len(set(cols)) == n:
            return SetSystem(n, tuple(regions))
    raise InputError(f"no system with distinct sets found for n={n}, m={m_target} (seed {seed})")

"""Brute-force reference computations, deliberately sharing no code paths
with the library (explicit Python sets, dense Fraction linear algebra,
exhaustive enumeration)."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def subsets(labels):
    labels = list(labels)
    for r in range(1, len(labels) + 1):
        for c in combinations(labels, r):
            yield frozenset(c)


def explicit_sets(regions):
    """Regions given as frozensets of labels -> dict label -> set of point ids."""
    sets = {}
    for p, reg in enumerate(regions):
        for i in reg:
            sets.setdefault(i, set()).add(p)
    return sets


def union_measure(regions, weights):
    pts = set().union(*explicit_sets(regions).values())
    return sum(weights[p] for p in pts)


def formula_value(regions, coeffs, weights):
    """Sum of coeff * mu(intersection of the named sets), by set intersection."""
    sets = explicit_sets(regions)
    total = 0
    for I, c in coeffs.items():
        common = set.intersection(*(sets.get(i, set()) for i in I))
        total += c * sum(weights[p] for p in common)
    return total


def standard_vector(n):
    return {I: (-1) ** (len(I) + 1) for I in subsets(range(1, n + 1))}


def solve_dense(mat, rhs):
    """Gauss-Jordan elimination over the rationals, no structure assumed."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[-1] for row in a]


def mobius_dense(regions):
    """Solve B y = 1 where B[j][k] = [regions[k] subset of regions[j]]."""
    B = [[1 if rk <= rj else 0 for rk in regions] for rj in regions]
    return solve_dense(B, [1] * len(regions))


def selector_min(order, tau):
    """Earliest label of tau in the given order (order[0] first)."""
    for i in order:
        if i in tau:
            return i
    raise ValueError("empty region")


def predicate(regions, order, theta):
    return any(theta <= tau and selector_min(order, tau) in theta for tau in regions)


def brute_selector_complex(n, regions, order):
    """Every sigma all of whose nonempty subsets satisfy the selector predicate."""
    good = {th for th in subsets(range(1, n + 1)) if predicate(regions, order, th)}
    return {s for s in good if all(th in good for th in subsets(s))}


def nerve_columns_match(n, regions):
    """Every nerve column of A equals some Venn column, via explicit lists."""
    nerve = {s for tau in regions for s in subsets(tau)}
    col = lambda s: tuple(s <= tau for tau in regions)
    venn_cols = {col(nu) for nu in regions}
    return all(col(s) in venn_cols for s in nerve)


def count_subspaces(n, k, q):
    """Number of k-dim subspaces of F_q^n: ordered independent k-frames / |GL_k|."""

    def independent_frames(dim, k):
        vecs = list(product(range(q), repeat=dim))
        count = 0
        for frame in product(vecs, repeat=k):
            span = {tuple([0] * dim)}
            ok = True
            for v in frame:
                if v in span:
                    ok = False
                    break
                span = {tuple((s + c * x) % q for s, x in zip(w, v)) for w in span for c in range(q)}
            count += ok
        return count

    return independent_frames(n, k) // independent_frames(k, k)

"""Subspace lattices of PG(d, p) over prime fields and their set systems."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from ..core import InputError, ResourceError, SetSystem, index_set
from .qbinomial import gauss_binomial, q_integer

Vector = tuple[int, ...]
Basis = tuple[Vector, ...]

DEFAULT_ELEMENT_BUDGET = 10**6


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def row_reduce(rows, p: int) -> Basis:
    """Reduced row-echelon basis of the span of ``rows`` over ``F_p``.

    Zero rows are dropped; the result is the canonical form of the subspace.
    """
    mat = [[x % p for x in r] for r in rows]
    width = len(mat[0]) if mat else 0
    out: list[list[int]] = []
    for col in range(width):
        piv = next((r for r in mat if r[col]), None)
        if piv is None:
            continue
        mat.remove(piv)
        inv = pow(piv[col], -1, p)
        piv = [x * inv % p for x in piv]
        for r in (*out, *mat):
            c = r[col]
            if c:
                for j in range(width):
                    r[j] = (r[j] - c * piv[j]) % p
        out.append(piv)
    return tuple(tuple(r) for r in out)


def _pivots(basis: Basis) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in basis]


def in_span(basis: Basis, v: Vector, p: int) -> bool:
    """Membership of ``v`` in the row space of a reduced echelon ``basis``."""
    w = list(v)
    for r, c in zip(basis, _pivots(basis)):
        a = w[c]
        if a:
            w = [(x - a * y) % p for x, y in zip(w, r)]
    return not any(w)


def echelon_bases(dim: int, rank: int, p: int):
    """Every reduced row-echelon ``rank x dim`` matrix over ``F_p``."""
    for pivots in combinations(range(dim), rank):
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, dim) if j not in pivots]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * dim for _ in range(rank)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            yield tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class ProjectiveLattice:
    """All subspaces of PG(d, q), q prime, by projective dimension ``-1..d``.

    ``elements[k]`` lists the canonical bases of ``k``-dimensional subspaces
    (linear dimension ``k + 1``); ``atom_index`` maps each point's basis
    vector to its label ``1..n``.
    """

    d: int
    q: int
    elements: dict[int, list[Basis]]
    atom_index: dict[Vector, int] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.atom_index)

    def grade_counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.elements.items()}

    def contains(self, big: Basis, small: Basis) -> bool:
        """Subspace containment, by reducing each vector of ``small`` against ``big``."""
        return all(in_span(big, v, self.q) for v in small)

    def atoms_below(self, x: Basis) -> list[int]:
        return sorted(label for v, label in self.atom_index.items() if in_span(x, v, self.q))

    def join(self, bases) -> Basis:
        rows = [r for b in bases for r in b]
        return row_reduce(rows, self.q) if rows else ()

    def is_atomistic(self) -> bool:
        """Every subspace equals the span of the points it contains."""
        vecs = {label: v for v, label in self.atom_index.items()}
        for grade in self.elements.values():
            for x in grade:
                if self.join([(vecs[a],) for a in self.atoms_below(x)]) != x:
                    return False
        return True

    def regions_by_dimension(self) -> dict[int, list[int]]:
        """Index set ``At_x`` of every nonzero element, grouped by dimension."""
        return {
            k: [index_set(self.atoms_below(x)) for x in xs]
            for k, xs in self.elements.items()
            if k >= 0
        }


def projective_lattice(d: int, q: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> ProjectiveLattice:
    if d < 1:
        raise InputError("d must be at least 1")
    if not is_prime(q):
        raise InputError(f"q must be prime, got {q}")
    total = sum(gauss_binomial(d + 1, r, q) for r in range(d + 2))
    if total > budget:
        raise ResourceError(f"PG({d},{q}) has {total} subspaces, over the budget of {budget}")
    elements = {r - 1: list(echelon_bases(d + 1, r, q)) for r in range(d + 2)}
    atoms = {b[0]: i for i, b in enumerate(elements[0], start=1)}
    return ProjectiveLattice(d, q, elements, atoms)


def gen_projective(d: int, q: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> tuple[SetSystem, ProjectiveLattice]:
    """Set system ``F_a = {x : x >= a}`` over the nonzero subspaces of PG(d, q).

    Points are labelled by the canonical basis of their subspace.
    """
    lat = projective_lattice(d, q, budget)
    labels, points = [], []
    for k in range(d + 1):
        for x in lat.elements[k]:
            labels.append(x)
            points.append(index_set(lat.atoms_below(x)))
    return SetSystem(lat.n, tuple(points), tuple(labels)), lat


def projective_expected_l1(d: int, q: int) -> int:
    """Closed-form ℓ1-norm: sum over k of ``q^(k(k+1)/2)`` times the number of k-subspaces."""
    return sum(q ** (k * (k + 1) // 2) * gauss_binomial(d + 1, k + 1, q) for k in range(d + 1))


def projective_expected_m(d: int, q: int) -> int:
    return sum(gauss_binomial(d + 1, k + 1, q) for k in range(d + 1))


def projective_coefficient(k: int, q: int) -> int:
    """Möbius coefficient of every ``k``-dimensional subspace."""
    return (-1) ** k * q ** (k * (k + 1) // 2)


def projective_n(d: int, q: int) -> int:
    return q_integer(d + 1, q)

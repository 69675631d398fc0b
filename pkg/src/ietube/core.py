"""Shared domain types and exact evaluation of inclusion-exclusion formulas.

Index sets (subsets of the set labels ``1..n``) are plain Python ints used as
bit vectors: label ``i`` lives in bit ``i - 1``.  Python ints are unbounded, so
``n`` is never capped; for ``n <= 63`` the heavier loops switch to ``uint64``
numpy arrays.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Union

import numpy as np

IndexSet = int
Measure = Union[Mapping[int, int], Sequence[int]]

FAST_WIDTH = 63


class IEError(Exception):
    """Base class for all library errors."""


class InputError(IEError, ValueError):
    """Malformed or inconsistent input."""


class EmptyUnionError(InputError):
    """Every point has empty membership, so there is nothing to standardize."""


class ResourceError(IEError):
    """A configured size budget would be exceeded."""


class RestartsExhausted(IEError):
    def __init__(self, restarts: int):
        super().__init__(f"no admissible permutation after {restarts} restarts")
        self.restarts = restarts


# -- index sets ---------------------------------------------------------------


def index_set(labels: Iterable[int]) -> IndexSet:
    s = 0
    for i in labels:
        if i < 1:
            raise InputError(f"set labels are 1-based, got {i}")
        s |= 1 << (i - 1)
    return s


def members(s: IndexSet) -> list[int]:
    """Sorted 1-based labels contained in ``s``."""
    out = []
    i = 1
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return out


def size(s: IndexSet) -> int:
    return s.bit_count()


def is_subset(a: IndexSet, b: IndexSet) -> bool:
    return a & ~b == 0


def sort_key(s: IndexSet) -> tuple[int, list[int]]:
    """Canonical order: cardinality first, then lexicographic on sorted members."""
    return (s.bit_count(), members(s))


def full_set(n: int) -> IndexSet:
    return (1 << n) - 1


def format_set(s: IndexSet) -> str:
    return "{" + ",".join(map(str, members(s))) + "}"


def bit_array(sets: Sequence[IndexSet], n: int) -> np.ndarray:
    """Pack index sets into a numpy array, ``uint64`` when they fit."""
    if n <= FAST_WIDTH:
        return np.fromiter(sets, dtype=np.uint64, count=len(sets))
    arr = np.empty(len(sets), dtype=object)
    arr[:] = list(sets)
    return arr


def containment_matrix(
    small: Sequence[IndexSet], large: Sequence[IndexSet], n: int, *, chunk: int = 4096
) -> np.ndarray:
    """Boolean matrix ``C[k, j] = small[k] is a subset of large[j]``."""
    out = np.zeros((len(small), len(large)), dtype=bool)
    if not len(small) or not len(large):
        return out
    big = bit_array(large, n)
    if n <= FAST_WIDTH:
        comp = ~big
        zero = np.uint64(0)
    else:
        comp = np.array([~v for v in large], dtype=object)
        zero = 0
    for start in range(0, len(small), chunk):
        part = bit_array(small[start : start + chunk], n)
        out[start : start + len(part)] = (part[:, None] & comp[None, :]) == zero
    return out


# -- domain types ---------------------------------------------------------------


@dataclass(frozen=True)
class SetSystem:
    """A family ``F_1..F_n`` given by the membership set of each ground point.

    ``points[p]`` is the index set ``{i : p in F_i}``; ``labels[p]`` names the
    point (defaults to its position).
    """

    n: int
    points: tuple[IndexSet, ...]
    labels: tuple[Hashable, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InputError("a set system needs at least one set")
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        labels = tuple(self.labels) if self.labels else tuple(range(len(points)))
        if len(labels) != len(points):
            raise InputError("labels and points differ in length")
        if len(set(labels)) != len(labels):
            raise InputError("point labels must be distinct")
        object.__setattr__(self, "labels", labels)
        top = full_set(self.n)
        for p in points:
            if p < 0 or p & ~top:
                raise InputError(f"membership {p!r} mentions a set label outside 1..{self.n}")
        columns = self.set_masks()
        seen: dict[int, int] = {}
        for i, col in enumerate(columns, start=1):
            if col in seen:
                raise InputError(f"sets F_{seen[col]} and F_{i} are identical")
            seen[col] = i

    @property
    def ground_size(self) -> int:
        return len(self.points)

    def set_masks(self) -> list[int]:
        """For each set ``F_i``, the bitmask of point positions it contains."""
        cols = [0] * self.n
        for p, mem in enumerate(self.points):
            for i in members(mem):
                cols[i - 1] |= 1 << p
        return cols

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[Hashable]]) -> "SetSystem":
        """Build from explicit sets ``F_1..F_n`` over arbitrary hashable points."""
        order: dict[Hashable, int] = {}
        for F in sets:
            for x in F:
                order.setdefault(x, 0)
        for i, F in enumerate(sets, start=1):
            for x in F:
                order[x] |= 1 << (i - 1)
        return cls(len(sets), tuple(order.values()), tuple(order.keys()))


@dataclass(frozen=True)
class VennDiagram:
    """The nonempty regions of a set system, sorted by (cardinality, lex)."""

    n: int
    regions: tuple[IndexSet, ...]

    def __post_init__(self):
        regions = tuple(self.regions)
        object.__setattr__(self, "regions", regions)
        if not regions:
            raise InputError("a Venn diagram has at least one region")
        top = full_set(self.n)
        keys = []
        for r in regions:
            if r <= 0 or r & ~top:
                raise InputError(f"invalid region {r!r} for n={self.n}")
            keys.append(sort_key(r))
        if len(set(regions)) != len(regions):
            raise InputError("regions must be distinct")
        if any(keys[j] >= keys[j + 1] for j in range(len(keys) - 1)):
            raise InputError("regions must be sorted by cardinality, then lexicographically")

    @classmethod
    def from_regions(cls, n: int, regions: Iterable[IndexSet]) -> "VennDiagram":
        return cls(n, tuple(sorted(set(regions), key=sort_key)))

    @property
    def m(self) -> int:
        return len(self.regions)

    def index(self, region: IndexSet) -> int:
        try:
            return self._positions[region]
        except KeyError:
            raise InputError(f"{format_set(region)} is not a region") from None

    @property
    def _positions(self) -> dict[int, int]:
        cache = self.__dict__.get("_pos")
        if cache is None:
            cache = {r: j for j, r in enumerate(self.regions)}
            object.__setattr__(self, "_pos", cache)
        return cache

    def to_set_system(self) -> SetSystem:
        """The standardized system: one point per region."""
        return SetSystem(self.n, self.regions)


@dataclass(frozen=True)
class IEVector:
    """Sparse integer coefficients on index sets; zeros are never stored."""

    n: int
    coeffs: Mapping[IndexSet, int] = field(default_factory=dict)

    def __post_init__(self):
        top = full_set(self.n)
        clean = {}
        for s, c in self.coeffs.items():
            if s <= 0 or s & ~top:
                raise InputError(f"invalid term {s!r} for n={self.n}")
            if c:
                clean[s] = int(c)
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    def terms(self) -> list[tuple[IndexSet, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: sort_key(kv[0]))

    @property
    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs.values())

    @property
    def support_size(self) -> int:
        return len(self.coeffs)

    @property
    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.coeffs.values()), default=0)

    def __eq__(self, other):
        if not isinstance(other, IEVector):
            return NotImplemented
        return self.n == other.n and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))


@dataclass(frozen=True)
class SimplicialComplex:
    """Hereditary family of nonempty index sets on vertices ``1..n``.

    Pass ``check=False`` to skip the heredity check, e.g. when auditing a
    family that may not be a complex at all.
    """

    n: int
    faces: frozenset[IndexSet]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "faces", frozenset(self.faces))
        if self.check and not self.is_hereditary():
            raise InputError("face family is not hereditary")

    def __len__(self):
        return len(self.faces)

    def __contains__(self, s):
        return s in self.faces

    def missing_facets(self) -> list[tuple[IndexSet, IndexSet]]:
        """Pairs ``(face, facet)`` where a codimension-one facet is absent."""
        bad = []
        for f in self.faces:
            if f <= 0:
                bad.append((f, f))
                continue
            rest = f
            while rest:
                low = rest & -rest
                rest ^= low
                sub = f ^ low
                if sub and sub not in self.faces:
                    bad.append((f, sub))
        return bad

    def is_hereditary(self) -> bool:
        return not self.missing_facets()

    @property
    def max_face_size(self) -> int:
        return max((f.bit_count() for f in self.faces), default=0)

    def induced(self, tau: IndexSet) -> set[IndexSet]:
        return {f for f in self.faces if f & ~tau == 0}

    def euler_characteristic(self) -> int:
        return sum(1 if f.bit_count() % 2 else -1 for f in self.faces)

    def ie_vector(self) -> IEVector:
        """The alternating-sign vector ``(-1)^{|I|+1}`` over all faces."""
        return IEVector(self.n, {f: 1 if f.bit_count() % 2 else -1 for f in self.faces})


# -- evaluation -----------------------------------------------------------------


def measure_weights(venn: VennDiagram, mu: Measure) -> list[int]:
    """Normalize a measure to one nonnegative int per region, in region order."""
    out = []
    for j, r in enumerate(venn.regions):
        try:
            w = mu[j]
        except (KeyError, IndexError):
            raise InputError(f"measure has no weight for region {j} {format_set(r)}") from None
        if isinstance(w, bool) or not isinstance(w, (int, np.integer)):
            raise InputError(f"weight of region {j} must be an integer, got {w!r}")
        w = int(w)
        if w < 0:
            raise InputError(f"weight of region {j} is negative")
        out.append(w)
    return out


def evaluate_union(venn: VennDiagram, mu: Measure) -> int:
    """Measure of the union: the regions partition it."""
    return sum(measure_weights(venn, mu))


def intersection_measures(venn: VennDiagram, sets: Sequence[IndexSet], mu: Measure) -> list[int]:
    """``mu(F_sigma)`` for each ``sigma`` as the sum over regions containing it."""
    w = measure_weights(venn, mu)
    if not len(sets):
        return []
    cont = containment_matrix(sets, venn.regions, venn.n)
    if sum(w) < 1 << 62:
        return [int(v) for v in cont.astype(np.int64) @ np.array(w, dtype=np.int64)]
    return [int(v) for v in cont.astype(object) @ np.array(w, dtype=object)]


def evaluate_formula(venn: VennDiagram, x: IEVector, mu: Measure) -> int:
    """Right-hand side of the formula: sum of coeff times intersection measure."""
    if x.n != venn.n:
        raise InputError(f"vector has n={x.n} but the Venn diagram has n={venn.n}")
    terms = list(x.coeffs.items())
    vals = intersection_measures(venn, [s for s, _ in terms], mu)
    return sum(c * v for (_, c), v in zip(terms, vals))

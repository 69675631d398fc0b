"""Small ±1 formulas from random selector complexes.

A permutation of the set labels picks, in every Venn region, its earliest
label (the *selector*).  The complex ``K`` of all ``sigma`` whose every
nonempty subset ``theta`` lies in some region whose selected label is in
``theta`` is an abstract tube, so the alternating sum over its faces is a
valid formula.  A random permutation keeps the faces of ``K`` below
:func:`d_bound` with probability at least one half; otherwise we redraw.
"""

from __future__ import annotations

import math
import random
from collections.abc import Sequence
from dataclasses import dataclass

from .core import (
    IEVector,
    IndexSet,
    InputError,
    RestartsExhausted,
    SimplicialComplex,
    VennDiagram,
    members,
)
from .standardize import compute_nerve

DEFAULT_MAX_RESTARTS = 64


def d_bound(n: int, m: int) -> int:
    """Face-size cap for ``n`` sets and ``m`` regions, never more than ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    if m < 2:
        raise ValueError("d_bound needs m >= 2; a single region is handled separately")
    lm = math.log(m)
    raw = math.ceil(2 * math.e * lm) * math.ceil(2 + math.log(n / lm))
    return min(n, raw)


@dataclass(frozen=True)
class Selector:
    """Linear order on labels ``1..n``; ``rank[i - 1]`` is the position of ``i``."""

    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(len(self.rank))):
            raise InputError("selector ranks must be a permutation of 0..n-1")

    @classmethod
    def from_order(cls, rho: Sequence[int]) -> "Selector":
        """``rho[0] < rho[1] < ...`` in the selector's order (1-based labels)."""
        n = len(rho)
        if sorted(rho) != list(range(1, n + 1)):
            raise InputError(f"{list(rho)!r} is not a permutation of 1..{n}")
        rank = [0] * n
        for pos, i in enumerate(rho):
            rank[i - 1] = pos
        return cls(tuple(rank))

    @property
    def n(self) -> int:
        return len(self.rank)

    @property
    def order(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, pos in enumerate(self.rank, start=1):
            out[pos] = i
        return tuple(out)

    def select(self, tau: IndexSet) -> int:
        if not tau:
            raise ValueError("cannot select from an empty set")
        return min(members(tau), key=lambda i: self.rank[i - 1])


def selector_from_permutation(venn: VennDiagram, rho: Sequence[int]) -> Selector:
    if len(rho) != venn.n:
        raise InputError(f"permutation has length {len(rho)}, expected n={venn.n}")
    return Selector.from_order(rho)


def face_condition(venn: VennDiagram, sel: Selector, theta: IndexSet) -> bool:
    """Whether some region contains ``theta`` and selects a label inside it.

    Plain scan over all regions; :func:`build_complex` uses an indexed
    equivalent.
    """
    if not theta:
        raise ValueError("theta must be nonempty")
    for tau in venn.regions:
        if theta & ~tau == 0 and theta >> (sel.select(tau) - 1) & 1:
            return True
    return False


def build_complex(venn: VennDiagram, sel: Selector, max_size: int) -> SimplicialComplex | None:
    """The selector complex, or ``None`` once a face larger than ``max_size`` appears.

    Breadth-first by face size.  A candidate ``sigma + {i}`` is generated
    only from the facet that drops its largest label, and is accepted when
    it passes the selector condition and all its other facets were accepted
    in the previous round.  Each face carries two bitmasks over regions:
    those containing it and those whose selected label it contains, so the
    selector condition costs one ``and``.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    n = venn.n
    containing = [0] * n
    selected_by = [0] * n
    for j, tau in enumerate(venn.regions):
        bit = 1 << j
        for i in members(tau):
            containing[i - 1] |= bit
        selected_by[sel.select(tau) - 1] |= bit

    faces: set[IndexSet] = set()
    level: dict[IndexSet, tuple[int, int]] = {0: ((1 << venn.m) - 1, 0)}
    k = 0
    while level:
        k += 1
        nxt: dict[IndexSet, tuple[int, int]] = {}
        for sigma, (up, picked) in level.items():
            for i in range(sigma.bit_length(), n):
                up_i = up & containing[i]
                if not up_i:
                    continue
                picked_i = picked | selected_by[i]
                if not up_i & picked_i:
                    continue
                theta = sigma | (1 << i)
                rest = sigma
                while rest:
                    low = rest & -rest
                    if (theta ^ low) not in level:
                        break
                    rest ^= low
                if rest:
                    continue
                if k > max_size:
                    return None
                nxt[theta] = (up_i, picked_i)
        faces.update(nxt)
        level = nxt
    return SimplicialComplex(n, frozenset(faces), check=False)


@dataclass(frozen=True)
class TubeResult:
    complex: SimplicialComplex
    ie: IEVector
    permutation: tuple[int, ...]
    restarts: int
    d_bound: int

    @property
    def selector(self) -> Selector:
        return Selector.from_order(self.permutation)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    rho = list(range(1, n + 1))
    rng.shuffle(rho)
    return rho


def build_tube(
    venn: VennDiagram,
    seed: int = 0,
    max_restarts: int = DEFAULT_MAX_RESTARTS,
    *,
    cap: int | None = None,
) -> TubeResult:
    """Las Vegas construction of a ±1 formula with faces bounded by :func:`d_bound`.

    ``cap`` overrides the face-size bound (diagnostics only: below
    :func:`d_bound` the success probability per draw is no longer
    guaranteed).  With a single region the formula is just ``+1`` on that
    region; the recorded complex is then the full simplex on it.
    """
    if max_restarts < 1:
        raise ValueError("max_restarts must be at least 1")
    n = venn.n
    if venn.m == 1:
        (tau,) = venn.regions
        return TubeResult(
            complex=compute_nerve(venn),
            ie=IEVector(n, {tau: 1}),
            permutation=tuple(range(1, n + 1)),
            restarts=0,
            d_bound=tau.bit_count(),
        )
    if cap is None:
        cap = d_bound(n, venn.m)
    rng = random.Random(seed)
    for attempt in range(max_restarts):
        rho = random_permutation(rng, n)
        K = build_complex(venn, Selector.from_order(rho), cap)
        if K is not None:
            return TubeResult(K, K.ie_vector(), tuple(rho), attempt, cap)
    raise RestartsExhausted(max_restarts)


def truncate(ie: IEVector, r: int) -> IEVector:
    """Keep only terms on index sets with at most ``r`` labels."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return IEVector(ie.n, {s: c for s, c in ie.coeffs.items() if s.bit_count() <= r})

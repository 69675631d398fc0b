"""Region contraction (raw system -> Venn diagram) and the nerve."""

from __future__ import annotations

from collections.abc import Hashable

from .core import (
    EmptyUnionError,
    InputError,
    IndexSet,
    ResourceError,
    SetSystem,
    SimplicialComplex,
    VennDiagram,
)

DEFAULT_FACE_BUDGET = 1 << 22


def compute_venn(fs: SetSystem) -> VennDiagram:
    """Contract every nonempty region of ``fs`` to a single index set.

    Points lying in no set are dropped.
    """
    regions = {p for p in fs.points if p}
    if not regions:
        raise EmptyUnionError("empty union: no point belongs to any set")
    return VennDiagram.from_regions(fs.n, regions)


def region_of(fs: SetSystem, point: Hashable) -> IndexSet:
    """Membership index set of the point with the given label."""
    try:
        pos = fs.labels.index(point)
    except ValueError:
        raise InputError(f"unknown point {point!r}") from None
    return fs.points[pos]


def downward_closure(sets, budget: int = DEFAULT_FACE_BUDGET) -> set[IndexSet]:
    """All nonempty subsets of the given index sets.

    Raises :class:`ResourceError` as soon as more than ``budget`` faces
    would be produced.
    """
    faces: set[IndexSet] = set()
    for top in sorted(set(sets), key=lambda s: -s.bit_count()):
        if top in faces:
            continue
        if (1 << top.bit_count()) - 1 > budget:
            raise ResourceError(f"nerve too large: more than {budget} faces")
        # sub = (sub - 1) & top walks every nonempty subset of top
        sub = top
        while sub:
            if sub not in faces:
                faces.add(sub)
                if len(faces) > budget:
                    raise ResourceError(f"nerve too large: more than {budget} faces")
            sub = (sub - 1) & top
    return faces


def compute_nerve(venn: VennDiagram, budget: int = DEFAULT_FACE_BUDGET) -> SimplicialComplex:
    """Nerve of a standardized system, as the downward closure of its regions."""
    return SimplicialComplex(venn.n, frozenset(downward_closure(venn.regions, budget)), check=False)

"""Column-duplication test certifying ℓ1-minimality of the Möbius vector.

If every intersection pattern ``sigma`` in the nerve is contained in exactly
the same regions as some region ``nu``, any coefficient on ``sigma`` can be
moved onto ``nu`` without increasing the ℓ1-norm, so the unique
Venn-supported vector is ℓ1-minimal.
"""

from __future__ import annotations

from ..core import ResourceError, VennDiagram, members
from ..standardize import DEFAULT_FACE_BUDGET, downward_closure

MAX_NERVE_N = 20


def _containing(venn: VennDiagram) -> list[int]:
    cols = [0] * venn.n
    for j, tau in enumerate(venn.regions):
        for i in members(tau):
            cols[i - 1] |= 1 << j
    return cols


def check_lattice_column_property(venn: VennDiagram, budget: int = DEFAULT_FACE_BUDGET) -> bool:
    """Enumerate the nerve and match each face's up-set against the regions' up-sets."""
    if venn.n > MAX_NERVE_N:
        raise ResourceError(f"nerve enumeration is limited to n <= {MAX_NERVE_N}, got n={venn.n}")
    cols = _containing(venn)
    every = (1 << venn.m) - 1
    up = {0: every}
    for sigma in sorted(downward_closure(venn.regions, budget), key=int.bit_count):
        low = sigma & -sigma
        up[sigma] = up[sigma ^ low] & cols[low.bit_length() - 1]
    region_signatures = {up[tau] for tau in venn.regions}
    return all(sig in region_signatures for s, sig in up.items() if s)


def is_intersection_closed(venn: VennDiagram) -> bool:
    """Whether every nonempty intersection of two regions is itself a region.

    Equivalent to the column property: the regions containing ``sigma`` are
    exactly those containing the intersection of all of them, and that
    intersection is a region iff pairwise meets are.  Needs no nerve
    enumeration, so it scales to large ``n``.
    """
    regions = set(venn.regions)
    rs = venn.regions
    for a in range(len(rs)):
        for b in range(a + 1, len(rs)):
            meet = rs[a] & rs[b]
            if meet and meet not in regions:
                return False
    return True

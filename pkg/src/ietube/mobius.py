"""The unique IE-vector supported on the Venn diagram (Möbius inversion)."""

from __future__ import annotations

import numpy as np

from .core import FAST_WIDTH, IEVector, VennDiagram, bit_array


def mobius_coefficients(venn: VennDiagram) -> list[int]:
    """Coefficient of every region, in region order, zeros included.

    Solves the unitriangular zeta system of the inclusion order: each
    region's coefficient is one minus the sum over regions properly
    contained in it.  Regions are sorted by cardinality, so every proper
    subset of ``regions[j]`` sits at an earlier index.
    """
    regions = venn.regions
    alpha: list[int] = []
    if venn.n <= FAST_WIDTH:
        arr = bit_array(regions, venn.n)
        zero = np.uint64(0)
        for j, tau in enumerate(regions):
            outside = np.uint64(~tau & ((1 << 64) - 1))
            below = np.flatnonzero((arr[:j] & outside) == zero)
            alpha.append(1 - sum(alpha[k] for k in below))
    else:
        for j, tau in enumerate(regions):
            alpha.append(1 - sum(alpha[k] for k in range(j) if regions[k] & ~tau == 0))
    return alpha


def mobius_ie_vector(venn: VennDiagram) -> IEVector:
    """Sparse form of :func:`mobius_coefficients`; zero coefficients are dropped.

    ``support_size`` of the result counts nonzeros only; the support in the
    Venn diagram (where uniqueness holds) is all ``venn.m`` regions.
    """
    return IEVector(venn.n, dict(zip(venn.regions, mobius_coefficients(venn))))


def l1_norm(x: IEVector) -> int:
    return x.l1_norm

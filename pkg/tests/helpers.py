from ietube.core import VennDiagram, index_set

THREE_SETS = [{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}]


def venn_of(n, regions):
    return VennDiagram.from_regions(n, [index_set(r) for r in regions])


def vec(n, terms):
    """IEVector from ``{frozenset-like: coeff}`` with 1-based labels."""
    from ietube.core import IEVector

    return IEVector(n, {index_set(k): c for k, c in terms.items()})

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import vec, venn_of
from ietube.core import InputError, RestartsExhausted, evaluate_formula, evaluate_union, index_set, members
from ietube.generators import gen_random
from ietube.mobius import mobius_ie_vector
from ietube.standardize import compute_venn
from ietube.tube import (
    Selector,
    build_complex,
    build_tube,
    d_bound,
    face_condition,
    selector_from_permutation,
    truncate,
)
from oracles import brute_selector_complex, standard_vector, subsets


def raw_bound(n, m):
    # independent restatement, evaluated factor by factor
    first = math.ceil(2 * math.e * math.log(m))
    second = math.ceil(2 + math.log(n / math.log(m)))
    return first, second


@pytest.mark.parametrize(
    "n, m, factors, expected",
    [(10, 10, (13, 4), 10), (10, 3, (6, 5), 10), (1000, 100, (26, 8), 208)],
)
def test_d_bound(n, m, factors, expected):
    assert raw_bound(n, m) == factors
    assert d_bound(n, m) == min(n, factors[0] * factors[1]) == expected


def test_d_bound_rejects_single_region():
    with pytest.raises(ValueError):
        d_bound(5, 1)


def test_selector_examples():
    venn = venn_of(3, [{1}, {2}, {3}])
    ident = selector_from_permutation(venn, [1, 2, 3])
    assert ident.select(index_set([2, 3])) == 2
    sel = selector_from_permutation(venn, [3, 1, 2])
    assert sel.select(index_set([1, 3])) == 3
    assert sel.select(index_set([1, 2])) == 1
    assert sel.order == (3, 1, 2)


def test_selector_rejects_non_permutation():
    venn = venn_of(3, [{1}, {2}, {3}])
    with pytest.raises(InputError):
        selector_from_permutation(venn, [1, 1, 2])
    with pytest.raises(InputError):
        selector_from_permutation(venn, [1, 2])


def test_face_condition_examples(three_sets):
    ident = Selector.from_order([1, 2, 3])
    assert face_condition(three_sets, ident, index_set([1, 3]))
    assert face_condition(three_sets, ident, index_set([1]))
    without3 = venn_of(3, [{1}, {2}, {1, 2}, {2, 3}, {1, 2, 3}])
    assert not face_condition(without3, ident, index_set([3]))
    with pytest.raises(ValueError):
        face_condition(three_sets, ident, 0)


def test_build_complex_three_sets_identity(three_sets):
    K = build_complex(three_sets, Selector.from_order([1, 2, 3]), 3)
    assert K.faces == {index_set(s) for s in subsets([1, 2, 3])}


def test_build_complex_three_sets_two_first(three_sets):
    # with 2 first, {1,3} only sits in {1,2,3}, which selects 2
    K = build_complex(three_sets, Selector.from_order([2, 1, 3]), 3)
    assert sorted(map(members, K.faces)) == [[1], [1, 2], [2], [2, 3], [3]]


def test_build_complex_disjoint():
    K = build_complex(venn_of(2, [{1}, {2}]), Selector.from_order([2, 1]), 2)
    assert sorted(map(members, K.faces)) == [[1], [2]]


@pytest.mark.parametrize("n", [1, 4, 9])
def test_build_complex_singletons(n):
    venn = venn_of(n, [{i} for i in range(1, n + 1)])
    K = build_complex(venn, Selector.from_order(list(range(n, 0, -1))), n)
    assert K.faces == {1 << i for i in range(n)}


def test_build_complex_size_exceeded(three_sets):
    assert build_complex(three_sets, Selector.from_order([1, 2, 3]), 2) is None


def test_build_tube_three_sets_valid(three_sets):
    for seed in range(10):
        res = build_tube(three_sets, seed)
        assert set(res.ie.coeffs.values()) <= {1, -1}
        assert evaluate_formula(three_sets, res.ie, [1] * 6) == evaluate_union(three_sets, [1] * 6) == 6


def test_build_tube_identity_order_gives_full_standard_vector(three_sets):
    K = build_complex(three_sets, Selector.from_order([1, 2, 3]), 3)
    assert K.ie_vector() == vec(3, standard_vector(3))


def test_build_tube_single_region():
    venn = venn_of(2, [{1, 2}])
    res = build_tube(venn, seed=7)
    assert res.ie == vec(2, {(1, 2): 1})
    assert res.restarts == 0
    assert res.complex.max_face_size <= res.d_bound


def test_build_tube_singletons_match_mobius():
    venn = venn_of(6, [{i} for i in range(1, 7)])
    res = build_tube(venn, seed=3)
    assert res.ie == vec(6, {(i,): 1 for i in range(1, 7)})
    assert res.ie == mobius_ie_vector(venn)


def test_build_tube_deterministic():
    venn = compute_venn(gen_random(10, 50, 42))
    assert build_tube(venn, 123) == build_tube(venn, 123)


def test_restart_loop_counts_rejections():
    venn = compute_venn(gen_random(10, 80, 1))
    sizes = []
    rng = random.Random(99)
    for _ in range(40):
        rho = list(range(1, 11))
        rng.shuffle(rho)
        sizes.append(build_complex(venn, Selector.from_order(rho), 10).max_face_size)
    cap = min(sizes)
    assert cap < max(sizes), "need a cap that only some permutations meet"
    res = build_tube(venn, 5, max_restarts=500, cap=cap)
    assert res.complex.max_face_size <= cap
    # replay the same draws: every earlier permutation must have been too large
    rng = random.Random(5)
    for _ in range(res.restarts):
        rho = list(range(1, 11))
        rng.shuffle(rho)
        assert build_complex(venn, Selector.from_order(rho), cap) is None


def test_restarts_exhausted():
    venn = compute_venn(gen_random(10, 80, 1))
    with pytest.raises(RestartsExhausted) as info:
        build_tube(venn, 0, max_restarts=3, cap=1)
    assert info.value.restarts == 3


def test_truncate_union_bound():
    x = truncate(vec(3, standard_vector(3)), 1)
    assert x == vec(3, {(1,): 1, (2,): 1, (3,): 1})


def test_truncate_no_op_and_three_sets(three_sets):
    full = vec(3, standard_vector(3))
    assert truncate(full, 3) == full
    assert truncate(full, 10) == full
    cut = truncate(full, 2)
    assert [c for _, c in cut.terms()] == [1, 1, 1, -1, -1, -1]


small_systems = st.builds(
    lambda n, m, seed: (n, m, seed),
    st.integers(2, 12),
    st.integers(4, 60),
    st.integers(0, 10**9),
)


def _random_venn(n, m, seed):
    m = min(m, 2**n - 1)
    return compute_venn(gen_random(n, m, seed))


@settings(max_examples=40, deadline=None)
@given(params=small_systems, perm_seed=st.integers(0, 10**9))
def test_definition_fidelity_and_structure(params, perm_seed):
    venn = _random_venn(*params)
    rho = list(range(1, venn.n + 1))
    random.Random(perm_seed).shuffle(rho)
    sel = Selector.from_order(rho)
    K = build_complex(venn, sel, venn.n)
    regions = [frozenset(members(r)) for r in venn.regions]
    brute = brute_selector_complex(venn.n, regions, rho)
    assert {frozenset(members(f)) for f in K.faces} == brute
    assert K.is_hereditary()
    for tau in venn.regions:
        a = 1 << (sel.select(tau) - 1)
        induced = K.induced(tau)
        # cone with the selected label as apex
        assert a in induced
        assert all(f | a in induced for f in induced)
        # Euler characteristic one
        assert sum(1 if f.bit_count() % 2 else -1 for f in induced) == 1


@settings(max_examples=30, deadline=None)
@given(params=small_systems, seed=st.integers(0, 2**64 - 1))
def test_tube_vector_is_valid(params, seed):
    venn = _random_venn(*params)
    res = build_tube(venn, seed)
    assert res.complex.max_face_size <= res.d_bound
    for tau in venn.regions:
        assert sum(c for s, c in res.ie.coeffs.items() if s & ~tau == 0) == 1

from itertools import permutations

import pytest
from hypothesis import given

from conftest import composable_pairs, posets

from poscert.errors import CompositionMismatch, CycleError, SizeLimit, UnknownLabel
from poscert.poset import (
    MonotoneMap,
    antichain,
    canonical_form,
    chain,
    compose,
    connected_components,
    coproduct,
    empty_poset,
    find_isomorphism,
    from_covers,
    from_relation,
    identity,
    is_monotone,
    opposite,
    singleton,
)

V_POSET = from_covers(["m", "a", "b"], [("m", "a"), ("m", "b")])


def test_from_covers_singleton():
    p = from_covers(["a"], [])
    assert p.n == 1 and p.le(0, 0)


def test_from_covers_arrow():
    d = from_covers(["x", "y"], [("x", "y")])
    assert d.covers() == [(0, 1)] and d.le(0, 1) and not d.le(1, 0)


def test_from_covers_cycle():
    with pytest.raises(CycleError):
        from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_from_covers_unknown_label():
    with pytest.raises(UnknownLabel):
        from_covers(["a"], [("a", "z")])


def test_is_monotone_identity_and_swap():
    c2 = chain(2)
    assert is_monotone(identity(c2))
    with pytest.raises(Exception):
        MonotoneMap(chain(1), chain(1), (1, 0))


def test_downset_map_monotone_into_power():
    # the down-set map on the three-element v-shape, checked pairwise
    from poscert.functors import power_lattice, subset_positions
    lam = opposite(V_POSET)  # two minima under one maximum: join-semilattice
    S = power_lattice(3, "nonempty")
    pos = subset_positions(3, "nonempty")
    img = tuple(pos[tuple(sorted(lam.down_set(x)))] for x in range(3))
    f = MonotoneMap(lam, S, img)
    assert is_monotone(f)


def test_compose_identity_neutral_and_mismatch():
    d = from_covers(["x", "y"], [("x", "y")])
    f = MonotoneMap(singleton(), d, (0,))
    assert compose(identity(d), f).image == f.image
    with pytest.raises(CompositionMismatch):
        compose(f, f)


@given(composable_pairs())
def test_compose_associative(pair):
    if pair is None:
        return
    f, g = pair
    h = identity(g.target)
    assert compose(h, compose(g, f)).image == compose(compose(h, g), f).image


def test_canonical_relabel_and_distinguish():
    c1 = from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
    c2 = from_covers(["p", "q", "r"], [("r", "q"), ("q", "p")])
    assert canonical_form(c1) == canonical_form(c2)
    assert canonical_form(chain(2)) != canonical_form(V_POSET)


def test_canonical_all_120_permutations():
    base_pairs = [(0, 1), (0, 2), (1, 3), (2, 4)]
    keys = set()
    for perm in permutations(range(5)):
        pairs = [(perm[i], perm[j]) for i, j in base_pairs]
        q = from_relation([str(i) for i in range(5)], pairs)
        keys.add(canonical_form(q).key)
    assert len(keys) == 1


def test_canonical_size_limit():
    with pytest.raises(SizeLimit):
        canonical_form(antichain(17))


def test_canonical_cross_check_with_isomorphism_search():
    # keys agree with explicit isomorphism search on all 4-element classes
    from poscert.catalog import enumerate_posets
    reps = [e.representative for e in enumerate_posets(4)]
    for i, p in enumerate(reps):
        for q in reps[i + 1:]:
            assert find_isomorphism(p, q) is None
            assert canonical_form(p) != canonical_form(q)


def test_coproduct_examples():
    two, _ = coproduct([singleton(), singleton()])
    assert two == antichain(2)
    none, _ = coproduct([])
    assert none == empty_poset()
    four, injections = coproduct([chain(1), chain(1)])
    assert four.n == 4 and four.relation_pairs() == 2
    assert all(inj.is_injective() for inj in injections)
    hit = set(injections[0].image) | set(injections[1].image)
    assert hit == set(range(4))


def test_opposite_examples():
    assert canonical_form(opposite(chain(2))) == canonical_form(chain(2))
    lam = opposite(V_POSET)
    assert len(lam.minimal_elements()) == 2 and len(lam.maximal_elements()) == 1


@given(posets())
def test_opposite_involution(p):
    assert opposite(opposite(p)) == p


@given(posets())
def test_opposite_swaps_down_and_up(p):
    q = opposite(p)
    for x in range(p.n):
        assert q.down_set(x) == p.up_set(x)


def test_down_set_examples():
    c = chain(2)
    assert c.down_set(2) == {0, 1, 2}
    assert c.down_set(0) == {0}
    z = from_covers(["x0", "x1", "x2"], [("x0", "x1"), ("x2", "x1")])
    assert z.down_set(1) == {0, 1, 2}


def test_connected_components_examples():
    assert len(connected_components(antichain(3))) == 3
    assert len(connected_components(V_POSET)) == 1
    mix, _ = coproduct([chain(1), V_POSET])
    comps = connected_components(mix)
    assert sorted(len(c) for c in comps) == [2, 3]


@given(posets())
def test_order_axioms_hold_after_construction(p):
    for i in range(p.n):
        assert p.le(i, i)
        for j in range(p.n):
            if i != j and p.le(i, j):
                assert not p.le(j, i)
            for k in range(p.n):
                if p.le(i, j) and p.le(j, k):
                    assert p.le(i, k)


def test_poset_with_maximum_is_connected():
    from poscert.functors import power_lattice
    cube = power_lattice(3, "all")
    assert len(connected_components(cube)) == 1
    v = from_covers(["a", "b", "t"], [("a", "t"), ("b", "t")])
    assert len(connected_components(v)) == 1


def test_canonical_exhaustive_small_classes():
    # every permutation of every class with up to 4 elements keeps the key
    from poscert.catalog import enumerate_posets
    for n in (2, 3, 4):
        for entry in enumerate_posets(n):
            rep = entry.representative
            for perm in permutations(range(n)):
                pairs = [(perm[i], perm[j]) for i in range(n) for j in range(n)
                         if rep.lt(i, j)]
                q = from_relation([str(k) for k in range(n)], pairs)
                assert canonical_form(q).key == entry.canonical.key

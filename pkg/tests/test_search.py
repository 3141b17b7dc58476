import pytest

from poscert.errors import IllFormedQuery, NoRetraction
from poscert.poset import MonotoneMap, antichain, chain, from_relation, singleton
from poscert.search import (
    RetractionQuery,
    brute_force_retraction,
    find_embedded_retract,
    retraction_search,
)

V = from_relation(["m", "a", "b"], [(0, 1), (0, 2)])


def test_fold_the_free_arm():
    arm = from_relation(["m", "a"], [(0, 1)])
    i = MonotoneMap(arm, V, (0, 1))
    q = RetractionQuery.make(V, {}, i)
    p = retraction_search(q)
    # deterministic first solution: the free maximum takes the least valid
    # target (the root); pinning it to the included arm also succeeds
    assert p.image == (0, 1, 0)
    pinned = retraction_search(RetractionQuery.make(V, {2: 1}, i))
    assert pinned.image == (0, 1, 1)


def test_ill_formed_query():
    i = MonotoneMap(antichain(2), chain(1), (0, 1))
    with pytest.raises(IllFormedQuery):
        retraction_search(RetractionQuery.make(chain(1), {}, i))
    with pytest.raises(IllFormedQuery):
        # non-injective subobject
        fold = MonotoneMap(antichain(2), singleton(), (0, 0))
        retraction_search(RetractionQuery.make(singleton(), {}, fold))


def test_contradictory_pins_are_ill_formed():
    arm = from_relation(["m", "a"], [(0, 1)])
    i = MonotoneMap(arm, V, (0, 1))
    with pytest.raises(IllFormedQuery):
        retraction_search(RetractionQuery.make(V, {1: 0}, i))


def test_search_matches_oracle_small():
    # every query over small ambients agrees with brute force
    cases = []
    arm = from_relation(["m", "a"], [(0, 1)])
    cases.append(RetractionQuery.make(V, {}, MonotoneMap(arm, V, (0, 1))))
    w = from_relation(["a", "b", "c", "d", "e"],
                      [(0, 1), (2, 1), (2, 3), (4, 3)])
    sub = from_relation(["a", "b"], [(0, 1)])
    cases.append(RetractionQuery.make(w, {}, MonotoneMap(sub, w, (0, 1))))
    for q in cases:
        oracle = brute_force_retraction(q)
        got = retraction_search(q)
        assert oracle is not None and got.image == oracle.image


def test_no_retraction_agrees_with_oracle():
    # ask the five-element fence to retract onto an embedded antichain pair
    w = from_relation(["a", "b", "c", "d", "e"],
                      [(0, 1), (2, 1), (2, 3), (4, 3)])
    sub = antichain(2)
    i = MonotoneMap(sub, w, (0, 4))
    q = RetractionQuery.make(w, {}, i)
    assert brute_force_retraction(q) is None
    with pytest.raises(NoRetraction):
        retraction_search(q)


def test_find_embedded_retract_deterministic():
    from poscert.functors import sd2_simplex
    amb = sd2_simplex(1)
    sub = from_relation(["m", "a"], [(0, 1)])
    one = find_embedded_retract(sub, amb, {}, {})
    two = find_embedded_retract(sub, amb, {}, {})
    assert one is not None and two is not None
    assert one[0].image == two[0].image and one[1].image == two[1].image

import pytest
from hypothesis import given

from conftest import posets

from poscert.catalog import enumerate_posets
from poscert.errors import NotATree
from poscert.poset import chain, empty_poset, from_covers, opposite
from poscert.recognize import (
    classify,
    is_chain,
    is_join_semilattice,
    is_meet_semilattice,
    is_tree_poset,
    is_zigzag,
    tree_rank,
)

V = from_covers(["m", "a", "b"], [("m", "a"), ("m", "b")])      # meet only
LAM = opposite(V)                                               # join only
P1_5 = from_covers(["x1", "x2", "x3", "y1", "y2"],
                   [("x1", "y1"), ("x2", "y1"), ("x2", "y2"),
                    ("x3", "y1"), ("x3", "y2")])


def test_semilattice_examples():
    assert is_join_semilattice(chain(3)) and is_meet_semilattice(chain(3))
    assert is_meet_semilattice(V) and not is_join_semilattice(V)
    assert is_join_semilattice(LAM) and not is_meet_semilattice(LAM)
    assert not is_join_semilattice(P1_5) and not is_meet_semilattice(P1_5)


def test_is_chain_examples():
    assert is_chain(chain(2))
    assert not is_chain(V)
    assert is_chain(empty_poset())


def test_is_zigzag_examples():
    z = from_covers(["x0", "x1", "x2"], [("x0", "x1"), ("x2", "x1")])
    assert is_zigzag(z)
    assert is_zigzag(chain(2))
    y = from_covers(["m", "s", "a", "b"], [("m", "s"), ("s", "a"), ("s", "b")])
    assert not is_zigzag(y)


def test_is_tree_examples():
    assert is_tree_poset(chain(3))
    y = from_covers(["m", "s", "a", "b"], [("m", "s"), ("s", "a"), ("s", "b")])
    assert is_tree_poset(y)
    assert not is_tree_poset(LAM)


def test_rank_examples():
    y = from_covers(["m", "s", "a", "b"], [("m", "s"), ("s", "a"), ("s", "b")])
    assert tree_rank(y) == [0, 1, 2, 2]
    assert tree_rank(chain(3)) == [0, 1, 2, 3]
    assert tree_rank(y)[0] == 0
    with pytest.raises(NotATree):
        tree_rank(LAM)


def test_classify_examples():
    tags = classify(chain(4)).tags
    assert {"chain", "join_semilattice", "meet_semilattice",
            "tree", "zigzag", "connected"} <= tags
    two = classify(from_covers(["a", "b"], []))
    assert "disconnected" in two.tags


def test_classify_catalog_id_for_p8():
    from poscert.catalog import _catalog_names
    from poscert.witnesses import named_small_posets
    p8 = named_small_posets()["P8"]
    cls = classify(p8, _catalog_names(5))
    assert cls.tags == frozenset({"connected"})
    assert cls.catalog_id is not None


@given(posets())
def test_chain_implies_everything(p):
    if is_chain(p) and p.n >= 1:
        assert is_join_semilattice(p)
        assert is_meet_semilattice(p)
        assert is_tree_poset(p)
        assert is_zigzag(p)


def test_tree_cover_count():
    for n in (3, 4, 5):
        for e in enumerate_posets(n):
            p = e.representative
            if is_tree_poset(p):
                assert len(p.covers()) == p.n - 1


def test_catalog_semilattice_shares():
    rows = {n: [0, 0] for n in (3, 4, 5)}
    for n in rows:
        for e in enumerate_posets(n):
            p = e.representative
            if "connected" not in e.classification.tags:
                continue
            rows[n][1] += 1
            if is_join_semilattice(p) or is_meet_semilattice(p):
                rows[n][0] += 1
    assert rows[3] == [3, 3]
    assert rows[4] == [8, 10]
    assert rows[5] == [25, 44]

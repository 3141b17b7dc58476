import random

import pytest

from poscert.certificates import verify
from poscert.errors import NotAChain, NotASemilattice, NotATree, NotAZigzag, SizeLimit
from poscert.functors import chain_index, power_lattice, sd2_simplex, subset_positions
from poscert.poset import (
    MonotoneMap,
    canonical_form,
    chain,
    from_covers,
    from_relation,
    opposite,
    singleton,
)
from poscert.witnesses import (
    bool_minus_top_formula_maps,
    bool_minus_top_witness,
    chain_witness,
    cone_tower_certificate,
    semilattice_witness,
    single_max_zigzag_maps,
    tree_witness,
    zigzag_witness,
)

DIAMOND = from_covers(["b", "m1", "m2", "t"],
                      [("b", "m1"), ("b", "m2"), ("m1", "t"), ("m2", "t")])


def test_semilattice_join_witness():
    rep = semilattice_witness(DIAMOND)
    assert rep.case == "join" and rep.verify_all()
    i = rep.aux_maps["embedding"]
    p = rep.aux_maps["retraction"]
    # i sends the bottom to a singleton set and p o i is the identity
    assert i.target.labels[i.image[0]] == "{0}"
    assert i.is_injective() and i.is_order_reflecting()
    assert tuple(p.image[v] for v in i.image) == tuple(range(DIAMOND.n))


def test_semilattice_trivial_singleton():
    rep = semilattice_witness(singleton())
    assert rep.certificate.cert.rule == "AX_ISO"
    assert rep.verify_all()


def test_semilattice_meet_route():
    lam = power_lattice(2, "minus_top")
    rep = semilattice_witness(lam)
    assert rep.case == "meet" and rep.verify_all()
    i = rep.aux_maps["embedding"]
    p = rep.aux_maps["retraction"]
    assert tuple(p.image[v] for v in i.image) == tuple(range(lam.n))


def test_semilattice_rejects_non_semilattice():
    fence = from_covers(["a", "b", "c", "d"],
                        [("a", "b"), ("c", "b"), ("c", "d")])
    with pytest.raises(NotASemilattice):
        semilattice_witness(fence)


def test_cone_tower_requires_unique_min():
    rep = cone_tower_certificate(DIAMOND)
    assert verify(rep).ok
    assert rep.conclusion.image[0] == 0


def test_bool_minus_top_witnesses():
    for n in (0, 1, 2):
        rep = bool_minus_top_witness(n)
        assert rep.verify_all()
        assert rep.poset.n == 2 ** (n + 1) - 1
    with pytest.raises(SizeLimit):
        bool_minus_top_witness(3)
    with pytest.raises(SizeLimit):
        bool_minus_top_witness(4)


def test_bool_minus_top_lambda_agrees_with_semilattice_route():
    lam = power_lattice(2, "minus_top")
    a = bool_minus_top_witness(1)
    b = semilattice_witness(lam)
    assert a.verify_all() and b.verify_all()
    assert a.poset == lam == b.poset


def test_bool_formula_prefix_chain_example():
    # the subset {0,2} goes to the chain {empty, {0}, {0,2}}
    i_img, p_map, xiB = bool_minus_top_formula_maps(2)
    pos = subset_positions(3, "minus_top")
    B = power_lattice(3, "minus_top")
    idx = chain_index(B)
    expected = idx[tuple(sorted((pos[()], pos[(0,)], pos[(0, 2)])))]
    assert i_img[pos[(0, 2)]] == expected
    assert all(p_map.image[i_img[a]] == a for a in range(7))


def test_chain_witness_staged():
    rep = chain_witness(chain(3))
    assert rep.verify_all()
    staged = rep.staged
    pushouts = [n for n in staged.nodes() if n.rule == "R_PUSHOUT"]
    assert len(pushouts) == 3
    assert staged.conclusion.image == (0,)  # hits the minimum
    trivial = chain_witness(chain(0))
    assert trivial.staged.rule == "AX_ISO"
    with pytest.raises(NotAChain):
        chain_witness(chain(2), stages=5)
    with pytest.raises(NotAChain):
        chain_witness(DIAMOND)


def test_chain_stage_invariance():
    a = chain_witness(chain(4)).staged.premises[:-1]
    b = chain_witness(chain(5)).staged.premises[:-1]
    for x, y in zip(a, b):
        assert x.conclusion.image == y.conclusion.image
        assert x.conclusion.source == y.conclusion.source


def test_zigzag_formulas_small_case():
    # x0 -> x1 <- x2: i = [{0}, {0,1}, {1}]
    i_img, p_img = single_max_zigzag_maps(3, 1)
    pos = subset_positions(2, "nonempty")
    assert i_img == (pos[(0,)], pos[(0, 1)], pos[(1,)])
    assert all(p_img[i_img[k]] == k for k in range(3))


def test_zigzag_formulas_exhaustive():
    for m in range(3, 9):
        for apex in range(1, m - 1):
            i_img, p_img = single_max_zigzag_maps(m, apex)
            assert all(p_img[i_img[k]] == k for k in range(m))
            # both maps are monotone as maps of posets
            pos = subset_positions(m - 1, "nonempty")
            S = power_lattice(m - 1, "nonempty")
            piece = from_relation(
                [f"x{t}" for t in range(m)],
                [(t, t + 1) if t < apex else (t + 1, t) for t in range(m - 1)])
            MonotoneMap(piece, S, i_img)
            MonotoneMap(S, piece, p_img)


def test_zigzag_witness_basic():
    z = from_covers(["x0", "x1", "x2"], [("x0", "x1"), ("x2", "x1")])
    rep = zigzag_witness(z)
    assert rep.theorem == "chaincof" and rep.verify_all()
    assert set(rep.minimum_certificates) == {0, 2}


def test_zigzag_witness_w_fence():
    w = sd2_simplex(1)
    rep = zigzag_witness(w)
    assert rep.theorem == "zziscof" and rep.verify_all()
    assert set(rep.minimum_certificates) == set(w.minimal_elements())
    # the two pieces glue once, which certifies both legs of the square
    glue_nodes = set()
    for cert in rep.minimum_certificates.values():
        for node in cert.nodes():
            if node.rule == "R_PUSHOUT":
                glue_nodes.add((node.side, node.conclusion.image))
    assert len(glue_nodes) == 2


def test_zigzag_chain_cross_check():
    rep = zigzag_witness(chain(2))
    base = semilattice_witness(chain(2))
    assert rep.verify_all() and base.verify_all()
    assert rep.certificate.object == base.certificate.object
    with pytest.raises(NotAZigzag):
        zigzag_witness(DIAMOND)


def test_tree_witness_examples():
    rep = tree_witness(chain(2))
    assert rep.verify_all()
    star = from_covers(["r", "a", "b", "c"],
                       [("r", "a"), ("r", "b"), ("r", "c")])
    rep = tree_witness(star)
    assert rep.verify_all()
    coproducts = [n for n in rep.certificate.cert.nodes() if n.rule == "R_COPRODUCT"]
    assert len(coproducts) == 1
    assert len(coproducts[0].premises) == 3
    with pytest.raises(NotATree):
        tree_witness(opposite(star))


def test_tree_witness_random_12():
    rng = random.Random(12)
    parents = [None] + [rng.randrange(i) for i in range(1, 12)]
    covers = [(f"t{parents[i]}", f"t{i}") for i in range(1, 12)]
    t = from_covers([f"t{i}" for i in range(12)], covers)
    rep = tree_witness(t)
    assert rep.verify_all()
    assert canonical_form(rep.certificate.cert.conclusion.target) == canonical_form(t)


def test_flag_reporting_by_route():
    # the join route needs no single-subdivision axiom; a non-tree meet
    # route does (its cone legs are retracts over it)
    assert not semilattice_witness(DIAMOND).uses_sd_mono()
    m = from_covers(["r", "a", "b", "t", "c"],
                    [("r", "a"), ("r", "b"), ("a", "t"), ("b", "t"), ("r", "c")])
    rep = semilattice_witness(m)
    assert rep.case == "meet" and rep.uses_sd_mono() and rep.verify_all()
    assert bool_minus_top_witness(2).uses_sd_mono()
    assert not bool_minus_top_witness(1).uses_sd_mono()


def test_tree_chain_has_one_stage_per_rank():
    rep = tree_witness(chain(2))
    stages = [n for n in rep.certificate.cert.nodes() if n.rule == "R_PUSHOUT"]
    assert len(stages) == 2


def test_all_structural_six_element_classes_witness():
    # beyond the certified catalog: every six-element connected class that
    # is a semilattice, zigzag, or tree still gets a verified witness
    from poscert.catalog import _classes
    from poscert.poset import is_connected
    from poscert.recognize import (
        is_join_semilattice as ij, is_meet_semilattice as im,
        is_zigzag as iz, is_tree_poset as it)
    built = 0
    for rep in _classes(6):
        if not is_connected(rep):
            continue
        if ij(rep) or im(rep):
            w = semilattice_witness(rep)
        elif iz(rep):
            w = zigzag_witness(rep)
        elif it(rep):
            w = tree_witness(rep)
        else:
            continue
        built += 1
        assert w.verify_all()
    assert built == 102  # 91 semilattices + 11 further zigzags


def test_meet_tower_with_diamond_cone_base():
    # an eight-element meet-semilattice whose top's strict down-set is a
    # diamond exercises the join-subsemilattice cone lemma
    m8 = from_covers(list("rabcdxyt"),
                     [("r", "a"), ("r", "b"), ("a", "c"), ("b", "c"),
                      ("c", "x"), ("r", "d"), ("d", "y"), ("y", "t")])
    rep = semilattice_witness(m8)
    assert rep.case == "meet" and rep.verify_all()


def test_down_set_module_operation():
    from poscert.poset import down_set, up_set
    z = from_covers(["x0", "x1", "x2"], [("x0", "x1"), ("x2", "x1")])
    assert down_set(z, 1) == {0, 1, 2}
    assert up_set(z, 0) == {0, 1}
    assert all(x in down_set(z, x) for x in range(z.n))

"""Witness builders: one verified certificate per constructive proof route.

Each builder emits a WitnessReport holding a cofibrancy certificate for the
poset plus one cofibration certificate per minimal element.  Routes:

* join-semilattices retract onto the subdivided simplex via the down-set /
  join maps, with minimum inclusions over the vertex-inclusion axiom;
* meet-semilattices (and Boolean-lattices-minus-top) are assembled bottom-up
  by a tower of cone attachments, one pushout per element, whose cone legs
  are retracts over the single-subdivision axiom;
* chains additionally get the staged pushout construction;
* zigzags are cut at local minima into single-maximum pieces, each a retract
  of a subdivided simplex by the explicit three-case formulas;
* trees are built rank layer by rank layer;
* the small-poset dispatcher covers every connected poset with at most five
  elements, with hand constructions for the named hard cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .certificates import (
    CofibrantCertificate,
    CofibrationCertificate,
    ax_iso,
    ax_sd_mono,
    ax_sd_vertex,
    r_compose,
    r_coproduct,
    r_pushout,
    r_retract,
    r_seq_compose,
    terminal_cofibrant,
    verify,
    verify_cofibrant,
)
from .colimits import Span
from .errors import (
    NotAChain,
    NotASemilattice,
    NotATree,
    NotAZigzag,
    NoWitnessRoute,
    SizeLimit,
)
from .functors import (
    chain_index,
    chains_poset,
    enumerate_chains,
    power_lattice,
    sd_simplex,
    subset_positions,
)
from .poset import (
    MonotoneMap,
    Poset,
    bits,
    chain,
    compose,
    from_relation,
    identity,
    induced_subposet,
    singleton,
)
from .recognize import (
    is_chain,
    is_join_semilattice,
    is_meet_semilattice,
    is_tree_poset,
    join_all,
    meet_all,
    zigzag_path,
)
from .search import RetractionQuery, retraction_search  # re-exported: the search is part of the witness toolkit

POINT = singleton()
ARROW = chain(1)  # the two-element chain x -> y


@dataclass
class WitnessReport:
    theorem: str
    route: str
    poset: Poset
    certificate: CofibrantCertificate
    minimum_certificates: dict[int, CofibrationCertificate]
    case: str | None = None
    aux_maps: dict[str, MonotoneMap] = field(default_factory=dict)
    staged: CofibrationCertificate | None = None
    truncation_stages: int | None = None

    def verify_all(self) -> bool:
        if not verify_cofibrant(self.certificate).ok:
            return False
        for c in self.minimum_certificates.values():
            if not verify(c).ok:
                return False
        if self.staged is not None and not verify(self.staged).ok:
            return False
        return True

    def uses_sd_mono(self) -> bool:
        certs = [self.certificate.cert, *self.minimum_certificates.values()]
        if self.staged is not None:
            certs.append(self.staged)
        return any(c.uses_rule("AX_SD_MONO") for c in certs)


# ----------------------------------------------------------- basic min certs

@lru_cache(maxsize=None)
def _arrow_min_cert() -> CofibrationCertificate:
    """point -> (x -> y) hitting x, as a retract of a vertex inclusion."""
    return _join_min_inclusion(ARROW, 0)


def _join_maps(p: Poset) -> tuple[MonotoneMap, MonotoneMap]:
    """Down-set map into the nonempty power lattice and the join map back."""
    m = p.n
    S = power_lattice(m, "nonempty")
    pos = subset_positions(m, "nonempty")
    down = p.down_masks()
    i_img = tuple(pos[tuple(bits(down[x]))] for x in range(m))
    subs = sorted(pos, key=lambda s: pos[s])
    p_img = []
    for s in subs:
        j = join_all(p, s)
        assert j is not None, "join map needs a join-semilattice"
        p_img.append(j)
    return MonotoneMap(p, S, i_img), MonotoneMap(S, p, tuple(p_img))


def _join_min_inclusion(p: Poset, mu: int) -> CofibrationCertificate:
    """point -> p hitting the minimal element mu of a join-semilattice."""
    i_map, p_map = _join_maps(p)
    vert = ax_sd_vertex(p.n - 1, mu)
    conclusion = MonotoneMap(POINT, p, (mu,))
    return r_retract(vert, conclusion, i_map, p_map, identity(POINT), identity(POINT))


# ----------------------------------------------------------- cone tower

def _cone_poset(W: Poset, top_label: str) -> Poset:
    n = W.n
    up = tuple((row | (1 << n)) for row in W.up) + (1 << n,)
    return Poset(W.labels + (top_label,), up)


def _cone_cert(W: Poset, top_label: str) -> CofibrationCertificate:
    """Certificate for the inclusion of W into W with a new top element.

    Chains go through a plain pushout of the arrow; join-semilattices through
    the prefix retract over the single-subdivision axiom; trees through the
    down-chain retract.  The target poset is W's elements followed by the top.
    """
    w = W.n
    if is_chain(W):
        assert W.maximal_elements() == [w - 1], "cone base must be a linear extension"
        left = MonotoneMap(POINT, W, (w - 1,))
        right = MonotoneMap(POINT, ARROW, (0,))
        res = r_pushout(_arrow_min_cert(), Span(POINT, left, right), "right")
        expected = _cone_poset(W, top_label)
        assert res.conclusion.target.up == expected.up
        return res
    C = _cone_poset(W, top_label)
    delta = MonotoneMap(W, C, tuple(range(w)))
    if is_join_semilattice(W):
        g = MonotoneMap(chain(w - 1), chain(w), tuple(range(w)))
        premise = ax_sd_mono(g)
        SA, SB = premise.conclusion.source, premise.conclusion.target
        idx_a = chain_index(chain(w - 1))
        idx_b = chain_index(chain(w))
        downW = W.down_masks()
        downC = C.down_masks()
        i_top = MonotoneMap(W, SA, tuple(idx_a[tuple(bits(downW[x]))] for x in range(w)))
        p_top = MonotoneMap(SA, W, tuple(
            join_all(W, s) for s in enumerate_chains(chain(w - 1))))
        i = MonotoneMap(C, SB, tuple(idx_b[tuple(bits(downC[x]))] for x in range(w + 1)))
        p = MonotoneMap(SB, C, tuple(
            join_all(C, s) for s in enumerate_chains(chain(w))))
        return r_retract(premise, delta, i, p, i_top, p_top)
    if is_tree_poset(W):
        g = MonotoneMap(W, chain(w - 1), tuple(range(w)))  # needs a linear extension
        premise = ax_sd_mono(g)
        XW, SA = premise.conclusion.source, premise.conclusion.target
        idx_w = chain_index(W)
        idx_a = chain_index(chain(w - 1))
        downW = W.down_masks()
        downC = C.down_masks()
        i_top = MonotoneMap(W, XW, tuple(idx_w[tuple(bits(downW[x]))] for x in range(w)))
        p_top = MonotoneMap(XW, W, tuple(c[-1] for c in enumerate_chains(W)))
        i_img = [idx_a[tuple(bits(downW[x]))] for x in range(w)]
        i_img.append(idx_a[tuple(range(w))])
        i = MonotoneMap(C, SA, tuple(i_img))
        p = MonotoneMap(SA, C, tuple(
            join_all(C, s) for s in enumerate_chains(chain(w - 1))))
        return r_retract(premise, delta, i, p, i_top, p_top)
    raise NoWitnessRoute(
        "cone base is neither a chain, a join-semilattice, nor a tree")


def cone_tower_certificate(p: Poset) -> CofibrationCertificate:
    """point -> p hitting the unique minimal element, assembled one element at
    a time: each stage pushes out the cone over the new element's strict
    down-set along its inclusion."""
    mins = p.minimal_elements()
    assert len(mins) == 1, "cone tower requires a unique minimal element"
    root = mins[0]
    down = p.down_masks()
    order = sorted(range(p.n), key=lambda e: (bin(down[e]).count("1"), e))
    assert order[0] == root
    if p.n == 1:
        return ax_iso(MonotoneMap(POINT, p, (0,)))
    elems = [root]
    X = singleton(p.labels[root])
    stages = []
    for e in order[1:]:
        w_elems = [x for x in elems if p.lt(x, e)]
        positions = [elems.index(x) for x in w_elems]
        W, W_in_X = induced_subposet(X, positions)
        cone_cert = _cone_cert(W, p.labels[e])
        span = Span(W, W_in_X, cone_cert.conclusion)
        stage = r_pushout(cone_cert, span, "right")
        X = stage.conclusion.target
        elems.append(e)
        expected, _ = induced_subposet(p, elems)
        assert X.up == expected.up, "tower stage diverged from the target poset"
        stages.append(stage)
    iso = ax_iso(MonotoneMap(X, p, tuple(elems)))
    return r_seq_compose(stages + [iso])


# ----------------------------------------------------------- semilattices

def semilattice_witness(p: Poset) -> WitnessReport:
    """Every finite semilattice: join case via the down-set/join retract onto
    the subdivided simplex; meet case via the cone tower (the textbook
    complement transfer through the punctured power lattice is recorded as
    auxiliary data, but its subdivision retract is not functorial, so the
    certificate itself is the tower)."""
    if p.n == 0:
        raise NotASemilattice("witness requires a nonempty poset")
    if p.n == 1:
        cert = ax_iso(MonotoneMap(POINT, p, (0,)))
        return WitnessReport("sliscof", "semilattice", p,
                             terminal_cofibrant(p, cert), {0: cert}, case="trivial")
    # the join route materializes the nonempty power lattice (2^n - 1
    # elements); past ten elements fall through to the meet tower when one
    # exists (chains in particular)
    if is_join_semilattice(p) and p.n <= 10:
        i_map, p_map = _join_maps(p)
        mins = p.minimal_elements()
        min_certs = {mu: _join_min_inclusion(p, mu) for mu in mins}
        cert = terminal_cofibrant(p, min_certs[mins[0]])
        return WitnessReport("sliscof", "semilattice", p, cert, min_certs,
                             case="join",
                             aux_maps={"embedding": i_map, "retraction": p_map})
    if is_meet_semilattice(p):
        aux = _complement_maps(p) if p.n <= 10 else {}
        tower = cone_tower_certificate(p)
        root = p.minimal_elements()[0]
        return WitnessReport("sliscof", "semilattice", p,
                             terminal_cofibrant(p, tower), {root: tower},
                             case="meet", aux_maps=aux)
    if is_join_semilattice(p):
        raise SizeLimit("join route materializes 2^n - 1 subsets; too large here")
    raise NotASemilattice("poset has neither all joins nor all meets")


def _complement_maps(p: Poset) -> dict[str, MonotoneMap]:
    """The complement-transfer maps of the meet case: x maps to the complement
    of its up-set inside the power lattice minus top, and back by the meet of
    the complement.  Both are monotone and compose to the identity."""
    m = p.n
    B = power_lattice(m, "minus_top")
    pos = subset_positions(m, "minus_top")
    ground = set(range(m))
    i_img = []
    for x in range(m):
        comp = tuple(sorted(ground - set(bits(p.up[x]))))
        i_img.append(pos[comp])
    subs = sorted(pos, key=lambda s: pos[s])
    p_img = []
    for s in subs:
        comp = sorted(ground - set(s))
        v = meet_all(p, comp) if comp else None
        if v is None:
            v = p.minimal_elements()[0]
        p_img.append(v)
    i_map = MonotoneMap(p, B, tuple(i_img))
    p_map = MonotoneMap(B, p, tuple(p_img))
    assert compose(p_map, i_map).image == tuple(range(m))
    return {"embedding": i_map, "retraction": p_map}


# ----------------------------------------------------------- Boolean minus top

def bool_minus_top_witness(n: int) -> WitnessReport:
    """The power lattice of [n] minus its top element, with the minimum
    inclusion certified.  Constructive only for n <= 2: at n = 3 the tower
    would need a cone over a Boolean-minus-top base, which is not derivable
    in this rule system (see the decisions ledger)."""
    if n < 0:
        raise SizeLimit("n must be nonnegative")
    if n > 3:
        raise SizeLimit("Boolean-minus-top witnesses stop at n = 3")
    if n == 3:
        raise SizeLimit(
            "the n = 3 certificate needs a cone over a Boolean-minus-top base, "
            "which no rule derives; the explicit formula maps are available "
            "via bool_minus_top_formula_maps(3)")
    B = power_lattice(n + 1, "minus_top")
    if n == 0:
        cert = ax_iso(MonotoneMap(POINT, B, (0,)))
        return WitnessReport("bopcof", "bool_minus_top", B,
                             terminal_cofibrant(B, cert), {0: cert})
    tower = cone_tower_certificate(B)
    report = WitnessReport("bopcof", "bool_minus_top", B,
                           terminal_cofibrant(B, tower), {0: tower})
    _, p_map, _ = bool_minus_top_formula_maps(n)
    report.aux_maps["union_retraction"] = p_map
    return report


def bool_minus_top_formula_maps(n: int) -> tuple[tuple[int, ...], MonotoneMap, Poset]:
    """The explicit prefix-chain map i and union map p on the chain poset of
    the Boolean minus top.  p is monotone and p(i(A)) = A for every A; i is
    returned as a raw index tuple because it fails to be order-preserving
    once the ground has three or more elements."""
    if n > 3:
        raise SizeLimit("formula maps computed up to n = 3")
    B = power_lattice(n + 1, "minus_top")
    pos = subset_positions(n + 1, "minus_top")
    subs = sorted(pos, key=lambda s: pos[s])
    xiB = chains_poset(B)
    idx = chain_index(B)
    i_img = []
    for s in subs:
        members = sorted(s)
        prefix_chain = [pos[()]]
        for k in range(1, len(members) + 1):
            prefix_chain.append(pos[tuple(members[:k])])
        i_img.append(idx[tuple(sorted(prefix_chain))])
    chains = enumerate_chains(B)
    p_img = []
    for c in chains:
        union = set()
        for el in c:
            union |= set(subs[el])
        p_img.append(pos[tuple(sorted(union))])
    p_map = MonotoneMap(xiB, B, tuple(p_img))
    return tuple(i_img), p_map, xiB


# ----------------------------------------------------------- chains

def chain_witness(p: Poset, stages: int | None = None) -> WitnessReport:
    """Finite chains via the semilattice route, plus the staged pushout
    construction (one arrow glued on top per stage) as a sequential
    certificate; a stage count beyond the chain length errors."""
    if p.n == 0 or not is_chain(p):
        raise NotAChain("chain witness requires a nonempty chain")
    rank = sorted(range(p.n), key=lambda x: bin(p.down_mask(x)).count("1"))
    k = p.n - 1 if stages is None else stages
    if k > p.n - 1 or k < 0:
        raise NotAChain(f"stage count {k} exceeds the chain length {p.n - 1}")
    base = semilattice_witness(p)
    stage_certs = []
    X = POINT
    for j in range(k):
        left = MonotoneMap(POINT, X, (X.n - 1,))
        right = MonotoneMap(POINT, ARROW, (0,))
        stage = r_pushout(_arrow_min_cert(), Span(POINT, left, right), "right")
        assert stage.conclusion.source == X
        X = stage.conclusion.target
        assert X.up == chain(j + 1).up
        stage_certs.append(stage)
    if k == p.n - 1:
        if stage_certs:
            iso = ax_iso(MonotoneMap(X, p, tuple(rank)))
            staged = r_seq_compose(stage_certs + [iso])
        else:
            staged = ax_iso(MonotoneMap(POINT, p, (rank[0],)))
    else:
        staged = r_seq_compose(stage_certs) if stage_certs else ax_iso(identity(POINT))
    return WitnessReport("cacof", "chain", p, base.certificate,
                         base.minimum_certificates, case=base.case,
                         aux_maps=base.aux_maps, staged=staged,
                         truncation_stages=k)


def chain_stage_objects(k: int) -> list[Poset]:
    """The staged objects X_0 .. X_k of the chain construction."""
    return [chain(j) for j in range(k + 1)]


# ----------------------------------------------------------- zigzags

def single_max_zigzag_maps(m: int, apex: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The explicit retract maps for a single-maximum zigzag with m = n + 2
    elements and its maximum at position `apex`: i sends x_k to the prefix
    {0..k} below the apex, the full set at the apex, and the suffix {k-1..n}
    above it; p collapses a subset to the element matching its size on the
    side it lies in, and to the apex when it straddles."""
    n = m - 2
    pos = subset_positions(n + 1, "nonempty")
    subs = sorted(pos, key=lambda s: pos[s])
    i_img = []
    for k in range(m):
        if k < apex:
            i_img.append(pos[tuple(range(0, k + 1))])
        elif k == apex:
            i_img.append(pos[tuple(range(0, n + 1))])
        else:
            i_img.append(pos[tuple(range(k - 1, n + 1))])
    p_img = []
    for s in subs:
        if all(v < apex for v in s):
            p_img.append(len(s) - 1)
        elif all(v >= apex for v in s):
            p_img.append(n + 2 - len(s))
        else:
            p_img.append(apex)
    return tuple(i_img), tuple(p_img)


def _build_piece(z: Poset, path: list[int], a: int, b: int) -> Poset:
    elems = path[a:b + 1]
    pairs = []
    for t in range(len(elems) - 1):
        x, y = elems[t], elems[t + 1]
        if z.lt(x, y):
            pairs.append((t, t + 1))
        else:
            pairs.append((t + 1, t))
    return from_relation([z.labels[e] for e in elems], pairs)


def _piece_min_certs(piece: Poset) -> dict[int, CofibrationCertificate]:
    """Certificates for all minimal elements of a single-maximum zigzag piece."""
    if is_chain(piece):
        rank = sorted(range(piece.n), key=lambda x: bin(piece.down_mask(x)).count("1"))
        return {rank[0]: _join_min_inclusion(piece, rank[0])}
    maxes = piece.maximal_elements()
    assert len(maxes) == 1
    apex = maxes[0]
    n = piece.n - 2
    S = sd_simplex(n)
    i_img, p_img = single_max_zigzag_maps(piece.n, apex)
    i_map = MonotoneMap(piece, S, i_img)
    p_map = MonotoneMap(S, piece, p_img)
    assert compose(p_map, i_map).image == tuple(range(piece.n))
    certs = {}
    for mu, k in ((0, 0), (piece.n - 1, n)):
        vert = ax_sd_vertex(n, k)
        conclusion = MonotoneMap(POINT, piece, (mu,))
        certs[mu] = r_retract(vert, conclusion, i_map, p_map,
                              identity(POINT), identity(POINT))
    return certs


def zigzag_witness(z: Poset) -> WitnessReport:
    """Finite zigzags: cut at local minima into single-maximum pieces, glue
    the pieces back with pushouts at the shared minima, track every minimum
    inclusion through the gluing legs."""
    path = zigzag_path(z)
    if path is None:
        raise NotAZigzag("the Hasse diagram is not a simple generating path")
    if z.n == 1:
        cert = ax_iso(MonotoneMap(POINT, z, (0,)))
        return WitnessReport("chaincof", "zigzag", z,
                             terminal_cofibrant(z, cert), {0: cert})
    pos_of = {e: t for t, e in enumerate(path)}
    min_positions = [pos_of[e] for e in z.minimal_elements()]
    min_positions.sort()
    segs = []
    if min_positions[0] > 0:
        segs.append((0, min_positions[0]))
    for a, b in zip(min_positions, min_positions[1:]):
        segs.append((a, b))
    if min_positions[-1] < z.n - 1:
        segs.append((min_positions[-1], z.n - 1))
    pieces = [_build_piece(z, path, a, b) for a, b in segs]

    acc = pieces[0]
    acc_elems = list(path[segs[0][0]:segs[0][1] + 1])
    acc_min_certs: dict[int, CofibrationCertificate] = {}
    for mu, cert in _piece_min_certs(pieces[0]).items():
        acc_min_certs[acc_elems[mu]] = cert
    for (a, b), piece in zip(segs[1:], pieces[1:]):
        shared = path[a]
        piece_certs = _piece_min_certs(piece)
        shared_cert_right = piece_certs[0]
        shared_cert_left = acc_min_certs[shared]
        left_leg = MonotoneMap(POINT, acc, (acc_elems.index(shared),))
        right_leg = MonotoneMap(POINT, piece, (0,))
        span = Span(POINT, left_leg, right_leg)
        kappa = r_pushout(shared_cert_right, span, "right")       # acc -> glued
        from_right = r_pushout(shared_cert_left, span, "left")    # piece -> glued
        glued = kappa.conclusion.target
        new_certs: dict[int, CofibrationCertificate] = {}
        for e, cert in acc_min_certs.items():
            new_certs[e] = r_compose(cert, kappa)
        for mu, cert in piece_certs.items():
            e = path[a + mu]
            if e not in new_certs:
                new_certs[e] = r_compose(cert, from_right)
        acc = glued
        acc_elems = acc_elems + [path[t] for t in range(a + 1, b + 1)]
        acc_min_certs = new_certs
    iso = ax_iso(MonotoneMap(acc, z, tuple(acc_elems)))
    min_certs = {e: r_compose(c, iso) for e, c in acc_min_certs.items()}
    first_min = min(min_certs)
    theorem = "chaincof" if len(segs) == 1 else "zziscof"
    return WitnessReport(theorem, "zigzag", z,
                         terminal_cofibrant(z, min_certs[first_min]), min_certs)


# ----------------------------------------------------------- trees

def tree_witness(t: Poset) -> WitnessReport:
    """Rank-layered colimit: each layer attaches one arrow per child by a
    pushout whose certified leg is a coproduct of arrow-minimum inclusions."""
    if not is_tree_poset(t):
        raise NotATree("tree witness requires a rooted tree poset")
    ranks = t.heights()
    maxrank = max(ranks)
    root = t.minimal_elements()[0]
    elems = [root]
    X = singleton(t.labels[root])
    stages = []
    for level in range(maxrank):
        children = [e for e in range(t.n) if ranks[e] == level + 1]
        if not children:
            continue
        children.sort(key=lambda e: (elems.index(_parent(t, e)), e))
        apex_cert = r_coproduct([_arrow_min_cert()] * len(children))
        apex = apex_cert.conclusion.source
        left = MonotoneMap(apex, X, tuple(
            elems.index(_parent(t, e)) for e in children))
        span = Span(apex, left, apex_cert.conclusion)
        stage = r_pushout(apex_cert, span, "right")
        X = stage.conclusion.target
        elems.extend(children)
        stages.append(stage)
    expected, _ = induced_subposet(t, elems)
    assert X.up == expected.up
    iso = ax_iso(MonotoneMap(X, t, tuple(elems)))
    cert = r_seq_compose(stages + [iso]) if stages else ax_iso(
        MonotoneMap(POINT, t, (root,)))
    return WitnessReport("tree", "tree", t, terminal_cofibrant(t, cert),
                         {root: cert})


def _parent(t: Poset, e: int) -> int:
    down = sorted(x for x in bits(t.down_mask(e)) if x != e)
    best = down[0]
    for x in down:
        if t.le(best, x):
            best = x
    return best


# ----------------------------------------------------------- named posets

def named_small_posets() -> dict[str, Poset]:
    """The named posets of the five-element catalog plus the two hard
    four-element ones."""
    mk = from_relation
    out = {
        "P1": mk(["x1", "x2", "x3", "y1", "y2"],
                 [(0, 3), (1, 3), (1, 4), (2, 3), (2, 4)]),
        "P2": mk(["x1", "x2", "x3", "y1", "y2"],
                 [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]),
        "P3": mk(["x1", "x2", "y1", "y2", "z"],
                 [(2, 4), (0, 2), (0, 3), (1, 3), (1, 4)]),
        "P4": mk(["x", "y1", "y2", "z1", "z2"],
                 [(1, 3), (1, 4), (2, 3), (2, 4), (0, 1)]),
        "P5": mk(["x1", "x2", "y", "z1", "z2"],
                 [(0, 2), (1, 2), (2, 3), (2, 4)]),
        "P6": mk(["x1", "x2", "y1", "y2", "y3"],
                 [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        "P7": mk(["x1", "x2", "y1", "y2", "z"],
                 [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]),
        "P8": mk(["x", "y1", "y2", "z1", "z2"],
                 [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
        "P9": mk(["x1", "x2", "y1", "y2", "z"],
                 [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]),
        "P1_4": mk(["x1", "x2", "y1", "y2"],
                   [(0, 2), (0, 3), (1, 3)]),
        "P2_4": mk(["x1", "x2", "y1", "y2"],
                   [(0, 2), (0, 3), (1, 2), (1, 3)]),
        "D": ARROW,
        "E": mk(["b1", "b2", "a"], [(0, 2), (1, 2)]),
    }
    return out


def find_automorphism(p: Poset, a: int, b: int) -> MonotoneMap | None:
    """First automorphism sending a to b, in lexicographic order."""
    for perm in permutations(range(p.n)):
        if perm[a] != b:
            continue
        if all(p.le(i, j) == p.le(perm[i], perm[j])
               for i in range(p.n) for j in range(p.n)):
            return MonotoneMap(p, p, perm)
    return None

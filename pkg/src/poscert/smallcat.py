"""Dispatcher for connected posets with at most five elements.

Priority: semilattice route, then recognition of the doubly subdivided
interval and the named hand cases, then gluing an arrow (by its minimum)
onto a smaller certified poset at a pendant maximum.  The named cases come
before gluing because two of them also carry pendant maxima, and the
catalog's route breakdown counts them as their own constructions.  Hand
constructions are built once on the defining posets and transported along
an isomorphism; their subdivision retracts are found by search with only
the pin data fixed, so a different but equally valid retraction than the
drawn one is acceptable.
"""

from __future__ import annotations

from functools import lru_cache

from .certificates import (
    CofibrationCertificate,
    ax_iso,
    ax_sd2_mono,
    r_compose,
    r_pushout,
    r_retract,
    terminal_cofibrant,
)
from .colimits import Span
from .errors import IllFormedQuery, NotInCatalog, NoWitnessRoute
from .functors import sd2_simplex
from .poset import (
    MonotoneMap,
    Poset,
    antichain,
    canonical_form,
    chain,
    find_isomorphism,
    induced_subposet,
    is_connected,
)
from .recognize import is_join_semilattice, is_meet_semilattice
from .search import RetractionQuery, find_embedded_retract, retraction_search
from .witnesses import (
    ARROW,
    POINT,
    WitnessReport,
    _arrow_min_cert,
    _join_min_inclusion,
    find_automorphism,
    named_small_posets,
    semilattice_witness,
    zigzag_witness,
)


HAND_NAMES = ("P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P2_4")


@lru_cache(maxsize=None)
def _named_keys() -> dict[bytes, str]:
    defs = named_small_posets()
    return {canonical_form(defs[name]).key: name for name in HAND_NAMES}


@lru_cache(maxsize=None)
def _w5_key() -> bytes:
    return canonical_form(sd2_simplex(1)).key


def pendant_max_glue_point(p: Poset) -> tuple[int, int] | None:
    """A maximal element with a unique lower cover, i.e. the poset arises by
    gluing the arrow along its minimum onto the rest.  First such pair
    (pendant, cover) in element order."""
    covers = p.covers()
    for y in sorted(p.maximal_elements()):
        below = [i for i, j in covers if j == y]
        if len(below) == 1:
            return y, below[0]
    return None


def _split_min(p: Poset, m: int) -> tuple[Poset, list[int], list[int]]:
    """Split the minimal element m into one copy per upper cover; the copies
    are appended after the remaining elements."""
    covs = sorted(j for i, j in p.covers() if i == m)
    others = [e for e in range(p.n) if e != m]
    pos = {e: k for k, e in enumerate(others)}
    pairs = []
    for i, j in p.covers():
        if i != m and j != m:
            pairs.append((pos[i], pos[j]))
    for t, c in enumerate(covs):
        pairs.append((len(others) + t, pos[c]))
    labels = [p.labels[e] for e in others] + [
        f"{p.labels[m]}_{t}" for t in range(len(covs))]
    from .poset import from_relation
    return from_relation(labels, pairs), [len(others) + t for t in range(len(covs))], others


def _collapse_to_point(cert_h: CofibrationCertificate) -> CofibrationCertificate:
    """Pushout collapsing the certified multi-point inclusion to one point;
    conclusion: point -> quotient at the merged class."""
    apex = cert_h.conclusion.source
    to_pt = MonotoneMap(apex, POINT, (0,) * apex.n)
    span = Span(apex, cert_h.conclusion, to_pt)
    return r_pushout(cert_h, span, "left")


def _min_cert_split(p: Poset, m: int, pin_values: tuple[int, ...]
                    ) -> CofibrationCertificate | None:
    ptil, copies, others = _split_min(p, m)
    r = len(copies)
    f = MonotoneMap(antichain(r), chain(2), pin_values)
    premise = ax_sd2_mono(f)
    amb = premise.conclusion.target
    pins_i = {c: premise.conclusion.image[t] for t, c in enumerate(copies)}
    pins_p = {premise.conclusion.image[t]: c for t, c in enumerate(copies)}
    found = find_embedded_retract(ptil, amb, pins_i, pins_p)
    if found is None:
        return None
    i, retr = found
    apex = premise.conclusion.source
    h = MonotoneMap(apex, ptil, tuple(copies))
    cert_h = r_retract(premise, h, i, retr,
                       MonotoneMap(apex, apex, tuple(range(apex.n))),
                       MonotoneMap(apex, apex, tuple(range(apex.n))))
    collapsed = _collapse_to_point(cert_h)
    iso = ax_iso(MonotoneMap(collapsed.conclusion.target, p, tuple(others + [m])))
    return r_compose(collapsed, iso)


def _min_cert_direct(p: Poset, m: int) -> CofibrationCertificate | None:
    premise = ax_sd2_mono(MonotoneMap(POINT, chain(2), (0,)))
    amb = premise.conclusion.target
    base = premise.conclusion.image[0]
    found = find_embedded_retract(p, amb, {m: base}, {base: m})
    if found is None:
        return None
    i, retr = found
    return r_retract(premise, MonotoneMap(POINT, p, (m,)), i, retr,
                     identity_point(), identity_point())


def identity_point() -> MonotoneMap:
    return MonotoneMap(POINT, POINT, (0,))


@lru_cache(maxsize=None)
def _edge_collapsed_ambient() -> tuple[CofibrationCertificate, Poset, int]:
    """The doubly subdivided triangle with one doubly subdivided edge
    collapsed to a point, with a certified point inclusion at the class."""
    e01 = MonotoneMap(chain(1), chain(2), (0, 1))
    premise = ax_sd2_mono(e01)
    cert_pt = _collapse_to_point(premise)
    U = cert_pt.conclusion.target
    return cert_pt, U, cert_pt.conclusion.image[0]


def _min_cert_edge_collapse(p: Poset, m: int) -> CofibrationCertificate | None:
    cert_pt, U, base = _edge_collapsed_ambient()
    found = find_embedded_retract(p, U, {m: base}, {base: m})
    if found is None:
        return None
    i, retr = found
    return r_retract(cert_pt, MonotoneMap(POINT, p, (m,)), i, retr,
                     identity_point(), identity_point())


def _min_cert_w5_glue(p: Poset, m: int,
                      witness_fn) -> CofibrationCertificate | None:
    """Remove a twin minimal element w with exactly two upper covers, glue
    the subdivided interval onto its covers, and retract p off the result."""
    for w in sorted(p.minimal_elements()):
        if w == m:
            continue
        covs = sorted(j for i, j in p.covers() if i == w)
        if len(covs) != 2:
            continue
        others = [e for e in range(p.n) if e != w]
        sub, _ = induced_subposet(p, others)
        if not is_connected(sub):
            continue
        f = MonotoneMap(antichain(2), chain(1), (0, 1))
        premise = ax_sd2_mono(f)
        apex = premise.conclusion.source
        right = MonotoneMap(apex, sub, tuple(others.index(c) for c in covs))
        span = Span(apex, premise.conclusion, right)
        ext = r_pushout(premise, span, "left")  # sub -> glued
        glued = ext.conclusion.target
        try:
            sub_report = witness_fn(sub)
        except (NotInCatalog, NoWitnessRoute):
            continue
        mpos = others.index(m)
        if mpos not in sub_report.minimum_certificates:
            continue
        base_cert = r_compose(sub_report.minimum_certificates[mpos], ext)
        base = base_cert.conclusion.image[0]
        found = find_embedded_retract(p, glued, {m: base}, {base: m})
        if found is None:
            continue
        i, retr = found
        return r_retract(base_cert, MonotoneMap(POINT, p, (m,)), i, retr,
                         identity_point(), identity_point())
    return None


def _min_cert_pendant_min(p: Poset, m: int,
                          witness_fn) -> CofibrationCertificate | None:
    """m is a pendant minimum: glue the arrow by its top onto the cover of m
    inside the rest, which must be minimal there."""
    covs = sorted(j for i, j in p.covers() if i == m)
    if len(covs) != 1:
        return None
    q = covs[0]
    others = [e for e in range(p.n) if e != m]
    sub, _ = induced_subposet(p, others)
    if not is_connected(sub):
        return None
    qpos = others.index(q)
    if qpos not in sub.minimal_elements():
        return None
    try:
        sub_report = witness_fn(sub)
    except (NotInCatalog, NoWitnessRoute):
        return None
    if qpos not in sub_report.minimum_certificates:
        return None
    left = MonotoneMap(POINT, sub, (qpos,))
    right = MonotoneMap(POINT, ARROW, (1,))
    span = Span(POINT, left, right)
    ext = r_pushout(sub_report.minimum_certificates[qpos], span, "left")  # D -> glued
    glued = ext.conclusion.target
    # glued order: sub elements first, then the new bottom
    iso = ax_iso(MonotoneMap(glued, p, tuple(others + [m])))
    return r_compose(r_compose(_arrow_min_cert(), ext), iso)


def _transport_min_cert(cert: CofibrationCertificate, src_min: int,
                        tgt_min: int) -> CofibrationCertificate:
    """Move a point inclusion to another minimal element along an
    automorphism of the target poset."""
    p = cert.conclusion.target
    sigma = find_automorphism(p, src_min, tgt_min)
    assert sigma is not None, "expected a symmetry between the two minima"
    return r_compose(cert, ax_iso(sigma))


def _p8_fold_cert(p8: Poset) -> CofibrationCertificate:
    """The fold construction: a three-point wedge maps into a six-element
    poset as a retract of the doubly subdivided edge inclusion; pushing out
    along the fold onto the arrow yields the poset and its minimum."""
    from .poset import from_relation
    from .search import order_embeddings, _monotone_extensions

    Q = from_relation(["x", "y1", "y2", "y3", "z1", "z2"],
                      [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5)])
    R = from_relation(["x", "ya", "yb"], [(0, 1), (0, 2)])
    h = MonotoneMap(R, Q, (0, 1, 3))
    premise = ax_sd2_mono(MonotoneMap(chain(1), chain(2), (0, 1)))
    fmap = premise.conclusion      # W5 -> sd2(2)
    W5, amb = fmap.source, fmap.target
    found = None
    for it_img in order_embeddings(R, W5, {}):
        iTop = MonotoneMap(R, W5, it_img)
        pins_i: dict[int, int] = {}
        bad = False
        for rr in range(R.n):
            tgt = fmap.image[it_img[rr]]
            if pins_i.get(h.image[rr], tgt) != tgt:
                bad = True
                break
            pins_i[h.image[rr]] = tgt
        if bad:
            continue
        forced: list[int | None] = [None] * W5.n
        for rr in range(R.n):
            forced[it_img[rr]] = rr
        for ptop_img in _monotone_extensions(W5, R, forced):
            pins_p: dict[int, int] = {}
            bad2 = False
            for w in range(W5.n):
                v = h.image[ptop_img[w]]
                a = fmap.image[w]
                if pins_p.get(a, v) != v:
                    bad2 = True
                    break
                pins_p[a] = v
            if bad2:
                continue
            emb = find_embedded_retract(Q, amb, pins_i, pins_p, embed_limit=500)
            if emb is not None:
                pTop = MonotoneMap(W5, R, ptop_img)
                found = (iTop, pTop, emb[0], emb[1])
                break
        if found:
            break
    assert found is not None, "fold retract for the wide crown must exist"
    iTop, pTop, i, retr = found
    cert_h = r_retract(premise, h, i, retr, iTop, pTop)
    fold = MonotoneMap(R, ARROW, (0, 1, 1))
    span = Span(R, cert_h.conclusion, fold)
    ext = r_pushout(cert_h, span, "left")   # arrow -> glued
    glued = ext.conclusion.target
    iso_map = find_isomorphism(glued, p8)
    assert iso_map is not None
    return r_compose(r_compose(_arrow_min_cert(), ext), ax_iso(iso_map))


def _p5_wedge_certs(p5: Poset) -> dict[int, CofibrationCertificate]:
    """Glue the cone side and the two-minima side at the middle point; both
    minima live on the second side and compose through the pushout leg."""
    v_side, _ = induced_subposet(p5, [2, 3, 4])    # y < z1, z2 (a meet-semilattice)
    e_side, _ = induced_subposet(p5, [0, 1, 2])    # x1, x2 < y
    left = MonotoneMap(POINT, v_side, (0,))
    right = MonotoneMap(POINT, e_side, (2,))
    span = Span(POINT, left, right)
    premise = semilattice_witness(v_side).minimum_certificates[0]
    ext = r_pushout(premise, span, "left")   # e_side -> glued
    glued = ext.conclusion.target
    # glued element order: v side (y, z1, z2) then x1, x2
    iso = ax_iso(MonotoneMap(glued, p5, (2, 3, 4, 0, 1)))
    out = {}
    for mu in (0, 1):
        cert = r_compose(_join_min_inclusion(e_side, mu), ext)
        out[mu] = r_compose(cert, iso)
    return out


def _crown4_certs(p: Poset) -> dict[int, CofibrationCertificate]:
    """The four-crown: collapse the endpoints of the doubly subdivided
    interval; the other minimum follows by symmetry."""
    f = MonotoneMap(antichain(2), chain(1), (0, 1))
    premise = ax_sd2_mono(f)
    collapsed = _collapse_to_point(premise)
    obj = collapsed.conclusion.target
    iso_map = find_isomorphism(obj, p)
    assert iso_map is not None
    first = r_compose(collapsed, ax_iso(iso_map))
    m1 = first.conclusion.image[0]
    certs = {m1: first}
    for mu in p.minimal_elements():
        if mu != m1:
            certs[mu] = _transport_min_cert(first, m1, mu)
    return certs


@lru_cache(maxsize=None)
def _hand_def_certs(name: str) -> dict[int, CofibrationCertificate]:
    """Minimum-inclusion certificates on the defining poset of a named case."""
    defs = named_small_posets()
    p = defs[name]

    def witness_fn(sub):
        return small_poset_witness(sub)

    certs: dict[int, CofibrationCertificate] = {}
    if name == "P1":
        certs[1] = _min_cert_split(p, 1, (0, 2))
        certs[2] = _transport_min_cert(certs[1], 1, 2)
        certs[0] = _min_cert_w5_glue(p, 0, witness_fn)
    elif name == "P2":
        certs[0] = _min_cert_w5_glue(p, 0, witness_fn)
        certs[1] = _transport_min_cert(certs[0], 0, 1)
        certs[2] = _transport_min_cert(certs[0], 0, 2)
    elif name == "P3":
        certs[0] = _min_cert_split(p, 0, (0, 2))
        certs[1] = _min_cert_split(p, 1, (0, 2))
    elif name == "P4":
        certs[0] = _min_cert_pendant_min(p, 0, witness_fn)
        certs[2] = _min_cert_split(p, 2, (0, 2))
    elif name == "P5":
        certs.update(_p5_wedge_certs(p))
    elif name == "P6":
        certs[0] = _min_cert_split(p, 0, (0, 1, 2))
        certs[1] = _transport_min_cert(certs[0], 0, 1)
    elif name == "P7":
        certs[0] = _min_cert_edge_collapse(p, 0)
        certs[1] = _transport_min_cert(certs[0], 0, 1)
    elif name == "P8":
        certs[0] = _p8_fold_cert(p)
    elif name == "P9":
        certs[0] = _min_cert_split(p, 0, (0, 2))
        certs[1] = _transport_min_cert(certs[0], 0, 1)
    elif name == "P2_4":
        certs.update(_crown4_certs(p))
    else:
        raise NotInCatalog(f"no hand construction for {name}")
    for mu, cert in certs.items():
        assert cert is not None, f"{name} minimum {mu} route failed"
    return certs


def _hand_witness(p: Poset, name: str) -> WitnessReport:
    defs = named_small_posets()
    ref = defs[name]
    iso = find_isomorphism(ref, p)
    assert iso is not None
    iso_cert = ax_iso(iso)
    min_certs = {}
    for mu, cert in _hand_def_certs(name).items():
        min_certs[iso.image[mu]] = r_compose(cert, iso_cert)
    first = min(min_certs)
    theorem = name if name.startswith("P") and not name.endswith("_4") else "posf"
    return WitnessReport(theorem, "hand", p,
                         terminal_cofibrant(p, min_certs[first]), min_certs)


def small_poset_witness(p: Poset) -> WitnessReport:
    """Dispatch for connected posets with 1..5 elements, in the fixed
    priority order; every class is covered."""
    if p.n == 0 or p.n > 5 or not is_connected(p):
        raise NotInCatalog("dispatcher covers connected posets with 1..5 elements")
    if is_join_semilattice(p) or is_meet_semilattice(p):
        return semilattice_witness(p)
    # named cases and the doubly subdivided interval take precedence over the
    # gluing route: some of them also carry a pendant maximum, but the
    # catalog's route breakdown treats them as their own constructions.
    key = canonical_form(p).key
    if key == _w5_key():
        zz = zigzag_witness(p)
        zz.route = "sd2delta1"
        return zz
    name = _named_keys().get(key)
    if name is not None:
        return _hand_witness(p, name)
    glue = pendant_max_glue_point(p)
    if glue is not None:
        return _glued_witness(p, *glue)
    raise NotInCatalog("no witness route for this poset")


def _glued_witness(p: Poset, y: int, q: int) -> WitnessReport:
    others = [e for e in range(p.n) if e != y]
    sub, _ = induced_subposet(p, others)
    sub_report = small_poset_witness(sub)
    left = MonotoneMap(POINT, sub, (others.index(q),))
    right = MonotoneMap(POINT, ARROW, (0,))
    span = Span(POINT, left, right)
    alpha = r_pushout(_arrow_min_cert(), span, "right")  # sub -> glued
    glued = alpha.conclusion.target
    iso = ax_iso(MonotoneMap(glued, p, tuple(others + [y])))
    min_certs = {}
    for mu_sub, cert in sub_report.minimum_certificates.items():
        mu = others[mu_sub]
        min_certs[mu] = r_compose(r_compose(cert, alpha), iso)
    assert set(min_certs) == set(p.minimal_elements())
    first = min(min_certs)
    return WitnessReport("posf", "glued", p,
                         terminal_cofibrant(p, min_certs[first]), min_certs)


def lemma_retpush(q: Poset, points: tuple[int, ...],
                  ambient_embedding: MonotoneMap) -> WitnessReport:
    """Collapse a certified multi-point inclusion of q to one point: the
    inclusion must be a retract (found by search) of a multi-vertex inclusion
    into a doubly subdivided simplex."""
    amb = ambient_embedding.target
    dims = {sd2_simplex(k).up: k for k in range(3)}
    if amb.up not in dims:
        raise IllFormedQuery("ambient is not a doubly subdivided simplex")
    n = dims[amb.up]
    # locate which simplex vertices the points are pinned to
    vertex_class = {}
    for k in range(n + 1):
        probe = ax_sd2_mono(MonotoneMap(POINT, chain(n), (k,)))
        vertex_class[probe.conclusion.image[0]] = k
    ks = []
    for t in points:
        v = ambient_embedding.image[t]
        if v not in vertex_class:
            raise IllFormedQuery("a collapse point is not embedded at a vertex")
        ks.append(vertex_class[v])
    f = MonotoneMap(antichain(len(points)), chain(n), tuple(ks))
    premise = ax_sd2_mono(f)
    pins = {ambient_embedding.image[t]: t for t in points}
    retr = retraction_search(RetractionQuery.make(amb, pins, ambient_embedding))
    apex = premise.conclusion.source
    h = MonotoneMap(apex, q, tuple(points))
    cert_h = r_retract(premise, h, ambient_embedding, retr,
                       MonotoneMap(apex, apex, tuple(range(apex.n))),
                       MonotoneMap(apex, apex, tuple(range(apex.n))))
    collapsed = _collapse_to_point(cert_h)
    glued = collapsed.conclusion.target
    merged = collapsed.conclusion.image[0]
    return WitnessReport("retpush", "retpush", glued,
                         terminal_cofibrant(glued, collapsed),
                         {merged: collapsed})

"""The acceptance suite: every criterion the build must satisfy, runnable
both from the CLI and from the test suite.  All randomness is seeded; exact
checks carry no tolerance."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace

from .catalog import certify_all, counts_table
from .certificates import (
    CofibrationCertificate,
    ax_iso,
    ax_sd2_mono,
    ax_sd_mono,
    ax_sd_vertex,
    r_compose,
    r_coproduct,
    r_pushout,
    r_seq_compose,
    verify,
)
from .colimits import PushoutResult, Span, mediating_map, pushout
from .errors import IllFormedQuery, NotAPoset, NoRetraction
from .functors import chains_poset, sd2_simplex, power_lattice
from .poset import (
    MonotoneMap,
    Poset,
    antichain,
    canonical_form,
    chain,
    from_covers,
    from_relation,
    identity,
    is_monotone_data,
    singleton,
)
from .search import RetractionQuery, brute_force_retraction, retraction_search
from .smallcat import small_poset_witness
from .witnesses import (
    bool_minus_top_formula_maps,
    bool_minus_top_witness,
    chain_witness,
    named_small_posets,
    semilattice_witness,
    single_max_zigzag_maps,
    tree_witness,
    zigzag_witness,
)


@dataclass
class SuiteResult:
    name: str
    ok: bool
    detail: str
    uses_sd_mono: bool = False
    seconds: float = 0.0


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.time()
        res = fn(*args, **kwargs)
        res.seconds = round(time.time() - t0, 3)
        return res
    return run


@_timed
def criterion_catalog_counts() -> SuiteResult:
    rows = counts_table(5)
    connected = [r["connected"] for r in rows]
    semis = [(r["n"], r["semilattices"], r["connected"]) for r in rows if r["n"] >= 3]
    ok = connected == [1, 1, 3, 10, 44] and \
        [(s, c) for _, s, c in semis] == [(3, 3), (8, 10), (25, 44)]
    return SuiteResult("catalog counts", ok,
                       f"connected {connected}, semilattices {[s for _, s, _ in semis]}")


@_timed
def criterion_certify_catalog() -> SuiteResult:
    entries = certify_all(5)
    failures = []
    routes: dict[str, int] = {}
    flagged = False
    connected_count = 0
    for e in entries:
        assert e.witness is not None
        if not e.witness.verify_all():
            failures.append(e.canonical.hex()[:12])
        mins = set(e.representative.minimal_elements())
        if set(e.witness.minimum_certificates) != mins:
            failures.append(e.canonical.hex()[:12] + ":minima")
        flagged = flagged or e.witness.uses_sd_mono()
        if "connected" in e.classification.tags:
            connected_count += 1
            if e.representative.n == 5:
                routes[e.witness.route] = routes.get(e.witness.route, 0) + 1
    breakdown_ok = routes == {"semilattice": 25, "glued": 9,
                              "sd2delta1": 1, "hand": 9}
    ok = not failures and breakdown_ok and connected_count == 59
    return SuiteResult(
        "main theorem at desk scale", ok,
        f"{connected_count} connected classes, routes {routes}, failures {failures}",
        uses_sd_mono=flagged)


@_timed
def criterion_subdivision_sizes() -> SuiteResult:
    sizes_ok = all(chains_poset(chain(n)).n == 2 ** (n + 1) - 1 for n in range(6))
    w = sd2_simplex(1)
    fence = from_covers(["m0", "M0", "m1", "M1", "m2"],
                        [("m0", "M0"), ("m1", "M0"), ("m1", "M1"), ("m2", "M1")])
    w_ok = w.n == 5 and canonical_form(w) == canonical_form(fence)
    return SuiteResult("subdivision sizes", sizes_ok and w_ok,
                       f"chain sizes ok={sizes_ok}, sd2 interval is the 5-element fence={w_ok}")


@_timed
def criterion_formula_retracts() -> SuiteResult:
    ok = True
    details = []
    for n in (1, 2, 3):
        i_img, p_map, _ = bool_minus_top_formula_maps(n)
        good = all(p_map.image[i_img[a]] == a for a in range(len(i_img)))
        ok = ok and good
        details.append(f"B({n}) p o i = id: {good}")
    zig = 0
    for m in range(3, 9):
        for apex in range(1, m - 1):
            i_img, p_img = single_max_zigzag_maps(m, apex)
            if not all(p_img[i_img[k]] == k for k in range(m)):
                ok = False
                details.append(f"zigzag m={m} apex={apex} FAILS")
            zig += 1
    details.append(f"{zig} zigzag cases exact")
    return SuiteResult("explicit-formula retracts", ok, "; ".join(details))


def _random_tree(rng: random.Random, n: int) -> Poset:
    parents = [None] + [rng.randrange(i) for i in range(1, n)]
    covers = [(f"t{parents[i]}", f"t{i}") for i in range(1, n)]
    return from_covers([f"t{i}" for i in range(n)], covers)


@_timed
def criterion_tree_construction(seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(50):
        n = rng.randint(2, 15)
        t = _random_tree(rng, n)
        rep = tree_witness(t)
        colim = rep.certificate.cert.conclusion.target
        if canonical_form(colim) != canonical_form(t) or not rep.verify_all():
            bad += 1
    return SuiteResult("tree construction", bad == 0,
                       f"50 pseudo-random trees, {bad} failures")


def _random_poset(rng: random.Random, n: int) -> Poset:
    while True:
        pairs = [(i, j) for i in range(n) for j in range(n)
                 if i != j and rng.random() < 0.35]
        try:
            return from_relation([f"e{i}" for i in range(n)], pairs)
        except Exception:
            continue


def _random_monotone(rng: random.Random, src: Poset, tgt: Poset) -> MonotoneMap | None:
    down = src.down_masks()
    order = sorted(range(src.n), key=lambda x: bin(down[x]).count("1"))
    for _ in range(40):
        image: list[int | None] = [None] * src.n
        ok = True
        for x in order:
            cands = [v for v in range(tgt.n)
                     if all(image[y] is None or not src.le(y, x) or tgt.le(image[y], v)
                            for y in range(src.n))
                     and all(image[y] is None or not src.le(x, y) or tgt.le(v, image[y])
                             for y in range(src.n))]
            if not cands:
                ok = False
                break
            image[x] = rng.choice(cands)
        if ok:
            return MonotoneMap(src, tgt, tuple(image))  # type: ignore[arg-type]
    return None


@_timed
def criterion_pushout_universal(seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    spans_done = 0
    cocones_done = 0
    while spans_done < 100:
        apex = _random_poset(rng, rng.randint(1, 3))
        a = _random_poset(rng, rng.randint(1, 5))
        b = _random_poset(rng, rng.randint(1, 5))
        left = _random_monotone(rng, apex, a)
        right = _random_monotone(rng, apex, b)
        if left is None or right is None:
            continue
        span = Span(apex, left, right)
        try:
            result = pushout(span)
        except NotAPoset:
            continue
        spans_done += 1
        for _ in range(20):
            tgt = _random_poset(rng, rng.randint(1, 4))
            w = _random_monotone(rng, result.object, tgt)
            if w is None:
                continue
            cl = MonotoneMap(a, tgt, tuple(w.image[v] for v in result.from_left.image))
            cr = MonotoneMap(b, tgt, tuple(w.image[v] for v in result.from_right.image))
            u = mediating_map(result, cl, cr)
            if u.image != w.image:
                return SuiteResult("pushout universal property", False,
                                   "mediating map differs from the inducing map")
            # uniqueness: every class is hit by a leg, so the values are forced
            hit = set(result.from_left.image) | set(result.from_right.image)
            if hit != set(range(result.object.n)):
                return SuiteResult("pushout universal property", False,
                                   "legs not jointly surjective")
            cocones_done += 1
    return SuiteResult("pushout universal property", True,
                       f"{spans_done} spans, {cocones_done} cocones, mediating map "
                       "exists, matches, and is forced pointwise")


# --------------------------------------------------------------- mutations

def _monotone_variants(m: MonotoneMap, positions=None):
    for pos in range(m.source.n):
        if positions is not None and pos not in positions:
            continue
        for val in range(m.target.n):
            if val == m.image[pos]:
                continue
            image = list(m.image)
            image[pos] = val
            if is_monotone_data(m.source, m.target, image):
                yield MonotoneMap(m.source, m.target, tuple(image))


def _first_rule(cert: CofibrationCertificate, rule: str) -> CofibrationCertificate | None:
    for node in cert.nodes():
        if node.rule == rule:
            return node
    return None


def _base_certs() -> dict[str, list[CofibrationCertificate]]:
    seats: dict[str, list[CofibrationCertificate]] = {}
    seats["AX_SD_VERTEX"] = [ax_sd_vertex(2, 1), ax_sd_vertex(3, 2)]
    seats["AX_SD2_MONO"] = [ax_sd2_mono(MonotoneMap(chain(1), chain(2), (0, 1))),
                            ax_sd2_mono(MonotoneMap(antichain(2), chain(2), (0, 2)))]
    seats["AX_SD_MONO"] = [ax_sd_mono(MonotoneMap(chain(1), chain(2), (0, 2))),
                           ax_sd_mono(MonotoneMap(chain(2), chain(3), (0, 1, 2)))]
    v = from_relation(["a", "b", "t"], [(0, 2), (1, 2)])
    seats["AX_ISO"] = [ax_iso(MonotoneMap(v, v, (1, 0, 2))),
                       ax_iso(identity(chain(2))),
                       ax_iso(identity(antichain(3)))]
    diamond = from_relation(["b", "m1", "m2", "t"], [(0, 1), (0, 2), (1, 3), (2, 3)])
    from .witnesses import _join_min_inclusion
    seats["R_RETRACT"] = [_join_min_inclusion(diamond, 0),
                          _join_min_inclusion(v, 0)]
    pt = singleton()
    arrow_min = _join_min_inclusion(chain(1), 0)
    wedge_span = Span(pt, MonotoneMap(pt, chain(1), (0,)),
                      MonotoneMap(pt, chain(1), (0,)))
    top_span = Span(pt, MonotoneMap(pt, chain(1), (1,)),
                    MonotoneMap(pt, chain(1), (0,)))
    seats["R_PUSHOUT"] = [r_pushout(arrow_min, wedge_span, "right"),
                          r_pushout(arrow_min, top_span, "right")]
    seats["R_COMPOSE"] = [r_compose(arrow_min, r_pushout(arrow_min, top_span, "right")),
                          r_compose(ax_sd_vertex(1, 0), ax_iso(identity(
                              ax_sd_vertex(1, 0).conclusion.target)))]
    seats["R_COPRODUCT"] = [r_coproduct([arrow_min, ax_sd_vertex(2, 0)]),
                            r_coproduct([ax_sd_vertex(1, 1), arrow_min])]
    stage2 = r_pushout(arrow_min, top_span, "right")
    seats["R_SEQ_COMPOSE"] = [r_seq_compose([arrow_min, stage2]),
                              r_seq_compose([ax_sd_vertex(1, 0)])]
    return seats


def _load_bearing_mutations(cert: CofibrationCertificate):
    """Single-point corruptions of data the verifier must pin down: the
    conclusion, axiom parameters and maps, premises, span legs, stored
    pushout legs, and constrained entries of retract maps."""
    for variant in _monotone_variants(cert.conclusion):
        yield replace(cert, conclusion=variant)
    if cert.rule == "AX_SD_VERTEX":
        for k in range(cert.ax_n + 2):
            if k != cert.ax_k and k <= cert.ax_n:
                yield replace(cert, ax_k=k)
        for n in (cert.ax_n - 1, cert.ax_n + 1):
            if n >= 0:
                yield replace(cert, ax_n=n)
    if cert.ax_map is not None:
        for variant in _monotone_variants(cert.ax_map):
            yield replace(cert, ax_map=variant)
        if cert.rule in ("AX_SD2_MONO", "AX_SD_MONO") and cert.ax_map.source.n > 1:
            squash = MonotoneMap(cert.ax_map.source, cert.ax_map.target,
                                 (cert.ax_map.image[0],) * cert.ax_map.source.n)
            yield replace(cert, ax_map=squash)
    if cert.rule == "R_RETRACT":
        g = cert.conclusion
        f = cert.premises[0].conclusion
        # p is pinned on the image of i (retraction identity) and the image
        # of the premise (commuting square); i is pinned on the image of g
        pinned_p = set(cert.ret_i.image) | set(f.image)
        for variant in _monotone_variants(cert.ret_p, pinned_p):
            yield replace(cert, ret_p=variant)
        pinned_i = set(g.image)
        for variant in _monotone_variants(cert.ret_i, pinned_i):
            yield replace(cert, ret_i=variant)
        # any entry of i whose perturbation breaks p o i = id
        for variant in _monotone_variants(cert.ret_i):
            if any(cert.ret_p.image[variant.image[y]] != y
                   for y in range(g.target.n)):
                yield replace(cert, ret_i=variant)
    if cert.span is not None and cert.stored is not None:
        for variant in _monotone_variants(cert.stored.from_left):
            yield replace(cert, stored=PushoutResult(
                cert.stored.object, variant, cert.stored.from_right, cert.stored.span))
        for variant in _monotone_variants(cert.stored.from_right):
            yield replace(cert, stored=PushoutResult(
                cert.stored.object, cert.stored.from_left, variant, cert.stored.span))
        yield replace(cert, side="left" if cert.side == "right" else "right")
        for variant in _monotone_variants(cert.span.left):
            yield replace(cert, span=Span(cert.span.apex, variant, cert.span.right))
        for variant in _monotone_variants(cert.span.right):
            yield replace(cert, span=Span(cert.span.apex, cert.span.left, variant))
    if cert.rule in ("R_COMPOSE", "R_SEQ_COMPOSE", "R_COPRODUCT"):
        if len(cert.premises) >= 2:
            yield replace(cert, premises=tuple(reversed(cert.premises)))
            yield replace(cert, premises=cert.premises[:-1])
        others = [ax_sd_vertex(1, 0), ax_sd_vertex(1, 1), ax_sd_vertex(2, 0),
                  ax_sd_vertex(2, 1), ax_sd_vertex(2, 2), ax_sd_vertex(3, 0)]
        for other in others:
            yield replace(cert, premises=(other,) + cert.premises[1:])
            yield replace(cert, premises=cert.premises[:-1] + (other,))


@_timed
def criterion_mutation_robustness() -> SuiteResult:
    per_rule = {}
    ok = True
    for rule, bases in _base_certs().items():
        count = 0
        survivors = 0
        for base in bases:
            assert verify(base).ok, f"base certificate for {rule} must verify"
            for mut in _load_bearing_mutations(base):
                if mut == base:
                    continue
                if count >= 20:
                    break
                count += 1
                if verify(mut).ok:
                    survivors += 1
            if count >= 20:
                break
        per_rule[rule] = (count, survivors)
        if count < 20 or survivors:
            ok = False
    detail = ", ".join(f"{r}:{c}mut/{s}ok" for r, (c, s) in per_rule.items())
    return SuiteResult("verifier mutation robustness", ok,
                       f"per rule {detail}")


@_timed
def criterion_retraction_oracle() -> SuiteResult:
    # replay every retraction query the named hand constructions actually
    # issue; compare existence and the returned map on small ambients
    from .search import record_queries
    from .smallcat import _edge_collapsed_ambient, _hand_def_certs

    defs = named_small_posets()
    with record_queries() as log:
        _hand_def_certs.cache_clear()
        _edge_collapsed_ambient.cache_clear()
        for name in ("P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"):
            w = small_poset_witness(defs[name])
            assert w.verify_all()
    queries = [q for q in log if q.ambient.n <= 9]
    # plus the v-poset arm example: fold the free maximum
    vpos = from_relation(["m", "a", "b"], [(0, 1), (0, 2)])
    arm = from_relation(["m", "a"], [(0, 1)])
    queries.append(RetractionQuery.make(vpos, {}, MonotoneMap(arm, vpos, (0, 1))))
    ok = len(queries) >= 3
    details = [f"{len(log)} queries recorded, {len(queries)} with ambient <= 9"]
    for q in queries:
        oracle = brute_force_retraction(q)
        try:
            got = retraction_search(q)
        except NoRetraction:
            got = None
        agree = (oracle is None and got is None) or (
            oracle is not None and got is not None and oracle.image == got.image)
        ok = ok and agree
        details.append(f"ambient {q.ambient.n}: agree={agree}")
    # order-reflection guard
    try:
        bad = RetractionQuery.make(chain(1), {}, MonotoneMap(antichain(2), chain(1), (0, 1)))
        retraction_search(bad)
        ok = False
        details.append("ill-formed query accepted")
    except IllFormedQuery:
        details.append("ill-formed query rejected")
    return SuiteResult("retraction search oracle", ok, "; ".join(details))


@_timed
def criterion_truncation_stability() -> SuiteResult:
    ok = True
    details = []
    prev = None
    for k in range(1, 12):
        rep = chain_witness(chain(k))
        staged = rep.staged
        assert staged is not None and staged.rule == "R_SEQ_COMPOSE"
        stages = staged.premises[:-1]  # drop the final relabeling
        if prev is not None:
            agree = all(a.conclusion.source == b.conclusion.source
                        and a.conclusion.target == b.conclusion.target
                        and a.conclusion.image == b.conclusion.image
                        for a, b in zip(prev, stages))
            ok = ok and agree and len(stages) == len(prev) + 1
        prev = stages
    details.append("stages k and k+1 share the first k pushouts for k <= 10")
    return SuiteResult("truncation stability", ok, "; ".join(details))


def run_all(seed: int = 0) -> list[SuiteResult]:
    return [
        criterion_catalog_counts(),
        criterion_certify_catalog(),
        criterion_subdivision_sizes(),
        criterion_formula_retracts(),
        criterion_tree_construction(seed),
        criterion_pushout_universal(seed),
        criterion_mutation_robustness(),
        criterion_retraction_oracle(),
        criterion_truncation_stability(),
    ]


# --------------------------------------------------------------- matrix

def theorem_matrix(seed: int = 0, strict_axioms: bool = False) -> list[tuple[str, str, str]]:
    """(theorem tag, status, detail) rows; CONDITIONAL marks dependence on
    the single-subdivision axiom under --strict-axioms."""
    rows: list[tuple[str, str, str]] = []

    def status(ok: bool, flagged: bool) -> str:
        if not ok:
            return "FAIL"
        if strict_axioms and flagged:
            return "CONDITIONAL"
        return "PASS"

    vert_ok = all(verify(ax_sd_vertex(n, k)).ok
                  for n in range(4) for k in range(n + 1))
    rows.append(("sdiscof", status(vert_ok, False), "vertex inclusions n <= 3"))

    diamond = from_relation(["b", "m1", "m2", "t"], [(0, 1), (0, 2), (1, 3), (2, 3)])
    dw = semilattice_witness(diamond)
    rows.append(("imapycof", status(dw.verify_all(), False),
                 "terminal-to-initial splice in verify_cofibrant"))

    bop_ok = True
    bop_flag = False
    for n in (0, 1, 2):
        w = bool_minus_top_witness(n)
        bop_ok = bop_ok and w.verify_all()
        bop_flag = bop_flag or w.uses_sd_mono()
    maps_ok = all(
        all(bool_minus_top_formula_maps(n)[1].image[bool_minus_top_formula_maps(n)[0][a]] == a
            for a in range(2 ** (n + 1) - 1))
        for n in (1, 2, 3))
    rows.append(("bopcof", status(bop_ok and maps_ok, bop_flag),
                 "witnesses n <= 2; formula maps n <= 3 (n = 3 certificate out of "
                 "reach, see ledger)"))

    bnm_ok = all(power_lattice(n + 1, "nonempty") == chains_poset(chain(n))
                 for n in range(5))
    rows.append(("bnmiscof", status(bnm_ok, False),
                 "power lattice minus bottom equals the chain poset"))

    entries = certify_all(5)
    semi_ok = True
    semi_flag = False
    minc_ok = True
    for e in entries:
        if e.witness.route == "semilattice":
            semi_ok = semi_ok and e.witness.verify_all()
            semi_flag = semi_flag or e.witness.uses_sd_mono()
            minc_ok = minc_ok and set(e.witness.minimum_certificates) == \
                set(e.representative.minimal_elements())
    rows.append(("sliscof", status(semi_ok, semi_flag),
                 "all catalog semilattices"))
    rows.append(("slinccof", status(semi_ok and minc_ok, semi_flag),
                 "all minimum inclusions of catalog semilattices"))

    cw = chain_witness(chain(4))
    trunc = criterion_truncation_stability()
    rows.append(("cacof", status(cw.verify_all() and trunc.ok, False),
                 "staged chains and truncation stability"))

    zz_ok = True
    for m in range(3, 8):
        for signs in range(2 ** (m - 1)):
            pairs = []
            for t in range(m - 1):
                if (signs >> t) & 1:
                    pairs.append((t, t + 1))
                else:
                    pairs.append((t + 1, t))
            z = from_relation([f"v{t}" for t in range(m)], pairs)
            from .recognize import is_zigzag
            if not is_zigzag(z):
                continue
            rep = zigzag_witness(z)
            zz_ok = zz_ok and rep.verify_all() and \
                set(rep.minimum_certificates) == set(z.minimal_elements())
    rows.append(("chaincof", status(zz_ok, False),
                 "single-maximum pieces of all zigzags with <= 7 elements"))
    rows.append(("zziscof", status(zz_ok, False),
                 "all zigzags with <= 7 elements, all minima"))

    tr = criterion_tree_construction(seed)
    rows.append(("tree", status(tr.ok, False), tr.detail))

    from .smallcat import lemma_retpush
    defs = named_small_posets()
    p9 = defs["P9"]
    from .smallcat import _split_min
    ptil, copies, others = _split_min(p9, 0)
    amb = sd2_simplex(2)
    f2 = MonotoneMap(antichain(2), chain(2), (0, 2))
    pins = ax_sd2_mono(f2).conclusion.image
    from .search import find_embedded_retract
    emb = find_embedded_retract(ptil, amb, {copies[0]: pins[0], copies[1]: pins[1]},
                                {pins[0]: copies[0], pins[1]: copies[1]})
    ret_ok = False
    if emb is not None:
        rep = lemma_retpush(ptil, tuple(copies), emb[0])
        ret_ok = rep.verify_all() and canonical_form(rep.poset) == canonical_form(p9)
    rows.append(("retpush", status(ret_ok, False),
                 "collapse of the split minimum reproduces the poset"))

    small_ok = {3: True, 4: True, 5: True}
    flag45 = False
    for e in entries:
        n = e.representative.n
        if n in small_ok and "connected" in e.classification.tags:
            good = e.witness.verify_all()
            small_ok[n] = small_ok[n] and good
            flag45 = flag45 or e.witness.uses_sd_mono()
    rows.append(("lt3el", status(small_ok[3], False), "3 connected classes"))
    rows.append(("posf", status(small_ok[4], False), "10 connected classes"))
    for name in ("P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"):
        w = small_poset_witness(defs[name])
        rows.append((name, status(w.verify_all(), w.uses_sd_mono()),
                     f"route {w.route}"))
    all_ok = all(e.witness.verify_all() for e in entries)
    rows.append(("fivecof", status(all_ok, flag45),
                 "every poset with five or less elements"))
    return rows

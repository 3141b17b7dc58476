"""Cofibration certificates: derivation trees plus an independent verifier.

A node concludes that one monotone map is a cofibration.  Leaves are axiom
instances; inner nodes apply closure rules (composition, pushout, retract,
coproduct, finite sequential composition).  ``verify`` recomputes every side
condition from scratch rather than trusting stored objects, so a certificate
emitted by one builder is checkable with no shared state.

The single-subdivision axiom AX_SD_MONO is kept distinct and flagged;
reports record whether a certificate depends on it.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

from .colimits import PushoutResult, Span, coproduct_of_maps, pushout
from .errors import ParseError
from .functors import chains_map, vertex_inclusion
from .poset import (
    MonotoneMap,
    Poset,
    compose,
    empty_map_into,
    empty_poset,
    from_relation,
    is_monotone,
    singleton,
)

AX_SD_VERTEX = "AX_SD_VERTEX"
AX_SD2_MONO = "AX_SD2_MONO"
AX_SD_MONO = "AX_SD_MONO"
AX_ISO = "AX_ISO"
R_COMPOSE = "R_COMPOSE"
R_PUSHOUT = "R_PUSHOUT"
R_RETRACT = "R_RETRACT"
R_COPRODUCT = "R_COPRODUCT"
R_SEQ_COMPOSE = "R_SEQ_COMPOSE"

RULES = (AX_SD_VERTEX, AX_SD2_MONO, AX_SD_MONO, AX_ISO, R_COMPOSE,
         R_PUSHOUT, R_RETRACT, R_COPRODUCT, R_SEQ_COMPOSE)


@dataclass(frozen=True)
class CofibrationCertificate:
    rule: str
    conclusion: MonotoneMap
    premises: tuple["CofibrationCertificate", ...] = ()
    # rule-specific witnesses
    ax_n: Optional[int] = None
    ax_k: Optional[int] = None
    ax_map: Optional[MonotoneMap] = None
    span: Optional[Span] = None
    side: Optional[str] = None          # which span leg the premise certifies
    stored: Optional[PushoutResult] = None
    ret_i: Optional[MonotoneMap] = None     # target row section
    ret_p: Optional[MonotoneMap] = None     # target row retraction
    ret_i_top: Optional[MonotoneMap] = None
    ret_p_top: Optional[MonotoneMap] = None

    def nodes(self):
        yield self
        for c in self.premises:
            yield from c.nodes()

    def uses_rule(self, rule: str) -> bool:
        return any(node.rule == rule for node in self.nodes())

    def size(self) -> int:
        return sum(1 for _ in self.nodes())


@dataclass(frozen=True)
class CofibrantCertificate:
    object: Poset
    via: str                      # "terminal" or "initial"
    cert: CofibrationCertificate


# ------------------------------------------------------------- constructors

def ax_sd_vertex(n: int, k: int) -> CofibrationCertificate:
    return CofibrationCertificate(AX_SD_VERTEX, vertex_inclusion(n, k),
                                  ax_n=n, ax_k=k)


def ax_sd2_mono(f: MonotoneMap) -> CofibrationCertificate:
    assert f.is_injective()
    return CofibrationCertificate(AX_SD2_MONO, chains_map(chains_map(f)), ax_map=f)


def ax_sd_mono(f: MonotoneMap) -> CofibrationCertificate:
    assert f.is_injective()
    return CofibrationCertificate(AX_SD_MONO, chains_map(f), ax_map=f)


def ax_iso(f: MonotoneMap) -> CofibrationCertificate:
    assert f.is_isomorphism()
    return CofibrationCertificate(AX_ISO, f, ax_map=f)


def r_compose(c1: CofibrationCertificate, c2: CofibrationCertificate) -> CofibrationCertificate:
    return CofibrationCertificate(R_COMPOSE, compose(c2.conclusion, c1.conclusion),
                                  premises=(c1, c2))


def r_pushout(premise: CofibrationCertificate, span: Span, side: str) -> CofibrationCertificate:
    assert side in ("left", "right")
    leg = span.left if side == "left" else span.right
    assert premise.conclusion == leg, "premise must certify the chosen span leg"
    result = pushout(span)
    conclusion = result.from_right if side == "left" else result.from_left
    return CofibrationCertificate(R_PUSHOUT, conclusion, premises=(premise,),
                                  span=span, side=side, stored=result)


def r_retract(premise: CofibrationCertificate, conclusion: MonotoneMap,
              i: MonotoneMap, p: MonotoneMap,
              i_top: MonotoneMap, p_top: MonotoneMap) -> CofibrationCertificate:
    cert = CofibrationCertificate(R_RETRACT, conclusion, premises=(premise,),
                                  ret_i=i, ret_p=p, ret_i_top=i_top, ret_p_top=p_top)
    errs = _check_retract(cert)
    assert not errs, errs
    return cert


def r_coproduct(cs: list[CofibrationCertificate]) -> CofibrationCertificate:
    return CofibrationCertificate(R_COPRODUCT,
                                  coproduct_of_maps([c.conclusion for c in cs]),
                                  premises=tuple(cs))


def r_seq_compose(cs: list[CofibrationCertificate]) -> CofibrationCertificate:
    assert cs, "sequential composition needs at least one stage"
    acc = cs[0].conclusion
    for c in cs[1:]:
        acc = compose(c.conclusion, acc)
    return CofibrationCertificate(R_SEQ_COMPOSE, acc, premises=tuple(cs))


def terminal_cofibrant(obj: Poset, cert: CofibrationCertificate) -> CofibrantCertificate:
    return CofibrantCertificate(obj, "terminal", cert)


def initial_cofibrant(obj: Poset, cert: CofibrationCertificate) -> CofibrantCertificate:
    return CofibrantCertificate(obj, "initial", cert)


def initial_to_terminal_cert() -> CofibrationCertificate:
    """The canonical certificate for {} -> point: the empty injection is sent
    to itself by the double chain functor."""
    f = empty_map_into(singleton())
    return ax_sd2_mono(f)


def initial_extension(c: CofibrantCertificate) -> CofibrationCertificate:
    """A certificate for {} -> object, splicing {} -> point when needed."""
    if c.via == "initial":
        return c.cert
    return r_compose(initial_to_terminal_cert(), c.cert)


# ------------------------------------------------------------- verification

@dataclass
class VerificationReport:
    entries: list[tuple[str, str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e[2] for e in self.entries)

    @property
    def first_failure(self):
        for e in self.entries:
            if not e[2]:
                return e
        return None

    uses_sd_mono: bool = False

    def add(self, path: str, check: str, ok: bool, detail: str = ""):
        self.entries.append((path, check, ok, detail))

    def summary(self) -> str:
        if self.ok:
            extra = " [depends on AX_SD_MONO]" if self.uses_sd_mono else ""
            return f"VERIFIED ({len(self.entries)} conditions){extra}"
        path, check, _, detail = self.first_failure
        return f"FAILED at {path}: {check} {detail}".rstrip()


def _check_retract(c: CofibrationCertificate) -> list[str]:
    errs = []
    g = c.conclusion
    f = c.premises[0].conclusion
    i, p = c.ret_i, c.ret_p
    it, pt = c.ret_i_top, c.ret_p_top
    if i is None or p is None or it is None or pt is None:
        return ["retract data missing"]
    for name, m in (("i", i), ("p", p), ("iTop", it), ("pTop", pt)):
        if not is_monotone(m):
            errs.append(f"{name} not monotone")
    if not (it.source == g.source and it.target == f.source):
        errs.append("iTop endpoints wrong")
    if not (pt.source == f.source and pt.target == g.source):
        errs.append("pTop endpoints wrong")
    if not (i.source == g.target and i.target == f.target):
        errs.append("i endpoints wrong")
    if not (p.source == f.target and p.target == g.target):
        errs.append("p endpoints wrong")
    if errs:
        return errs
    if compose(pt, it).image != tuple(range(g.source.n)):
        errs.append("pTop o iTop is not the identity")
    if compose(p, i).image != tuple(range(g.target.n)):
        errs.append("p o i is not the identity")
    if compose(f, it).image != compose(i, g).image:
        errs.append("left square does not commute")
    if compose(g, pt).image != compose(p, f).image:
        errs.append("right square does not commute")
    return errs


def _verify_node(c: CofibrationCertificate, path: str, report: VerificationReport):
    def add(check, ok, detail=""):
        report.add(path, check, ok, detail)

    if c.rule not in RULES:
        add("rule", False, f"unknown rule {c.rule}")
        return
    add("conclusion monotone", is_monotone(c.conclusion))

    if c.rule == AX_SD_VERTEX:
        if c.ax_n is None or c.ax_k is None or not (0 <= c.ax_k <= c.ax_n):
            add("vertex parameters", False, f"n={c.ax_n} k={c.ax_k}")
            return
        try:
            want = vertex_inclusion(c.ax_n, c.ax_k)
        except Exception as e:  # noqa: BLE001 - report, never raise
            add("vertex inclusion recomputes", False, f"{type(e).__name__}: {e}")
            return
        add("conclusion is the vertex inclusion",
            c.conclusion.source == want.source
            and c.conclusion.target == want.target
            and c.conclusion.image == want.image)
    elif c.rule in (AX_SD2_MONO, AX_SD_MONO):
        if c.rule == AX_SD_MONO:
            report.uses_sd_mono = True
        f = c.ax_map
        if f is None:
            add("axiom map present", False)
            return
        add("axiom map monotone", is_monotone(f))
        add("axiom map injective", f.is_injective())
        try:
            want = chains_map(f) if c.rule == AX_SD_MONO else chains_map(chains_map(f))
        except Exception as e:  # noqa: BLE001 - report, never raise
            add("subdivided map recomputes", False, f"{type(e).__name__}: {e}")
            return
        add("conclusion is the subdivided map",
            c.conclusion.source == want.source
            and c.conclusion.target == want.target
            and c.conclusion.image == want.image)
    elif c.rule == AX_ISO:
        f = c.ax_map
        if f is None:
            add("axiom map present", False)
            return
        add("map is an isomorphism", f.is_isomorphism())
        add("conclusion equals the map",
            c.conclusion.source == f.source and c.conclusion.target == f.target
            and c.conclusion.image == f.image)
    elif c.rule == R_COMPOSE:
        if len(c.premises) != 2:
            add("two premises", False)
            return
        c1, c2 = c.premises
        if c1.conclusion.target != c2.conclusion.source:
            add("middle poset matches", False,
                f"{c1.conclusion.target.n} vs {c2.conclusion.source.n} elements (CompositionMismatch)")
            return
        want = compose(c2.conclusion, c1.conclusion)
        add("conclusion is the composite",
            c.conclusion.source == want.source and c.conclusion.target == want.target
            and c.conclusion.image == want.image)
    elif c.rule == R_PUSHOUT:
        if len(c.premises) != 1 or c.span is None or c.side not in ("left", "right") or c.stored is None:
            add("pushout data present", False)
            return
        leg = c.span.left if c.side == "left" else c.span.right
        prem = c.premises[0].conclusion
        add("premise certifies the chosen leg",
            prem.source == leg.source and prem.target == leg.target and prem.image == leg.image)
        try:
            recomputed = pushout(c.span)
        except Exception as e:  # noqa: BLE001 - report, never raise
            add("pushout recomputes", False, f"{type(e).__name__}: {e}")
            return
        add("stored object matches recomputed pushout", recomputed.object == c.stored.object)
        add("stored legs match recomputed legs",
            recomputed.from_left.image == c.stored.from_left.image
            and recomputed.from_right.image == c.stored.from_right.image)
        want = recomputed.from_right if c.side == "left" else recomputed.from_left
        add("conclusion is the opposite leg",
            c.conclusion.source == want.source and c.conclusion.target == want.target
            and c.conclusion.image == want.image)
    elif c.rule == R_RETRACT:
        if len(c.premises) != 1:
            add("one premise", False)
            return
        errs = _check_retract(c)
        add("retract squares and identities", not errs, "; ".join(errs))
    elif c.rule == R_COPRODUCT:
        want = coproduct_of_maps([q.conclusion for q in c.premises])
        add("conclusion is the coproduct of the premises",
            c.conclusion.source == want.source and c.conclusion.target == want.target
            and c.conclusion.image == want.image)
    elif c.rule == R_SEQ_COMPOSE:
        if not c.premises:
            add("at least one stage", False)
            return
        ok = True
        for a, b in zip(c.premises, c.premises[1:]):
            if a.conclusion.target != b.conclusion.source:
                ok = False
        add("stages compose", ok)
        if ok:
            acc = c.premises[0].conclusion
            for q in c.premises[1:]:
                acc = compose(q.conclusion, acc)
            add("conclusion is the insertion of the first stage source",
                c.conclusion.source == acc.source and c.conclusion.target == acc.target
                and c.conclusion.image == acc.image)

    for idx, q in enumerate(c.premises):
        _verify_node(q, f"{path}.{idx}", report)


def verify(c: CofibrationCertificate) -> VerificationReport:
    report = VerificationReport()
    _verify_node(c, "root", report)
    return report


def verify_cofibrant(c: CofibrantCertificate) -> VerificationReport:
    report = VerificationReport()
    if c.via not in ("terminal", "initial"):
        report.add("root", "via tag", False, c.via)
        return report
    src = c.cert.conclusion.source
    if c.via == "terminal":
        starts_ok = src == singleton()
        report.add("root", "certificate starts at the point",
                   starts_ok, f"source has {src.n} elements")
        full = r_compose(initial_to_terminal_cert(), c.cert) if starts_ok else c.cert
    else:
        report.add("root", "certificate starts at the empty poset",
                   src == empty_poset(), f"source has {src.n} elements")
        full = c.cert
    report.add("root", "certificate targets the object",
               c.cert.conclusion.target == c.object,
               "conclusion target differs from object (ObjectMismatch)")
    _verify_node(full, "root", report)
    return report


# ------------------------------------------------------------- serialization

def _poset_id(p: Poset) -> str:
    h = hashlib.sha256()
    h.update(p.n.to_bytes(4, "big"))
    for row in p.up:
        h.update(row.to_bytes((p.n + 7) // 8 or 1, "big"))
    return h.hexdigest()[:16]


def _collect_posets(c: CofibrationCertificate, acc: dict[str, Poset]):
    def note(p: Poset):
        acc.setdefault(_poset_id(p), p)

    for node in c.nodes():
        note(node.conclusion.source)
        note(node.conclusion.target)
        for m in (node.ax_map, node.ret_i, node.ret_p, node.ret_i_top, node.ret_p_top):
            if m is not None:
                note(m.source)
                note(m.target)
        if node.span is not None:
            note(node.span.apex)
            note(node.span.left.target)
            note(node.span.right.target)
        if node.stored is not None:
            note(node.stored.object)


def _map_text(m: MonotoneMap) -> str:
    body = " ".join(f"s{i}->t{v}" for i, v in enumerate(m.image))
    return f"(map @{_poset_id(m.source)} @{_poset_id(m.target)} [{body}])"


def _node_text(c: CofibrationCertificate) -> str:
    if c.rule == AX_SD_VERTEX:
        return f"({c.rule} {c.ax_n} {c.ax_k})"
    if c.rule in (AX_SD2_MONO, AX_SD_MONO, AX_ISO):
        return f"({c.rule} {_map_text(c.ax_map)})"
    kids = " ".join(_node_text(q) for q in c.premises)
    if c.rule == R_PUSHOUT:
        sp = (f"(span {_map_text(c.span.left)} {_map_text(c.span.right)})")
        res = (f"(result {_map_text(c.stored.from_left)} {_map_text(c.stored.from_right)})")
        return f"({c.rule} {c.side} {sp} {res} {kids})"
    if c.rule == R_RETRACT:
        maps = " ".join(_map_text(m) for m in
                        (c.conclusion, c.ret_i_top, c.ret_p_top, c.ret_i, c.ret_p))
        return f"({c.rule} {maps} {kids})"
    return f"({c.rule} {kids})"


def serialize(c: CofibrationCertificate | CofibrantCertificate) -> bytes:
    lines = ["certfile 1"]
    posets: dict[str, Poset] = {}
    if isinstance(c, CofibrantCertificate):
        _collect_posets(c.cert, posets)
        posets.setdefault(_poset_id(c.object), c.object)
        body = f"(COFIBRANT @{_poset_id(c.object)} {c.via} {_node_text(c.cert)})"
    else:
        _collect_posets(c, posets)
        body = _node_text(c)
    for pid in sorted(posets):
        p = posets[pid]
        covers = " ".join(f"{i}<{j}" for i, j in p.covers())
        lines.append(f"poset @{pid} {p.n} {covers}".rstrip())
    lines.append(body)
    return ("\n".join(lines) + "\n").encode()


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[tuple[str, int, int]] = []
        line, col = 1, 1
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                col += 1
                i += 1
                continue
            if ch == "#":
                while i < len(text) and text[i] != "\n":
                    i += 1
                continue
            if ch in "()[]":
                self.toks.append((ch, line, col))
                i += 1
                col += 1
                continue
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()[]":
                j += 1
            self.toks.append((text[i:j], line, col))
            col += j - i
            i = j
        self.pos = 0

    def peek(self):
        if self.pos >= len(self.toks):
            raise ParseError("unexpected end of input",
                             *(self.toks[-1][1:] if self.toks else (0, 0)))
        return self.toks[self.pos]

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, tok: str):
        t, line, col = self.next()
        if t != tok:
            raise ParseError(f"expected {tok!r}, got {t!r}", line, col)
        return t

    def done(self) -> bool:
        return self.pos >= len(self.toks)


def _parse_map(tk: _Tokens, posets: dict[str, Poset]) -> MonotoneMap:
    tk.expect("(")
    tk.expect("map")
    sid, line, col = tk.next()
    tid, line2, col2 = tk.next()
    if not sid.startswith("@") or sid[1:] not in posets:
        raise ParseError(f"unknown poset {sid}", line, col)
    if not tid.startswith("@") or tid[1:] not in posets:
        raise ParseError(f"unknown poset {tid}", line2, col2)
    src, tgt = posets[sid[1:]], posets[tid[1:]]
    tk.expect("[")
    image = [0] * src.n
    seen = set()
    while True:
        t, line, col = tk.peek()
        if t == "]":
            tk.next()
            break
        t, line, col = tk.next()
        try:
            s, v = t.split("->")
            i = int(s.lstrip("s"))
            image[i] = int(v.lstrip("t"))
            seen.add(i)
        except (ValueError, IndexError):
            raise ParseError(f"bad map entry {t!r}", line, col) from None
    if seen != set(range(src.n)):
        raise ParseError("map entries do not cover the source", line, col)
    tk.expect(")")
    try:
        return MonotoneMap(src, tgt, tuple(image))
    except Exception as e:
        from .errors import InvalidCertificate
        raise InvalidCertificate(
            f"stored map is not monotone (line {line}): {e}") from None


def _parse_node(tk: _Tokens, posets: dict[str, Poset]) -> CofibrationCertificate:
    """Lenient node parser: derived conclusions are recomputed, every other
    condition is left for the verifier, so mutated files fail verification
    rather than parsing."""
    from .errors import InvalidCertificate

    tk.expect("(")
    rule, line, col = tk.next()
    if rule == AX_SD_VERTEX:
        n, _, _ = tk.next()
        k, _, _ = tk.next()
        tk.expect(")")
        try:
            n_i, k_i = int(n), int(k)
        except ValueError:
            raise ParseError("vertex axiom needs integers", line, col) from None
        try:
            conclusion = vertex_inclusion(n_i, k_i)
        except Exception as e:
            raise InvalidCertificate(f"bad vertex axiom parameters: {e}") from None
        return CofibrationCertificate(AX_SD_VERTEX, conclusion, ax_n=n_i, ax_k=k_i)
    if rule in (AX_SD2_MONO, AX_SD_MONO, AX_ISO):
        f = _parse_map(tk, posets)
        tk.expect(")")
        if rule == AX_ISO:
            conclusion = f
        elif rule == AX_SD_MONO:
            conclusion = chains_map(f)
        else:
            conclusion = chains_map(chains_map(f))
        return CofibrationCertificate(rule, conclusion, ax_map=f)
    if rule == R_PUSHOUT:
        side, sline, scol = tk.next()
        if side not in ("left", "right"):
            raise ParseError(f"bad pushout side {side!r}", sline, scol)
        tk.expect("(")
        tk.expect("span")
        left = _parse_map(tk, posets)
        right = _parse_map(tk, posets)
        tk.expect(")")
        tk.expect("(")
        tk.expect("result")
        stored_left = _parse_map(tk, posets)
        stored_right = _parse_map(tk, posets)
        tk.expect(")")
        child = _parse_node(tk, posets)
        tk.expect(")")
        if left.source != right.source:
            raise InvalidCertificate("span legs have different apexes")
        if stored_left.target != stored_right.target:
            raise InvalidCertificate("stored pushout legs target different posets")
        span = Span(left.source, left, right)
        stored = PushoutResult(stored_left.target, stored_left, stored_right, span)
        conclusion = stored_right if side == "left" else stored_left
        return CofibrationCertificate(R_PUSHOUT, conclusion, premises=(child,),
                                      span=span, side=side, stored=stored)
    if rule == R_RETRACT:
        conclusion = _parse_map(tk, posets)
        i_top = _parse_map(tk, posets)
        p_top = _parse_map(tk, posets)
        i = _parse_map(tk, posets)
        p = _parse_map(tk, posets)
        child = _parse_node(tk, posets)
        tk.expect(")")
        return CofibrationCertificate(R_RETRACT, conclusion, premises=(child,),
                                      ret_i=i, ret_p=p, ret_i_top=i_top, ret_p_top=p_top)
    if rule in (R_COMPOSE, R_COPRODUCT, R_SEQ_COMPOSE):
        kids = []
        while True:
            t, _, _ = tk.peek()
            if t == ")":
                tk.next()
                break
            kids.append(_parse_node(tk, posets))
        if rule == R_COMPOSE and len(kids) != 2:
            raise ParseError("composition needs two children", line, col)
        if rule == R_SEQ_COMPOSE and not kids:
            raise ParseError("sequential composition needs at least one stage", line, col)
        if rule == R_COPRODUCT:
            conclusion = coproduct_of_maps([q.conclusion for q in kids])
        else:
            try:
                acc = kids[0].conclusion
                for q in kids[1:]:
                    acc = compose(q.conclusion, acc)
                conclusion = acc
            except Exception as e:
                raise InvalidCertificate(f"stages do not compose: {e}") from None
        return CofibrationCertificate(rule, conclusion, premises=tuple(kids))
    raise ParseError(f"unknown rule {rule!r}", line, col)


def deserialize(data: bytes) -> CofibrationCertificate | CofibrantCertificate:
    text = data.decode()
    lines = text.splitlines()
    if not lines or lines[0].strip() != "certfile 1":
        raise ParseError("missing certfile header", 1, 1)
    posets: dict[str, Poset] = {}
    body_start = None
    for idx, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("poset "):
            parts = stripped.split()
            if len(parts) < 3 or not parts[1].startswith("@"):
                raise ParseError("bad poset line", idx, 1)
            pid = parts[1][1:]
            try:
                n = int(parts[2])
                pairs = []
                for tok in parts[3:]:
                    a, b = tok.split("<")
                    pairs.append((int(a), int(b)))
                posets[pid] = from_relation([f"e{i}" for i in range(n)], pairs)
            except ParseError:
                raise
            except Exception as e:
                raise ParseError(f"bad poset line: {e}", idx, 1) from None
        else:
            body_start = idx
            break
    if body_start is None:
        raise ParseError("missing certificate body", len(lines), 1)
    body = "\n".join(lines[body_start - 1:])
    tk = _Tokens(body)
    t, line, col = tk.peek()
    tk.expect("(")
    head, hline, hcol = tk.peek()
    if head == "COFIBRANT":
        tk.next()
        oid, oline, ocol = tk.next()
        if not oid.startswith("@") or oid[1:] not in posets:
            raise ParseError(f"unknown poset {oid}", oline, ocol)
        via, vline, vcol = tk.next()
        if via not in ("terminal", "initial"):
            raise ParseError(f"bad via tag {via!r}", vline, vcol)
        cert = _parse_node(tk, posets)
        tk.expect(")")
        if not tk.done():
            t, line, col = tk.peek()
            raise ParseError(f"trailing input {t!r}", line, col)
        return CofibrantCertificate(posets[oid[1:]], via, cert)
    tk.pos -= 1  # rewind the "("
    cert = _parse_node(tk, posets)
    if not tk.done():
        t, line, col = tk.peek()
        raise ParseError(f"trailing input {t!r}", line, col)
    return cert

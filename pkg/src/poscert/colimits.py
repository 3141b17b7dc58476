"""Pushouts, coproducts of maps, finite sequential colimits.

Pushouts are computed in preorders and then validated: a generated cycle
raises NotAPoset instead of silently collapsing, since every construction
here only ever pushes out along cofibrations, which stay inside posets.
Equivalence classes are numbered by their least member in A-then-B order,
so output numbering is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CompositionMismatch, NotACocone, NotAPoset, NotMonotone
from .poset import MonotoneMap, Poset, bits, compose, coproduct, empty_poset


@dataclass(frozen=True)
class Span:
    apex: Poset
    left: MonotoneMap
    right: MonotoneMap

    def __post_init__(self):
        if self.left.source != self.apex or self.right.source != self.apex:
            raise ValueError("span legs must share the apex as source")


@dataclass(frozen=True)
class PushoutResult:
    object: Poset
    from_left: MonotoneMap
    from_right: MonotoneMap
    span: Span


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def pushout(s: Span) -> PushoutResult:
    a, b = s.left.target, s.right.target
    na, nb = a.n, b.n
    uf = _UnionFind(na + nb)
    for x in range(s.apex.n):
        uf.union(s.left.image[x], na + s.right.image[x])
    reps = sorted({uf.find(i) for i in range(na + nb)})
    cls = {r: k for k, r in enumerate(reps)}
    of_a = [cls[uf.find(i)] for i in range(na)]
    of_b = [cls[uf.find(na + j)] for j in range(nb)]
    n = len(reps)

    # generated preorder: close the images of both relations
    succ = [1 << k for k in range(n)]
    for i in range(na):
        for j in bits(a.up[i]):
            succ[of_a[i]] |= 1 << of_a[j]
    for i in range(nb):
        for j in bits(b.up[i]):
            succ[of_b[i]] |= 1 << of_b[j]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = succ[i]
            m = acc
            while m:
                j = (m & -m).bit_length() - 1
                acc |= succ[j]
                m &= m - 1
            if acc != succ[i]:
                succ[i] = acc
                changed = True
    for i in range(n):
        for j in bits(succ[i]):
            if j != i and (succ[j] >> i) & 1:
                raise NotAPoset("pushout preorder has a nontrivial cycle")

    labels = []
    for r in reps:
        labels.append(a.labels[r] if r < na else b.labels[r - na])
    obj = Poset(tuple(labels), tuple(succ))
    fl = MonotoneMap(a, obj, tuple(of_a))
    fr = MonotoneMap(b, obj, tuple(of_b))
    assert compose_images_equal(fl, s.left, fr, s.right)
    assert set(fl.image) | set(fr.image) == set(range(n))
    return PushoutResult(obj, fl, fr, s)


def compose_images_equal(f1: MonotoneMap, g1: MonotoneMap,
                         f2: MonotoneMap, g2: MonotoneMap) -> bool:
    """f1 o g1 == f2 o g2 pointwise (sources assumed equal)."""
    return all(f1.image[g1.image[x]] == f2.image[g2.image[x]]
               for x in range(g1.source.n))


def mediating_map(r: PushoutResult, cocone_left: MonotoneMap,
                  cocone_right: MonotoneMap) -> MonotoneMap:
    """The unique map u with u o from_left = cocone_left, u o from_right = cocone_right."""
    if cocone_left.source != r.from_left.source or cocone_right.source != r.from_right.source:
        raise NotACocone("cocone legs do not start at the span feet")
    if cocone_left.target != cocone_right.target:
        raise NotACocone("cocone legs target different posets")
    if not compose_images_equal(cocone_left, r.span.left, cocone_right, r.span.right):
        raise NotACocone("cocone does not commute over the span")
    n = r.object.n
    values: list[int | None] = [None] * n
    for i in range(r.from_left.source.n):
        c = r.from_left.image[i]
        v = cocone_left.image[i]
        if values[c] is not None and values[c] != v:
            raise NotACocone("cocone is inconsistent on an identified class")
        values[c] = v
    for j in range(r.from_right.source.n):
        c = r.from_right.image[j]
        v = cocone_right.image[j]
        if values[c] is not None and values[c] != v:
            raise NotACocone("cocone is inconsistent on an identified class")
        values[c] = v
    if any(v is None for v in values):
        raise NotACocone("pushout legs not jointly surjective")  # engine bug
    from .poset import is_monotone_data
    if not is_monotone_data(r.object, cocone_left.target, values):  # type: ignore[arg-type]
        raise NotMonotone("set-level mediating map violates the order")
    return MonotoneMap(r.object, cocone_left.target, tuple(values))  # type: ignore[arg-type]


def coproduct_of_maps(fs: list[MonotoneMap]) -> MonotoneMap:
    """The induced map between coproducts; injective iff all pieces are."""
    if not fs:
        return MonotoneMap(empty_poset(), empty_poset(), ())
    src, src_inj = coproduct([f.source for f in fs])
    tgt, tgt_inj = coproduct([f.target for f in fs])
    image = []
    for k, f in enumerate(fs):
        for i in range(f.source.n):
            image.append(tgt_inj[k].image[f.image[i]])
    return MonotoneMap(src, tgt, tuple(image))


def sequential_colimit(stages: list[MonotoneMap]) -> tuple[Poset, list[MonotoneMap]]:
    """Colimit of X0 -> X1 -> ... -> XN with its insertion maps.

    For a finite chain the colimit is the last object; insertions are the
    accumulated composites.
    """
    if not stages:
        raise CompositionMismatch("sequential colimit of an empty stage list")
    for f, g in zip(stages, stages[1:]):
        if f.target != g.source:
            raise CompositionMismatch("consecutive stages do not compose")
    last = stages[-1].target
    insertions = []
    for k in range(len(stages)):
        acc = stages[k]
        for g in stages[k + 1:]:
            acc = compose(g, acc)
        insertions.append(acc)
    insertions.append(MonotoneMap(last, last, tuple(range(last.n))))
    # insertions[k]: X_k -> colim, for k = 0..N
    return last, insertions

"""Backtracking searches for monotone maps.

All searches are deterministic: elements are assigned in ascending index
order and candidate targets are tried in ascending order, so the first
solution is the lexicographically least valid assignment.  That pins the
result of ``retraction_search`` exactly to what a brute-force scan over all
maps would return.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllFormedQuery, NoRetraction
from .poset import MonotoneMap, Poset, bits


@dataclass(frozen=True)
class RetractionQuery:
    ambient: Poset
    pinned: tuple[tuple[int, int], ...]  # (ambient element, required value)
    subobject: MonotoneMap               # i : X -> ambient

    @staticmethod
    def make(ambient: Poset, pinned: dict[int, int], subobject: MonotoneMap):
        return RetractionQuery(ambient, tuple(sorted(pinned.items())), subobject)


def _forced_values(q: RetractionQuery) -> list[int | None]:
    i = q.subobject
    if i.target != q.ambient:
        raise IllFormedQuery("subobject does not land in the ambient poset")
    if not i.is_injective():
        raise IllFormedQuery("subobject map is not injective")
    if not i.is_order_reflecting():
        raise IllFormedQuery("subobject order is not the restriction of the ambient order")
    forced: list[int | None] = [None] * q.ambient.n
    for x in range(i.source.n):
        forced[i.image[x]] = x
    for a, v in q.pinned:
        if not (0 <= a < q.ambient.n and 0 <= v < i.source.n):
            raise IllFormedQuery("pin out of range")
        if forced[a] is not None and forced[a] != v:
            raise IllFormedQuery("pins contradict the retraction equations")
        forced[a] = v
    return forced


def _monotone_extensions(ambient: Poset, target: Poset,
                         forced: list[int | None]):
    """All monotone maps ambient -> target extending `forced`, in
    lexicographic order (element-major, candidates ascending)."""
    n = ambient.n
    down = ambient.down_masks()
    assign: list[int | None] = [None] * n

    def candidates(x: int):
        if forced[x] is not None:
            return (forced[x],)
        return range(target.n)

    def ok(x: int, v: int) -> bool:
        for y in bits(ambient.up[x]):
            if y != x and assign[y] is not None and not target.le(v, assign[y]):
                return False
        for y in bits(down[x]):
            if y != x and assign[y] is not None and not target.le(assign[y], v):
                return False
        return True

    def go(x: int):
        if x == n:
            yield tuple(assign)  # type: ignore[arg-type]
            return
        for v in candidates(x):
            if ok(x, v):
                assign[x] = v
                yield from go(x + 1)
                assign[x] = None

    yield from go(0)


_query_log: list[RetractionQuery] | None = None


class record_queries:
    """Context manager collecting every retraction query issued inside it."""

    def __enter__(self):
        global _query_log
        self._previous = _query_log
        _query_log = []
        return _query_log

    def __exit__(self, *exc):
        global _query_log
        _query_log = self._previous
        return False


def retraction_search(q: RetractionQuery) -> MonotoneMap:
    """First monotone p with p o i = id extending the pins; NoRetraction if
    the search space is exhausted."""
    if _query_log is not None:
        _query_log.append(q)
    forced = _forced_values(q)
    target = q.subobject.source
    for image in _monotone_extensions(q.ambient, target, forced):
        return MonotoneMap(q.ambient, target, image)
    raise NoRetraction(
        f"no monotone retraction {q.ambient.n} -> {target.n} with the given pins")


def brute_force_retraction(q: RetractionQuery) -> MonotoneMap | None:
    """Oracle: scan all |X|^|ambient| maps in lexicographic order."""
    forced = _forced_values(q)
    target = q.subobject.source
    n, m = q.ambient.n, target.n
    from itertools import product
    from .poset import is_monotone_data
    for image in product(range(m), repeat=n):
        if any(f is not None and image[x] != f for x, f in enumerate(forced)):
            continue
        if is_monotone_data(q.ambient, target, image):
            return MonotoneMap(q.ambient, target, image)
    return None


def order_embeddings(sub: Poset, ambient: Poset, pins: dict[int, int],
                     limit: int | None = None):
    """Injective, order-reflecting monotone maps sub -> ambient extending the
    pins, in lexicographic order."""
    n = sub.n
    assign: list[int | None] = [None] * n
    used = set()
    count = 0

    def ok(x: int, v: int) -> bool:
        for y in range(n):
            w = assign[y]
            if w is None or y == x:
                continue
            if sub.le(x, y) != ambient.le(v, w):
                return False
            if sub.le(y, x) != ambient.le(w, v):
                return False
        return True

    def go(x: int):
        nonlocal count
        if limit is not None and count >= limit:
            return
        if x == n:
            count += 1
            yield tuple(assign)  # type: ignore[arg-type]
            return
        cands = (pins[x],) if x in pins else range(ambient.n)
        for v in cands:
            if v in used:
                continue
            if ok(x, v):
                assign[x] = v
                used.add(v)
                yield from go(x + 1)
                used.remove(v)
                assign[x] = None

    yield from go(0)


def find_embedded_retract(sub: Poset, ambient: Poset, pins_i: dict[int, int],
                          pins_p: dict[int, int] | None = None,
                          embed_limit: int = 5000) -> tuple[MonotoneMap, MonotoneMap] | None:
    """First (i, p) with i an order-embedding extending pins_i and p a
    monotone retraction of it extending pins_p; None if none is found among
    the first `embed_limit` embeddings."""
    pins_p = dict(pins_p or {})
    for image in order_embeddings(sub, ambient, pins_i, limit=embed_limit):
        i = MonotoneMap(sub, ambient, image)
        q = RetractionQuery.make(ambient, pins_p, i)
        try:
            p = retraction_search(q)
        except NoRetraction:
            continue
        return i, p
    return None

"""Chain-poset functor, power-set lattices, subdivided simplices.

Simplicial sets are never materialized: the poset of nonempty chains under
inclusion stands in for the subdivision of a nerve, so one functor
``chains_poset`` (with ``chains_map`` on arrows) covers everything the
constructions need.  Enumeration order is lexicographic on sorted element
indices, which pins the numbering of every derived poset.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import IndexOutOfRange, SizeLimit
from .poset import MonotoneMap, Poset, bits, singleton

CHAIN_CAP = 100_000


def _label_set(base: Poset, elems: tuple[int, ...]) -> str:
    return "{" + ",".join(base.labels[e] for e in elems) + "}"


@lru_cache(maxsize=2048)
def enumerate_chains(p: Poset, cap: int = CHAIN_CAP) -> tuple[tuple[int, ...], ...]:
    """All nonempty chains of p as sorted index tuples, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int]):
        if len(out) > cap:
            raise SizeLimit(f"chain count exceeds cap {cap}")
        if prefix:
            out.append(tuple(prefix))
        start = prefix[-1] + 1 if prefix else 0
        for j in range(start, p.n):
            if all(p.comparable(i, j) for i in prefix):
                prefix.append(j)
                grow(prefix)
                prefix.pop()

    grow([])
    return tuple(out)


@lru_cache(maxsize=2048)
def chains_poset(p: Poset, cap: int = CHAIN_CAP) -> Poset:
    """Poset of nonempty chains of p, ordered by inclusion."""
    chains = enumerate_chains(p, cap)
    sets = [frozenset(c) for c in chains]
    n = len(chains)
    up = [0] * n
    for a in range(n):
        for b in range(n):
            if sets[a] <= sets[b]:
                up[a] |= 1 << b
    labels = tuple(_label_set(p, c) for c in chains)
    return Poset(labels, tuple(up))


@lru_cache(maxsize=2048)
def chain_index(p: Poset, cap: int = CHAIN_CAP) -> dict[tuple[int, ...], int]:
    return {c: k for k, c in enumerate(enumerate_chains(p, cap))}


def chains_map(f: MonotoneMap, cap: int = CHAIN_CAP) -> MonotoneMap:
    """Functor action: a chain goes to its image set (a chain, f monotone)."""
    src = chains_poset(f.source, cap)
    tgt = chains_poset(f.target, cap)
    tgt_index = chain_index(f.target, cap)
    image = []
    for c in enumerate_chains(f.source, cap):
        img = tuple(sorted(set(f.image[i] for i in c)))
        image.append(tgt_index[img])
    return MonotoneMap(src, tgt, tuple(image))


def _subsets_lex(ground: int, include_empty: bool) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int]):
        if prefix or include_empty:
            out.append(tuple(prefix))
        start = prefix[-1] + 1 if prefix else 0
        for j in range(start, ground):
            prefix.append(j)
            grow(prefix)
            prefix.pop()

    grow([])
    return out


SELECTIONS = ("all", "nonempty", "proper_nonempty", "minus_top")


def power_lattice(ground_size: int, selection: str = "all") -> Poset:
    """Subset families of {0..ground_size-1} under inclusion."""
    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection {selection!r}")
    if ground_size > 17:
        raise SizeLimit("power lattice ground too large")
    full = tuple(range(ground_size))
    subs = _subsets_lex(ground_size, include_empty=selection in ("all", "minus_top"))
    if selection in ("proper_nonempty", "minus_top"):
        subs = [s for s in subs if s != full]
    index_labels = []
    for s in subs:
        index_labels.append("{" + ",".join(str(i) for i in s) + "}" if s else "{}")
    sets = [frozenset(s) for s in subs]
    n = len(subs)
    up = [0] * n
    for a in range(n):
        for b in range(n):
            if sets[a] <= sets[b]:
                up[a] |= 1 << b
    return Poset(tuple(index_labels), tuple(up))


def subset_positions(ground_size: int, selection: str = "all") -> dict[tuple[int, ...], int]:
    full = tuple(range(ground_size))
    subs = _subsets_lex(ground_size, include_empty=selection in ("all", "minus_top"))
    if selection in ("proper_nonempty", "minus_top"):
        subs = [s for s in subs if s != full]
    return {s: k for k, s in enumerate(subs)}


def sd_simplex(n: int) -> Poset:
    """Nonempty subsets of {0..n}: the subdivided n-simplex as a poset."""
    if n < 0:
        raise IndexOutOfRange("simplex dimension must be >= 0")
    return power_lattice(n + 1, "nonempty")


def sd_boundary(n: int) -> tuple[Poset, MonotoneMap]:
    """Proper nonempty subsets of {0..n}, plus the inclusion into sd_simplex(n)."""
    if n < 1:
        raise IndexOutOfRange("boundary needs dimension >= 1")
    bd = power_lattice(n + 1, "proper_nonempty")
    amb = sd_simplex(n)
    pos = subset_positions(n + 1, "nonempty")
    bd_subs = [s for s in _subsets_lex(n + 1, include_empty=False)
               if s != tuple(range(n + 1))]
    incl = MonotoneMap(bd, amb, tuple(pos[s] for s in bd_subs))
    return bd, incl


def sd2_simplex(n: int) -> Poset:
    if n > 2:
        raise SizeLimit("doubly subdivided simplices are computed only up to n = 2")
    return chains_poset(sd_simplex(n))


def sd2_boundary(n: int) -> tuple[Poset, MonotoneMap]:
    if n > 2:
        raise SizeLimit("doubly subdivided boundaries are computed only up to n = 2")
    bd, incl = sd_boundary(n)
    return chains_poset(bd), chains_map(incl)


def vertex_inclusion(n: int, k: int) -> MonotoneMap:
    """The one-point map into sd_simplex(n) hitting the vertex {k}."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"vertex {k} outside 0..{n}")
    amb = sd_simplex(n)
    pos = subset_positions(n + 1, "nonempty")
    return MonotoneMap(singleton(f"{{{k}}}"), amb, (pos[(k,)],))


def complement_iso(ground_size: int) -> MonotoneMap:
    """A -> complement(A): opposite(power_lattice(g,'nonempty')) ~ 'minus_top'."""
    from .poset import opposite

    src = opposite(power_lattice(ground_size, "nonempty"))
    tgt = power_lattice(ground_size, "minus_top")
    pos_t = subset_positions(ground_size, "minus_top")
    subs = [s for s in _subsets_lex(ground_size, include_empty=False)]
    image = []
    ground = set(range(ground_size))
    for s in subs:
        comp = tuple(sorted(ground - set(s)))
        image.append(pos_t[comp])
    return MonotoneMap(src, tgt, tuple(image))

"""Structural classes driving witness selection: semilattices, chains,
zigzags, trees, plus the classification dispatcher."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotATree
from .poset import Poset, bits, is_connected


def join_of(p: Poset, i: int, j: int) -> int | None:
    """Least upper bound of i, j if it exists."""
    ubs = p.up[i] & p.up[j]
    least = None
    for u in bits(ubs):
        if all(p.le(u, v) for v in bits(ubs)):
            least = u
            break
    return least


def meet_of(p: Poset, i: int, j: int) -> int | None:
    down = p.down_masks()
    lbs = down[i] & down[j]
    greatest = None
    for u in bits(lbs):
        if all(p.le(v, u) for v in bits(lbs)):
            greatest = u
            break
    return greatest


def is_join_semilattice(p: Poset) -> bool:
    return all(join_of(p, i, j) is not None
               for i in range(p.n) for j in range(i + 1, p.n))


def is_meet_semilattice(p: Poset) -> bool:
    return all(meet_of(p, i, j) is not None
               for i in range(p.n) for j in range(i + 1, p.n))


def join_all(p: Poset, elems) -> int | None:
    elems = list(elems)
    if not elems:
        return None
    acc = elems[0]
    for e in elems[1:]:
        nxt = join_of(p, acc, e)
        if nxt is None:
            return None
        acc = nxt
    return acc


def meet_all(p: Poset, elems) -> int | None:
    elems = list(elems)
    if not elems:
        return None
    acc = elems[0]
    for e in elems[1:]:
        nxt = meet_of(p, acc, e)
        if nxt is None:
            return None
        acc = nxt
    return acc


def is_chain(p: Poset) -> bool:
    """Total order; the empty poset counts as a chain by convention."""
    return all(p.comparable(i, j) for i in range(p.n) for j in range(i + 1, p.n))


def zigzag_path(p: Poset) -> list[int] | None:
    """If the Hasse diagram is a simple path generating the order, return the
    element sequence along it; else None."""
    if p.n == 0:
        return []
    if p.n == 1:
        return [0]
    cov = p.covers()
    adj: dict[int, list[int]] = {i: [] for i in range(p.n)}
    for i, j in cov:
        adj[i].append(j)
        adj[j].append(i)
    degs = [len(adj[i]) for i in range(p.n)]
    if any(d > 2 for d in degs):
        return None
    ends = [i for i in range(p.n) if degs[i] <= 1]
    if len(ends) != 2:
        return None
    if not is_connected(p):
        return None
    # walk the path from the smaller end
    start = min(ends)
    path = [start]
    prev = -1
    while len(path) < p.n:
        nxts = [x for x in adj[path[-1]] if x != prev]
        if len(nxts) != 1:
            return None
        prev = path[-1]
        path.append(nxts[0])
    # the order must be generated by covers along the path
    cov_set = {(min(i, j), max(i, j)) for i, j in cov}
    path_set = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
    if cov_set != path_set:
        return None
    return path


def is_zigzag(p: Poset) -> bool:
    return zigzag_path(p) is not None


def is_tree_poset(p: Poset) -> bool:
    """Unique minimal element and every principal down-set a chain."""
    if p.n == 0:
        return False
    if len(p.minimal_elements()) != 1:
        return False
    return all(p.is_chain_set(p.down_set(i)) for i in range(p.n))


def tree_rank(p: Poset) -> list[int]:
    """rank(root) = 0; rank(child) = rank(parent) + 1."""
    if not is_tree_poset(p):
        raise NotATree("rank is defined for tree posets only")
    return p.heights()


@dataclass(frozen=True)
class Classification:
    tags: frozenset[str]
    catalog_id: str | None = None

    def has(self, tag: str) -> bool:
        return tag in self.tags


def classify(p: Poset, catalog: dict[bytes, str] | None = None) -> Classification:
    """All applicable structural tags; connected posets with <= 5 elements
    additionally get a catalog id when a catalog index is supplied."""
    tags = set()
    if p.n == 0:
        tags.update({"chain", "join_semilattice", "meet_semilattice", "zigzag"})
        return Classification(frozenset(tags))
    connected = is_connected(p)
    tags.add("connected" if connected else "disconnected")
    if is_join_semilattice(p):
        tags.add("join_semilattice")
    if is_meet_semilattice(p):
        tags.add("meet_semilattice")
    if is_chain(p):
        tags.add("chain")
    if is_zigzag(p):
        tags.add("zigzag")
    if is_tree_poset(p):
        tags.add("tree")
    catalog_id = None
    if catalog is not None and connected and 1 <= p.n <= 5:
        from .poset import canonical_form
        catalog_id = catalog.get(canonical_form(p).key)
    return Classification(frozenset(tags), catalog_id)

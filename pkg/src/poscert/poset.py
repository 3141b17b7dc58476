"""Finite posets and monotone maps.

Elements are positional (0..n-1); labels are display strings only and are
ignored by equality.  The order relation is stored as one bitmask per
element: ``up[i]`` has bit ``j`` set iff ``i <= j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .errors import CompositionMismatch, CycleError, SizeLimit, UnknownLabel

MAX_ELEMENTS = 1024
CANONICAL_BOUND = 16


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def _closure(n: int, up: list[int]) -> list[int]:
    """Reflexive-transitive closure of the given successor bitmasks."""
    up = [row | (1 << i) for i, row in enumerate(up)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            row = up[i]
            acc = row
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                acc |= up[j]
                m &= m - 1
            if acc != row:
                up[i] = acc
                changed = True
    return up


@dataclass(frozen=True)
class Poset:
    labels: tuple[str, ...]
    up: tuple[int, ...]  # up[i] bit j set iff i <= j

    def __post_init__(self):
        n = len(self.labels)
        if n > MAX_ELEMENTS:
            raise SizeLimit(f"poset with {n} elements exceeds cap {MAX_ELEMENTS}")
        if len(self.up) != n:
            raise ValueError("labels and relation rows disagree")
        full = (1 << n) - 1 if n else 0
        for i, row in enumerate(self.up):
            if row & ~full:
                raise ValueError("relation references missing elements")
            if not (row >> i) & 1:
                raise ValueError(f"relation not reflexive at {i}")
        for i in range(n):
            row = self.up[i]
            for j in bits(row):
                if j != i and (self.up[j] >> i) & 1:
                    raise CycleError(f"antisymmetry fails on {i},{j}")
                if self.up[j] & ~row:
                    raise ValueError(f"relation not transitive at {i},{j}")

    # equality is structural: labels are display-only
    def __eq__(self, other):
        return isinstance(other, Poset) and self.up == other.up

    def __hash__(self):
        return hash(self.up)

    @property
    def n(self) -> int:
        return len(self.labels)

    def le(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.le(i, j)

    def down_masks(self) -> list[int]:
        down = [0] * self.n
        for i in range(self.n):
            for j in bits(self.up[i]):
                down[j] |= 1 << i
        return down

    def down_mask(self, j: int) -> int:
        m = 0
        for i in range(self.n):
            if (self.up[i] >> j) & 1:
                m |= 1 << i
        return m

    def down_set(self, j: int) -> frozenset[int]:
        return frozenset(bits(self.down_mask(j)))

    def up_set(self, i: int) -> frozenset[int]:
        return frozenset(bits(self.up[i]))

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram: pairs (i, j) with i < j and nothing in between."""
        down = self.down_masks()
        out = []
        for i in range(self.n):
            for j in bits(self.up[i]):
                if j == i:
                    continue
                between = (self.up[i] & ~(1 << i)) & (down[j] & ~(1 << j))
                if not between:
                    out.append((i, j))
        return out

    def minimal_elements(self) -> list[int]:
        down = self.down_masks()
        return [j for j in range(self.n) if down[j] == (1 << j)]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(self.n) if self.up[i] == (1 << i)]

    def comparable(self, i: int, j: int) -> bool:
        return self.le(i, j) or self.le(j, i)

    def is_chain_set(self, elems: Iterable[int]) -> bool:
        elems = list(elems)
        return all(self.comparable(a, b) for a in elems for b in elems)

    def heights(self) -> list[int]:
        """heights()[i] = length of the longest chain strictly below i."""
        down = self.down_masks()
        order = sorted(range(self.n), key=lambda i: bin(down[i]).count("1"))
        h = [0] * self.n
        for i in order:
            for j in bits(down[i]):
                if j != i:
                    h[i] = max(h[i], h[j] + 1)
        return h

    def relation_pairs(self) -> int:
        """Number of strictly comparable ordered pairs."""
        return sum(bin(row).count("1") - 1 for row in self.up)

    def rename(self, labels: Sequence[str]) -> "Poset":
        return Poset(tuple(labels), self.up)

    def __repr__(self):
        if self.n > 12:
            return f"Poset(n={self.n})"
        cov = ",".join(f"{self.labels[i]}<{self.labels[j]}" for i, j in self.covers())
        return f"Poset({self.n}:[{cov}])"


# ---------------------------------------------------------------- constructors

def from_covers(labels: Sequence[str], covers: Sequence[tuple[str, str]]) -> Poset:
    index = {}
    for lab in labels:
        if lab in index:
            raise UnknownLabel(f"duplicate label {lab!r}")
        index[lab] = len(index)
    n = len(index)
    up = [0] * n
    for a, b in covers:
        if a not in index:
            raise UnknownLabel(f"unknown label {a!r}")
        if b not in index:
            raise UnknownLabel(f"unknown label {b!r}")
        if a == b:
            raise CycleError(f"cover {a!r}<{a!r} is a loop")
        up[index[a]] |= 1 << index[b]
    closed = _closure(n, up)
    for i in range(n):
        for j in bits(closed[i]):
            if j != i and (closed[j] >> i) & 1:
                raise CycleError(
                    f"covers generate a cycle through {labels[i]!r},{labels[j]!r}")
    return Poset(tuple(labels), tuple(closed))


def from_relation(labels: Sequence[str], le_pairs: Iterable[tuple[int, int]]) -> Poset:
    n = len(labels)
    up = [0] * n
    for i, j in le_pairs:
        up[i] |= 1 << j
    closed = _closure(n, up)
    for i in range(n):
        for j in bits(closed[i]):
            if j != i and (closed[j] >> i) & 1:
                raise CycleError(f"relation generates a cycle through {i},{j}")
    return Poset(tuple(labels), tuple(closed))


def empty_poset() -> Poset:
    return Poset((), ())


def singleton(label: str = "*") -> Poset:
    return Poset((label,), (1,))


def chain(length: int) -> Poset:
    """The finite ordinal [length]: 0 -> 1 -> ... -> length."""
    n = length + 1
    labels = tuple(str(i) for i in range(n))
    up = tuple((((1 << n) - 1) >> i) << i for i in range(n))
    return Poset(labels, up)


def antichain(n: int) -> Poset:
    return Poset(tuple(f"a{i}" for i in range(n)), tuple(1 << i for i in range(n)))


def induced_subposet(p: Poset, elems: Sequence[int]) -> tuple[Poset, "MonotoneMap"]:
    """Full subposet on the given elements plus its inclusion."""
    pos = {e: k for k, e in enumerate(elems)}
    up = []
    for e in elems:
        row = 0
        for f in bits(p.up[e]):
            if f in pos:
                row |= 1 << pos[f]
        up.append(row)
    sub = Poset(tuple(p.labels[e] for e in elems), tuple(up))
    return sub, MonotoneMap(sub, p, tuple(elems))


# ---------------------------------------------------------------- monotone maps

@dataclass(frozen=True)
class MonotoneMap:
    source: Poset
    target: Poset
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source.n:
            raise ValueError("image length differs from source size")
        for v in self.image:
            if not (0 <= v < self.target.n):
                raise ValueError("image element out of range")
        if not is_monotone_data(self.source, self.target, self.image):
            from .errors import NotMonotone
            raise NotMonotone(f"map {self.image} is not order-preserving")

    def __call__(self, i: int) -> int:
        return self.image[i]

    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.n

    def is_order_reflecting(self) -> bool:
        for i in range(self.source.n):
            for j in range(self.source.n):
                if self.target.le(self.image[i], self.image[j]) and not self.source.le(i, j):
                    return False
        return True

    def is_isomorphism(self) -> bool:
        return (self.source.n == self.target.n and self.is_injective()
                and self.is_order_reflecting())

    def __repr__(self):
        return f"Map({self.source.n}->{self.target.n}:{list(self.image)})"


def is_monotone_data(source: Poset, target: Poset, image: Sequence[int]) -> bool:
    for i in range(source.n):
        for j in bits(source.up[i]):
            if not target.le(image[i], image[j]):
                return False
    return True


def is_monotone(f: MonotoneMap) -> bool:
    """Total check used as a guard; MonotoneMap construction already enforces it."""
    return is_monotone_data(f.source, f.target, f.image)


def identity(p: Poset) -> MonotoneMap:
    return MonotoneMap(p, p, tuple(range(p.n)))


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """g after f."""
    if f.target != g.source:
        raise CompositionMismatch(
            f"middle posets differ ({f.target.n} vs {g.source.n} elements, or relation)")
    return MonotoneMap(f.source, g.target, tuple(g.image[v] for v in f.image))


def empty_map_into(p: Poset) -> MonotoneMap:
    return MonotoneMap(empty_poset(), p, ())


# ---------------------------------------------------------------- basic ops

def down_set(p: Poset, x: int) -> frozenset[int]:
    """Everything below or equal to x; always contains x."""
    return p.down_set(x)


def up_set(p: Poset, x: int) -> frozenset[int]:
    return p.up_set(x)


def opposite(p: Poset) -> Poset:
    up = [0] * p.n
    for i in range(p.n):
        for j in bits(p.up[i]):
            up[j] |= 1 << i
    return Poset(p.labels, tuple(up))


def coproduct(ps: Sequence[Poset]) -> tuple[Poset, list[MonotoneMap]]:
    labels: list[str] = []
    up: list[int] = []
    offsets = []
    off = 0
    for p in ps:
        offsets.append(off)
        labels.extend(p.labels)
        up.extend(row << off for row in p.up)
        off += p.n
    total = Poset(tuple(labels), tuple(up))
    injections = [
        MonotoneMap(p, total, tuple(range(offsets[k], offsets[k] + p.n)))
        for k, p in enumerate(ps)
    ]
    return total, injections


def connected_components(p: Poset) -> list[list[int]]:
    """Partition by comparability-graph connectivity, ordered by least element."""
    seen = [False] * p.n
    comps = []
    for s in range(p.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in range(p.n):
                if not seen[y] and x != y and p.comparable(x, y):
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(p: Poset) -> bool:
    return len(connected_components(p)) <= 1


# ---------------------------------------------------------------- canonical form

@dataclass(frozen=True)
class CanonicalForm:
    key: bytes

    def hex(self) -> str:
        return self.key.hex()

    def __repr__(self):
        return f"Canon({self.key.hex()[:16]})"


def _refine_colors(p: Poset) -> list[int]:
    """Iterated degree/height refinement; colors are isomorphism-invariant."""
    down = p.down_masks()
    h = p.heights()
    colors = [
        (bin(p.up[i]).count("1"), bin(down[i]).count("1"), h[i])
        for i in range(p.n)
    ]
    palette = {c: k for k, c in enumerate(sorted(set(colors)))}
    col = [palette[c] for c in colors]
    for _ in range(p.n):
        sigs = []
        for i in range(p.n):
            ups = sorted(col[j] for j in bits(p.up[i]) if j != i)
            downs = sorted(col[j] for j in bits(down[i]) if j != i)
            sigs.append((col[i], tuple(ups), tuple(downs)))
        palette = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == col:
            break
        col = new
    return col


def _transposition_is_automorphism(p: Poset, a: int, b: int) -> bool:
    def sw(x):
        return b if x == a else a if x == b else x
    for i in range(p.n):
        for j in range(p.n):
            if p.le(i, j) != p.le(sw(i), sw(j)):
                return False
    return True


def canonical_form(p: Poset, bound: int = CANONICAL_BOUND) -> CanonicalForm:
    """Permutation-invariant key, deterministic across runs.

    The relation matrix is linearized in L-shaped shells (shell k = column k
    against rows 0..k, then row k against columns 0..k-1) so that placing one
    more element extends the encoded prefix; the key is the lexicographic
    minimum over permutations listing refinement colors in ascending order.
    Candidates differing by a swap automorphism are explored once.
    """
    if p.n > bound:
        raise SizeLimit(f"canonical_form limited to {bound} elements, got {p.n}")
    n = p.n
    if n == 0:
        return CanonicalForm(b"\x00")
    col = _refine_colors(p)
    pos_color = sorted(col)
    best_shells: list[tuple[int, ...] | None] = [None]
    best_order: list[tuple[int, ...] | None] = [None]

    def shell(order: list[int], e: int) -> int:
        acc = 0
        for i in order:
            acc = (acc << 1) | (1 if p.le(i, e) else 0)
        acc = (acc << 1) | 1  # le(e, e)
        for j in order:
            acc = (acc << 1) | (1 if p.le(e, j) else 0)
        return acc

    def extend(order: list[int], shells: list[int], used: int):
        k = len(order)
        if k == n:
            tup = tuple(shells)
            if best_shells[0] is None or tup < best_shells[0]:
                best_shells[0] = tup
                best_order[0] = tuple(order)
            return
        want = pos_color[k]
        tried: list[int] = []
        for e in range(n):
            if (used >> e) & 1 or col[e] != want:
                continue
            if any(_transposition_is_automorphism(p, e, t) for t in tried):
                continue
            tried.append(e)
            s = shell(order, e)
            ref = best_shells[0]
            if ref is not None:
                prefix = shells + [s]
                refpref = list(ref[: k + 1])
                if prefix > refpref:
                    continue
            order.append(e)
            shells.append(s)
            extend(order, shells, used | (1 << e))
            order.pop()
            shells.pop()

    extend([], [], 0)
    order = best_order[0]
    assert order is not None
    packed = bytearray([n])
    acc = 0
    nbits = 0
    for i in order:
        for j in order:
            acc = (acc << 1) | (1 if p.le(i, j) else 0)
            nbits += 1
            if nbits == 8:
                packed.append(acc)
                acc, nbits = 0, 0
    if nbits:
        packed.append(acc << (8 - nbits))
    return CanonicalForm(bytes(packed))


def are_isomorphic(p: Poset, q: Poset) -> bool:
    if p.n != q.n:
        return False
    if p.n <= CANONICAL_BOUND:
        return canonical_form(p) == canonical_form(q)
    raise SizeLimit("isomorphism check beyond canonical bound")


def find_isomorphism(p: Poset, q: Poset) -> MonotoneMap | None:
    """Explicit isomorphism search (small posets; used for cross-checks)."""
    if p.n != q.n:
        return None
    for perm in permutations(range(q.n)):
        if all(
            p.le(i, j) == q.le(perm[i], perm[j])
            for i in range(p.n) for j in range(p.n)
        ):
            return MonotoneMap(p, q, tuple(perm))
    return None

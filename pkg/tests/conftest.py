"""Shared hypothesis strategies for random posets and monotone maps."""

from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from poscert.poset import MonotoneMap, Poset, from_relation

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


@st.composite
def posets(draw, max_n: int = 5, min_n: int = 1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = []
    for i in range(n):
        for j in range(n):
            if i < j and draw(st.booleans()):
                # orient edges upward in index order: always acyclic
                pairs.append((i, j))
    return from_relation([f"e{k}" for k in range(n)], pairs)


@st.composite
def monotone_maps(draw, src: Poset, tgt: Poset):
    down = src.down_masks()
    order = sorted(range(src.n), key=lambda x: bin(down[x]).count("1"))
    image: list[int | None] = [None] * src.n
    for x in order:
        cands = [v for v in range(tgt.n)
                 if all(image[y] is None or not src.le(y, x) or tgt.le(image[y], v)
                        for y in range(src.n))]
        if not cands:
            return None
        image[x] = draw(st.sampled_from(cands))
    return MonotoneMap(src, tgt, tuple(image))  # type: ignore[arg-type]


@st.composite
def composable_pairs(draw, max_n: int = 5):
    a = draw(posets(max_n))
    b = draw(posets(max_n))
    c = draw(posets(max_n))
    f = draw(monotone_maps(a, b))
    g = draw(monotone_maps(b, c))
    if f is None or g is None:
        return None
    return f, g

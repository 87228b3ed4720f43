"""The Tamari lattice on binary trees, built directly from rotations.

A tree is either the leaf ``()`` or a pair ``(left, right)``.  The cover
relation is a single rotation ``((A, B), C) -> (A, (B, C))`` applied at any
node; the rotated tree is placed *below* the original, so the right comb is
the bottom element.  This construction shares no code with the bracket-vector
side and is used to cross-check it.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .poset import Poset

LEAF = ()


@lru_cache(maxsize=None)
def trees(nodes: int) -> tuple:
    """All binary trees with ``nodes`` internal nodes."""
    if nodes == 0:
        return (LEAF,)
    out = []
    for left in range(nodes):
        for lt in trees(left):
            for rt in trees(nodes - 1 - left):
                out.append((lt, rt))
    return tuple(out)


def serialize(t) -> str:
    if t == LEAF:
        return "."
    return "(" + serialize(t[0]) + " " + serialize(t[1]) + ")"


def rotations(t) -> list:
    """Every tree reachable from ``t`` by one rotation ((A,B),C) -> (A,(B,C))."""
    if t == LEAF:
        return []
    left, right = t
    out = []
    if left != LEAF:
        a, b = left
        out.append((a, (b, right)))
    out.extend((l2, right) for l2 in rotations(left))
    out.extend((left, r2) for r2 in rotations(right))
    return out


def rotation_lattice_oracle(n: int) -> Poset:
    """Tamari lattice on trees with ``n + 1`` internal nodes, elements sorted by serialization."""
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    items = sorted(trees(n + 1), key=serialize)
    index = {t: k for k, t in enumerate(items)}
    covers = sorted({(index[r], index[t]) for t in items for r in rotations(t)})
    return Poset(tuple(serialize(t) for t in items), tuple(covers))


def rotation_order(n: int) -> np.ndarray:
    """Strict order of :func:`rotation_lattice_oracle` (reflexive-transitive closure of rotations)."""
    return rotation_lattice_oracle(n).strict_order()

"""Finite posets stored as Hasse diagrams, with an isomorphism test.

Element ids are positions in ``elements``; ``covers`` holds ``(lower, upper)``
id pairs sorted ascending.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np


@dataclass(frozen=True)
class Poset:
    elements: tuple
    covers: tuple[tuple[int, int], ...]

    @classmethod
    def from_strict_order(cls, elements: Sequence[Any], less: np.ndarray, jobs: int = 1) -> "Poset":
        """Build from a strict order matrix ``less[a, b] == (a < b)``."""
        return cls(tuple(elements), tuple(transitive_reduction(less, jobs)))

    @classmethod
    def from_leq(cls, elements: Sequence[Any], leq: Callable[[Any, Any], bool]) -> "Poset":
        size = len(elements)
        less = np.zeros((size, size), dtype=bool)
        for a in range(size):
            for b in range(size):
                less[a, b] = a != b and leq(elements[a], elements[b])
        return cls.from_strict_order(elements, less)

    def __len__(self):
        return len(self.elements)

    def upper_covers(self) -> list[list[int]]:
        up = [[] for _ in self.elements]
        for a, b in self.covers:
            up[a].append(b)
        return up

    def lower_covers(self) -> list[list[int]]:
        down = [[] for _ in self.elements]
        for a, b in self.covers:
            down[b].append(a)
        return down

    def strict_order(self) -> np.ndarray:
        """Transitive closure of the cover relation."""
        size = len(self.elements)
        less = np.zeros((size, size), dtype=bool)
        for a, b in self.covers:
            less[a, b] = True
        while True:
            step = less | ((less.astype(np.float32) @ less.astype(np.float32)) > 0)
            if np.array_equal(step, less):
                return less
            less = step

    def minimal(self) -> list[int]:
        return [v for v, d in enumerate(self.lower_covers()) if not d]

    def maximal(self) -> list[int]:
        return [v for v, u in enumerate(self.upper_covers()) if not u]


def _reduce_rows(less: np.ndarray, lo: int, hi: int) -> list[tuple[int, int]]:
    rows = less[lo:hi]
    through = (rows.astype(np.float32) @ less.astype(np.float32)) > 0
    cov = rows & ~through
    return [(int(a) + lo, int(b)) for a, b in zip(*np.nonzero(cov))]


def _reduce_chunk(args) -> list[tuple[int, int]]:
    return _reduce_rows(*args)


def transitive_reduction(less: np.ndarray, jobs: int = 1) -> list[tuple[int, int]]:
    """Cover pairs of a strict order: ``a < b`` with nothing strictly between.

    Rows are processed in contiguous blocks; with ``jobs > 1`` the blocks go to
    worker processes and are merged in row order, so output never depends on
    ``jobs``.
    """
    less = np.asarray(less, dtype=bool)
    size = less.shape[0]
    if jobs <= 1 or size < 2:
        return _reduce_rows(less, 0, size)
    step = -(-size // jobs)
    tasks = [(less, lo, min(lo + step, size)) for lo in range(0, size, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_reduce_chunk, tasks))
    return [c for part in parts for c in part]


def chain(k: int) -> Poset:
    return Poset(tuple(range(k)), tuple((a, a + 1) for a in range(k - 1)))


def antichain(k: int) -> Poset:
    return Poset(tuple(range(k)), ())


def _levels(down: list[list[int]]) -> list[int]:
    level = [-1] * len(down)

    def visit(v: int) -> int:
        stack = [v]
        while stack:
            u = stack[-1]
            pending = [d for d in down[u] if level[d] < 0]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            level[u] = 1 + max((level[d] for d in down[u]), default=-1)
        return level[v]

    for v in range(len(down)):
        if level[v] < 0:
            visit(v)
    return level


def _relabel(keys: list) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colors: list[int], up: list[list[int]], down: list[list[int]]) -> list[int]:
    classes = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in up[v])), tuple(sorted(colors[d] for d in down[v])))
            for v in range(len(colors))
        ]
        new = _relabel(keys)
        count = len(set(new))
        if count == classes:
            return new
        colors, classes = new, count


def canonical_form(poset: Poset) -> tuple:
    """A certificate equal for two posets exactly when they are isomorphic.

    Colour refinement by level and by the colours of upper and lower covers,
    then individualisation of one vertex of the first smallest ambiguous cell
    with backtracking; the lexicographically least relabelled cover list wins.
    """
    up, down = poset.upper_covers(), poset.lower_covers()
    size = len(poset.elements)
    levels = _levels(down)
    start = _relabel([(levels[v], len(up[v]), len(down[v])) for v in range(size)])

    def search(colors: list[int]) -> tuple:
        colors = _refine(colors, up, down)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        ambiguous = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
        if not ambiguous:
            return tuple(sorted((colors[a], colors[b]) for a, b in poset.covers))
        _, target = min(ambiguous)
        best = None
        for v in cells[target]:
            trial = _relabel([(c, 0 if u == v else 1) for u, c in enumerate(colors)])
            cert = search(trial)
            if best is None or cert < best:
                best = cert
        return best

    return (size, search(start))


def poset_isomorphic(p: Poset, q: Poset) -> bool:
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return False
    return canonical_form(p) == canonical_form(q)

"""Full additive subcategories of rep A_n, described by their indecomposables.

A subcategory is handled as a frozenset of :class:`Interval`.  Quotient-closed
subcategories are indexed by an :class:`AVector` ``a`` with
``0 <= a_i <= n+1-i``, whose interval set is ``{(i, j) : i <= j < i + a_i}``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .intervals import Interval, all_intervals, ext_classify, quotients_of

IntervalSet = frozenset  # frozenset[Interval]


class AVector(tuple):
    """An n-tuple with ``0 <= a_i <= n+1-i`` (1-based ``i``)."""

    def __new__(cls, values: Iterable[int]):
        self = super().__new__(cls, (int(v) for v in values))
        n = len(self)
        if n < 1:
            raise ValueError("vector must have at least one entry")
        for i, v in enumerate(self, start=1):
            if not 0 <= v <= n + 1 - i:
                raise ValueError(f"entry a_{i}={v} outside 0..{n + 1 - i}")
        return self

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)})"

    def __str__(self):
        return ",".join(str(v) for v in self)

    @classmethod
    def parse(cls, text: str):
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"expected comma-separated integers, got {text!r}") from None
        return cls(values)


def all_avectors(n: int) -> list[AVector]:
    """All (n+1)! vectors, lexicographically sorted."""
    ranges = [range(n + 2 - i) for i in range(1, n + 1)]
    return [AVector(a) for a in itertools.product(*ranges)]


def f_set(a: AVector) -> frozenset[Interval]:
    return frozenset(Interval(i, j) for i, ai in enumerate(a, start=1) for j in range(i, i + ai))


def avector_of(s: Iterable[Interval], n: int) -> AVector | None:
    """Inverse of :func:`f_set`; None when ``s`` is not of that form."""
    s = frozenset(s)
    if any(x.j > n for x in s):
        return None
    a = []
    for i in range(1, n + 1):
        length = 0
        while Interval(i, i + length) in s:
            length += 1
        a.append(length)
    vec = AVector(a)
    return vec if f_set(vec) == s else None


def is_quotient_closed(s: Iterable[Interval]) -> bool:
    s = frozenset(s)
    return all(quotients_of(x) <= s for x in s)


def quotient_closure(s: Iterable[Interval]) -> frozenset[Interval]:
    out = set()
    for x in s:
        out |= quotients_of(x)
    return frozenset(out)


def extension_step(s: Iterable[Interval]) -> frozenset[Interval]:
    """Add every summand of every non-split extension between members of ``s``."""
    s = frozenset(s)
    out = set(s)
    for z in s:
        for x in s:
            middle = ext_classify(z, x)
            if middle is not None:
                out.update(middle)
    return frozenset(out)


def torsion_closure(s: Iterable[Interval], extensions_first: bool = False) -> frozenset[Interval]:
    """Smallest torsion class containing ``s``."""
    current = frozenset(s)
    steps = (extension_step, quotient_closure) if extensions_first else (quotient_closure, extension_step)
    while True:
        nxt = current
        for step in steps:
            nxt = step(nxt)
        if nxt == current:
            return current
        current = nxt


def is_torsion(s: Iterable[Interval]) -> bool:
    s = frozenset(s)
    return quotient_closure(s) == s and extension_step(s) == s


def _torsion_filter(vectors: list[AVector]) -> list[AVector]:
    return [a for a in vectors if is_torsion(f_set(a))]


def enumerate_torsion_brute(n: int, jobs: int = 1) -> list[AVector]:
    """Every ``a`` whose subcategory is a torsion class, by exhaustive check.

    With ``jobs > 1`` the candidate list is split into contiguous chunks that
    are checked in worker processes and concatenated in order.
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    candidates = all_avectors(n)
    if jobs <= 1:
        return _torsion_filter(candidates)
    size = -(-len(candidates) // jobs)
    chunks = [candidates[k:k + size] for k in range(0, len(candidates), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_torsion_filter, chunks))
    return [a for part in parts for a in part]


def g_set(a: AVector) -> frozenset[Interval]:
    """The longest interval starting at each vertex ``i`` with ``a_i >= 1``."""
    return frozenset(Interval(i, i + ai - 1) for i, ai in enumerate(a, start=1) if ai >= 1)


def count_quotient_closed(n: int) -> int:
    """Number of quotient-closed interval sets, counted by exhaustive search.

    Quotients never change the left endpoint, so closure can be checked one
    starting vertex at a time; the subsets of each such row are enumerated
    and the per-row counts multiplied.
    """
    count = 1
    for i in range(1, n + 1):
        row = [x for x in all_intervals(n) if x.i == i]
        closed = 0
        for mask in range(1 << len(row)):
            closed += is_quotient_closed(x for b, x in enumerate(row) if mask >> b & 1)
        count *= closed
    return count

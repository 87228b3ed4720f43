"""Bracket vectors and the Tamari lattice of torsion classes of rep A_n.

A bracket vector is an :class:`AVector` with ``j + a_{i+j} <= a_i`` whenever
``1 <= j <= a_i`` (entries past ``n`` count as zero).  Ordered componentwise
they form the Tamari lattice; the bottom is the zero vector and the top is
``(n, n-1, ..., 1)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .intervals import Interval, all_intervals, ext_classify
from .poset import Poset
from .subcat import AVector, avector_of, quotient_closure


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def bracket_violation(a: Iterable[int]) -> tuple[int, int] | None:
    """First ``(i, j)`` (1-based) with ``j <= a_i`` and ``j + a_{i+j} > a_i``, else None."""
    a = tuple(a)
    n = len(a)
    for i in range(1, n + 1):
        for j in range(1, a[i - 1] + 1):
            later = a[i + j - 1] if i + j <= n else 0
            if j + later > a[i - 1]:
                return i, j
    return None


def is_bracket_vector(a: Iterable[int]) -> bool:
    return bracket_violation(a) is None


class BracketVector(AVector):
    """An :class:`AVector` that also satisfies the bracket condition."""

    def __new__(cls, values: Iterable[int]):
        self = super().__new__(cls, values)
        bad = bracket_violation(self)
        if bad is not None:
            i, j = bad
            raise ValueError(f"not a bracket vector: violation at i={i}, j={j} ({j} + a_{i + j} > a_{i})")
        return self


def top(n: int) -> BracketVector:
    return BracketVector(range(n, 0, -1))


def bottom(n: int) -> BracketVector:
    return BracketVector([0] * n)


def _check_balanced(s: str) -> None:
    depth = 0
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced bracket string: unmatched ')' at position {pos}")
        else:
            raise ValueError(f"invalid character {ch!r} at position {pos}")
    if depth:
        raise ValueError("unbalanced bracket string: unclosed '('")


def encode(s: str, n: int | None = None) -> BracketVector:
    """Bracket vector of a balanced string with ``n + 1`` pairs.

    Each ``(`` contributes the number of ``(`` strictly inside its pair, read
    left to right; the final ``(`` always contributes zero and is dropped.
    """
    _check_balanced(s)
    if len(s) < 4:
        raise ValueError(f"need at least two bracket pairs, got {s!r}")
    if n is not None and len(s) != 2 * n + 2:
        raise ValueError(f"string of length {len(s)} does not encode rank {n} (need {2 * n + 2})")
    stack: list[int] = []
    counts: list[int] = []
    for ch in s:
        if ch == "(":
            stack.append(len(counts))
            counts.append(0)
        else:
            opened = stack.pop()
            counts[opened] = len(counts) - opened - 1
    return BracketVector(counts[:-1])


def decode(a: Iterable[int]) -> str:
    """The balanced string whose encoding is ``a``."""
    a = BracketVector(a)
    sizes = list(a) + [0]
    out = []
    ends: list[int] = []
    for k, size in enumerate(sizes):
        while ends and ends[-1] < k:
            ends.pop()
            out.append(")")
        out.append("(")
        ends.append(k + size)
    out.extend(")" * len(ends))
    return "".join(out)


def enumerate_bracket_strings(n: int) -> list[str]:
    """All balanced strings with ``n + 1`` pairs, in lexicographic order."""
    pairs = n + 1
    out = []

    def grow(prefix: str, opened: int, closed: int) -> None:
        if closed == pairs:
            out.append(prefix)
            return
        if opened < pairs:
            grow(prefix + "(", opened + 1, closed)
        if closed < opened:
            grow(prefix + ")", opened, closed + 1)

    grow("", 0, 0)
    return out


def enumerate_bracket_vectors(n: int) -> list[BracketVector]:
    """All bracket vectors of length ``n``, sorted lexicographically.

    Entries are chosen from the last position backwards; the condition at
    position ``i`` only involves later entries, and ``a_i = 0`` is always
    admissible, so no branch dead-ends.
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    found: list[tuple[int, ...]] = []
    suffix = [0] * (n + 1)

    def fill(i: int) -> None:
        if i == 0:
            found.append(tuple(suffix[:n]))
            return
        for v in range(n + 2 - i):
            if all(j + (suffix[i + j - 1] if i + j <= n else 0) <= v for j in range(1, v + 1)):
                suffix[i - 1] = v
                fill(i - 1)
        suffix[i - 1] = 0

    fill(n)
    found.sort()
    return [tuple.__new__(BracketVector, a) for a in found]


def _same_rank(a, b) -> None:
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")


def leq(a, b) -> bool:
    _same_rank(a, b)
    return all(x <= y for x, y in zip(a, b))


def meet(a, b) -> BracketVector:
    _same_rank(a, b)
    return BracketVector(min(x, y) for x, y in zip(a, b))


def join(a, b) -> BracketVector:
    """Least bracket vector above both, by repairing the componentwise max."""
    _same_rank(a, b)
    c = [max(x, y) for x, y in zip(a, b)]
    while True:
        bad = bracket_violation(c)
        if bad is None:
            return BracketVector(c)
        i, j = bad
        c[i - 1] = j + c[i + j - 1]


def _vector_order(vectors: list) -> np.ndarray:
    arr = np.array(vectors, dtype=np.int64).reshape(len(vectors), -1)
    leq_ = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
    np.fill_diagonal(leq_, False)
    return leq_


def hasse(n: int, jobs: int = 1) -> Poset:
    """The Hasse diagram of bracket vectors of length ``n`` under componentwise order."""
    elements = enumerate_bracket_vectors(n)
    return Poset.from_strict_order(elements, _vector_order(elements), jobs=jobs)


@dataclass(frozen=True)
class TiltingObject:
    """``n`` distinct intervals with no non-split extension among them."""

    n: int
    summands: tuple[Interval, ...]

    def __post_init__(self):
        summands = tuple(sorted(set(self.summands)))
        if len(summands) != len(self.summands) or len(summands) != self.n:
            raise ValueError(f"need {self.n} pairwise distinct summands, got {self.summands}")
        for x in summands:
            x.check_rank(self.n)
        for z, x in itertools.product(summands, repeat=2):
            if ext_classify(z, x) is not None:
                raise ValueError(f"not rigid: non-split extension of {z} by {x}")
        object.__setattr__(self, "summands", summands)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.summands) + "]"


def is_rigid(summands: Iterable[Interval]) -> bool:
    summands = list(summands)
    return all(ext_classify(z, x) is None for z in summands for x in summands)


def enumerate_tilting(n: int) -> list[TiltingObject]:
    """All tilting objects of rep A_n, sorted by their summand lists."""
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    intervals = all_intervals(n)
    compatible = {
        (x, y): ext_classify(x, y) is None and ext_classify(y, x) is None
        for x in intervals for y in intervals
    }
    found = []

    def grow(chosen: list[Interval], start: int) -> None:
        if len(chosen) == n:
            found.append(TiltingObject(n, tuple(chosen)))
            return
        for k in range(start, len(intervals)):
            x = intervals[k]
            if all(compatible[x, y] for y in chosen):
                chosen.append(x)
                grow(chosen, k + 1)
                chosen.pop()

    grow([], 0)
    return found


def gen(x: Iterable[Interval], n: int) -> AVector:
    """Vector of Gen X: the quotients of sums of copies of ``x``."""
    a = avector_of(quotient_closure(x), n)
    assert a is not None  # quotient closures are always of this form
    return a


def rs_poset(n: int) -> Poset:
    """Tilting objects ordered by inclusion of their Gen classes."""
    objects = enumerate_tilting(n)
    vectors = [gen(t.summands, n) for t in objects]
    return Poset.from_strict_order(objects, _vector_order(vectors))


def sincere_interval(n: int) -> list[BracketVector]:
    """Bracket vectors with ``a_1 = n``, i.e. torsion classes holding every injective."""
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    return [a for a in enumerate_bracket_vectors(n) if a[0] == n]


def drop_first(a) -> BracketVector:
    return BracketVector(a[1:])

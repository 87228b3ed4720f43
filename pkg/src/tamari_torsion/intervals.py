"""Indecomposable representations of the linear quiver A_n as intervals.

``Interval(i, j)`` stands for the representation that is one-dimensional at
vertices ``i..j`` (1-based) with identity maps between them.  A ``Rep`` is a
finite direct sum of intervals.  Hom and Ext between intervals are governed by
simple inequalities on the endpoints, implemented here without any linear
algebra; :mod:`tamari_torsion.matrix_rep` checks them independently.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Interval:
    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)):
            raise TypeError(f"interval endpoints must be integers: {self.i!r}, {self.j!r}")
        if not 1 <= self.i <= self.j:
            raise ValueError(f"invalid interval [{self.i},{self.j}]: need 1 <= i <= j")

    def check_rank(self, n: int) -> "Interval":
        if self.j > n:
            raise ValueError(f"interval {self} does not fit in rank {n}")
        return self

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    def dimvec(self, n: int) -> tuple[int, ...]:
        self.check_rank(n)
        return tuple(1 if self.i <= p <= self.j else 0 for p in range(1, n + 1))

    def __str__(self):
        return f"[{self.i},{self.j}]"

    @classmethod
    def parse(cls, text: str) -> "Interval":
        value = json.loads(text)
        if not (isinstance(value, list) and len(value) == 2):
            raise ValueError(f"expected an interval like [1,3], got {text!r}")
        return cls(*value)


def all_intervals(n: int) -> list[Interval]:
    """Every indecomposable of rank ``n``, in lexicographic order."""
    return [Interval(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


class Rep:
    """A direct sum of intervals for a fixed rank, kept as a sorted multiset.

    Instances are immutable; ``+`` is direct sum and the empty Rep is zero.
    """

    __slots__ = ("_n", "_summands")

    def __init__(self, n: int, summands: Iterable[Interval] = ()):
        if n < 1:
            raise ValueError(f"rank must be at least 1, got {n}")
        items = sorted(summands)
        for x in items:
            x.check_rank(n)
        self._n = n
        self._summands = tuple(items)

    @property
    def rank(self) -> int:
        return self._n

    @property
    def summands(self) -> tuple[Interval, ...]:
        """Summands with repetition, sorted by ``(i, j)``."""
        return self._summands

    def multiplicities(self) -> dict[Interval, int]:
        return dict(sorted(Counter(self._summands).items()))

    def is_zero(self) -> bool:
        return not self._summands

    def dimvec(self) -> tuple[int, ...]:
        dims = [0] * self._n
        for x in self._summands:
            for p in range(x.i, x.j + 1):
                dims[p - 1] += 1
        return tuple(dims)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._summands)

    def __len__(self):
        return len(self._summands)

    def __add__(self, other: "Rep") -> "Rep":
        if not isinstance(other, Rep):
            return NotImplemented
        if other._n != self._n:
            raise ValueError(f"rank mismatch: {self._n} vs {other._n}")
        return Rep(self._n, self._summands + other._summands)

    def __eq__(self, other):
        if not isinstance(other, Rep):
            return NotImplemented
        return self._n == other._n and self._summands == other._summands

    def __hash__(self):
        return hash((self._n, self._summands))

    def __repr__(self):
        return f"Rep({self._n}, {self})"

    def __str__(self):
        return "[" + ",".join(str(x) for x in self._summands) + "]"

    def to_json(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, n: int, text: str) -> "Rep":
        value = json.loads(text)
        if not isinstance(value, list):
            raise ValueError(f"expected a list of intervals, got {text!r}")
        return cls(n, (Interval(*pair) for pair in value))


def _check_pair(a: Interval, b: Interval, n: int | None) -> None:
    if n is not None:
        a.check_rank(n)
        b.check_rank(n)


def hom_dim(src: Interval, dst: Interval, n: int | None = None) -> int:
    """Dimension of Hom(E^{ij}, E^{kl}): 1 iff k <= i <= l <= j, else 0."""
    _check_pair(src, dst, n)
    return int(dst.i <= src.i <= dst.j <= src.j)


def ext_classify(z: Interval, x: Interval, n: int | None = None) -> Rep | None:
    """Middle term of the non-trivial extension of ``z`` by ``x``, if one exists.

    With ``z = E^{ij}`` and ``x = E^{kl}`` a non-split extension exists only
    when ``i+1 <= k <= j+1 <= l``, and then its middle term is
    ``E^{il} + E^{kj}`` (the second summand vanishes when ``k = j+1``).
    Returns None when every extension is split.
    """
    _check_pair(z, x, n)
    i, j, k, l = z.i, z.j, x.i, x.j
    if not (i + 1 <= k <= j + 1 <= l):
        return None
    rank = n if n is not None else l
    summands = [Interval(i, l)]
    if k <= j:
        summands.append(Interval(k, j))
    return Rep(rank, summands)


def quotients_of(x: Interval) -> frozenset[Interval]:
    """Nonzero indecomposable quotients of E^{ij}: the E^{ip} with i <= p <= j."""
    return frozenset(Interval(x.i, p) for p in range(x.i, x.j + 1))


def surjects_onto(x: Rep | Iterable[Interval], target: Interval) -> bool:
    """Whether the sum ``x`` maps onto ``target = E^{kl}``.

    This holds exactly when some summand has the form E^{kj} with j >= l.
    """
    if isinstance(x, Rep):
        target.check_rank(x.rank)
    return any(s.i == target.i and s.j >= target.j for s in x)

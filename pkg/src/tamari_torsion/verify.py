"""Oracle suites run by ``tamari-torsion verify``.

Each suite checks one claim on every rank up to ``min(n, bound)`` and stops
at the first counterexample, which it reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import intervals, matrix_rep, subcat, tamari
from .gfp import PrimeField
from .poset import poset_isomorphic
from .rotation import rotation_lattice_oracle

BOUNDS = {
    "torsion": 6,
    "matrix": 5,
    "split": 4,
    "roundtrip": 8,
    "rotation": 7,
    "tilting": 6,
}


@dataclass
class SuiteResult:
    name: str
    passed: bool
    ranks: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{status} {self.name} (n<={self.ranks}){tail}"


class Failure(Exception):
    pass


def torsion_suite(max_n: int, prime: int = 2, jobs: int = 1, unsafe_n: int | None = None) -> None:
    for n in range(1, max_n + 1):
        brute = subcat.enumerate_torsion_brute(n, jobs=jobs)
        vectors = tamari.enumerate_bracket_vectors(n)
        if list(brute) != list(vectors):
            extra = sorted(set(brute) ^ set(vectors))
            raise Failure(f"n={n}: brute force and bracket vectors differ at {[str(a) for a in extra[:5]]}")


def matrix_suite(max_n: int, prime: int = 2, jobs: int = 1, unsafe_n: int | None = None) -> None:
    """Hom dims and Ext verdicts from linear algebra versus the interval rules."""
    fld = PrimeField(prime)
    split_bound = max(BOUNDS["split"], unsafe_n or 0)
    for n in range(1, max_n + 1):
        built = {x: matrix_rep.build_interval(n, x.i, x.j, fld) for x in intervals.all_intervals(n)}
        for a, b in itertools.product(built, repeat=2):
            ma, mb = built[a], built[b]
            expect = intervals.hom_dim(a, b, n)
            got = matrix_rep.hom_space_dim(ma, mb)
            if got != expect:
                raise Failure(f"Hom({a},{b}) over GF({prime}): matrices give {got}, rule gives {expect}")
            middle = intervals.ext_classify(a, b, n)
            found = matrix_rep.nonsplit_middle_terms(ma, mb)
            if found != (set() if middle is None else {middle}):
                seen = sorted(str(r) for r in found) or "only split extensions"
                raise Failure(f"Ext of {a} by {b} over GF({prime}): matrices give {seen}, rule gives {middle}")
            if n <= split_bound:
                if middle is not None:
                    y, inc = matrix_rep.canonical_inclusion(a, b, n, fld)
                    if matrix_rep.split_exists(y, inc):
                        raise Failure(f"middle term {middle} of {a} by {b} splits")
                else:
                    y, inc = matrix_rep.trivial_inclusion(a, b, n, fld)
                    if not matrix_rep.split_exists(y, inc):
                        raise Failure(f"direct sum {b}+{a} does not split")


def roundtrip_suite(max_n: int, prime: int = 2, jobs: int = 1, unsafe_n: int | None = None) -> None:
    for n in range(1, max_n + 1):
        strings = tamari.enumerate_bracket_strings(n)
        vectors = tamari.enumerate_bracket_vectors(n)
        if len(strings) != len(vectors):
            raise Failure(f"n={n}: {len(strings)} strings but {len(vectors)} bracket vectors")
        for s in strings:
            if tamari.decode(tamari.encode(s)) != s:
                raise Failure(f"decode(encode({s!r})) != {s!r}")
        for a in vectors:
            if tamari.encode(tamari.decode(a)) != a:
                raise Failure(f"encode(decode({a})) != {a}")


def rotation_suite(max_n: int, prime: int = 2, jobs: int = 1, unsafe_n: int | None = None) -> None:
    for n in range(1, max_n + 1):
        if not poset_isomorphic(tamari.hasse(n, jobs=jobs), rotation_lattice_oracle(n)):
            raise Failure(f"n={n}: bracket-vector order is not isomorphic to the rotation lattice")


def tilting_suite(max_n: int, prime: int = 2, jobs: int = 1, unsafe_n: int | None = None) -> None:
    for n in range(1, max_n + 1):
        objects = tamari.enumerate_tilting(n)
        if len(objects) != tamari.catalan(n):
            raise Failure(f"n={n}: {len(objects)} tilting objects, expected {tamari.catalan(n)}")
        for t in objects:
            a = tamari.gen(t.summands, n)
            if a[0] != n or not tamari.is_bracket_vector(a):
                raise Failure(f"Gen {t} = {a} is not a sincere torsion class")
        if n >= 2 and not poset_isomorphic(tamari.rs_poset(n), tamari.hasse(n - 1)):
            raise Failure(f"n={n}: tilting order is not isomorphic to the rank {n - 1} lattice")


SUITES: list[tuple[str, str, Callable[..., None]]] = [
    ("torsion-vs-bracket", "torsion", torsion_suite),
    ("matrix-oracle", "matrix", matrix_suite),
    ("encode-decode-roundtrip", "roundtrip", roundtrip_suite),
    ("lattice-vs-rotation", "rotation", rotation_suite),
    ("tilting-interval", "tilting", tilting_suite),
]


def run_all(n: int, prime: int = 2, jobs: int = 1, unsafe_n: int | None = None) -> list[SuiteResult]:
    """Run every suite in order; bounds can only be raised by ``unsafe_n``."""
    results = []
    for name, key, suite in SUITES:
        bound = max(BOUNDS[key], unsafe_n or 0)
        ranks = min(n, bound)
        try:
            suite(ranks, prime=prime, jobs=jobs, unsafe_n=unsafe_n)
        except Failure as exc:
            results.append(SuiteResult(name, False, ranks, str(exc)))
        else:
            results.append(SuiteResult(name, True, ranks))
    return results

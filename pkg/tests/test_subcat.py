import itertools
import math

from hypothesis import given, settings
from hypothesis import strategies as st

from tamari_torsion.intervals import Interval, all_intervals, ext_classify
from tamari_torsion.subcat import (
    AVector,
    all_avectors,
    avector_of,
    count_quotient_closed,
    enumerate_torsion_brute,
    extension_step,
    f_set,
    g_set,
    is_quotient_closed,
    is_torsion,
    quotient_closure,
    torsion_closure,
)
from tamari_torsion.tamari import enumerate_bracket_vectors

E = Interval


def subsets_of(n):
    ivs = all_intervals(n)
    return st.sets(st.sampled_from(ivs)).map(frozenset)


ranked_subsets = st.integers(1, 5).flatmap(lambda n: st.tuples(subsets_of(n), subsets_of(n)))


def test_f_set_examples():
    assert f_set(AVector((2, 1))) == {E(1, 1), E(1, 2), E(2, 2)}
    assert f_set(AVector((0, 0, 0))) == frozenset()
    assert f_set(AVector((1, 0, 1))) == {E(1, 1), E(3, 3)}


def test_avector_of_examples():
    assert avector_of({E(1, 1), E(1, 2), E(2, 2)}, 2) == (2, 1)
    assert avector_of(set(), 3) == (0, 0, 0)
    assert avector_of({E(1, 2)}, 2) is None


def test_avector_validation_and_parsing():
    assert AVector.parse("2,1") == (2, 1)
    assert str(AVector((2, 1))) == "2,1"
    for bad in [(3, 0), (0, 2), ()]:
        try:
            AVector(bad)
        except ValueError:
            continue
        raise AssertionError(f"{bad} accepted")


def test_avector_roundtrip_and_quotient_closed():
    for n in range(1, 6):
        for a in all_avectors(n):
            s = f_set(a)
            assert avector_of(s, n) == a
            assert is_quotient_closed(s)


def test_is_quotient_closed_examples():
    assert not is_quotient_closed({E(1, 2)})
    assert is_quotient_closed(set())


def test_quotient_closure_examples():
    assert quotient_closure({E(1, 3)}) == {E(1, 1), E(1, 2), E(1, 3)}
    closed = f_set(AVector((2, 0, 1)))
    assert quotient_closure(closed) == closed
    assert quotient_closure({E(2, 3), E(1, 1)}) == {E(1, 1), E(2, 2), E(2, 3)}


def test_extension_step_examples():
    assert extension_step({E(1, 1), E(2, 2)}) == {E(1, 1), E(2, 2), E(1, 2)}
    for x in all_intervals(5):
        assert extension_step({x}) == {x}
    assert extension_step({E(1, 2), E(2, 3)}) == {E(1, 2), E(2, 3), E(1, 3), E(2, 2)}


def test_torsion_closure_examples():
    assert torsion_closure({E(1, 1), E(2, 2)}) == {E(1, 1), E(2, 2), E(1, 2)}
    assert torsion_closure({E(2, 2)}) == {E(2, 2)}
    assert avector_of(torsion_closure({E(2, 2)}), 2) == (0, 1)
    for a in enumerate_bracket_vectors(4):
        assert torsion_closure(f_set(a)) == f_set(a)


def test_is_torsion_examples():
    assert is_torsion({E(1, 1), E(2, 2), E(1, 2)})
    assert not is_torsion({E(1, 1), E(2, 2)})
    assert is_torsion(set())


def test_enumerate_torsion_brute_examples():
    assert enumerate_torsion_brute(1) == [(0,), (1,)]
    assert enumerate_torsion_brute(2) == [(0, 0), (0, 1), (1, 0), (2, 0), (2, 1)]
    assert len(enumerate_torsion_brute(3)) == 14


def test_brute_force_matches_bracket_vectors():
    for n in range(1, 6):
        assert enumerate_torsion_brute(n) == enumerate_bracket_vectors(n)


def test_parallel_brute_force_is_identical():
    assert enumerate_torsion_brute(4, jobs=3) == enumerate_torsion_brute(4)


def test_order_embedding():
    for n in range(1, 6):
        vecs = all_avectors(n)
        sets = [f_set(a) for a in vecs]
        for (a, sa), (b, sb) in itertools.product(zip(vecs, sets), repeat=2):
            assert (sa <= sb) == all(x <= y for x, y in zip(a, b))


@settings(max_examples=150, deadline=None)
@given(ranked_subsets)
def test_closure_operator_laws(pair):
    s, t = pair
    for close in (quotient_closure, torsion_closure):
        cs = close(s)
        assert s <= cs
        assert close(cs) == cs
        assert close(s & t) <= cs
        assert close(s) <= close(s | t)


@settings(max_examples=150, deadline=None)
@given(ranked_subsets)
def test_torsion_closure_is_torsion_and_order_free(pair):
    s, _ = pair
    closed = torsion_closure(s)
    assert is_torsion(closed)
    assert closed == torsion_closure(s, extensions_first=True)


@settings(max_examples=150, deadline=None)
@given(ranked_subsets)
def test_torsion_closure_is_least(pair):
    # the smallest torsion class over s among all bracket-vector classes
    s, _ = pair
    n = max((x.j for x in s), default=1)
    above = [f_set(a) for a in enumerate_bracket_vectors(n) if s <= f_set(a)]
    assert torsion_closure(s) == frozenset.intersection(*above)


def test_g_set_extensions_into_f_set_split():
    for n in range(1, 8):
        for a in enumerate_bracket_vectors(n):
            fa = f_set(a)
            for z in g_set(a):
                assert z in fa
                for x in fa:
                    assert ext_classify(z, x) is None, (a, z, x)


def test_quotient_closed_count():
    for n in range(1, 8):
        assert count_quotient_closed(n) == math.factorial(n + 1) == len(all_avectors(n))

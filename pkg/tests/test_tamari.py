import itertools

import numpy as np
import pytest

from tamari_torsion.intervals import Interval, all_intervals, ext_classify
from tamari_torsion.poset import chain, poset_isomorphic
from tamari_torsion.rotation import LEAF, rotation_lattice_oracle, rotations, trees
from tamari_torsion.subcat import AVector, all_avectors
from tamari_torsion.tamari import (
    BracketVector,
    TiltingObject,
    bracket_violation,
    catalan,
    decode,
    drop_first,
    encode,
    enumerate_bracket_strings,
    enumerate_bracket_vectors,
    enumerate_tilting,
    gen,
    hasse,
    is_bracket_vector,
    join,
    leq,
    meet,
    rs_poset,
    sincere_interval,
    top,
)

E = Interval
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]


def brute_bracket_vectors(n):
    return [a for a in all_avectors(n) if is_bracket_vector(a)]


def order_matrix(elements):
    arr = np.array(elements)
    return (arr[:, None, :] <= arr[None, :, :]).all(axis=2)


def brute_glb(x, y, le):
    """Index of the greatest common lower bound, by scanning all elements."""
    lower = np.nonzero(le[:, x] & le[:, y])[0]
    greatest = [c for c in lower if le[lower, c].all()]
    assert len(greatest) == 1
    return greatest[0]


def brute_lub(x, y, le):
    upper = np.nonzero(le[x, :] & le[y, :])[0]
    least = [c for c in upper if le[c, upper].all()]
    assert len(least) == 1
    return least[0]


def bracket_mask(arr):
    """Vectorised bracket condition over the last axis of ``arr``."""
    n = arr.shape[-1]
    ok = np.ones(arr.shape[:-1], dtype=bool)
    for i in range(n):
        for j in range(1, n - i + 1):
            later = arr[..., i + j] if i + j < n else 0
            ok &= (arr[..., i] < j) | (j + later <= arr[..., i])
    return ok


def test_is_bracket_vector_examples():
    assert is_bracket_vector((0, 1))
    assert is_bracket_vector((2, 0))
    assert not is_bracket_vector((1, 1))
    assert bracket_violation((1, 1)) == (1, 1)


def test_encode_examples():
    assert encode("()(())") == (0, 1)
    assert encode("(()())") == (2, 0)
    assert encode("()()()") == (0, 0)


@pytest.mark.parametrize("bad", ["(()", "())(", "()", "(a)()", ")(()"])
def test_encode_rejects_malformed(bad):
    with pytest.raises(ValueError):
        encode(bad)


def test_encode_checks_length_against_rank():
    with pytest.raises(ValueError):
        encode("()(())", n=3)


def test_decode_examples():
    assert decode((0, 1)) == "()(())"
    assert decode((0, 0, 0, 0)) == "()()()()()"
    preimages = [s for s in enumerate_bracket_strings(2) if encode(s) == (2, 1)]
    assert preimages == ["((()))"]
    assert decode((2, 1)) == "((()))"
    with pytest.raises(ValueError):
        decode((1, 1))


def test_bracket_strings_are_all_balanced_words():
    for n in range(1, 5):
        brute = [
            "".join(w)
            for w in itertools.product("()", repeat=2 * n + 2)
            if all("".join(w)[:k].count("(") >= "".join(w)[:k].count(")") for k in range(2 * n + 3))
            and w.count("(") == n + 1
        ]
        assert enumerate_bracket_strings(n) == sorted(brute)


def test_roundtrip_exhaustive():
    for n in range(1, 9):
        strings = enumerate_bracket_strings(n)
        assert len(strings) == catalan(n + 1)
        assert sorted(encode(s) for s in strings) == enumerate_bracket_vectors(n)
        for s in strings:
            assert decode(encode(s)) == s
        for a in enumerate_bracket_vectors(n):
            assert encode(decode(a)) == a


def test_enumerate_examples():
    assert enumerate_bracket_vectors(1) == [(0,), (1,)]
    assert enumerate_bracket_vectors(2) == [(0, 0), (0, 1), (1, 0), (2, 0), (2, 1)]
    assert len(brute_bracket_vectors(4)) == 42
    assert enumerate_bracket_vectors(4) == brute_bracket_vectors(4)


def test_enumeration_matches_brute_filter():
    for n in range(1, 8):
        assert enumerate_bracket_vectors(n) == brute_bracket_vectors(n)


def test_catalan_counts():
    for n in range(1, 11):
        assert len(enumerate_bracket_vectors(n)) == CATALAN[n + 1]
    assert all(isinstance(a, BracketVector) for a in enumerate_bracket_vectors(3))


def test_leq_examples():
    for b in enumerate_bracket_vectors(3):
        assert leq((0, 0, 0), b)
    assert not leq((1, 0), (0, 1)) and not leq((0, 1), (1, 0))
    assert leq((2, 0), (2, 1))
    with pytest.raises(ValueError):
        leq((0, 0), (0, 0, 0))


def test_meet_join_examples():
    assert meet((2, 0), (0, 1)) == (0, 0)
    assert join((1, 0), (0, 1)) == (2, 1)
    for a in enumerate_bracket_vectors(3):
        assert meet(a, a) == a and join(a, a) == a
        assert meet(a, top(3)) == a
        assert join((0, 0, 0), a) == a
    with pytest.raises(ValueError):
        join((0, 0), (0,))


def test_meet_join_are_glb_lub():
    for n in range(1, 6):
        elements = enumerate_bracket_vectors(n)
        le = order_matrix(elements)
        for x, y in itertools.product(range(len(elements)), repeat=2):
            a, b = elements[x], elements[y]
            assert meet(a, b) == elements[brute_glb(x, y, le)]
            assert join(a, b) == elements[brute_lub(x, y, le)]


def test_bracket_mask_agrees_with_library_check():
    for n in range(1, 6):
        vecs = all_avectors(n)
        assert bracket_mask(np.array(vecs)).tolist() == [is_bracket_vector(a) for a in vecs]


def test_componentwise_min_stays_bracket():
    for n in range(1, 8):
        arr = np.array(enumerate_bracket_vectors(n))
        mins = np.minimum(arr[:, None, :], arr[None, :, :])
        assert bracket_mask(mins).all()


def test_hasse_examples():
    h1, h2, h3 = hasse(1), hasse(2), hasse(3)
    assert (len(h1), len(h1.covers)) == (2, 1)
    assert (len(h2), len(h2.covers)) == (5, 5)
    assert (len(h3), len(h3.covers)) == (14, len(rotation_lattice_oracle(3).covers)) == (14, 21)
    assert list(h3.elements) == sorted(h3.elements)
    assert h2.minimal() == [0] and h2.elements[h2.maximal()[0]] == top(2)


def test_hasse_covers_are_transitive_reduction():
    for n in range(1, 5):
        h = hasse(n)
        elements = h.elements
        brute = set()
        for x, y in itertools.permutations(range(len(elements)), 2):
            a, b = elements[x], elements[y]
            if leq(a, b) and not any(
                c not in (a, b) and leq(a, c) and leq(c, b) for c in elements
            ):
                brute.add((x, y))
        assert set(h.covers) == brute


def test_hasse_is_independent_of_jobs():
    assert hasse(5, jobs=3) == hasse(5)


def _dyck(t):
    if t == LEAF:
        return ""
    return _dyck(t[1]) + "(" + _dyck(t[0]) + ")"


def test_rotation_covers_map_onto_bracket_covers():
    # explicit order isomorphism: tree -> Dyck word -> bracket vector,
    # with the rotated tree below the original
    for n in range(1, 7):
        h = hasse(n)
        index = {a: k for k, a in enumerate(h.elements)}
        image = {
            (index[encode(_dyck(r))], index[encode(_dyck(t))]) for t in trees(n + 1) for r in rotations(t)
        }
        assert image == set(h.covers)


def test_hasse_isomorphic_to_rotation_lattice():
    for n in range(1, 7):
        assert poset_isomorphic(hasse(n), rotation_lattice_oracle(n))


def test_enumerate_tilting_examples():
    assert [t.summands for t in enumerate_tilting(1)] == [(E(1, 1),)]
    assert [t.summands for t in enumerate_tilting(2)] == [(E(1, 1), E(1, 2)), (E(1, 2), E(2, 2))]
    assert len(enumerate_tilting(3)) == 5


def test_enumerate_tilting_matches_subset_filter():
    for n in range(1, 5):
        brute = []
        for combo in itertools.combinations(all_intervals(n), n):
            if all(ext_classify(z, x) is None for z in combo for x in combo):
                brute.append(combo)
        assert [t.summands for t in enumerate_tilting(n)] == brute


def test_tilting_validation():
    with pytest.raises(ValueError):
        TiltingObject(2, (E(1, 1), E(2, 2)))
    with pytest.raises(ValueError):
        TiltingObject(2, (E(1, 1),))


def test_tilting_counts_and_sincerity():
    for n in range(1, 7):
        objects = enumerate_tilting(n)
        assert len(objects) == catalan(n)
        for t in objects:
            assert gen(t.summands, n)[0] == n


def test_gen_examples():
    assert gen({E(1, 2), E(2, 2)}, 2) == (2, 1)
    assert gen({E(1, 1)}, 4) == (1, 0, 0, 0)
    assert gen({E(1, 1), E(1, 2)}, 2) == (2, 0)


def test_gen_of_tilting_objects_are_the_sincere_classes():
    for n in range(2, 7):
        gens = sorted(gen(t.summands, n) for t in enumerate_tilting(n))
        assert gens == sincere_interval(n)


def test_rs_poset_examples():
    assert poset_isomorphic(rs_poset(2), chain(2))
    assert len(rs_poset(1)) == 1 and rs_poset(1).covers == ()
    for n in range(2, 7):
        assert poset_isomorphic(rs_poset(n), hasse(n - 1))


def test_sincere_interval_examples():
    assert sincere_interval(2) == [(2, 0), (2, 1)]
    assert [drop_first(a) for a in sincere_interval(2)] == [(0,), (1,)]
    assert len(sincere_interval(3)) == 5


def test_drop_first_is_a_bijection():
    for n in range(2, 8):
        assert sorted(drop_first(a) for a in sincere_interval(n)) == enumerate_bracket_vectors(n - 1)


def test_bracket_vector_rejects_invalid():
    with pytest.raises(ValueError, match="i=1, j=1"):
        BracketVector((1, 1))
    with pytest.raises(ValueError):
        BracketVector((3, 0))
    assert isinstance(BracketVector.parse("2,0"), BracketVector)
    assert AVector((2, 0)) == BracketVector((2, 0))

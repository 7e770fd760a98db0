import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from arithcs import GenusCharacter, IntegerLinkingMatrix, LensSpaceParams, PrimeTuple, dictionary_check, enumerate_characters, lens_cs, lens_dw, lens_signed_sum, topo_cs, topo_dw
from arithcs.errors import ArityMismatch, InvalidLensParams, NonSymmetric, SchemaError
from arithcs.topo import dictionary_profiles, topo_profile

from oracles import primes_1mod4

HOPF = IntegerLinkingMatrix.from_pairs(2, [[1, 2, 1]], "hopf")


def test_topo_cs_examples():
    assert topo_cs(GenusCharacter((1, 0)), HOPF) == 1
    L = IntegerLinkingMatrix.from_pairs(3, [[1, 2, 0], [2, 3, 1], [1, 3, 1]])
    assert topo_cs(GenusCharacter((1, 0, 0)), L) == 1
    for rho in enumerate_characters(3):
        if rho.is_trivial():
            assert topo_cs(rho, L) == 0
    with pytest.raises(ArityMismatch):
        topo_cs(GenusCharacter((1, 0)), L)


def test_topo_dw_examples():
    assert topo_dw(HOPF).value == 0
    assert topo_profile(HOPF).bits == "01"
    for r in range(1, 7):
        assert topo_dw(IntegerLinkingMatrix.from_pairs(r, [])).value == 2 ** (r - 1)
    assert topo_dw(IntegerLinkingMatrix.from_pairs(2, [[1, 2, 2]])).value == 2
    assert topo_dw(IntegerLinkingMatrix.from_pairs(3, [[1, 2, 0], [2, 3, 1], [1, 3, 1]])).value == 0


def test_matrix_validation():
    with pytest.raises(NonSymmetric):
        IntegerLinkingMatrix.from_rows([[0, 1], [2, 0]])
    with pytest.raises(SchemaError):
        IntegerLinkingMatrix.from_pairs(2, [[1, 2, 1], [1, 2, 1]])
    with pytest.raises(SchemaError):
        IntegerLinkingMatrix.from_pairs(2, [[2, 1, 1]])
    with pytest.raises(SchemaError):
        IntegerLinkingMatrix.from_pairs(2, [[1, 3, 1]])
    with pytest.raises(SchemaError):
        IntegerLinkingMatrix.from_json({"lk": []})
    with pytest.raises(SchemaError):
        IntegerLinkingMatrix.from_json({"r": 2, "lk": [[1, 2, 1.5]]})
    with pytest.raises(SchemaError):
        IntegerLinkingMatrix.from_json({"r": 0, "lk": []})
    L = IntegerLinkingMatrix.from_rows([[7, -3], [-3, 9]])
    assert L.entries == ((0, -3), (-3, 0))


def test_json_round_trip():
    L = IntegerLinkingMatrix.from_pairs(4, [[1, 2, 3], [2, 4, -1]])
    again = IntegerLinkingMatrix.from_json(json.loads(json.dumps(L.to_json())))
    assert again.entries == L.entries


link_matrices = st.integers(1, 5).flatmap(
    lambda r: st.lists(st.integers(-20, 20), min_size=r * (r - 1) // 2, max_size=r * (r - 1) // 2).map(
        lambda vals: IntegerLinkingMatrix.from_pairs(r, [[i, j, v] for (i, j), v in zip(itertools.combinations(range(1, r + 1), 2), vals)])
    )
)


@given(link_matrices, st.data())
@settings(max_examples=200)
def test_mod2_reduction_invariance(L, data):
    r = L.r
    shifts = data.draw(st.lists(st.integers(-5, 5), min_size=r * r, max_size=r * r))
    rows = [[L[i, j] for j in range(r)] for i in range(r)]
    for k, (i, j) in enumerate(itertools.combinations(range(r), 2)):
        rows[i][j] += 2 * shifts[k]
        rows[j][i] = rows[i][j]
    L2 = IntegerLinkingMatrix.from_rows(rows)
    assert topo_profile(L2).values == topo_profile(L).values
    assert topo_dw(L2) == topo_dw(L)


@pytest.mark.parametrize("r", range(1, 6))
def test_dw_is_maximal_iff_all_degrees_even(r):
    # CS(rho) is the parity of the cut (J, J^c) in the lk graph, i.e. the sum of
    # the degrees over J; so Z is 2^(r-1) for an Eulerian graph and 0 otherwise.
    # A zero matrix is one such case, not the only one (all-ones for r = 3).
    pairs = list(itertools.combinations(range(1, r + 1), 2))
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        L = IntegerLinkingMatrix.from_pairs(r, [[i, j, b] for (i, j), b in zip(pairs, bits)])
        deg = [sum(b for (i, j), b in zip(pairs, bits) if v in (i, j)) for v in range(1, r + 1)]
        z = topo_dw(L).value
        if all(d % 2 == 0 for d in deg):
            assert z == 2 ** (r - 1)
        else:
            assert z == 0
        if not any(bits):
            assert z == 2 ** (r - 1)


def test_unlink_is_not_the_only_maximizer():
    L = IntegerLinkingMatrix.from_pairs(3, [[1, 2, 1], [1, 3, 1], [2, 3, 1]])
    assert topo_dw(L).value == 4


@pytest.mark.parametrize("a, b, s, cs, z", [(1, 2, 1, 1, 0), (3, 4, 2, 0, 2), (1, 4, 2, 0, 2), (1, 6, 3, 1, 0), (5, 6, 3, 1, 0)])
def test_lens_examples(a, b, s, cs, z):
    p = LensSpaceParams(a, b)
    assert (lens_signed_sum(p), lens_cs(p), lens_dw(p).value) == (s, cs, z)


@pytest.mark.parametrize("a, b", [(2, 2), (3, 2), (1, 3), (2, 4), (0, 4), (-1, 4)])
def test_lens_rejects(a, b):
    with pytest.raises(InvalidLensParams):
        LensSpaceParams(a, b)


def valid_lens(bmax):
    from math import gcd
    return [(a, b) for b in range(2, bmax + 1, 2) for a in range(1, b) if gcd(a, b) == 1]


def test_lens_summand_oddness():
    for a, b in valid_lens(120):
        s = lens_signed_sum(LensSpaceParams(a, b))
        assert abs(s) <= b // 2
        assert (s - b // 2) % 2 == 0


def test_lens_r2_coherence():
    for a, b in valid_lens(120):
        p = LensSpaceParams(a, b)
        L = IntegerLinkingMatrix.from_pairs(2, [[1, 2, lens_signed_sum(p)]])
        assert lens_dw(p) == topo_dw(L)


def test_dictionary():
    for tp in [(5, 29, 37), (5, 13, 73), (5, 13)]:
        assert dictionary_check(PrimeTuple(tp))
    rng = random.Random(3)
    ps = primes_1mod4(1000)
    for _ in range(100):
        t = PrimeTuple(tuple(sorted(rng.sample(ps, rng.randint(1, 4)))))
        assert dictionary_check(t, force=True)
        arith, topo = dictionary_profiles(t, force=True)
        assert arith.source.startswith("arithmetic:") and topo.source.startswith("topological:")

import pytest

from kmcrystals import (
    CartanError,
    FoldingError,
    fold,
    graph_cartan,
    is_finite_type,
    validate_cartan,
)
from kmcrystals.cartan import folded_entry_from_source

from oracles import MATRICES, brute_symmetrizer


def test_validate_symmetric_a2():
    data = validate_cartan([[2, -1], [-1, 2]])
    assert data.d == (1, 1)


def test_validate_skew_symmetrizer_matches_brute_force():
    m = [[2, -1], [-3, 2]]
    data = validate_cartan(m)
    assert data.d == (3, 1)
    assert data.d == brute_symmetrizer(m)


@pytest.mark.parametrize(
    "bad",
    [
        [[2, -1], [0, 2]],  # zero must be mutual
        [[2, 1], [-1, 2]],  # positive off-diagonal
        [[1, -1], [-1, 2]],  # diagonal != 2
        [[2, -1, 0], [-1, 2, -1]],  # not square
    ],
)
def test_validate_rejects_gcm_violations(bad):
    with pytest.raises(CartanError):
        validate_cartan(bad)


def test_validate_rejects_unsymmetrizable_cycle():
    # ratios around the 3-cycle are inconsistent, so no positive d exists
    m = [[2, -1, -2], [-2, 2, -1], [-1, -2, 2]]
    assert brute_symmetrizer(m) is None
    with pytest.raises(CartanError, match="symmetrizer"):
        validate_cartan(m)


@pytest.mark.parametrize("name", sorted(MATRICES))
def test_da_symmetric(name):
    data = validate_cartan(MATRICES[name])
    n = data.rank
    for i in range(n):
        for j in range(n):
            assert data.d[i] * data.a(i, j) == data.d[j] * data.a(j, i)


@pytest.mark.parametrize("name", sorted(MATRICES))
def test_minimal_symmetrizer_against_search(name):
    data = validate_cartan(MATRICES[name])
    assert data.d == brute_symmetrizer(MATRICES[name])


def test_pair_fundamental_weight(a2):
    assert a2.pair(0, a2.omega(0)) == 1
    assert a2.pair(1, a2.omega(0)) == 0


@pytest.mark.parametrize("name", ["A2", "G2", "C2", "AFF"])
def test_pair_on_simple_roots_is_cartan_matrix(name):
    data = validate_cartan(MATRICES[name])
    for i in data.index_set:
        for j in data.index_set:
            assert data.pair(i, data.alpha(j)) == data.a(i, j)


def test_pair_mixed_weight(a2):
    w = a2.omega(0) + a2.omega(1) - a2.alpha(0) - a2.alpha(1)
    assert a2.pair(0, w) == 0
    assert a2.pair(1, w) == 0


def test_pair_unknown_node(a2):
    with pytest.raises(ValueError):
        a2.pair(5, a2.zero())


def test_fold_a3_to_rank_two():
    folded = fold(3, [(0, 1), (1, 2)], [2, 1, 0])
    assert folded.orbits == ((0, 2), (1,))
    assert folded.m == ((4, -2), (-2, 2))
    assert folded.d == (2, 1)
    assert folded.cartan.matrix == ((2, -1), (-2, 2))
    assert folded.cartan == validate_cartan([[2, -1], [-2, 2]])


def test_fold_two_disjoint_nodes():
    folded = fold(2, [], [1, 0])
    assert folded.m == ((4,),)
    assert folded.d == (2,)
    assert folded.cartan.matrix == ((2,),)


def test_fold_rejects_edge_inside_orbit():
    with pytest.raises(FoldingError, match="admissible"):
        fold(2, [(0, 1)], [1, 0])


def test_fold_rejects_non_automorphism():
    with pytest.raises(FoldingError, match="automorphism"):
        fold(3, [(0, 1), (1, 2)], [1, 0, 2])


def test_fold_rejects_non_permutation():
    with pytest.raises(FoldingError):
        fold(2, [], [0, 0])


def test_fold_d4_star_to_g2():
    # center 0, three leaves rotated by the automorphism
    folded = fold(4, [(0, 1), (0, 2), (0, 3)], [0, 2, 3, 1])
    assert folded.orbits == ((0,), (1, 2, 3))
    assert folded.m == ((2, -3), (-3, 6))
    assert folded.cartan.matrix == ((2, -3), (-1, 2))


def test_fold_multi_edge_affine():
    folded = fold(2, [(0, 1), (0, 1)], [0, 1])
    assert folded.cartan.matrix == ((2, -2), (-2, 2))
    with pytest.raises(FoldingError, match="admissible"):
        fold(2, [(0, 1), (0, 1)], [1, 0])


@pytest.mark.parametrize(
    "args",
    [
        (3, [(0, 1), (1, 2)], [2, 1, 0]),
        (4, [(0, 1), (0, 2), (0, 3)], [0, 2, 3, 1]),
        (2, [], [1, 0]),
        (5, [(0, 1), (1, 2), (2, 3), (3, 4)], [4, 3, 2, 1, 0]),
    ],
)
def test_folded_entries_match_unfolded_pairing(args):
    folded = fold(*args)
    r = folded.rank
    for a in range(r):
        for b in range(r):
            assert folded.cartan.a(a, b) == folded_entry_from_source(folded, a, b)
            assert folded.m[a][a] == 2 * folded.d[a]


def test_fold_output_always_validates():
    for args in [(3, [(0, 1), (1, 2)], [2, 1, 0]), (2, [(0, 1), (0, 1)], [0, 1])]:
        folded = fold(*args)
        assert validate_cartan(folded.cartan.matrix) == folded.cartan


def test_graph_cartan_path():
    assert graph_cartan(3, [(0, 1), (1, 2)]).matrix == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    with pytest.raises(CartanError, match="loop"):
        graph_cartan(2, [(0, 0)])


def test_finite_type_detection():
    for name in ("A1", "A2", "A3", "C2", "G2", "A1xA1"):
        assert is_finite_type(validate_cartan(MATRICES[name]))
    assert not is_finite_type(validate_cartan(MATRICES["AFF"]))
    assert not is_finite_type(validate_cartan([[2, -3], [-3, 2]]))


def test_weight_arithmetic_and_dominance(a2):
    w = a2.omega(0) + a2.omega(1)
    assert a2.geq(w, a2.omega(0))
    assert not a2.geq(a2.omega(0), w)
    assert (w - w).is_zero()
    with pytest.raises(ValueError):
        a2.geq(w, w - a2.alpha(0))
    assert a2.dominant(w)
    assert not a2.dominant(w - a2.alpha(0))
    # 2*omega_0 - alpha_0 pairs to (0, 1): dominant in the pairing sense only
    u = a2.omega(0) + a2.omega(0) - a2.alpha(0)
    assert a2.pairing_dominant(u) and not a2.dominant(u)

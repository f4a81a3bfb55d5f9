import random
from fractions import Fraction

import pytest

from kmcrystals import (
    MomentMapError,
    QuiverData,
    dagger,
    eps_i_lusztig,
    eps_i_point,
    is_costable,
    is_nilpotent,
    is_stable,
    lusztig_moment,
    make_point,
    nakajima_moment,
    phi_i_point,
    point_from_json,
    point_to_json,
)
from kmcrystals.quiver import moment_is_zero, weight_pairing
from kmcrystals.cartan import graph_cartan
from kmcrystals.ratmat import is_zero, mat, transpose, zeros

from corpus import A1, A2Q, SHAPES, lemma_corpus, random_point


FWD = (0, True)
BWD = (0, False)


def test_nilpotent_one_directional():
    p = make_point(A2Q, (1, 1), (0, 0), x={FWD: mat([[1]])})
    assert is_nilpotent(p)


def test_not_nilpotent_two_directional():
    p = make_point(A2Q, (1, 1), (0, 0), x={FWD: mat([[1]]), BWD: mat([[1]])})
    assert not is_nilpotent(p)


def test_nilpotent_no_arrows():
    assert is_nilpotent(make_point(A1, (2,), (1,)))


def test_nilpotent_sees_through_cancellation():
    # two parallel edges whose length-two path sums cancel in the total
    # endomorphism, while individual path compositions never vanish
    q = QuiverData(2, ((0, 1), (0, 1)))
    arrows = {(0, True): mat([[1]]), (1, True): mat([[1]]),
              (0, False): mat([[1]]), (1, False): mat([[-1]])}
    p = make_point(q, (1, 1), (0, 0), x=arrows)
    total = [[0, 0], [2, 0]]  # sum over arrows, blocks (node1, node0)
    assert total[0][1] == 0  # the matrix power test would wrongly say nilpotent
    assert not is_nilpotent(p)


def test_lusztig_moment_zero_point():
    p = make_point(A2Q, (2, 1), (0, 0))
    assert all(is_zero(m) for m in lusztig_moment(p))
    assert eps_i_lusztig(p, 0) == 2 and eps_i_lusztig(p, 1) == 1


def test_lusztig_moment_sign_bookkeeping():
    a, b = Fraction(3), Fraction(5)
    p = make_point(A2Q, (1, 1), (0, 0), x={FWD: mat([[a]]), BWD: mat([[b]])})
    psi = lusztig_moment(p)
    assert psi[1].data == ((a * b,),)
    assert psi[0].data == ((-a * b,),)


def test_eps_lusztig_rank():
    p = make_point(A2Q, (1, 1), (0, 0), x={FWD: mat([[1]])})
    assert eps_i_lusztig(p, 1) == 0
    assert eps_i_lusztig(p, 0) == 1


def test_nakajima_moment_examples():
    p = make_point(A1, (1,), (2,), s=[mat([[0, 1]])], t=[mat([[1], [0]])])
    assert moment_is_zero(p)
    assert all(is_zero(m) for m in nakajima_moment(make_point(A2Q, (1, 2), (1, 1))))


def test_moment_dagger_transpose_random():
    rng = random.Random(20240806)
    for name, quiver in sorted(SHAPES.items()):
        for _ in range(30):
            p = random_point(quiver, rng)
            mu = nakajima_moment(p)
            mu_dag = nakajima_moment(dagger(p))
            assert all(transpose(a) == b for a, b in zip(mu, mu_dag))
            assert moment_is_zero(p) == moment_is_zero(dagger(p))


def test_stability_examples():
    p = make_point(A1, (1,), (2,), s=[mat([[0, 1]])], t=[mat([[1], [0]])])
    assert is_stable(p)
    q = make_point(A1, (1,), (2,))
    assert not is_costable(q)
    assert not is_stable(q)  # t = 0 and V != 0
    assert is_stable(make_point(A1, (0,), (1,)))
    assert is_costable(make_point(A1, (0,), (1,)))


def test_stability_uses_invariance_not_just_kernel():
    # ker t is nonzero at node 0 but the arrow pushes it out of ker t
    p = make_point(
        A2Q,
        (1, 1),
        (0, 1),
        x={FWD: mat([[1]])},
        t=[zeros(0, 1), mat([[1]])],
    )
    assert is_stable(p)


def test_costability_closes_under_arrows():
    p = make_point(
        A2Q,
        (1, 1),
        (1, 0),
        x={FWD: mat([[1]])},
        s=[mat([[1]]), zeros(1, 0)],
    )
    assert is_costable(p)


def test_eps_phi_point_examples():
    p = make_point(A1, (1,), (2,), s=[mat([[0, 1]])], t=[mat([[1], [0]])])
    assert eps_i_point(p, 0) == 0
    assert phi_i_point(p, 0) == 0
    q = make_point(A1, (1,), (2,))
    assert eps_i_point(q, 0) == 1
    r = make_point(A1, (0,), (1,))
    assert phi_i_point(r, 0) == 1
    assert eps_i_point(r, 0) == 0


def test_phi_requires_moment_zero():
    p = make_point(A1, (1,), (1,), s=[mat([[1]])], t=[mat([[1]])])
    assert not moment_is_zero(p)
    with pytest.raises(MomentMapError):
        phi_i_point(p, 0)


def test_dagger_involution_and_shapes():
    rng = random.Random(20240807)
    for _, quiver in sorted(SHAPES.items()):
        for _ in range(20):
            p = random_point(quiver, rng)
            assert dagger(dagger(p)) == p
    p = make_point(A1, (1,), (2,), s=[mat([[0, 1]])], t=[mat([[1], [0]])])
    d = dagger(p)
    assert d.s[0] == mat([[1, 0]])
    assert d.t[0] == mat([[0], [1]])


def test_stability_duality_random():
    rng = random.Random(20240808)
    for _, quiver in sorted(SHAPES.items()):
        for _ in range(30):
            p = random_point(quiver, rng)
            dp = dagger(p)
            assert is_stable(p) == is_costable(dp)
            assert is_costable(p) == is_stable(dp)
            assert is_nilpotent(p) == is_nilpotent(dp)


def test_lemma_corpus_properties():
    corpus = lemma_corpus()
    assert len(corpus) >= 20
    for p in corpus:
        assert is_nilpotent(p)
        assert moment_is_zero(p)
        assert is_stable(p)
        eps_zero = all(eps_i_point(p, i) == 0 for i in range(p.quiver.num_nodes))
        assert is_costable(p) == eps_zero
    assert any(is_costable(p) for p in corpus)
    assert any(not is_costable(p) for p in corpus)


def test_phi_identity_on_corpus():
    for p in lemma_corpus():
        cartan = graph_cartan(p.quiver.num_nodes, list(p.quiver.edges))
        for i in range(p.quiver.num_nodes):
            assert phi_i_point(p, i) == eps_i_point(p, i) + weight_pairing(p, cartan, i)


def test_eps_point_extends_eps_lusztig():
    rng = random.Random(20240809)
    for _, quiver in sorted(SHAPES.items()):
        for _ in range(15):
            p = random_point(quiver, rng)
            bare = make_point(quiver, p.v, (0,) * quiver.num_nodes, dict(zip(quiver.arrows(), p.x)))
            for i in range(quiver.num_nodes):
                assert eps_i_point(bare, i) == eps_i_lusztig(bare, i)
    # the signed and unsigned stacks have the same rank, so this is definitional


def test_json_round_trip():
    rng = random.Random(20240810)
    for _, quiver in sorted(SHAPES.items()):
        for _ in range(5):
            p = random_point(quiver, rng)
            assert point_from_json(point_to_json(p)) == p


def test_json_rejects_bad_input():
    payload = point_to_json(make_point(A2Q, (1, 1), (1, 1)))
    payload["x"] = {"0->5": [["1"]]}
    with pytest.raises(ValueError):
        point_from_json(payload)
    with pytest.raises(ValueError):
        point_from_json(
            {
                "graph": {"nodes": [0, 1], "edges": [[0, 1], [0, 1]]},
                "orientation": [[0, 1], [0, 1]],
                "v": [1, 1],
                "w": [0, 0],
            }
        )


def test_quiver_data_rejects_loops():
    with pytest.raises(ValueError):
        QuiverData(1, ((0, 0),))

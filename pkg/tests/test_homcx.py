from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from spherelike import corpus
from spherelike.homcx import compose, hom, serre, serre_image, serre_pairing_check
from spherelike.perfcx import direct_sum, identity_map, is_isomorphic, shift, stalk
from spherelike.quiveralg import euler_pairing_complexes, injective, projective_resolution

from strategies import complexes, pairs


def test_hom_between_projectives_counts_paths(kron, a3):
    for alg in (kron, a3):
        for v in alg.vertices:
            for w in alg.vertices:
                assert hom(stalk(alg, v), stalk(alg, w)).dims() == (
                    {0: len(alg.paths(w, v))} if alg.paths(w, v) else {}
                )


def test_hom_examples(kron_objs, a3_objs):
    R, R2 = kron_objs["R_lambda"], kron_objs["R_2"]
    assert hom(R, R).dims() == {0: 1, 1: 1}
    assert hom(R, R2).dims() == {}
    assert hom(kron_objs["P1"], kron_objs["P2"]).dims() == {}
    assert hom(kron_objs["P2"], kron_objs["P1"]).dims() == {0: 2}
    F = a3_objs["F"]
    assert hom(F, F).dims() == {0: 2}
    assert hom(a3_objs["S1"], a3_objs["S2"]).dims() == {1: 1}


@given(complexes(), st.sampled_from([1, 2, 3]))
def test_hom_from_projective_is_homology(X, v):
    """``Hom^n(P(v), X)`` is the degree ``n`` homology of ``X`` at ``v``."""
    if v not in X.algebra.vertices:
        v = 1
    H = X.homology_dims()
    expected = {n: dims[v - 1] for n, dims in H.items() if dims[v - 1]}
    assert hom(stalk(X.algebra, v), X).dims() == expected


@given(pairs())
def test_hom_euler_matches_cartan_pairing(AB):
    A, B = AB
    assert hom(A, B).euler() == euler_pairing_complexes(A, B)


@given(pairs(), st.integers(-2, 2))
def test_hom_shift(AB, n):
    A, B = AB
    # Hom^k(A[n], B) = Hom^(k-n)(A, B) = Hom^k(A, B[-n])
    expected = {k + n: v for k, v in hom(A, B).dims().items()}
    assert hom(A, shift(B, -n)).dims() == expected
    assert hom(shift(A, n), B).dims() == expected


@given(pairs())
def test_basis_elements_are_cocycles_with_coordinates(AB):
    A, B = AB
    H = hom(A, B)
    for n in H.dims():
        for i, b in enumerate(H.basis(n)):
            assert b.is_cocycle()
            assert H.coordinates(b) == tuple(int(j == i) for j in range(H.dim(n)))


def test_compose_identity_and_shape(kron_objs):
    R = kron_objs["R_lambda"]
    H = hom(R, R)
    (x,) = H.basis(1)
    assert compose(identity_map(R), x).components == x.components
    assert H.is_null_homotopic(compose(x, x))
    with pytest.raises(ValueError):
        compose(x, identity_map(kron_objs["P1"]))


def test_composition_respects_homotopy(a3_objs):
    S1, S2 = a3_objs["S1"], a3_objs["S2"]
    (x,) = hom(S1, S2).basis(1)
    assert hom(S1, S2).coordinates(compose(x, identity_map(S2))) == (1,)


def test_serre_of_projectives_is_injective(kron, a3):
    for alg in (kron, a3):
        for v in alg.vertices:
            expected = projective_resolution(injective(alg, v))
            assert is_isomorphic(serre(stalk(alg, v)), expected)


def test_serre_examples(a3_objs):
    assert is_isomorphic(serre(a3_objs["P1"]), a3_objs["S1"])
    assert is_isomorphic(serre(a3_objs["P3"]), a3_objs["P2"])


@given(complexes())
def test_serre_duality(A):
    assert serre_pairing_check(A, A)
    SA = serre(A)
    for n, k in hom(A, A).dims().items():
        assert hom(A, SA).dim(-n) == k


@given(pairs())
def test_serre_pairing_on_pairs(AB):
    A, B = AB
    assert serre_pairing_check(A, B)


@given(pairs(), st.integers(-2, 2))
def test_serre_additive_and_commutes_with_shift(AB, n):
    A, B = AB
    assert is_isomorphic(serre(direct_sum(A, B)), direct_sum(serre(A), serre(B)))
    assert is_isomorphic(serre(shift(A, n)), shift(serre(A), n))


def test_trace_vanishes_on_coboundaries(kron_objs):
    img = serre_image(kron_objs["R_lambda"])
    assert img.complex.graded_terms() == serre(kron_objs["R_lambda"]).graded_terms()


def test_hom_rejects_mixed_algebras(a3, kron):
    with pytest.raises(ValueError):
        hom(stalk(a3, 1), stalk(kron, 1))
    with pytest.raises(ValueError):
        serre_pairing_check(stalk(a3, 1), stalk(kron, 1))


def test_semisimple_serre_is_identity():
    ss = corpus.semisimple(2)
    F = direct_sum(stalk(ss, 1), stalk(ss, 2))
    assert is_isomorphic(serre(F), F)

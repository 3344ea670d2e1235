from __future__ import annotations

import pytest
from hypothesis import given

from spherelike import corpus
from spherelike.homcx import hom
from spherelike.perfcx import (
    ChainMap,
    PerfectComplex,
    cone,
    cone_with_maps,
    direct_sum,
    identity_map,
    is_isomorphic,
    minimize,
    minimize_with_maps,
    shift,
    stalk,
    zero_map,
)
from spherelike.quiveralg import PathMatrix, euler_pairing_complexes

from strategies import chain_maps, complexes, pairs


def dd_zero(C: PerfectComplex) -> bool:
    return all((C.diff(n + 1) @ C.diff(n)).is_zero() for n in C.terms)


# -- shift ------------------------------------------------------------------


def test_shift_examples(kron, a3):
    R = corpus.skyscraper(kron, corpus.LAMBDA)
    assert shift(R, 0) == R
    assert shift(shift(R, 1), -1) == R
    assert shift(stalk(a3, 1), 2).terms == {-2: (1,)}
    assert shift(R, 1).diff(-2) == -R.diff(-1)


@given(complexes())
def test_shift_round_trip_and_dd(A):
    for n in (-3, 1, 2):
        assert shift(shift(A, n), -n) == A
        assert dd_zero(shift(A, n))


# -- cone ---------------------------------------------------------------------


def test_cone_of_identity_is_contractible(kron_objs):
    for A in kron_objs.values():
        assert minimize(cone(identity_map(A))).is_zero()


def test_cone_of_zero_map(a3_objs):
    A, B = a3_objs["S1"], a3_objs["P2"]
    C = minimize(cone(zero_map(A, B)))
    assert C.graded_terms() == direct_sum(shift(A, 1), B).graded_terms()
    assert is_isomorphic(C, direct_sum(shift(A, 1), B))


def test_cone_of_kronecker_map_is_skyscraper(kron):
    lam = corpus.LAMBDA
    x = kron.arrow_element("a") - kron.arrow_element("b") * lam
    f = ChainMap(stalk(kron, 2), stalk(kron, 1), {0: PathMatrix.from_polys(kron, (1,), (2,), [[x]])})
    assert f.is_cocycle()
    C = cone(f)
    R = corpus.skyscraper(kron, lam)
    assert C.terms == {-1: (2,), 0: (1,)}
    assert C.diff(-1) == R.diff(-1)
    assert is_isomorphic(C, R)


@given(chain_maps())
def test_cone_dd_and_euler_additivity(f):
    C = cone(f)
    assert dd_zero(C)
    for X in (f.source, f.target):
        assert euler_pairing_complexes(C, X) == euler_pairing_complexes(f.target, X) - euler_pairing_complexes(f.source, X)


@given(chain_maps())
def test_cone_triangle_maps_are_chain_maps(f):
    _, i, p = cone_with_maps(f)
    assert i.is_cocycle() and p.is_cocycle()
    assert (p @ i).is_zero()


# -- minimize -----------------------------------------------------------------


def test_minimize_examples(kron_objs):
    R = kron_objs["R_lambda"]
    assert minimize(R) == R
    assert minimize(cone(identity_map(R))).is_zero()


@given(complexes())
def test_minimize_properties(A):
    B = direct_sum(A, cone(identity_map(A)))
    M = minimize(B)
    assert M.is_minimal()
    assert dd_zero(M)
    assert minimize(M) == M
    assert hom(M, M).dims() == hom(B, B).dims() == hom(A, A).dims()


@given(complexes())
def test_minimize_maps_are_homotopy_inverse(A):
    B = direct_sum(A, shift(cone(identity_map(A)), 1))
    M, f, g = minimize_with_maps(B)
    assert f.is_cocycle() and g.is_cocycle()
    hM = hom(M, M)
    assert hM.is_null_homotopic((f @ g) - identity_map(M))
    hB = hom(B, B)
    assert hB.is_null_homotopic((g @ f) - identity_map(B))


@given(pairs())
def test_hom_dims_invariant_under_minimize(AB):
    A, B = AB
    thick = direct_sum(A, cone(identity_map(B)))
    assert hom(thick, B).dims() == hom(A, B).dims()
    assert hom(minimize(thick), B).dims() == hom(A, B).dims()


# -- is_isomorphic --------------------------------------------------------------


def test_is_isomorphic_examples(a3, kron):
    P1 = stalk(a3, 1)
    assert is_isomorphic(P1, P1)
    assert not is_isomorphic(P1, shift(P1, 1))
    R = corpus.skyscraper(kron, corpus.LAMBDA)
    assert not is_isomorphic(R, corpus.skyscraper(kron, 2))
    assert is_isomorphic(direct_sum(R, stalk(kron, 1)), direct_sum(stalk(kron, 1), R))


def test_is_isomorphic_rejects_mixed_algebras(a3, kron):
    with pytest.raises(ValueError):
        is_isomorphic(stalk(a3, 1), stalk(kron, 1))


@given(complexes())
def test_is_isomorphic_reflexive_modulo_contractibles(A):
    assert is_isomorphic(A, direct_sum(cone(identity_map(A)), A), seed=3)


def test_direct_sum_rejects_mixed(a3, kron):
    with pytest.raises(ValueError):
        direct_sum(stalk(a3, 1), stalk(kron, 1))


def test_invalid_complex_rejected(a3):
    a = a3.arrow_element("a")
    b = a3.arrow_element("b")
    d0 = PathMatrix.from_polys(a3, (1,), (2,), [[a]])
    d1 = PathMatrix.from_polys(a3, (2,), (3,), [[b]])
    # b*a = 0 so this is a complex ...
    PerfectComplex(a3, {-1: (2,), -2: (3,), 0: (1,)}, {-1: d0, -2: d1})
    # ... but a nonzero composite is not
    kron = corpus.kronecker()
    with pytest.raises(ValueError):
        PerfectComplex(kron, {0: (1,)}, {0: PathMatrix.from_polys(kron, (2,), (1,), [[kron.arrow_element("a")]])})

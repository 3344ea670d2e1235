from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spherelike import corpus
from spherelike.exactlinalg import Matrix
from spherelike.homcx import hom
from spherelike.perfcx import stalk
from spherelike.quiveralg import (
    AlgebraError,
    Arrow,
    FreePathPolynomial,
    PathMatrix,
    Quiver,
    Representation,
    build_algebra,
    euler_pairing_complexes,
    format_path,
    injective,
    nakayama,
    path_from_names,
    projective,
    projective_resolution,
    simple,
)


def names(alg):
    return {format_path(alg.quiver, p) for p in alg.basis}


# -- build_algebra --------------------------------------------------------


def test_kronecker_algebra(kron):
    assert kron.dimension == 4
    assert names(kron) == {"e1", "e2", "a", "b"}
    assert kron.gldim == 1


def test_bound_a3_algebra(a3):
    assert a3.dimension == 5
    assert names(a3) == {"e1", "e2", "e3", "a", "b"}
    assert a3.gldim == 2


def test_semisimple_algebra(ss):
    assert ss.dimension == 2
    assert ss.gldim == 0


def test_path_count_oracle_unbound_a4():
    # linear A4 without relations: one path i -> j for every i <= j
    q = Quiver(4, tuple(Arrow(f"x{i}", i, i + 1) for i in range(1, 4)))
    alg = build_algebra(q)
    assert alg.dimension == 10
    assert alg.gldim == 1


def test_commutativity_relation():
    alg = corpus.commutative_square()
    # 4 idempotents, 4 arrows, one surviving length-2 path
    assert alg.dimension == 9
    ba = alg.arrow_element("b") * alg.arrow_element("a")
    dc = alg.arrow_element("d") * alg.arrow_element("c")
    assert ba == dc and ba


def test_rejects_short_relation():
    q = Quiver(2, (Arrow("a", 1, 2),))
    rel = FreePathPolynomial.from_dict({path_from_names(q, ["a"]): 1})
    with pytest.raises(AlgebraError, match="inadmissible"):
        build_algebra(q, [rel])


def test_rejects_infinite_dimension():
    q = Quiver(1, (Arrow("x", 1, 1),))
    with pytest.raises(AlgebraError, match="infinite-dimensional"):
        build_algebra(q, max_length=8)


def test_rejects_infinite_global_dimension():
    # k[x]/x^2 is self-injective but not semisimple
    q = Quiver(1, (Arrow("x", 1, 1),))
    rel = FreePathPolynomial.from_dict({path_from_names(q, ["x", "x"]): 1})
    with pytest.raises(AlgebraError, match=r"S\(1\)"):
        build_algebra(q, [rel])


def test_quiver_validation():
    with pytest.raises(AlgebraError):
        Quiver(2, (Arrow("a", 1, 3),))
    with pytest.raises(AlgebraError):
        Quiver(2, (Arrow("a", 1, 2), Arrow("a", 2, 1)))


def test_multiplication_is_associative(a3, cyc, kron):
    for alg in (a3, cyc, kron, corpus.commutative_square()):
        n = alg.dimension
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x, y, z = {i: 1}, {j: 1}, {k: 1}
                    assert alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))


# -- projectives, injectives ----------------------------------------------


def test_projective_examples(kron, a3):
    assert projective(kron, 1).dims == (1, 2)
    assert projective(kron, 2).dims == (0, 1)
    assert projective(a3, 1).dims == (1, 1, 0)


def test_nakayama_examples(ss, a3):
    for v in (1, 2):
        assert nakayama(ss, v).dims == simple(ss, v).dims == projective(ss, v).dims
    assert nakayama(a3, 1).dims == (1, 0, 0)
    assert nakayama(a3, 3).dims == (0, 1, 1)
    assert nakayama(a3, projective(a3, 3)).dims == (0, 1, 1)


def test_nakayama_rejects_non_projective(a3):
    with pytest.raises(ValueError):
        nakayama(a3, simple(a3, 1))


@pytest.mark.parametrize("name", ["kron", "a3", "cyc", "ss"])
def test_dimension_identities(name, request):
    alg = request.getfixturevalue(name)
    total = 0
    for v in alg.vertices:
        P, I = projective(alg, v), injective(alg, v)
        assert sum(P.dims) == sum(len(alg.paths(v, w)) for w in alg.vertices)
        assert sum(I.dims) == sum(len(alg.paths(w, v)) for w in alg.vertices)
        total += sum(P.dims)
    assert total == alg.dimension


def test_representation_validation(a3):
    with pytest.raises(ValueError, match="relation"):
        Representation.from_arrow_maps(a3, (1, 1, 1), {"a": [[1]], "b": [[1]]})
    with pytest.raises(ValueError, match="shape"):
        Representation(a3, (1, 1, 1), (Matrix([[1, 0]], 2), Matrix([[0]], 1)))


# -- resolutions ----------------------------------------------------------


def test_resolution_of_projective_is_stalk(a3, kron):
    for alg in (a3, kron):
        for v in alg.vertices:
            R = projective_resolution(projective(alg, v))
            assert R.terms == {0: (v,)}


def test_resolution_of_regular_module(kron):
    lam = Fraction(3, 5)
    R = projective_resolution(corpus.regular_module(kron, lam))
    assert R.terms == {-1: (2,), 0: (1,)}
    expected = kron.arrow_element("a") - kron.arrow_element("b") * lam
    assert R.diff(-1)[0, 0] == expected


def test_resolution_of_simple_a3(a3):
    R = projective_resolution(simple(a3, 1))
    assert R.terms == {-2: (3,), -1: (2,), 0: (1,)}
    assert R.diff(-1)[0, 0] == a3.arrow_element("a")
    assert R.diff(-2)[0, 0] == a3.arrow_element("b")


def _modules(alg):
    mods = [simple(alg, v) for v in alg.vertices]
    mods += [projective(alg, v) for v in alg.vertices]
    mods += [injective(alg, v) for v in alg.vertices]
    return mods


@pytest.mark.parametrize("name", ["kron", "a3", "cyc"])
def test_resolution_homology_and_minimality(name, request):
    alg = request.getfixturevalue(name)
    for m in _modules(alg):
        R = projective_resolution(m)
        assert R.homology_dims() == ({0: m.dims} if any(m.dims) else {})
        assert R.is_minimal()
        assert not R.terms or -min(R.terms) <= alg.gldim


@given(st.fractions(max_denominator=7), st.fractions(max_denominator=7))
def test_kronecker_two_dimensional_modules(x, y):
    alg = corpus.kronecker()
    if x == 0 and y == 0:
        return
    m = Representation.from_arrow_maps(alg, (1, 1), {"a": [[x]], "b": [[y]]})
    R = projective_resolution(m)
    assert R.homology_dims() == {0: (1, 1)}
    assert R.is_minimal()


# -- path matrices and Euler pairing ---------------------------------------


def test_path_matrix_composition_is_associative(a3):
    a = PathMatrix(a3, (1,), (2,), {(0, 0): {a3.index[a3.basis[3]]: 1}})
    ident = PathMatrix.identity(a3, (2,))
    assert a @ ident == a
    assert PathMatrix.identity(a3, (1,)) @ a == a


def test_euler_pairing_examples(kron):
    P1 = stalk(kron, 1)
    R = corpus.skyscraper(kron, corpus.LAMBDA)
    assert euler_pairing_complexes(P1, P1) == 1
    assert euler_pairing_complexes(R, R) == 0
    zero = stalk(kron, ())
    assert euler_pairing_complexes(R, zero) == 0


def test_euler_pairing_rejects_mixed_algebras(kron, a3):
    with pytest.raises(ValueError):
        euler_pairing_complexes(stalk(kron, 1), stalk(a3, 1))


def test_euler_pairing_matches_hom(a3_objs):
    for A in a3_objs.values():
        for B in a3_objs.values():
            assert euler_pairing_complexes(A, B) == hom(A, B).euler()

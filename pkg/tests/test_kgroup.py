from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spherelike.errors import PreconditionError
from spherelike.kgroup import (
    KClass,
    KLattice,
    SurfaceModel,
    asphericality_class,
    blow_up,
    check_braid,
    check_involution,
    curve_sheaf_class,
    euler_pairing_surface,
    exceptional_curve,
    k3_model,
    pullback,
    reflect,
    reflection_matrix,
    ruled_elliptic_model,
    structure_sheaf,
    tensor_canonical,
)

ints = st.integers(-6, 6)


@st.composite
def lattices_with_root(draw, symmetric=False):
    """A random lattice whose first basis vector ``f`` has ``χ(f, f) = 2``."""
    n = draw(st.integers(1, 4))
    form = [[draw(ints) for _ in range(n)] for _ in range(n)]
    if symmetric:
        form = [[form[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
    form[0][0] = 2
    return KLattice(tuple(map(tuple, form))), tuple(int(i == 0) for i in range(n))


def vectors(n):
    return st.tuples(*[ints] * n)


def test_reflect_examples():
    L = KLattice(((2, -1), (-1, 2)))
    assert reflect(L, (1, 0), (1, 0)) == (-1, 0)
    assert reflect(L, (1, 0), (0, 1)) == (1, 1)
    assert reflection_matrix(L, (1, 0)) == [[-1, 1], [0, 1]]


def test_reflect_requires_root():
    L = KLattice(((1,),))
    with pytest.raises(PreconditionError):
        reflect(L, (1,), (1,))
    with pytest.raises(ValueError):
        KLattice(((1, 2),))
    with pytest.raises(ValueError):
        KLattice(((2,),)).chi((1, 0), (1,))


def test_braid_verdicts():
    assert check_braid(KLattice(((2, 0), (0, 2))), (1, 0), (0, 1)) == "commute"
    assert check_braid(KLattice(((2, -1), (-1, 2))), (1, 0), (0, 1)) == "braid"
    assert check_braid(KLattice(((2, 1), (1, 2))), (1, 0), (0, 1)) == "braid"
    assert check_braid(KLattice(((2, 2), (2, 2))), (1, 0), (0, 1)) == "neither"
    with pytest.raises(PreconditionError):
        check_braid(KLattice(((2, 1), (0, 2))), (1, 0), (0, 1))


@given(lattices_with_root(), st.data())
def test_reflection_negates_root_and_is_involution(Lf, data):
    L, f = Lf
    assert reflect(L, f, f) == tuple(-x for x in f)
    assert check_involution(L, f, samples=3, seed=data.draw(st.integers(0, 99)))
    x = data.draw(vectors(L.rank))
    assert reflect(L, f, reflect(L, f, x)) == x


@given(lattices_with_root(symmetric=True), st.data())
def test_reflection_preserves_symmetric_form(Lf, data):
    L, f = Lf
    x, y = data.draw(vectors(L.rank)), data.draw(vectors(L.rank))
    assert L.chi(reflect(L, f, x), reflect(L, f, y)) == L.chi(x, y)


# -- surfaces ------------------------------------------------------------------


@st.composite
def surfaces(draw):
    n = draw(st.integers(1, 3))
    g = [[draw(ints) for _ in range(n)] for _ in range(n)]
    gram = tuple(tuple(g[min(i, j)][max(i, j)] for j in range(n)) for i in range(n))
    return SurfaceModel(gram, tuple(draw(ints) for _ in range(n)), draw(ints))


def classes(n):
    half = st.integers(-12, 12).map(lambda k: Fraction(k, 2))
    return st.builds(KClass, ints, st.tuples(*[ints] * n), half)


@st.composite
def surface_with_classes(draw, k=2):
    M = draw(surfaces())
    return (M, *[draw(classes(M.rank)) for _ in range(k)])


def test_k3_examples():
    M = k3_model()
    O = structure_sheaf(M)
    assert euler_pairing_surface(M, O, O) == 2
    OC = curve_sheaf_class(M, (1,), 0)
    assert euler_pairing_surface(M, OC, OC) == 2
    assert asphericality_class(M, OC, 2) == KClass(0, (0,), 0)


def test_blown_up_k3():
    M = blow_up(k3_model())
    assert M.K2 == -1 and exceptional_curve(M) == (0, 1)
    F = pullback(curve_sheaf_class(k3_model(), (1,), 0))
    assert F.c1 == (1, 0)  # C~ + R = π^*C
    assert euler_pairing_surface(M, F, F) == 2
    assert tensor_canonical(M, F) - F == KClass(0, (0, 0), 0)
    OR = curve_sheaf_class(M, exceptional_curve(M), -1)
    assert OR - OR == asphericality_class(M, F, 2)


def test_ruled_surface():
    M = ruled_elliptic_model()
    P = (0, 1)
    F = curve_sheaf_class(M, P, 0)
    assert F == KClass(0, P, 0)
    assert asphericality_class(M, F, 1) == KClass(0, (0, -2), 2)
    assert asphericality_class(M, F, 1) == curve_sheaf_class(M, P, -1).scale(-2)
    assert euler_pairing_surface(M, F, F) == 0


def test_class_arithmetic_and_validation():
    a, b = KClass(1, (1, 2), Fraction(1, 2)), KClass(0, (1, 0), 3)
    assert a + b - b == a
    assert a.scale(2) == a + a
    with pytest.raises(ValueError):
        SurfaceModel(((1, 2), (3, 4)), (0, 0), 1)
    with pytest.raises(ValueError):
        euler_pairing_surface(k3_model(), a, b)


@given(surface_with_classes())
def test_serre_symmetry(MEF):
    M, E, F = MEF
    assert euler_pairing_surface(M, E, F) == euler_pairing_surface(M, F, tensor_canonical(M, E))


@given(surface_with_classes())
def test_pullback_preserves_pairing(MEF):
    M, E, F = MEF
    B = blow_up(M)
    assert euler_pairing_surface(B, pullback(E), pullback(F)) == euler_pairing_surface(M, E, F)
    R = exceptional_curve(B)
    OR = curve_sheaf_class(B, R, -1)
    assert euler_pairing_surface(B, pullback(E), OR) == 0


@given(surface_with_classes(k=3))
def test_pairing_bilinear(MEFG):
    M, E, F, G = MEFG
    assert euler_pairing_surface(M, E + F, G) == euler_pairing_surface(M, E, G) + euler_pairing_surface(M, F, G)
    assert euler_pairing_surface(M, G, E - F) == euler_pairing_surface(M, G, E) - euler_pairing_surface(M, G, F)


@given(surface_with_classes(k=1), st.integers(-3, 3))
def test_asphericality_class_is_minus_identity_plus_serre(MF, d):
    M, F = MF
    Q = asphericality_class(M, F, d)
    sign = 1 if d % 2 == 0 else -1
    assert Q + F == tensor_canonical(M, F).scale(sign)

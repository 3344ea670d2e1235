"""Spherelike objects, the asphericality triangle, twists, and membership.

For a ``d``-spherelike ``F`` we set ``ω(F) = S(F)[-d]`` and pick a map
``w: F -> ω(F)`` inducing an isomorphism ``w_*`` on ``Hom^•(F, -)``-spaces.
The cone ``Q_F`` of ``w`` is zero exactly when ``F`` is spherical, and the
left orthogonal of ``Q_F`` is the largest subcategory in which ``F`` behaves
like a sphere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlinalg import (
    Disconnected,
    Nilpotent,
    kernel_basis,
    rank,
    split_two_dimensional_algebra,
    to_scalar,
)
from .errors import ConsistencyError, PreconditionError
from .homcx import GradedHomSpace, SerreImage, hom, serre_image
from .perfcx import (
    ChainMap,
    PerfectComplex,
    as_degree_zero,
    cone,
    direct_sum_with_maps,
    identity_map,
    minimize,
    shift,
    zero_map,
)


@dataclass
class SphereReport:
    classification: str  # zero | exceptional | spherelike | other
    hom_table: dict[int, int]
    d: int | None = None
    flavor: str | None = None  # nilpotent | disconnected | irreducible-quadratic | n/a
    minimal_polynomial: str | None = None
    asphericality: AsphericalityData | None = None
    endo: GradedHomSpace | None = field(default=None, repr=False)
    split: object = field(default=None, repr=False)

    @property
    def is_spherelike(self) -> bool:
        return self.classification == "spherelike"

    @property
    def verdict(self) -> str:
        if self.classification != "spherelike":
            return self.classification
        text = f"{self.d}-spherelike"
        if self.d == 0:
            text += f", {self.flavor}"
        if self.asphericality is not None and self.asphericality.Q is not None:
            text += ", spherical" if self.asphericality.Q.is_zero() else ", properly spherelike"
        return text


@dataclass
class AsphericalityData:
    F: PerfectComplex
    d: int
    omega: PerfectComplex
    w: ChainMap
    serre: SerreImage
    choice: dict
    named: dict[str, ChainMap] = field(default_factory=dict)
    Q: PerfectComplex | None = None


def _combine(maps: Sequence[ChainMap], coeffs, source, target) -> ChainMap:
    f = zero_map(source, target, maps[0].degree if maps else 0)
    for m, c in zip(maps, coeffs):
        if c:
            f = f + m.scale(c)
    return f


def classify(F: PerfectComplex) -> SphereReport:
    """Sort ``F`` by the shape of ``Hom^•(F, F)``."""
    H = hom(F, F)
    table = H.dims()
    total = sum(table.values())
    if total == 0:
        return SphereReport("zero", table, endo=H)
    if total == 1:
        return SphereReport("exceptional", table, endo=H)
    if total != 2 or table.get(0, 0) == 0:
        return SphereReport("other", table, endo=H)
    if table == {0: 2}:
        basis = H.basis(0)
        unit = H.coordinates(identity_map(F))
        mult = [[H.coordinates(bi @ bj) for bj in basis] for bi in basis]
        other = (0, 1) if unit[0] else (1, 0)
        split = split_two_dimensional_algebra(unit, other, mult)
        if isinstance(split, Nilpotent):
            return SphereReport("spherelike", table, 0, "nilpotent", endo=H, split=split)
        if isinstance(split, Disconnected):
            return SphereReport("spherelike", table, 0, "disconnected", endo=H, split=split)
        return SphereReport(
            "spherelike",
            table,
            0,
            "irreducible-quadratic",
            minimal_polynomial=split.minimal_polynomial,
            endo=H,
            split=split,
        )
    (d,) = [n for n in table if n != 0]
    return SphereReport("spherelike", table, d, "n/a", endo=H)


def _right_action_kernel(hs: GradedHomSpace, x: ChainMap) -> list[tuple]:
    """Kernel of ``g -> g ∘ x`` on ``Hom^0`` of ``hs`` in basis coordinates."""
    basis = hs.basis(0)
    cols = [hs.coordinates(b @ x) for b in basis]
    rows = [[col[i] for col in cols] for i in range(len(basis))]
    return kernel_basis(rows, len(basis))


def construct_w(F: PerfectComplex, report: SphereReport | None = None, choice=None) -> AsphericalityData:
    """Build ``ω(F)`` and the map ``w``, with the scalars given by ``choice``.

    ``choice`` is a scalar for ``d != 0``, ``(a, b)`` for the nilpotent case
    (``w = a ι + b φ``) and ``(a1, a2)`` for the disconnected case
    (``w = a1 s1 + a2 s2``). Defaults: ``1``, ``(0, 1)``, ``(1, 1)``.
    """
    report = report or classify(F)
    if report.classification == "zero":
        raise PreconditionError("F is zero")
    if not report.is_spherelike:
        raise PreconditionError(f"F is not spherelike (classification {report.classification})")
    if report.flavor == "irreducible-quadratic":
        raise PreconditionError(
            "End(F) is a quadratic field extension; minimal polynomial " + report.minimal_polynomial
        )
    d = report.d
    img = serre_image(F)
    omega = shift(img.complex, -d)
    HW = hom(F, omega)
    H = report.endo
    named: dict[str, ChainMap] = {}

    if d != 0:
        c = to_scalar(1 if choice is None else choice)
        if c == 0:
            raise PreconditionError("w must be nonzero")
        basis = HW.basis(0)
        if len(basis) != 1:
            raise ConsistencyError("Hom^0(F, ω F) is not one-dimensional")
        w = basis[0].scale(c)
        rec = {"scalar": str(c)}
    elif report.flavor == "nilpotent":
        a, b = (0, 1) if choice is None else choice
        a, b = to_scalar(a), to_scalar(b)
        if b == 0:
            raise PreconditionError("nilpotent case needs b != 0")
        eps = _combine(H.basis(0), report.split.epsilon, F, F)
        ker = _right_action_kernel(HW, eps)
        if len(ker) != 1:
            raise ConsistencyError("right action of ε on Hom(F, S F) has unexpected kernel")
        basis = HW.basis(0)
        k = ker[0]
        pick = next(i for i in range(len(basis)) if rank([list(k), [int(i == j) for j in range(len(basis))]]) == 2)
        phi = basis[pick]
        iota = phi @ eps
        named.update(epsilon=eps, iota=iota, phi=phi)
        w = iota.scale(a) + phi.scale(b)
        rec = {"a": str(a), "b": str(b)}
    else:
        a1, a2 = (1, 1) if choice is None else choice
        a1, a2 = to_scalar(a1), to_scalar(a2)
        p1 = _combine(H.basis(0), report.split.p1, F, F)
        p2 = _combine(H.basis(0), report.split.p2, F, F)
        k1 = _right_action_kernel(HW, p2)
        k2 = _right_action_kernel(HW, p1)
        if len(k1) != 1 or len(k2) != 1:
            raise ConsistencyError("Hom(E_i, S E_i) is not one-dimensional")
        s1 = _combine(HW.basis(0), k1[0], F, omega)
        s2 = _combine(HW.basis(0), k2[0], F, omega)
        named.update(p1=p1, p2=p2, s1=s1, s2=s2)
        w = s1.scale(a1) + s2.scale(a2)
        rec = {"a1": str(a1), "a2": str(a2)}

    data = AsphericalityData(F, d, omega, w, img, rec, named)
    if _admissible(rec) and not w_star_is_iso(data, H, HW):
        raise ConsistencyError("w_* is not an isomorphism")
    return data


def _admissible(rec: dict) -> bool:
    if "a1" in rec:
        return Fraction(rec["a1"]) != 0 and Fraction(rec["a2"]) != 0
    return True


def w_star_is_iso(data: AsphericalityData, H: GradedHomSpace | None = None, HW: GradedHomSpace | None = None) -> bool:
    """Whether ``w ∘ -: Hom^n(F, F) -> Hom^n(F, ω F)`` is bijective for all ``n``."""
    H = H or hom(data.F, data.F)
    HW = HW or hom(data.F, data.omega)
    degs = set(H.dims()) | set(HW.dims())
    for n in degs:
        src = H.basis(n)
        if len(src) != HW.dim(n):
            return False
        cols = [HW.coordinates(data.w @ h) for h in src]
        if src and rank(cols) != len(src):
            return False
    return True


def asphericality(F: PerfectComplex, choice=None, report: SphereReport | None = None, check: bool = True) -> AsphericalityData:
    """Complete the triangle ``F -> ω(F) -> Q_F`` and check its basic properties."""
    data = construct_w(F, report, choice)
    data.Q = minimize(cone(data.w))
    if check and _admissible(data.choice):
        if hom(F, data.Q).total_dim() != 0:
            raise ConsistencyError("Hom(F, Q_F) is not zero")
        if not data.Q.is_zero() and hom(data.Q, F).dim(1) == 0:
            raise ConsistencyError("Hom^1(Q_F, F) vanishes although Q_F is nonzero")
    return data


def analyze(F: PerfectComplex, choice=None) -> SphereReport:
    rep = classify(F)
    if rep.is_spherelike and rep.flavor != "irreducible-quadratic":
        rep.asphericality = asphericality(F, choice, rep)
    return rep


def is_spherical(F: PerfectComplex, data: AsphericalityData | None = None) -> bool:
    data = data or asphericality(F)
    return data.Q.is_zero()


def in_spherical_subcategory(U: PerfectComplex, data: AsphericalityData) -> bool:
    if U.algebra != data.F.algebra:
        raise ValueError("complexes over different algebras")
    return hom(U, data.Q).total_dim() == 0


def evaluation(F: PerfectComplex, A: PerfectComplex) -> ChainMap:
    """``ev: ⊕_n Hom^n(F, A) ⊗ F[-n] -> A`` built from the stored basis."""
    H = hom(F, A)
    pieces = [(n, h) for n in H.support for h in H.basis(n)]
    if not pieces:
        return zero_map(PerfectComplex(A.algebra, {}), A)
    sources = [shift(F, -n) for n, _ in pieces]
    S, _, projs = direct_sum_with_maps(*sources)
    ev = zero_map(S, A)
    for (n, h), src, p in zip(pieces, sources, projs):
        comp = ChainMap(src, A, {i + n: m for i, m in h.components.items()}, 0)
        ev = ev + (comp @ p)
    return ev


def coevaluation(A: PerfectComplex, F: PerfectComplex) -> ChainMap:
    """``A -> ⊕_n Hom^n(A, F)^* ⊗ F[n]``."""
    H = hom(A, F)
    pieces = [h for n in H.support for h in H.basis(n)]
    if not pieces:
        return zero_map(A, PerfectComplex(A.algebra, {}))
    targets = [shift(F, h.degree) for h in pieces]
    S, incs, _ = direct_sum_with_maps(*targets)
    co = zero_map(A, S)
    for h, inc in zip(pieces, incs):
        co = co + (inc @ as_degree_zero(h))
    return co


def twist(F: PerfectComplex, A: PerfectComplex) -> PerfectComplex:
    """``T_F(A)``: minimal model of the cone of evaluation."""
    if F.algebra != A.algebra:
        raise ValueError("complexes over different algebras")
    if F.is_zero():
        return minimize(A)
    return minimize(cone(evaluation(F, A)))


def twist_left(F: PerfectComplex, A: PerfectComplex) -> PerfectComplex:
    """``T^l_F(A)``: minimal model of the cone of coevaluation, shifted by ``-1``."""
    if F.algebra != A.algebra:
        raise ValueError("complexes over different algebras")
    if F.is_zero():
        return minimize(A)
    return minimize(shift(cone(coevaluation(A, F)), -1))


@dataclass
class CYVerdict:
    member: bool
    dims_match: bool
    pairing_nondegenerate: bool

    @property
    def passed(self) -> bool:
        return self.dims_match and self.pairing_nondegenerate


def cy_functional(data: AsphericalityData):
    """``x -> t(w ∘ x)`` on ``Hom^d(F, F)``, with ``t`` the Serre trace."""
    img = data.serre

    def fn(x: ChainMap) -> Fraction:
        y = data.w @ x
        return img.trace(ChainMap(data.F, img.complex, dict(y.components), 0))

    return fn


def check_calabi_yau(
    F: PerfectComplex,
    d: int,
    testset: Sequence[PerfectComplex],
    data: AsphericalityData | None = None,
) -> list[CYVerdict]:
    """Per-object check of ``Hom^n(A, F) ≅ Hom^(d-n)(F, A)^*`` via composition."""
    data = data or asphericality(F)
    if data.d != d:
        raise PreconditionError(f"F is {data.d}-spherelike, not {d}-spherelike")
    fn = cy_functional(data)
    out = []
    for A in testset:
        member = in_spherical_subcategory(A, data)
        hAF, hFA = hom(A, F), hom(F, A)
        degs = set(hAF.dims()) | {d - n for n in hFA.dims()}
        dims_ok = all(hAF.dim(n) == hFA.dim(d - n) for n in degs)
        pair_ok = dims_ok
        if dims_ok:
            for n in degs:
                left, right = hAF.basis(n), hFA.basis(d - n)
                M = [[fn(h @ g) for g in right] for h in left]
                if rank(M) != len(left):
                    pair_ok = False
                    break
        out.append(CYVerdict(member, dims_ok, pair_ok))
    return out


def hom_table(A: PerfectComplex, B: PerfectComplex) -> dict[int, int]:
    return hom(A, B).dims()

"""Reflections in Grothendieck groups and Riemann-Roch on surfaces.

For an Euler form ``χ`` and a class ``f`` with ``χ(f, f) = 2`` the map
``t_f(x) = x - χ(f, x) f`` is the shadow of a spherical twist. Surface
classes are triples ``(r, c1, ch2)`` over a Néron-Severi lattice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .exactlinalg import to_scalar

Vec = tuple


def _vec(x) -> Vec:
    return tuple(to_scalar(v) for v in x)


@dataclass(frozen=True)
class KLattice:
    """``Z^rank`` with a (possibly non-symmetric) Euler form ``χ(x, y) = x^T M y``."""

    form: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(_vec(r) for r in self.form)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("Euler form must be square")
        object.__setattr__(self, "form", rows)

    @property
    def rank(self) -> int:
        return len(self.form)

    def chi(self, x: Sequence, y: Sequence) -> Fraction:
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError("vector length does not match lattice rank")
        return sum(
            (to_scalar(x[i]) * self.form[i][j] * to_scalar(y[j])
             for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
            Fraction(0),
        )

    def basis(self) -> list[Vec]:
        n = self.rank
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def _require_spherical_class(L: KLattice, f) -> None:
    c = L.chi(f, f)
    if c != 2:
        raise PreconditionError(f"χ(f, f) = {c}, reflection needs χ(f, f) = 2")


def reflect(L: KLattice, f: Sequence, x: Sequence) -> Vec:
    """``t_f(x) = x - χ(f, x) f``."""
    _require_spherical_class(L, f)
    c = L.chi(f, x)
    return tuple(to_scalar(a) - c * to_scalar(b) for a, b in zip(x, f))


def reflection_matrix(L: KLattice, f: Sequence) -> list[list[Fraction]]:
    """Matrix of ``t_f`` (columns are images of basis vectors)."""
    cols = [reflect(L, f, e) for e in L.basis()]
    return [[col[i] for col in cols] for i in range(L.rank)]


def _matmul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]


def _identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def check_involution(L: KLattice, f: Sequence, samples: int = 10, seed: int = 0) -> bool:
    """``t_f ∘ t_f = id``: on a basis, and on ``samples`` random integer vectors."""
    _require_spherical_class(L, f)
    T = reflection_matrix(L, f)
    if _matmul(T, T) != _identity(L.rank):
        return False
    rng = random.Random(seed)
    for _ in range(samples):
        x = tuple(Fraction(rng.randint(-20, 20)) for _ in range(L.rank))
        if reflect(L, f, reflect(L, f, x)) != x:
            return False
    return True


def check_braid(L: KLattice, e: Sequence, f: Sequence) -> str:
    """``"commute"``, ``"braid"`` or ``"neither"`` from exact operator identities."""
    _require_spherical_class(L, e)
    _require_spherical_class(L, f)
    s = L.chi(e, f)
    if s != L.chi(f, e):
        raise PreconditionError("χ(e, f) != χ(f, e)")
    Te, Tf = reflection_matrix(L, e), reflection_matrix(L, f)
    if s == 0 and _matmul(Te, Tf) == _matmul(Tf, Te):
        return "commute"
    if abs(s) == 1 and _matmul(_matmul(Te, Tf), Te) == _matmul(_matmul(Tf, Te), Tf):
        return "braid"
    return "neither"


# --------------------------------------------------------------------------
# Surfaces


@dataclass(frozen=True)
class SurfaceModel:
    gram: tuple[tuple[Fraction, ...], ...]
    canonical: Vec
    chi_o: Fraction

    def __post_init__(self):
        g = tuple(_vec(r) for r in self.gram)
        n = len(g)
        if any(len(r) != n for r in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        k = _vec(self.canonical)
        if len(k) != n:
            raise ValueError("canonical class has the wrong length")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "canonical", k)
        object.__setattr__(self, "chi_o", to_scalar(self.chi_o))

    @property
    def rank(self) -> int:
        return len(self.gram)

    def dot(self, x: Sequence, y: Sequence) -> Fraction:
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError("divisor length does not match Néron-Severi rank")
        return sum(
            (to_scalar(x[i]) * self.gram[i][j] * to_scalar(y[j])
             for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    @property
    def K2(self) -> Fraction:
        return self.dot(self.canonical, self.canonical)


@dataclass(frozen=True)
class KClass:
    """Rank, first Chern class and ``ch2`` of a class on a surface."""

    r: Fraction
    c1: Vec
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", to_scalar(self.r))
        object.__setattr__(self, "c1", _vec(self.c1))
        object.__setattr__(self, "s", to_scalar(self.s))

    def __add__(self, o: KClass) -> KClass:
        return KClass(self.r + o.r, tuple(a + b for a, b in zip(self.c1, o.c1)), self.s + o.s)

    def __neg__(self) -> KClass:
        return KClass(-self.r, tuple(-a for a in self.c1), -self.s)

    def __sub__(self, o: KClass) -> KClass:
        return self + (-o)

    def scale(self, c) -> KClass:
        c = to_scalar(c)
        return KClass(c * self.r, tuple(c * a for a in self.c1), c * self.s)


def structure_sheaf(M: SurfaceModel) -> KClass:
    return KClass(1, (0,) * M.rank, 0)


def euler_pairing_surface(M: SurfaceModel, E: KClass, F: KClass) -> Fraction:
    """Riemann-Roch: ``χ(E, F)`` for classes on the surface ``M``."""
    if len(E.c1) != M.rank or len(F.c1) != M.rank:
        raise ValueError("class does not live on this surface")
    mixed = tuple(E.r * b - F.r * a for a, b in zip(E.c1, F.c1))
    return (
        E.r * F.r * M.chi_o
        + E.r * F.s
        + F.r * E.s
        - M.dot(E.c1, F.c1)
        - M.dot(M.canonical, mixed) / 2
    )


def tensor_canonical(M: SurfaceModel, F: KClass) -> KClass:
    """``F ⊗ ω``: ``(r, D + rK, s + D.K + r K^2 / 2)``."""
    K = M.canonical
    return KClass(
        F.r,
        tuple(d + F.r * k for d, k in zip(F.c1, K)),
        F.s + M.dot(F.c1, K) + F.r * M.K2 / 2,
    )


def blow_up(M: SurfaceModel) -> SurfaceModel:
    """Append an exceptional class ``R`` with ``R^2 = -1`` and set ``K' = K + R``."""
    n = M.rank
    gram = [list(r) + [Fraction(0)] for r in M.gram]
    gram.append([Fraction(0)] * n + [Fraction(-1)])
    return SurfaceModel(tuple(map(tuple, gram)), tuple(M.canonical) + (Fraction(1),), M.chi_o)


def pullback(F: KClass) -> KClass:
    """Class of ``π^* F`` on a one-point blow-up (zero component along ``R``)."""
    return KClass(F.r, tuple(F.c1) + (Fraction(0),), F.s)


def exceptional_curve(M: SurfaceModel) -> Vec:
    """The class ``R`` of the last blow-up."""
    return tuple(Fraction(int(i == M.rank - 1)) for i in range(M.rank))


def curve_sheaf_class(M: SurfaceModel, C: Sequence, k) -> KClass:
    """Class of a degree-``k`` line bundle on a smooth rational curve ``C``: ``(0, C, k - C^2/2)``."""
    return KClass(0, tuple(C), to_scalar(k) - M.dot(C, C) / 2)


def asphericality_class(M: SurfaceModel, F: KClass, d: int) -> KClass:
    """``[Q_F] = [S(F)[-d]] - [F] = (-1)^(2-d) [F ⊗ ω] - [F]``."""
    sign = 1 if (2 - d) % 2 == 0 else -1
    return tensor_canonical(M, F).scale(sign) - F


# Presets used by the examples and tests

def k3_model() -> SurfaceModel:
    """K3 with a single (-2)-curve ``C`` spanning the lattice."""
    return SurfaceModel(((-2,),), (0,), 2)


def ruled_elliptic_model() -> SurfaceModel:
    """Ruled surface over an elliptic curve with ``e = 1``; basis ``(C0, P)``."""
    return SurfaceModel(((-1, 1), (1, 0)), (-2, -1), 0)

"""Graded Hom spaces, composition, and the Serre functor.

``Hom^n(A, B)`` is the degree-``n`` cohomology of the total complex
``prod_i Hom(A^i, B^(i+n))`` with differential ``δf = d_B f - (-1)^n f d_A``.
A cochain is stored as a coefficient vector over all
``(degree, row, column, basis path)`` slots; basis classes are lifted back to
explicit :class:`~spherelike.perfcx.ChainMap` cocycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactlinalg import ONE, ZERO, Coordinates, extend_to_complement, kernel_basis
from .perfcx import ChainMap, PerfectComplex, minimize_with_maps
from .quiveralg import ModuleComplex, PathMatrix, injective_sum, resolve_complex


class _Cochains:
    """Coordinate system on ``prod_i Hom(A^i, B^(i+n))``."""

    def __init__(self, A: PerfectComplex, B: PerfectComplex, n: int):
        self.A, self.B, self.n = A, B, n
        alg = A.algebra
        self.slots: list[tuple[int, int, int, int]] = []  # (i, row, col, path)
        for i, vs in A.terms.items():
            ws = B.term(i + n)
            for c, v in enumerate(vs):
                for r, w in enumerate(ws):
                    for k in alg.paths(w, v):
                        self.slots.append((i, r, c, k))
        self.index = {s: j for j, s in enumerate(self.slots)}

    def __len__(self):
        return len(self.slots)

    def to_map(self, vec) -> ChainMap:
        comps: dict[int, dict] = {}
        for (i, r, c, k), x in zip(self.slots, vec):
            if x:
                comps.setdefault(i, {}).setdefault((r, c), {})[k] = x
        alg = self.A.algebra
        mats = {
            i: PathMatrix(alg, self.B.term(i + self.n), self.A.term(i), e) for i, e in comps.items()
        }
        return ChainMap(self.A, self.B, mats, self.n)

    def to_vector(self, f: ChainMap) -> tuple:
        vec = [ZERO] * len(self.slots)
        for i, m in f.components.items():
            for (r, c), raw in m.entries.items():
                for k, x in raw.items():
                    vec[self.index[(i, r, c, k)]] = x
        return tuple(vec)


def _differential_columns(src: _Cochains, tgt: _Cochains) -> list[tuple]:
    """Images under δ of the elementary cochains of ``src``, as vectors in ``tgt``."""
    A, B, n = src.A, src.B, src.n
    alg = A.algebra
    sign = -1 if n % 2 else 1
    cols = []
    for i, r, c, k in src.slots:
        out: dict[int, Fraction] = {}
        x = {k: ONE}
        # d_B ∘ f : entries (r2, c) in degree i, map A^i -> B^(i+n+1)
        dB = B.diffs.get(i + n)
        if dB is not None:
            for (r2, rr), raw in dB.entries.items():
                if rr == r:
                    for kk, y in alg.mul(x, raw).items():
                        j = tgt.index[(i, r2, c, kk)]
                        out[j] = out.get(j, ZERO) + y
        # -(-1)^n f ∘ d_A : entries (r, c2) in degree i-1
        dA = A.diffs.get(i - 1)
        if dA is not None:
            for (cc, c2), raw in dA.entries.items():
                if cc == c:
                    for kk, y in alg.mul(raw, x).items():
                        j = tgt.index[(i - 1, r, c2, kk)]
                        out[j] = out.get(j, ZERO) - sign * y
        vec = [ZERO] * len(tgt)
        for j, y in out.items():
            vec[j] = y
        cols.append(tuple(vec))
    return cols


def _transpose(cols: list[tuple], nrows: int) -> list[list]:
    return [[col[j] for col in cols] for j in range(nrows)]


@dataclass
class HomDegree:
    cochains: _Cochains
    cocycles: list[tuple]
    coboundaries: list[tuple]  # a basis of the image of δ
    classes: list[tuple]  # complement of the coboundaries in the cocycles

    def __post_init__(self):
        self._coords = Coordinates(self.coboundaries + self.classes, len(self.cochains)) if (
            self.coboundaries or self.classes
        ) else None

    @property
    def dim(self) -> int:
        return len(self.classes)

    def class_of(self, vec) -> tuple | None:
        """Coordinates of a cocycle modulo coboundaries; ``None`` if not a cocycle."""
        if self._coords is None:
            return () if not any(vec) else None
        c = self._coords(vec)
        if c is None:
            return None
        return tuple(c[len(self.coboundaries):])


@dataclass
class GradedHomSpace:
    """``Hom^•(A, B)`` with explicit cocycle representatives."""

    source: PerfectComplex
    target: PerfectComplex
    _degrees: dict[int, HomDegree] = field(default_factory=dict)

    @property
    def support(self) -> range:
        A, B = self.source, self.target
        if A.is_zero() or B.is_zero():
            return range(0)
        return range(min(B.terms) - max(A.terms), max(B.terms) - min(A.terms) + 1)

    def degree(self, n: int) -> HomDegree:
        if n not in self._degrees:
            self._compute(n)
        return self._degrees[n]

    def _compute(self, n: int) -> None:
        A, B = self.source, self.target
        here = _Cochains(A, B, n)
        nxt = _Cochains(A, B, n + 1)
        prv = _Cochains(A, B, n - 1)
        if len(here) == 0:
            self._degrees[n] = HomDegree(here, [], [], [])
            return
        dcols = _differential_columns(here, nxt)
        if len(nxt):
            Z = kernel_basis(_transpose(dcols, len(nxt)), len(here))
        else:
            Z = [tuple(ONE if a == b else ZERO for a in range(len(here))) for b in range(len(here))]
        Bcols = _differential_columns(prv, here) if len(prv) else []
        Bbasis = extend_to_complement([], Bcols)
        H = extend_to_complement(Bbasis, Z)
        self._degrees[n] = HomDegree(here, Z, Bbasis, H)

    def dim(self, n: int) -> int:
        if n not in self.support:
            return 0
        return self.degree(n).dim

    def dims(self) -> dict[int, int]:
        """Nonzero dimensions only, keyed by degree."""
        out = {}
        for n in self.support:
            d = self.dim(n)
            if d:
                out[n] = d
        return out

    def total_dim(self) -> int:
        return sum(self.dims().values())

    def euler(self) -> int:
        return sum((-1 if n % 2 else 1) * d for n, d in self.dims().items())

    def basis(self, n: int) -> list[ChainMap]:
        if n not in self.support:
            return []
        deg = self.degree(n)
        return [deg.cochains.to_map(v) for v in deg.classes]

    def coordinates(self, f: ChainMap) -> tuple | None:
        """Class of the cocycle ``f`` in the chosen basis, ``None`` if not a cocycle."""
        if f.degree not in self.support:
            return ()
        deg = self.degree(f.degree)
        return deg.class_of(deg.cochains.to_vector(f))

    def is_null_homotopic(self, f: ChainMap) -> bool:
        c = self.coordinates(f)
        return c is not None and not any(c)


def hom(A: PerfectComplex, B: PerfectComplex) -> GradedHomSpace:
    if A.algebra != B.algebra:
        raise ValueError("complexes over different algebras")
    return GradedHomSpace(A, B)


def compose(f: ChainMap, g: ChainMap) -> ChainMap:
    """``g ∘ f`` for ``f`` in ``Hom^m(A, B)`` and ``g`` in ``Hom^n(B, C)``."""
    if f.target.terms != g.source.terms:
        raise ValueError("shape mismatch in composition")
    return g @ f


# --------------------------------------------------------------------------
# Serre functor


def nakayama_complex(A: PerfectComplex) -> ModuleComplex:
    """Term-wise Nakayama functor: ``ν(P(v)) = I(v)``."""
    alg = A.algebra
    terms = {n: injective_sum(alg, vs) for n, vs in A.terms.items()}
    diffs = {n: tuple(d.nakayama_at_vertex(t) for t in alg.vertices) for n, d in A.diffs.items()}
    return ModuleComplex(alg, terms, diffs)


@dataclass
class SerreImage:
    """``S(A)`` with a quasi-isomorphism ``S(A) -> ν(A)`` used for traces.

    ``to_nakayama[n]`` holds one matrix per vertex, from the vertex spaces of
    ``S(A)^n`` to those of ``ν(A)^n``.
    """

    source: PerfectComplex
    complex: PerfectComplex
    to_nakayama: dict[int, tuple]
    supertrace: bool = True

    def trace_vector(self, f: ChainMap) -> Fraction:
        return self.trace(f)

    def trace(self, f: ChainMap) -> Fraction:
        """The canonical functional on ``Hom^0(A, S(A))``."""
        A = self.source
        alg = A.algebra
        total = ZERO
        for i, vs in A.terms.items():
            m = f.component(i)
            if m.is_zero() or i not in self.to_nakayama:
                continue
            sign = -1 if (self.supertrace and i % 2) else 1
            for j, v in enumerate(vs):
                # generator e_v of summand j, at vertex v of A^i
                col = 0
                for jj in range(j):
                    col += len(alg.paths(vs[jj], v))
                col += alg.position[alg.idempotent(v)]
                image = m.at_vertex(v).column(col)
                out = self.to_nakayama[i][v - 1].apply(image)
                off = 0
                for jj in range(j):
                    off += len(alg.paths(v, vs[jj]))
                total += sign * out[off + alg.position[alg.idempotent(v)]]
        return total


def serre_image(A: PerfectComplex) -> SerreImage:
    alg = A.algebra
    nu = nakayama_complex(A)
    terms, diffs, aug = resolve_complex(nu)
    P = PerfectComplex(alg, terms, diffs, check=False)
    M, _, g = minimize_with_maps(P)
    to_nu = {}
    for n, vs in M.terms.items():
        gn = g.component(n)
        per_vertex = []
        for t in alg.vertices:
            per_vertex.append(aug[n][t - 1] @ gn.at_vertex(t))
        to_nu[n] = tuple(per_vertex)
    img = SerreImage(A, M, to_nu, True)
    _calibrate_trace(img)
    return img


def _calibrate_trace(img: SerreImage) -> None:
    """Pick the sign convention under which the trace kills coboundaries."""
    A, S = img.source, img.complex
    if A.is_zero() or S.is_zero():
        return
    prv = _Cochains(A, S, -1)
    here = _Cochains(A, S, 0)
    if not len(prv) or not len(here):
        return
    cols = _differential_columns(prv, here)
    for supertrace in (True, False):
        img.supertrace = supertrace
        if all(img.trace(here.to_map(c)) == 0 for c in cols if any(c)):
            return
    raise RuntimeError("no trace on Hom(A, S A) vanishing on coboundaries")


def serre(A: PerfectComplex) -> PerfectComplex:
    return serre_image(A).complex


def pairing_matrix(left: list[ChainMap], right: list[ChainMap], trace) -> list[list[Fraction]]:
    """``[[trace(g ∘ f) for g in right] for f in left]``."""
    return [[trace(compose(f, g)) for g in right] for f in left]


def serre_pairing_check(A: PerfectComplex, B: PerfectComplex, image: SerreImage | None = None) -> bool:
    """Check ``Hom^n(A,B) x Hom^-n(B,S A) -> k`` is a perfect pairing for all ``n``."""
    if A.algebra != B.algebra:
        raise ValueError("complexes over different algebras")
    if A.is_zero() or B.is_zero():
        return True
    img = image or serre_image(A)
    SA = img.complex
    hAB = hom(A, B)
    hBS = hom(B, SA)
    from .exactlinalg import rank

    degs = set(hAB.dims()) | {-n for n in hBS.dims()}
    for n in degs:
        left = hAB.basis(n)
        right = hBS.basis(-n)
        if len(left) != len(right):
            return False
        M = pairing_matrix(left, right, img.trace)
        if rank(M) != len(left):
            return False
    return True

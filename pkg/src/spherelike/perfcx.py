"""Perfect complexes over a bound quiver algebra.

A complex is a finite list of projective summands per degree together with
:class:`~spherelike.quiveralg.PathMatrix` differentials. Shift and cone
follow one fixed sign convention::

    A[n]^i = A^(i+n),            d_{A[n]} = (-1)^n d_A
    cone(f)^n = A^(n+1) + B^n,    d = [[-d_A, 0], [f, d_B]]
"""

from __future__ import annotations

import random
from typing import Mapping, Sequence

from .exactlinalg import ONE, ZERO, Matrix
from .quiveralg import (
    BoundQuiverAlgebra,
    ModuleComplex,
    PathMatrix,
    projective_sum,
)


class PerfectComplex:
    """Bounded complex of indecomposable projectives ``P(v)``."""

    __slots__ = ("algebra", "terms", "diffs")

    def __init__(
        self,
        algebra: BoundQuiverAlgebra,
        terms: Mapping[int, Sequence[int]],
        diffs: Mapping[int, PathMatrix] | None = None,
        *,
        check: bool = True,
    ):
        self.algebra = algebra
        self.terms = {n: tuple(vs) for n, vs in sorted(terms.items()) if vs}
        clean = {}
        for n, d in (diffs or {}).items():
            if d.is_zero():
                continue
            if d.cols != self.term(n) or d.rows != self.term(n + 1):
                raise ValueError(f"differential in degree {n} has the wrong summands")
            clean[n] = d
        self.diffs = dict(sorted(clean.items()))
        if check:
            for v in (v for vs in self.terms.values() for v in vs):
                if v not in algebra.vertices:
                    raise ValueError(f"vertex {v} out of range")
            for n in self.diffs:
                if n + 1 in self.diffs and not (self.diffs[n + 1] @ self.diffs[n]).is_zero():
                    raise ValueError(f"d∘d is not zero at degree {n}")

    # -- accessors ---------------------------------------------------------

    def term(self, n: int) -> tuple[int, ...]:
        return self.terms.get(n, ())

    def diff(self, n: int) -> PathMatrix:
        d = self.diffs.get(n)
        if d is None:
            return PathMatrix.zero(self.algebra, self.term(n + 1), self.term(n))
        return d

    @property
    def degrees(self) -> list[int]:
        return list(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def graded_terms(self) -> dict[int, tuple[int, ...]]:
        """Degree -> sorted vertex labels; an isomorphism invariant of minimal models."""
        return {n: tuple(sorted(vs)) for n, vs in self.terms.items()}

    def total_rank(self) -> int:
        return sum(len(vs) for vs in self.terms.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PerfectComplex)
            and self.algebra == other.algebra
            and self.terms == other.terms
            and self.diffs == other.diffs
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{n}: " + "+".join(f"P{v}" for v in vs) for n, vs in self.terms.items()
        )
        return f"PerfectComplex({{{body}}})"

    def is_minimal(self) -> bool:
        for n, d in self.diffs.items():
            for (r, c), raw in d.entries.items():
                v = d.cols[c]
                if d.rows[r] == v and raw.get(self.algebra.idempotent(v)):
                    return False
        return True

    def to_module_complex(self) -> ModuleComplex:
        alg = self.algebra
        terms = {n: projective_sum(alg, vs) for n, vs in self.terms.items()}
        diffs = {
            n: tuple(d.at_vertex(t) for t in alg.vertices) for n, d in self.diffs.items()
        }
        return ModuleComplex(alg, terms, diffs)

    def homology_dims(self) -> dict[int, tuple[int, ...]]:
        return self.to_module_complex().homology_dims()


def zero_complex(algebra: BoundQuiverAlgebra) -> PerfectComplex:
    return PerfectComplex(algebra, {})


def stalk(algebra: BoundQuiverAlgebra, vertices: Sequence[int] | int, degree: int = 0) -> PerfectComplex:
    if isinstance(vertices, int):
        vertices = (vertices,)
    return PerfectComplex(algebra, {degree: tuple(vertices)})


class ChainMap:
    """Collection of maps ``A^i -> B^(i+degree)``.

    With ``degree = n`` this represents an element of the total Hom complex;
    it is a cocycle when ``d_B f = (-1)^n f d_A``.
    """

    __slots__ = ("source", "target", "degree", "components")

    def __init__(self, source: PerfectComplex, target: PerfectComplex, components=None, degree: int = 0):
        self.source = source
        self.target = target
        self.degree = degree
        comps = {}
        for i, m in (components or {}).items():
            if m.is_zero():
                continue
            if m.cols != source.term(i) or m.rows != target.term(i + degree):
                raise ValueError(f"chain map component {i} has the wrong summands")
            comps[i] = m
        self.components = dict(sorted(comps.items()))

    def component(self, i: int) -> PathMatrix:
        m = self.components.get(i)
        if m is None:
            return PathMatrix.zero(self.source.algebra, self.target.term(i + self.degree), self.source.term(i))
        return m

    def is_zero(self) -> bool:
        return not self.components

    def is_cocycle(self) -> bool:
        sign = -1 if self.degree % 2 else 1
        A, B = self.source, self.target
        degs = set(A.terms) | {i - 1 for i in A.terms}
        for i in degs:
            lhs = B.diff(i + self.degree) @ self.component(i)
            rhs = self.component(i + 1) @ A.diff(i)
            if not (lhs - rhs.scale(sign)).is_zero():
                return False
        return True

    def __matmul__(self, other: ChainMap) -> ChainMap:
        """``self ∘ other`` (apply ``other`` first)."""
        if other.target.terms != self.source.terms:
            raise ValueError("composing chain maps with mismatched complexes")
        comps = {}
        for i, m in other.components.items():
            n = self.components.get(i + other.degree)
            if n is not None:
                comps[i] = n @ m
        return ChainMap(other.source, self.target, comps, other.degree + self.degree)

    def __add__(self, other: ChainMap) -> ChainMap:
        if other.degree != self.degree:
            raise ValueError("adding chain maps of different degrees")
        comps = dict(self.components)
        for i, m in other.components.items():
            comps[i] = comps[i] + m if i in comps else m
        return ChainMap(self.source, self.target, comps, self.degree)

    def scale(self, c) -> ChainMap:
        return ChainMap(
            self.source, self.target, {i: m.scale(c) for i, m in self.components.items()}, self.degree
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self) -> str:
        return f"ChainMap(degree={self.degree}, components={sorted(self.components)})"


def identity_map(A: PerfectComplex) -> ChainMap:
    return ChainMap(A, A, {n: PathMatrix.identity(A.algebra, vs) for n, vs in A.terms.items()})


def zero_map(A: PerfectComplex, B: PerfectComplex, degree: int = 0) -> ChainMap:
    return ChainMap(A, B, {}, degree)


def shift(A: PerfectComplex, n: int) -> PerfectComplex:
    """``A[n]``: degrees move down by ``n``, differentials pick up ``(-1)^n``."""
    sign = -1 if n % 2 else 1
    return PerfectComplex(
        A.algebra,
        {i - n: vs for i, vs in A.terms.items()},
        {i - n: d.scale(sign) for i, d in A.diffs.items()},
        check=False,
    )


def shift_map(f: ChainMap, n: int) -> ChainMap:
    """``f[n]`` between the shifted complexes (components reindexed, no sign)."""
    return ChainMap(
        shift(f.source, n),
        shift(f.target, n),
        {i - n: m for i, m in f.components.items()},
        f.degree,
    )


def as_degree_zero(f: ChainMap) -> ChainMap:
    """View a degree-``n`` cocycle ``A -> B`` as a chain map ``A -> B[n]``."""
    return ChainMap(f.source, shift(f.target, f.degree), dict(f.components), 0)


def direct_sum(*complexes: PerfectComplex) -> PerfectComplex:
    return direct_sum_with_maps(*complexes)[0]


def direct_sum_with_maps(*complexes: PerfectComplex):
    """``(S, inclusions, projections)`` for the direct sum of ``complexes``."""
    if not complexes:
        raise ValueError("direct sum of nothing needs an algebra; use zero_complex")
    alg = complexes[0].algebra
    for c in complexes:
        if c.algebra != alg:
            raise ValueError("complexes over different algebras")
    degs = sorted({n for c in complexes for n in c.terms})
    terms = {n: tuple(v for c in complexes for v in c.term(n)) for n in degs}
    diffs = {}
    for n in degs:
        blocks = [
            [c.diff(n) if a == b else None for b, c in enumerate(complexes)]
            for a, _ in enumerate(complexes)
        ]
        diffs[n] = PathMatrix.block(
            alg, blocks, [c.term(n + 1) for c in complexes], [c.term(n) for c in complexes]
        )
    S = PerfectComplex(alg, terms, diffs, check=False)
    incs, projs = [], []
    for k, c in enumerate(complexes):
        inc, proj = {}, {}
        for n in c.terms:
            idx = []
            off = 0
            for j, other in enumerate(complexes):
                if j == k:
                    idx = list(range(off, off + len(other.term(n))))
                off += len(other.term(n))
            ident = PathMatrix.identity(alg, S.term(n))
            inc[n] = ident.select(list(range(len(S.term(n)))), idx)
            proj[n] = ident.select(idx, list(range(len(S.term(n)))))
        incs.append(ChainMap(c, S, inc))
        projs.append(ChainMap(S, c, proj))
    return S, incs, projs


def cone(f: ChainMap) -> PerfectComplex:
    return cone_with_maps(f)[0]


def cone_with_maps(f: ChainMap):
    """``(C, i, p)`` with ``i: B -> C`` and ``p: C -> A[1]`` the triangle maps."""
    if f.degree != 0:
        raise ValueError("cone needs a degree-0 chain map")
    A, B = f.source, f.target
    alg = A.algebra
    degs = sorted({n - 1 for n in A.terms} | set(B.terms))
    terms = {n: A.term(n + 1) + B.term(n) for n in degs}
    diffs = {}
    for n in degs:
        blocks = [
            [-A.diff(n + 1), None],
            [f.component(n + 1), B.diff(n)],
        ]
        diffs[n] = PathMatrix.block(
            alg, blocks, [A.term(n + 2), B.term(n + 1)], [A.term(n + 1), B.term(n)]
        )
    C = PerfectComplex(alg, terms, diffs, check=False)
    inc, proj = {}, {}
    for n in degs:
        ident = PathMatrix.identity(alg, C.term(n))
        na = len(A.term(n + 1))
        nc = len(C.term(n))
        if B.term(n):
            inc[n] = ident.select(list(range(nc)), list(range(na, nc)))
        if na:
            proj[n] = ident.select(list(range(na)), list(range(nc)))
    return C, ChainMap(B, C, inc), ChainMap(C, shift(A, 1), proj)


# --------------------------------------------------------------------------
# Minimal models


def _local_inverse(alg: BoundQuiverAlgebra, v: int, raw: dict) -> dict:
    """Inverse of ``c e_v + r`` (``r`` radical) in the local ring ``e_v A e_v``."""
    ev = alg.idempotent(v)
    c = raw[ev]
    r = {k: -x / c for k, x in raw.items() if k != ev}
    inv = {ev: ONE}
    term = {ev: ONE}
    while True:
        term = alg.mul(term, r)
        if not term:
            break
        for k, x in term.items():
            inv[k] = inv.get(k, ZERO) + x
    return {k: x / c for k, x in inv.items() if x}


def _find_pivot(C: PerfectComplex):
    alg = C.algebra
    for n, d in C.diffs.items():
        for (r, c), raw in sorted(d.entries.items()):
            v = d.cols[c]
            if d.rows[r] == v and raw.get(alg.idempotent(v)):
                return n, r, c
    return None


def _cancel(C: PerfectComplex, n: int, r: int, c: int, track: bool):
    alg = C.algebra
    d = C.diff(n)
    src, tgt = C.term(n), C.term(n + 1)
    v = src[c]
    keep_c = [i for i in range(len(src)) if i != c]
    keep_r = [j for j in range(len(tgt)) if j != r]
    phi_inv = PathMatrix(alg, (v,), (v,), {(0, 0): _local_inverse(alg, v, d.entries[(r, c)])})
    beta = d.select([r], keep_c)
    gamma = d.select(keep_r, [c])
    delta = d.select(keep_r, keep_c)
    g_top = -(phi_inv @ beta)  # X -> P_c
    gamma_phi_inv = gamma @ phi_inv  # P_r -> Y
    terms = dict(C.terms)
    terms[n] = tuple(src[i] for i in keep_c)
    terms[n + 1] = tuple(tgt[j] for j in keep_r)
    diffs = dict(C.diffs)
    diffs[n] = delta + gamma @ g_top
    if n - 1 in diffs:
        prev = diffs[n - 1]
        diffs[n - 1] = prev.select(keep_c, list(range(len(prev.cols))))
    if n + 1 in diffs:
        nxt = diffs[n + 1]
        diffs[n + 1] = nxt.select(list(range(len(nxt.rows))), keep_r)
    D = PerfectComplex(alg, terms, diffs, check=False)
    if not track:
        return D, None, None
    # f: C -> D and g: D -> C, mutually inverse up to homotopy
    f_comp, g_comp = {}, {}
    for k, vs in C.terms.items():
        if k == n:
            ident = PathMatrix.identity(alg, src)
            f_comp[k] = ident.select(keep_c, list(range(len(src))))
            blocks_rows = list(range(len(src)))
            g = ident.select(blocks_rows, keep_c)
            # add -phi^{-1} beta into row c
            extra = {(c, j): raw for (_, j), raw in g_top.entries.items()}
            g_comp[k] = g + PathMatrix(alg, src, D.term(n), extra)
        elif k == n + 1:
            ident = PathMatrix.identity(alg, tgt)
            f = ident.select(keep_r, list(range(len(tgt))))
            extra = {(i, r): raw for (i, _), raw in (-gamma_phi_inv).entries.items()}
            f_comp[k] = f + PathMatrix(alg, D.term(n + 1), tgt, extra)
            g_comp[k] = ident.select(list(range(len(tgt))), keep_r)
        else:
            ident = PathMatrix.identity(alg, vs)
            f_comp[k] = ident
            g_comp[k] = ident
    return D, ChainMap(C, D, f_comp), ChainMap(D, C, g_comp)


def minimize(A: PerfectComplex) -> PerfectComplex:
    """Cancel contractible summand pairs until every differential entry is radical."""
    C = A
    while True:
        piv = _find_pivot(C)
        if piv is None:
            return C
        C, _, _ = _cancel(C, *piv, track=False)


def minimize_with_maps(A: PerfectComplex):
    """``(M, f, g)`` with ``f: A -> M`` and ``g: M -> A`` homotopy inverse."""
    C = A
    f = identity_map(A)
    g = identity_map(A)
    while True:
        piv = _find_pivot(C)
        if piv is None:
            return C, f, g
        C, fk, gk = _cancel(C, *piv, track=True)
        f = fk @ f
        g = g @ gk


# --------------------------------------------------------------------------
# Isomorphism in the homotopy category


def _top_invertible(f: ChainMap) -> bool:
    """Whether every component of ``f`` is invertible modulo the radical."""
    A, B = f.source, f.target
    alg = A.algebra
    for n in set(A.terms) | set(B.terms):
        src, tgt = A.term(n), B.term(n)
        if sorted(src) != sorted(tgt):
            return False
        m = f.component(n)
        for v in set(src):
            ci = [i for i, x in enumerate(src) if x == v]
            rj = [j for j, x in enumerate(tgt) if x == v]
            ev = alg.idempotent(v)
            grid = [[m.entries.get((j, i), {}).get(ev, ZERO) for i in ci] for j in rj]
            if Matrix(grid, len(ci)).rank() != len(ci):
                return False
    return True


def is_isomorphic(A: PerfectComplex, B: PerfectComplex, seed: int = 0, trials: int = 8) -> bool:
    """Randomized search for a homotopy equivalence ``A -> B``.

    A ``True`` answer is certified by a chain map whose cone is contractible.
    """
    if A.algebra != B.algebra:
        raise ValueError("complexes over different algebras")
    mA, mB = minimize(A), minimize(B)
    if mA.graded_terms() != mB.graded_terms():
        return False
    if mA.is_zero():
        return True
    from .homcx import hom

    basis = hom(mA, mB).basis(0)
    if not basis:
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        f = zero_map(mA, mB)
        for b in basis:
            f = f + b.scale(rng.randint(-10, 10))
        if not _top_invertible(f):
            continue
        if minimize(cone(f)).is_zero():
            return True
    return False

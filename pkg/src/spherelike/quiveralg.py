"""Bound quiver algebras, their modules, and projective models of complexes.

Conventions (fixed everywhere in the package):

* paths compose like functions: ``q * p`` means "first ``p``, then ``q``";
* vertices are labelled ``1..n``;
* the projective ``P(v)`` has basis the paths with source ``v``; at vertex
  ``t`` of the underlying representation sit the paths ``v -> t``;
* a morphism ``P(v) -> P(w)`` is given by a path polynomial ``x`` from ``w``
  to ``v``; it sends a basis path ``p`` to ``p * x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactlinalg import (
    ONE,
    ZERO,
    Matrix,
    extend_to_complement,
    kernel_basis,
    to_scalar,
)

Raw = dict  # dict[int, Fraction]: basis index -> coefficient, nonzero only


class AlgebraError(ValueError):
    """Raised when a quiver presentation cannot be accepted."""


class ResolutionError(RuntimeError):
    """A resolution ran past the length allowed by the global dimension."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if self.vertices < 0:
            raise AlgebraError("negative vertex count")
        names = set()
        for a in self.arrows:
            if not (1 <= a.source <= self.vertices and 1 <= a.target <= self.vertices):
                raise AlgebraError(f"arrow {a.name!r} has a vertex out of range")
            if a.name in names:
                raise AlgebraError(f"duplicate arrow name {a.name!r}")
            if a.name.startswith("e") and a.name[1:].isdigit():
                raise AlgebraError(f"arrow name {a.name!r} clashes with idempotent syntax")
            names.add(a.name)

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)


@dataclass(frozen=True, order=True)
class Path:
    """A path in the quiver; ``arrows`` holds arrow indices in traversal order."""

    source: int
    target: int
    arrows: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)


def path_from_names(quiver: Quiver, names: Sequence[str], vertex: int | None = None) -> Path:
    """Path for the written product ``names[0] * names[1] * ...`` (rightmost first)."""
    if not names:
        if vertex is None:
            raise AlgebraError("trivial path needs a vertex")
        return Path(vertex, vertex, ())
    idx = [quiver.arrow_index(n) for n in reversed(names)]
    for a, b in zip(idx, idx[1:]):
        if quiver.arrows[a].target != quiver.arrows[b].source:
            raise AlgebraError(f"non-composable product {'*'.join(names)}")
    return Path(quiver.arrows[idx[0]].source, quiver.arrows[idx[-1]].target, tuple(idx))


def format_path(quiver: Quiver, p: Path) -> str:
    if not p.arrows:
        return f"e{p.source}"
    return "*".join(quiver.arrows[i].name for i in reversed(p.arrows))


@dataclass(frozen=True)
class FreePathPolynomial:
    """Element of the free path algebra; used for relations before reduction."""

    terms: tuple[tuple[Path, Fraction], ...]

    @classmethod
    def from_dict(cls, d: Mapping[Path, object]) -> FreePathPolynomial:
        items = sorted((p, to_scalar(c)) for p, c in d.items() if to_scalar(c))
        return cls(tuple(items))

    @property
    def endpoints(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        return (self.terms[0][0].source, self.terms[0][0].target)


def _paths_from(quiver: Quiver, maxlen: int) -> list[Path]:
    out = [Path(v, v, ()) for v in range(1, quiver.vertices + 1)]
    frontier = list(out)
    for _ in range(maxlen):
        nxt = []
        for p in frontier:
            for i, a in enumerate(quiver.arrows):
                if a.source == p.target:
                    nxt.append(Path(p.source, a.target, p.arrows + (i,)))
        out.extend(nxt)
        frontier = nxt
    return out


class BoundQuiverAlgebra:
    """Finite-dimensional quotient ``kQ/I`` with a basis of paths in normal form."""

    def __init__(self, quiver, relations, basis, normal_forms, truncation):
        self.quiver: Quiver = quiver
        self.relations: tuple[FreePathPolynomial, ...] = tuple(relations)
        self.basis: tuple[Path, ...] = tuple(basis)
        self.index = {p: i for i, p in enumerate(self.basis)}
        self._nf: dict[Path, Raw] = normal_forms
        self.truncation = truncation  # every path of this length vanishes
        n = quiver.vertices
        self.between: dict[tuple[int, int], tuple[int, ...]] = {
            (s, t): () for s in range(1, n + 1) for t in range(1, n + 1)
        }
        for i, p in enumerate(self.basis):
            self.between[(p.source, p.target)] += (i,)
        self.position = {}
        for (s, t), idxs in self.between.items():
            for k, i in enumerate(idxs):
                self.position[i] = k
        self._mul: dict[tuple[int, int], Raw] = {}
        for i, q in enumerate(self.basis):
            for j, p in enumerate(self.basis):
                if p.target == q.source:
                    self._mul[(i, j)] = self.reduce_path(
                        Path(p.source, q.target, p.arrows + q.arrows)
                    )
        self.gldim: int | None = None
        self._cache: dict = {}

    # -- presentation ------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.quiver.vertices + 1)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def key(self):
        return (self.quiver, self.relations)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoundQuiverAlgebra) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return (
            f"BoundQuiverAlgebra(vertices={self.quiver.vertices}, "
            f"arrows={[a.name for a in self.quiver.arrows]}, dim={self.dimension}, "
            f"gldim={self.gldim})"
        )

    def idempotent(self, v: int) -> int:
        return self.index[Path(v, v, ())]

    def is_idempotent(self, i: int) -> bool:
        return not self.basis[i].arrows

    def paths(self, s: int, t: int) -> tuple[int, ...]:
        return self.between[(s, t)]

    def reduce_path(self, p: Path) -> Raw:
        if p.length >= self.truncation:
            return {}
        return dict(self._nf[p])

    def reduce(self, f: FreePathPolynomial) -> Raw:
        out: Raw = {}
        for p, c in f.terms:
            for k, x in self.reduce_path(p).items():
                out[k] = out.get(k, ZERO) + c * x
        return {k: x for k, x in out.items() if x}

    def mul(self, x: Raw, y: Raw) -> Raw:
        """``x * y`` (first ``y``, then ``x``) on raw coefficient dicts."""
        out: Raw = {}
        table = self._mul
        for a, ca in x.items():
            for b, cb in y.items():
                prod = table.get((a, b))
                if not prod:
                    continue
                c = ca * cb
                for k, z in prod.items():
                    out[k] = out.get(k, ZERO) + c * z
        return {k: v for k, v in out.items() if v}

    def element(self, raw: Raw, source: int, target: int) -> PathPolynomial:
        return PathPolynomial(self, source, target, raw)

    def arrow_element(self, name: str) -> PathPolynomial:
        a = self.quiver.arrows[self.quiver.arrow_index(name)]
        p = Path(a.source, a.target, (self.quiver.arrow_index(name),))
        return PathPolynomial(self, a.source, a.target, self.reduce_path(p))

    def e(self, v: int) -> PathPolynomial:
        return PathPolynomial(self, v, v, {self.idempotent(v): ONE})

    # -- module-level actions (cached) ------------------------------------

    def left_action(self, arrow: int, w: int) -> Matrix:
        """Matrix of ``p -> arrow * p`` from paths ``w->s`` to paths ``w->t``."""
        key = ("left", arrow, w)
        if key not in self._cache:
            a = self.quiver.arrows[arrow]
            src = self.paths(w, a.source)
            tgt = self.paths(w, a.target)
            ap = self.reduce_path(Path(a.source, a.target, (arrow,)))
            cols = []
            for i in src:
                prod = self.mul(ap, {i: ONE})
                cols.append([prod.get(k, ZERO) for k in tgt])
            self._cache[key] = Matrix.from_columns(cols, len(tgt))
        return self._cache[key]

    def right_action(self, x: Raw, w: int, v: int, t: int) -> Matrix:
        """Matrix of ``p -> p * x`` from paths ``v->t`` to paths ``w->t`` (``x``: w->v)."""
        src = self.paths(v, t)
        tgt = self.paths(w, t)
        cols = []
        for i in src:
            prod = self.mul({i: ONE}, x)
            cols.append([prod.get(k, ZERO) for k in tgt])
        return Matrix.from_columns(cols, len(tgt))

    def format(self, raw: Raw, source: int | None = None) -> str:
        if not raw:
            return "0"
        parts = []
        for k in sorted(raw, key=lambda i: (self.basis[i].length, self.basis[i].arrows)):
            c = raw[k]
            name = format_path(self.quiver, self.basis[k])
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{c}*{name}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def build_algebra(
    quiver: Quiver,
    relations: Iterable[FreePathPolynomial] = (),
    *,
    max_length: int = 40,
    max_paths: int = 50000,
) -> BoundQuiverAlgebra:
    """Present ``kQ/I`` by normal-form paths and compute its global dimension.

    Raises :class:`AlgebraError` for inadmissible relations, for infinite
    dimension (no truncation found up to ``max_length``) and for infinite
    global dimension (a simple whose resolution runs past ``dim A`` steps).
    """
    rels = []
    for r in relations:
        if not r.terms:
            continue
        ends = {(p.source, p.target) for p, _ in r.terms}
        if len(ends) != 1:
            raise AlgebraError("relation mixes non-parallel paths")
        if min(p.length for p, _ in r.terms) < 2:
            raise AlgebraError("inadmissible relation: terms of length < 2")
        rels.append(r)

    for L in range(1, max_length + 1):
        paths = _paths_from(quiver, L)
        if len(paths) > max_paths:
            break
        nf = _truncated_normal_forms(quiver, rels, paths, L)
        if nf is not None:
            basis = sorted(
                (p for p, raw in nf.items() if raw == {p: ONE}),
                key=lambda p: (p.length, p.source, p.target, p.arrows),
            )
            index = {p: i for i, p in enumerate(basis)}
            normal_forms = {
                p: {index[q]: c for q, c in raw.items()} for p, raw in nf.items()
            }
            alg = BoundQuiverAlgebra(quiver, rels, basis, normal_forms, L)
            alg.gldim = _global_dimension(alg)
            return alg
    raise AlgebraError(
        "algebra appears infinite-dimensional: relations do not kill all long paths"
    )


def _truncated_normal_forms(quiver, rels, paths, L):
    """Normal forms in ``kQ/(I + J_{L+1})``; ``None`` unless length-L paths vanish."""
    by_pair: dict[tuple[int, int], list[Path]] = {}
    for p in paths:
        by_pair.setdefault((p.source, p.target), []).append(p)
    from_vertex: dict[int, list[Path]] = {}
    to_vertex: dict[int, list[Path]] = {}
    for p in paths:
        from_vertex.setdefault(p.source, []).append(p)
        to_vertex.setdefault(p.target, []).append(p)

    gens: dict[tuple[int, int], list[dict[Path, Fraction]]] = {}
    for r in rels:
        s, t = r.endpoints
        rmin = min(p.length for p, _ in r.terms)
        for v in to_vertex.get(s, []):
            for u in from_vertex.get(t, []):
                if v.length + u.length + rmin > L:
                    continue
                g = {}
                for p, c in r.terms:
                    q = Path(v.source, u.target, v.arrows + p.arrows + u.arrows)
                    if q.length <= L:
                        g[q] = g.get(q, ZERO) + c
                g = {q: c for q, c in g.items() if c}
                if g:
                    gens.setdefault((v.source, u.target), []).append(g)

    nf: dict[Path, dict[Path, Fraction]] = {}
    for pair, monos in by_pair.items():
        order = sorted(monos, key=lambda p: (-p.length, p.arrows))
        col = {p: i for i, p in enumerate(order)}
        rows = []
        for g in gens.get(pair, []):
            row = [ZERO] * len(order)
            for q, c in g.items():
                row[col[q]] = c
            rows.append(row)
        from .exactlinalg import rref

        reduced, pivots = rref(rows, len(order))
        pivset = set(pivots)
        for row, pc in zip(reduced, pivots):
            p = order[pc]
            nf[p] = {order[j]: -row[j] for j in range(len(order)) if j not in pivset and row[j]}
        for j, p in enumerate(order):
            if j not in pivset:
                nf[p] = {p: ONE}
    for p, raw in nf.items():
        if p.length == L and raw:
            return None
    return nf


def _global_dimension(alg: BoundQuiverAlgebra) -> int:
    bound = max(alg.dimension, 1)
    gl = 0
    for v in alg.vertices:
        mc = ModuleComplex(alg, {0: simple(alg, v)}, {})
        try:
            terms, _, _ = resolve_complex(mc, max_extra=bound)
        except ResolutionError:
            raise AlgebraError(
                f"infinite global dimension: resolution of simple S({v}) exceeds {bound} steps"
            ) from None
        if terms:
            gl = max(gl, -min(terms))
    return gl


# --------------------------------------------------------------------------
# Path polynomials and matrices of them


class PathPolynomial:
    """Reduced linear combination of parallel basis paths."""

    __slots__ = ("algebra", "source", "target", "raw")

    def __init__(self, algebra: BoundQuiverAlgebra, source: int, target: int, raw: Raw):
        for k in raw:
            p = algebra.basis[k]
            if (p.source, p.target) != (source, target):
                raise ValueError("path polynomial mixes non-parallel paths")
        self.algebra = algebra
        self.source = source
        self.target = target
        self.raw = {k: to_scalar(c) for k, c in raw.items() if c}

    def __mul__(self, other):
        if isinstance(other, PathPolynomial):
            if other.target != self.source:
                if not self.raw or not other.raw:
                    return PathPolynomial(self.algebra, other.source, self.target, {})
                raise ValueError("non-composable path polynomials")
            return PathPolynomial(
                self.algebra, other.source, self.target, self.algebra.mul(self.raw, other.raw)
            )
        c = to_scalar(other)
        return PathPolynomial(self.algebra, self.source, self.target, {k: c * x for k, x in self.raw.items()})

    def __rmul__(self, other):
        return self * other

    def __add__(self, other: PathPolynomial) -> PathPolynomial:
        if (other.source, other.target) != (self.source, self.target):
            raise ValueError("adding non-parallel path polynomials")
        out = dict(self.raw)
        for k, c in other.raw.items():
            out[k] = out.get(k, ZERO) + c
        return PathPolynomial(self.algebra, self.source, self.target, out)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __bool__(self):
        return bool(self.raw)

    def __eq__(self, other):
        return (
            isinstance(other, PathPolynomial)
            and (self.source, self.target) == (other.source, other.target)
            and self.raw == other.raw
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.raw.items()))))

    def __repr__(self):
        return f"PathPolynomial({self})"

    def __str__(self):
        return self.algebra.format(self.raw)

    def identity_coefficient(self) -> Fraction:
        if self.source != self.target:
            return ZERO
        return self.raw.get(self.algebra.idempotent(self.source), ZERO)


def _add_raw(x: Raw, y: Raw, c=ONE) -> Raw:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, ZERO) + c * v
    return {k: v for k, v in out.items() if v}


class PathMatrix:
    """Morphism ``⊕ P(cols[i]) -> ⊕ P(rows[j])``.

    Entry ``(j, i)`` is a raw path polynomial from ``rows[j]`` to ``cols[i]``.
    ``N @ M`` is the composite "first M, then N".
    """

    __slots__ = ("algebra", "rows", "cols", "entries")

    def __init__(self, algebra, rows, cols, entries: Mapping[tuple[int, int], Raw] | None = None):
        self.algebra = algebra
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        clean = {}
        for (r, c), raw in (entries or {}).items():
            raw = {k: v for k, v in raw.items() if v}
            if raw:
                clean[(r, c)] = raw
        self.entries = clean

    @classmethod
    def zero(cls, algebra, rows, cols):
        return cls(algebra, rows, cols, {})

    @classmethod
    def identity(cls, algebra, vertices):
        return cls(
            algebra,
            vertices,
            vertices,
            {(i, i): {algebra.idempotent(v): ONE} for i, v in enumerate(vertices)},
        )

    @classmethod
    def from_polys(cls, algebra, rows, cols, grid: Sequence[Sequence]):
        entries = {}
        for j, row in enumerate(grid):
            for i, x in enumerate(row):
                if isinstance(x, PathPolynomial):
                    if x.raw and (x.source, x.target) != (rows[j], cols[i]):
                        raise ValueError(
                            f"entry ({j},{i}) must go from vertex {rows[j]} to {cols[i]}"
                        )
                    entries[(j, i)] = dict(x.raw)
                elif x:
                    entries[(j, i)] = dict(x)
        return cls(algebra, rows, cols, entries)

    def __getitem__(self, rc) -> PathPolynomial:
        r, c = rc
        return PathPolynomial(self.algebra, self.rows[r], self.cols[c], self.entries.get((r, c), {}))

    def __eq__(self, other):
        return (
            isinstance(other, PathMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"PathMatrix({len(self.rows)}x{len(self.cols)}, {len(self.entries)} nonzero)"

    def is_zero(self) -> bool:
        return not self.entries

    def __matmul__(self, other: PathMatrix) -> PathMatrix:
        if self.cols != other.rows:
            raise ValueError("composing path matrices with mismatched summands")
        alg = self.algebra
        by_row: dict[int, list[tuple[int, Raw]]] = {}
        for (k, j), raw in self.entries.items():
            by_row.setdefault(j, []).append((k, raw))
        out: dict[tuple[int, int], Raw] = {}
        for (j, i), m in other.entries.items():
            for k, n in by_row.get(j, ()):
                prod = alg.mul(m, n)
                if prod:
                    out[(k, i)] = _add_raw(out.get((k, i), {}), prod)
        return PathMatrix(alg, self.rows, other.cols, out)

    def __add__(self, other: PathMatrix) -> PathMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("adding path matrices of different shape")
        out = dict(self.entries)
        for rc, raw in other.entries.items():
            out[rc] = _add_raw(out.get(rc, {}), raw)
        return PathMatrix(self.algebra, self.rows, self.cols, out)

    def scale(self, c) -> PathMatrix:
        c = to_scalar(c)
        if not c:
            return PathMatrix.zero(self.algebra, self.rows, self.cols)
        return PathMatrix(
            self.algebra,
            self.rows,
            self.cols,
            {rc: {k: c * v for k, v in raw.items()} for rc, raw in self.entries.items()},
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def select(self, rows: Sequence[int], cols: Sequence[int]) -> PathMatrix:
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        out = {}
        for (r, c), raw in self.entries.items():
            if r in rpos and c in cpos:
                out[(rpos[r], cpos[c])] = raw
        return PathMatrix(
            self.algebra, [self.rows[r] for r in rows], [self.cols[c] for c in cols], out
        )

    @staticmethod
    def block(algebra, blocks: Sequence[Sequence[PathMatrix | None]], rows_list, cols_list):
        """Assemble from a grid of blocks; ``None`` is a zero block."""
        rows = [v for rs in rows_list for v in rs]
        cols = [v for cs in cols_list for v in cs]
        out = {}
        roff = 0
        for bi, rs in enumerate(rows_list):
            coff = 0
            for bj, cs in enumerate(cols_list):
                b = blocks[bi][bj]
                if b is not None:
                    if b.rows != tuple(rs) or b.cols != tuple(cs):
                        raise ValueError("block shape mismatch")
                    for (r, c), raw in b.entries.items():
                        out[(r + roff, c + coff)] = raw
                coff += len(cs)
            roff += len(rs)
        return PathMatrix(algebra, rows, cols, out)

    def at_vertex(self, t: int) -> Matrix:
        """The linear map on the vertex-``t`` spaces of the underlying representations."""
        alg = self.algebra
        row_off, off = [], 0
        for w in self.rows:
            row_off.append(off)
            off += len(alg.paths(w, t))
        nrows = off
        cols = []
        for i, v in enumerate(self.cols):
            src = alg.paths(v, t)
            block_cols = [[ZERO] * nrows for _ in src]
            for (j, ii), raw in self.entries.items():
                if ii != i:
                    continue
                w = self.rows[j]
                for a, p in enumerate(src):
                    prod = alg.mul({p: ONE}, raw)
                    for k, c in prod.items():
                        block_cols[a][row_off[j] + alg.position[k]] += c
            cols.extend(block_cols)
        return Matrix.from_columns(cols, nrows)

    def nakayama_at_vertex(self, t: int) -> Matrix:
        """Vertex-``t`` map of the Nakayama image ``⊕ I(cols) -> ⊕ I(rows)``."""
        alg = self.algebra
        row_off, off = [], 0
        for w in self.rows:
            row_off.append(off)
            off += len(alg.paths(t, w))
        nrows = off
        col_off, coff = [], 0
        for v in self.cols:
            col_off.append(coff)
            coff += len(alg.paths(t, v))
        grid = [[ZERO] * coff for _ in range(nrows)]
        for (j, i), raw in self.entries.items():
            w = self.rows[j]
            for a, y in enumerate(alg.paths(t, w)):
                prod = alg.mul(raw, {y: ONE})
                for k, c in prod.items():
                    grid[row_off[j] + a][col_off[i] + alg.position[k]] += c
        return Matrix(grid, coff)


# --------------------------------------------------------------------------
# Representations


@dataclass(frozen=True)
class Representation:
    """Finite-dimensional module: a space per vertex and a matrix per arrow."""

    algebra: BoundQuiverAlgebra
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        alg = self.algebra
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.dims) != alg.quiver.vertices:
            raise ValueError("one dimension per vertex required")
        if len(self.maps) != len(alg.quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for a, m in zip(alg.quiver.arrows, self.maps):
            if m.shape != (self.dims[a.target - 1], self.dims[a.source - 1]):
                raise ValueError(f"matrix for arrow {a.name!r} has the wrong shape")
        for r in alg.relations:
            s, t = r.endpoints
            acc = Matrix.zeros(self.dims[t - 1], self.dims[s - 1])
            for p, c in r.terms:
                acc = acc + self.path_matrix(p).scale(c)
            if not acc.is_zero():
                raise ValueError("representation violates a relation")

    @classmethod
    def from_arrow_maps(cls, algebra, dims, maps: Mapping[str, Sequence[Sequence]]):
        mats = []
        for a in algebra.quiver.arrows:
            rows, cols = dims[a.target - 1], dims[a.source - 1]
            if a.name in maps:
                mats.append(Matrix(maps[a.name], cols) if rows else Matrix([], cols))
            else:
                mats.append(Matrix.zeros(rows, cols))
        return cls(algebra, tuple(dims), tuple(mats))

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        return self.dims

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)

    def path_matrix(self, p: Path) -> Matrix:
        m = Matrix.identity(self.dims[p.source - 1])
        for i in p.arrows:
            m = self.maps[i] @ m
        return m

    def basis_path_matrix(self, k: int) -> Matrix:
        return self.path_matrix(self.algebra.basis[k])


def projective(algebra: BoundQuiverAlgebra, v: int) -> Representation:
    """``P(v)``: paths ``v -> w`` at vertex ``w``, arrows acting by post-composition."""
    return projective_sum(algebra, (v,))


def projective_sum(algebra, vertices: Sequence[int]) -> Representation:
    dims = [sum(len(algebra.paths(w, t)) for w in vertices) for t in algebra.vertices]
    maps = []
    for ai, a in enumerate(algebra.quiver.arrows):
        blocks = [algebra.left_action(ai, w) for w in vertices]
        maps.append(_block_diag(blocks, dims[a.target - 1], dims[a.source - 1]))
    return Representation(algebra, tuple(dims), tuple(maps))


def injective(algebra: BoundQuiverAlgebra, v: int) -> Representation:
    """``I(v) = ν P(v)``: the dual of paths ``w -> v`` at vertex ``w``."""
    return injective_sum(algebra, (v,))


def injective_sum(algebra, vertices: Sequence[int]) -> Representation:
    dims = [sum(len(algebra.paths(t, w)) for w in vertices) for t in algebra.vertices]
    maps = []
    for ai, a in enumerate(algebra.quiver.arrows):
        s, t = a.source, a.target
        apath = algebra.reduce_path(Path(s, t, (ai,)))
        blocks = []
        for w in vertices:
            src = algebra.paths(s, w)
            tgt = algebra.paths(t, w)
            grid = []
            for q in tgt:
                prod = algebra.mul({q: ONE}, apath)
                grid.append([prod.get(p, ZERO) for p in src])
            blocks.append(Matrix(grid, len(src)))
        maps.append(_block_diag(blocks, dims[t - 1], dims[s - 1]))
    return Representation(algebra, tuple(dims), tuple(maps))


def simple(algebra: BoundQuiverAlgebra, v: int) -> Representation:
    dims = tuple(1 if t == v else 0 for t in algebra.vertices)
    maps = tuple(
        Matrix.zeros(dims[a.target - 1], dims[a.source - 1]) for a in algebra.quiver.arrows
    )
    return Representation(algebra, dims, maps)


def zero_representation(algebra) -> Representation:
    return simple_sum(algebra, ())


def simple_sum(algebra, vertices) -> Representation:
    dims = tuple(sum(1 for w in vertices if w == t) for t in algebra.vertices)
    maps = tuple(
        Matrix.zeros(dims[a.target - 1], dims[a.source - 1]) for a in algebra.quiver.arrows
    )
    return Representation(algebra, dims, maps)


def _block_diag(blocks: Sequence[Matrix], rows: int, cols: int) -> Matrix:
    grid = [[ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                grid[r0 + i][c0 + j] = b.entries[i][j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(grid, cols)


def top_vertices(m: Representation) -> list[int]:
    """Vertices of the top ``m / rad m``, with multiplicity."""
    out = []
    for t in m.algebra.vertices:
        images = []
        for a, mat in zip(m.algebra.quiver.arrows, m.maps):
            if a.target == t:
                images.extend(mat.column(j) for j in range(mat.cols))
        rad = len(extend_to_complement([], images))
        out.extend([t] * (m.dim(t) - rad))
    return out


def nakayama(algebra: BoundQuiverAlgebra, p) -> Representation:
    """Injective ``I(v)`` for the indecomposable projective ``P(v)``.

    ``p`` is a vertex or a representation isomorphic to some ``P(v)``.
    """
    if isinstance(p, int):
        return injective(algebra, p)
    top = top_vertices(p)
    if len(top) != 1 or p.total_dimension != projective(algebra, top[0]).total_dimension:
        raise ValueError("nakayama expects an indecomposable projective module")
    if p.dims != projective(algebra, top[0]).dims:
        raise ValueError("nakayama expects an indecomposable projective module")
    return injective(algebra, top[0])


# --------------------------------------------------------------------------
# Complexes of modules and their projective models


@dataclass(frozen=True)
class ModuleComplex:
    """Bounded complex of representations.

    ``diffs[n]`` is a tuple of matrices, one per vertex, for ``terms[n] -> terms[n+1]``.
    """

    algebra: BoundQuiverAlgebra
    terms: Mapping[int, Representation]
    diffs: Mapping[int, tuple[Matrix, ...]] = field(default_factory=dict)

    def term(self, n: int) -> Representation:
        t = self.terms.get(n)
        return t if t is not None else zero_representation(self.algebra)

    def diff_at(self, n: int, v: int) -> Matrix:
        d = self.diffs.get(n)
        if d is not None:
            return d[v - 1]
        return Matrix.zeros(self.term(n + 1).dim(v), self.term(n).dim(v))

    @property
    def degrees(self) -> list[int]:
        return sorted(n for n, t in self.terms.items() if t.total_dimension)

    def homology_dims(self) -> dict[int, tuple[int, ...]]:
        out = {}
        for n in self.degrees:
            vec = []
            for v in self.algebra.vertices:
                dn = self.diff_at(n, v)
                dprev = self.diff_at(n - 1, v)
                z = self.term(n).dim(v) - dn.rank()
                vec.append(z - dprev.rank())
            if any(vec):
                out[n] = tuple(vec)
        return out


def stalk(m: Representation, degree: int = 0) -> ModuleComplex:
    return ModuleComplex(m.algebra, {degree: m}, {})


def resolve_complex(mc: ModuleComplex, *, max_extra: int | None = None):
    """Minimal complex of projectives ``P`` with a quasi-isomorphism ``P -> mc``.

    Works downward from the top degree, adding projective covers of the
    cycles of the partial mapping cone not yet hit. Returns
    ``(terms, diffs, augmentation)`` with ``terms[n]`` a tuple of vertices,
    ``diffs[n]`` a :class:`PathMatrix` and ``augmentation[n]`` a tuple of
    per-vertex matrices ``P^n -> mc^n``.
    """
    alg = mc.algebra
    degs = mc.degrees
    if not degs:
        return {}, {}, {}
    lo, hi = degs[0], degs[-1]
    if max_extra is None:
        max_extra = (alg.gldim if alg.gldim is not None else alg.dimension) + 1
    V = list(alg.vertices)

    terms: dict[int, tuple[int, ...]] = {}
    diffs: dict[int, PathMatrix] = {}
    aug: dict[int, tuple[Matrix, ...]] = {}
    proj_rep_cache: dict[tuple[int, ...], Representation] = {}

    def prep(vs):
        if vs not in proj_rep_cache:
            proj_rep_cache[vs] = projective_sum(alg, vs)
        return proj_rep_cache[vs]

    n = hi
    while True:
        if n < lo - max_extra - 1:
            raise ResolutionError("projective resolution exceeds the global dimension bound")
        p1 = terms.get(n + 1, ())
        M = mc.term(n)
        P1 = prep(p1)
        Z = {u: _cycles_at(alg, mc, terms, diffs, aug, n, u, P1, M) for u in V}
        gens: list[tuple[int, tuple]] = []
        for u in V:
            if not Z[u]:
                continue
            kp = P1.dim(u)
            sub = []
            if mc.term(n - 1).dim(u):
                dm = mc.diff_at(n - 1, u)
                for j in range(dm.cols):
                    col = dm.column(j)
                    if any(col):
                        sub.append((ZERO,) * kp + col)
            for ai, a in enumerate(alg.quiver.arrows):
                if a.target != u:
                    continue
                ks = P1.dim(a.source)
                for z in Z[a.source]:
                    sub.append(tuple(P1.maps[ai].apply(z[:ks])) + tuple(M.maps[ai].apply(z[ks:])))
            for g in extend_to_complement(sub, Z[u]):
                lead = next(x for x in g if x)
                gens.append((u, tuple(x / lead for x in g)))
        if not gens:
            if n < lo:
                break
            n -= 1
            continue
        pv = tuple(u for u, _ in gens)
        terms[n] = pv
        # differential P^n -> P^{n+1}: minus the P-component of each generator
        entries = {}
        for c, (u, g) in enumerate(gens):
            off = 0
            for j, w in enumerate(p1):
                idxs = alg.paths(w, u)
                raw = {k: -g[off + a] for a, k in enumerate(idxs) if g[off + a]}
                if raw:
                    entries[(j, c)] = raw
                off += len(idxs)
        if p1:
            diffs[n] = PathMatrix(alg, p1, pv, entries)
        # augmentation P^n -> M^n by Yoneda from the M-components
        aug_n = []
        for t in V:
            cols = []
            for u, g in gens:
                zm = g[P1.dim(u):]
                for k in alg.paths(u, t):
                    cols.append(M.basis_path_matrix(k).apply(zm) if M.dim(t) else ())
            aug_n.append(Matrix.from_columns(cols, M.dim(t)) if cols else Matrix.zeros(M.dim(t), 0))
        aug[n] = tuple(aug_n)
        n -= 1

    # the construction produced (P, -d) with augmentation aug; flip to (P, d)
    final_diffs = {k: -d for k, d in diffs.items()}
    final_aug = {k: tuple(m.scale(-1) if k % 2 else m for m in a) for k, a in aug.items()}
    return terms, final_diffs, final_aug


def _cycles_at(alg, mc, terms, diffs, aug, n, u, P1, M):
    kp, km = P1.dim(u), M.dim(u)
    if kp + km == 0:
        return []
    p1 = terms.get(n + 1, ())
    p2 = terms.get(n + 2, ())
    rows = []
    if p1 and p2:
        dpu = diffs[n + 1].at_vertex(u)
        rows = [[-x for x in row] + [ZERO] * km for row in dpu.entries]
    m1 = mc.term(n + 1).dim(u)
    if m1:
        augu = aug[n + 1][u - 1] if p1 else Matrix.zeros(m1, 0)
        dmu = mc.diff_at(n, u)
        for i in range(m1):
            rows.append(list(augu.entries[i]) + list(dmu.entries[i]))
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(kp + km)) for j in range(kp + km)]
    return kernel_basis(rows, kp + km)


def projective_resolution(m: Representation):
    """Minimal projective resolution of ``m`` as a complex in degrees ``<= 0``."""
    from .perfcx import PerfectComplex

    alg = m.algebra
    terms, diffs, _ = resolve_complex(stalk(m))
    if terms and -min(terms) > (alg.gldim or 0):
        raise ResolutionError("resolution longer than the global dimension")
    return PerfectComplex(alg, terms, diffs)


def euler_pairing_complexes(A, B) -> int:
    """``sum_{i,j} (-1)^(j-i) dim Hom(A^i, B^j)`` from term-wise path counts."""
    if A.algebra != B.algebra:
        raise ValueError("complexes over different algebras")
    alg = A.algebra
    total = 0
    for i, vs in A.terms.items():
        for j, ws in B.terms.items():
            sign = -1 if (j - i) % 2 else 1
            for v in vs:
                for w in ws:
                    total += sign * len(alg.paths(w, v))
    return total

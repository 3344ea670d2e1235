"""Plain-text formats for algebras, complexes, modules, lattices and surfaces.

Every format is line oriented; ``#`` starts a comment. Errors carry the
1-based line number of the offending declaration.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactlinalg import Matrix
from .kgroup import KClass, KLattice, SurfaceModel
from .perfcx import PerfectComplex, shift
from .quiveralg import (
    Arrow,
    BoundQuiverAlgebra,
    FreePathPolynomial,
    Path,
    PathMatrix,
    Quiver,
    Representation,
    build_algebra,
    format_path,
    path_from_names,
    projective_resolution,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _fraction(tok: str, line: int | None = None) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {tok!r}", line) from None


def _int(tok: str, line: int | None = None) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"not an integer: {tok!r}", line) from None


# --------------------------------------------------------------------------
# path polynomials

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_']*)|([+\-*]))")


def _tokenize(text: str, line):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character in {text!r} at {pos}", line)
        num, name, op = m.groups()
        out.append(("num", num) if num else ("name", name) if name else ("op", op))
        pos = m.end()
    return out


def parse_free_polynomial(quiver: Quiver, text: str, line: int | None = None) -> FreePathPolynomial:
    """Parse ``c1*p1 + c2*p2`` with ``p`` a product of arrows or ``e<v>``."""
    toks = _tokenize(text, line)
    if not toks:
        raise ParseError("empty polynomial", line)
    terms: dict[Path, Fraction] = {}
    i = 0
    sign = Fraction(1)
    expect_term = True
    while i < len(toks):
        if expect_term:
            sign = Fraction(1)
            while i < len(toks) and toks[i] in (("op", "+"), ("op", "-")):
                if toks[i][1] == "-":
                    sign = -sign
                i += 1
            coeff = sign
            names: list[str] = []
            vertex = None
            while True:
                if i >= len(toks):
                    raise ParseError(f"dangling operator in {text!r}", line)
                kind, val = toks[i]
                if kind == "num":
                    coeff *= _fraction(val, line)
                elif kind == "name":
                    m = re.fullmatch(r"e(\d+)", val)
                    if m:
                        vertex = int(m.group(1))
                    else:
                        try:
                            quiver.arrow_index(val)
                        except KeyError:
                            raise ParseError(f"unknown arrow {val!r}", line) from None
                        names.append(val)
                else:
                    raise ParseError(f"unexpected {val!r} in {text!r}", line)
                i += 1
                if i < len(toks) and toks[i] == ("op", "*"):
                    i += 1
                    continue
                break
            if coeff:
                try:
                    if names:
                        p = path_from_names(quiver, names)
                        if vertex is not None and vertex not in (p.source, p.target):
                            raise ParseError(f"idempotent e{vertex} does not compose", line)
                    elif vertex is not None:
                        if not 1 <= vertex <= quiver.vertices:
                            raise ParseError(f"vertex {vertex} out of range", line)
                        p = Path(vertex, vertex, ())
                    elif coeff:
                        raise ParseError(f"scalar term in {text!r}; write it as c*e<v>", line)
                except ValueError as exc:
                    if isinstance(exc, ParseError):
                        raise
                    raise ParseError(str(exc), line) from None
                terms[p] = terms.get(p, Fraction(0)) + coeff
            expect_term = False
        else:
            kind, val = toks[i]
            if kind != "op" or val not in "+-":
                raise ParseError(f"expected + or - in {text!r}", line)
            expect_term = True
    poly = FreePathPolynomial.from_dict(terms)
    if len({(p.source, p.target) for p, _ in poly.terms}) > 1:
        raise ParseError(f"non-parallel paths in {text!r}", line)
    return poly


def _matrix_cells(text: str, line) -> list[list[str]]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError("matrix must be enclosed in [ ]", line)
    body = text[1:-1].strip()
    if not body:
        return []
    return [[c.strip() for c in row.split(",")] for row in body.split(";")]


# --------------------------------------------------------------------------
# algebras


def parse_algebra(text: str) -> BoundQuiverAlgebra:
    vertices = None
    arrows: list[Arrow] = []
    rel_lines: list[tuple[int, str]] = []
    for no, line in _lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "algebra":
            continue
        if head == "vertices":
            vertices = _int(rest, no)
        elif head == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError("arrow needs: name source target", no)
            arrows.append(Arrow(parts[0], _int(parts[1], no), _int(parts[2], no)))
        elif head == "relation":
            rel_lines.append((no, rest))
        else:
            raise ParseError(f"unknown declaration {head!r}", no)
    if vertices is None:
        raise ParseError("missing 'vertices' declaration")
    try:
        quiver = Quiver(vertices, tuple(arrows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rels = [parse_free_polynomial(quiver, r, no) for no, r in rel_lines]
    return build_algebra(quiver, rels)


def format_algebra(alg: BoundQuiverAlgebra) -> str:
    out = [f"vertices {alg.quiver.vertices}"]
    out += [f"arrow {a.name} {a.source} {a.target}" for a in alg.quiver.arrows]
    for r in alg.relations:
        parts = []
        for p, c in r.terms:
            name = format_path(alg.quiver, p)
            parts.append(name if c == 1 else f"{c}*{name}")
        out.append("relation " + " + ".join(parts))
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# complexes and modules


def parse_complex(alg: BoundQuiverAlgebra, text: str) -> PerfectComplex:
    """Parse a ``complex`` or ``module`` block (the latter is resolved)."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty complex file")
    kind = lines[0][1].split()[0]
    if kind == "module":
        return projective_resolution(_parse_module(alg, lines[1:]))
    if kind != "complex":
        raise ParseError("file must start with 'complex' or 'module'", lines[0][0])
    terms: dict[int, tuple[int, ...]] = {}
    diff_lines = []
    shift_by = 0
    for no, line in lines[1:]:
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "term":
            parts = rest.split()
            if not parts:
                raise ParseError("term needs a degree", no)
            n = _int(parts[0], no)
            vs = []
            for tok in parts[1:]:
                m = re.fullmatch(r"P(\d+)", tok)
                if not m:
                    raise ParseError(f"expected P<v>, got {tok!r}", no)
                v = int(m.group(1))
                if v not in alg.vertices:
                    raise ParseError(f"vertex {v} out of range", no)
                vs.append(v)
            if n in terms:
                raise ParseError(f"degree {n} declared twice", no)
            terms[n] = tuple(vs)
        elif head == "diff":
            n_tok, _, mat = rest.partition(" ")
            diff_lines.append((no, _int(n_tok, no), mat))
        elif head == "shift":
            shift_by = _int(rest, no)
        else:
            raise ParseError(f"unknown declaration {head!r}", no)
    diffs = {}
    for no, n, mat in diff_lines:
        src, tgt = terms.get(n, ()), terms.get(n + 1, ())
        cells = _matrix_cells(mat, no)
        if len(cells) != len(tgt) or any(len(r) != len(src) for r in cells):
            raise ParseError(
                f"diff {n} must be {len(tgt)}x{len(src)} (rows = degree {n + 1} summands)", no
            )
        entries = {}
        for j, row in enumerate(cells):
            for i, cell in enumerate(row):
                if cell == "0":
                    continue
                poly = parse_free_polynomial(alg.quiver, cell, no)
                ends = poly.endpoints
                if ends is None:
                    continue
                if ends != (tgt[j], src[i]):
                    raise ParseError(
                        f"entry ({j},{i}) must be a path from {tgt[j]} to {src[i]}", no
                    )
                entries[(j, i)] = alg.reduce(poly)
        diffs[n] = PathMatrix(alg, tgt, src, entries)
    try:
        C = PerfectComplex(alg, terms, diffs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if shift_by:
        C = shift(C, shift_by)
    return C


def _parse_module(alg: BoundQuiverAlgebra, lines) -> Representation:
    dims = None
    maps: dict[str, list[list[Fraction]]] = {}
    for no, line in lines:
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "dims":
            dims = tuple(_int(t, no) for t in rest.split())
            if len(dims) != alg.quiver.vertices:
                raise ParseError("one dimension per vertex required", no)
        elif head == "map":
            name, _, mat = rest.partition(" ")
            try:
                alg.quiver.arrow_index(name)
            except KeyError:
                raise ParseError(f"unknown arrow {name!r}", no) from None
            maps[name] = [[_fraction(c, no) for c in row] for row in _matrix_cells(mat, no)]
        else:
            raise ParseError(f"unknown declaration {head!r}", no)
    if dims is None:
        raise ParseError("module needs a 'dims' line")
    mats = []
    for a in alg.quiver.arrows:
        rows, cols = dims[a.target - 1], dims[a.source - 1]
        grid = maps.get(a.name)
        if grid is None:
            mats.append(Matrix.zeros(rows, cols))
            continue
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ParseError(f"map {a.name} must be {rows}x{cols}")
        mats.append(Matrix(grid, cols))
    try:
        return Representation(alg, dims, tuple(mats))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_complex(C: PerfectComplex) -> str:
    alg = C.algebra
    out = ["complex"]
    for n, vs in C.terms.items():
        out.append(f"term {n} " + " ".join(f"P{v}" for v in vs))
    for n, d in C.diffs.items():
        rows = []
        for j in range(len(d.rows)):
            rows.append(" , ".join(alg.format(d.entries.get((j, i), {})) for i in range(len(d.cols))))
        out.append(f"diff {n} [ " + " ; ".join(rows) + " ]")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# lattices and surfaces


def _int_matrix(text: str, line) -> list[list[Fraction]]:
    return [[_fraction(c, line) for c in row] for row in _matrix_cells(text, line)]


def parse_lattice(text: str) -> KLattice:
    rank = form = None
    for no, line in _lines(text):
        head, _, rest = line.partition(" ")
        if head == "lattice":
            continue
        if head == "rank":
            rank = _int(rest.strip(), no)
        elif head == "form":
            form = _int_matrix(rest, no)
        else:
            raise ParseError(f"unknown declaration {head!r}", no)
    if form is None:
        raise ParseError("missing 'form' declaration")
    if rank is not None and (len(form) != rank or any(len(r) != rank for r in form)):
        raise ParseError("form does not match the declared rank")
    try:
        return KLattice(tuple(map(tuple, form)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_surface(text: str) -> SurfaceModel:
    rank = gram = canonical = chi_o = None
    for no, line in _lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "surface":
            continue
        if head == "ns_rank":
            rank = _int(rest, no)
        elif head == "gram":
            gram = _int_matrix(rest, no)
        elif head == "canonical":
            canonical = tuple(_fraction(t, no) for t in rest.split())
        elif head == "chi_o":
            chi_o = _fraction(rest, no)
        else:
            raise ParseError(f"unknown declaration {head!r}", no)
    if gram is None or canonical is None or chi_o is None:
        raise ParseError("surface needs gram, canonical and chi_o")
    if rank is not None and len(gram) != rank:
        raise ParseError("gram does not match ns_rank")
    try:
        return SurfaceModel(tuple(map(tuple, gram)), canonical, chi_o)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


_CLASS = re.compile(r"class\s+r=(\S+)\s+c1=\(([^)]*)\)\s+ch2=(\S+)\s*$")


def parse_class(text: str) -> KClass:
    m = _CLASS.fullmatch(text.strip())
    if not m:
        raise ParseError(f"bad class literal {text!r}; expected 'class r=R c1=(a,b) ch2=S'")
    r, c1, s = m.groups()
    coords = tuple(_fraction(t.strip()) for t in c1.split(",") if t.strip())
    return KClass(_fraction(r), coords, _fraction(s))


def format_class(c: KClass) -> str:
    return "class r={} c1=({}) ch2={}".format(c.r, ",".join(str(x) for x in c.c1), c.s)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    return tuple(_fraction(t.strip()) for t in text.replace("(", "").replace(")", "").split(",") if t.strip())

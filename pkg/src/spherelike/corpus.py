"""Small algebras and objects used by the demos and the test-suite."""

from __future__ import annotations

from fractions import Fraction

from .perfcx import PerfectComplex, direct_sum, shift, stalk
from .quiveralg import (
    Arrow,
    BoundQuiverAlgebra,
    FreePathPolynomial,
    Quiver,
    Representation,
    build_algebra,
    path_from_names,
    projective_resolution,
    simple,
)


def _relation(q: Quiver, *names: str) -> FreePathPolynomial:
    return FreePathPolynomial.from_dict({path_from_names(q, list(names)): 1})


def kronecker() -> BoundQuiverAlgebra:
    return build_algebra(Quiver(2, (Arrow("a", 1, 2), Arrow("b", 1, 2))))


def bound_a3() -> BoundQuiverAlgebra:
    """``1 -a-> 2 -b-> 3`` with ``b*a = 0``."""
    q = Quiver(3, (Arrow("a", 1, 2), Arrow("b", 2, 3)))
    return build_algebra(q, [_relation(q, "b", "a")])


def nilpotent_cycle() -> BoundQuiverAlgebra:
    """``1 ⇄ 2`` with ``a*b = 0``; ``End(P(1)) = k[ε]/ε²`` with ``ε = b*a``."""
    q = Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 1)))
    return build_algebra(q, [_relation(q, "a", "b")])


def semisimple(n: int = 2) -> BoundQuiverAlgebra:
    return build_algebra(Quiver(n, ()))


def commutative_square() -> BoundQuiverAlgebra:
    """Square ``1 -> 2, 3 -> 4`` with the two composites identified."""
    q = Quiver(4, (Arrow("a", 1, 2), Arrow("b", 2, 4), Arrow("c", 1, 3), Arrow("d", 3, 4)))
    rel = FreePathPolynomial.from_dict(
        {path_from_names(q, ["b", "a"]): 1, path_from_names(q, ["d", "c"]): -1}
    )
    return build_algebra(q, [rel])


def regular_module(alg: BoundQuiverAlgebra, lam) -> Representation:
    """Kronecker module ``k ⇉ k`` with ``a`` acting by ``lam`` and ``b`` by 1."""
    return Representation.from_arrow_maps(alg, (1, 1), {"a": [[Fraction(lam)]], "b": [[1]]})


def skyscraper(alg: BoundQuiverAlgebra, lam) -> PerfectComplex:
    """Resolution ``P(2) --(a - lam b)--> P(1)`` of the regular module."""
    return projective_resolution(regular_module(alg, lam))


LAMBDA = Fraction(1, 2)
MUS = (Fraction(0), Fraction(2), Fraction(-1))


def kronecker_corpus(alg: BoundQuiverAlgebra | None = None) -> dict[str, PerfectComplex]:
    alg = alg or kronecker()
    objs = {
        "P1": stalk(alg, 1),
        "P2": stalk(alg, 2),
        "R_lambda": skyscraper(alg, LAMBDA),
    }
    for mu in MUS:
        objs[f"R_{mu}"] = skyscraper(alg, mu)
    objs["P1[1]"] = shift(stalk(alg, 1), 1)
    objs["P2[-1]"] = shift(stalk(alg, 2), -1)
    objs[f"R_{MUS[1]}[1]"] = shift(skyscraper(alg, MUS[1]), 1)
    objs["P1+R_0"] = direct_sum(stalk(alg, 1), skyscraper(alg, MUS[0]))
    return objs


def a3_corpus(alg: BoundQuiverAlgebra | None = None) -> dict[str, PerfectComplex]:
    alg = alg or bound_a3()
    return {
        "P1": stalk(alg, 1),
        "P2": stalk(alg, 2),
        "P3": stalk(alg, 3),
        "S1": projective_resolution(simple(alg, 1)),
        "S2": projective_resolution(simple(alg, 2)),
        "F": direct_sum(stalk(alg, 1), stalk(alg, 3)),
        "P1[1]": shift(stalk(alg, 1), 1),
        "P3[-2]": shift(stalk(alg, 3), -2),
        "P1+P3[1]": direct_sum(stalk(alg, 1), shift(stalk(alg, 3), 1)),
    }


def cycle_corpus(alg: BoundQuiverAlgebra | None = None) -> dict[str, PerfectComplex]:
    alg = alg or nilpotent_cycle()
    return {
        "P1": stalk(alg, 1),
        "P2": stalk(alg, 2),
        "S1": projective_resolution(simple(alg, 1)),
        "S2": projective_resolution(simple(alg, 2)),
    }

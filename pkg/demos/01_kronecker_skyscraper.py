"""A skyscraper-like module over the Kronecker quiver is 1-spherical.

Its twist is an autoequivalence: Hom tables survive and the left twist undoes it.
"""

from __future__ import annotations

from spherelike import corpus
from spherelike.homcx import hom
from spherelike.perfcx import is_isomorphic
from spherelike.sphere import analyze, twist, twist_left
from spherelike.textio import format_complex


def main() -> None:
    alg = corpus.kronecker()
    F = corpus.skyscraper(alg, corpus.LAMBDA)
    print("F = resolution of R_1/2:")
    print(format_complex(F))
    rep = analyze(F)
    print("Hom(F, F) dims:", rep.hom_table)
    print("verdict:", rep.verdict)

    objs = corpus.kronecker_corpus(alg)
    print(f"\n{'object':<10} {'T_F(A) terms':<34} T^l T(A) = A")
    for name, A in objs.items():
        T = twist(F, A)
        back = is_isomorphic(twist_left(F, T), A, seed=0)
        print(f"{name:<10} {str(T.graded_terms()):<34} {back}")

    same = all(
        hom(twist(F, A), twist(F, B)).dims() == hom(A, B).dims()
        for A in objs.values() for B in objs.values()
    )
    print("\nall Hom tables preserved:", same)


if __name__ == "__main__":
    main()

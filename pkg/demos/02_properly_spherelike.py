"""P(1) + P(3) over the bound A3 quiver is 0-spherelike but not spherical.

We compute its asphericality Q, the spherical subcategory (objects with no
maps to Q) and check the 0-Calabi-Yau pairing exactly on those objects.
"""

from __future__ import annotations

from spherelike import corpus
from spherelike.homcx import hom
from spherelike.perfcx import direct_sum, is_isomorphic, shift
from spherelike.sphere import analyze, check_calabi_yau


def main() -> None:
    objs = corpus.a3_corpus()
    F = objs["F"]
    rep = analyze(F)
    data = rep.asphericality
    print("verdict:", rep.verdict)
    print("Q terms:", data.Q.graded_terms())
    S2 = objs["S2"]
    print("Q = S2 + S2[1]:", is_isomorphic(data.Q, direct_sum(S2, shift(S2, 1))))
    print("Hom(F, Q):", hom(F, data.Q).dims() or "0", " Hom(Q, F):", hom(data.Q, F).dims())

    verdicts = check_calabi_yau(F, 0, list(objs.values()), data)
    print(f"\n{'object':<10} {'member':<7} {'dims':<6} CY pairing")
    for name, v in zip(objs, verdicts):
        print(f"{name:<10} {str(v.member):<7} {str(v.dims_match):<6} {v.pairing_nondegenerate}")


if __name__ == "__main__":
    main()

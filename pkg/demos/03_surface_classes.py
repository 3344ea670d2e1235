"""Class-level shadows on surfaces: a (-2)-curve on a K3, its blow-up, a ruled surface."""

from __future__ import annotations

from spherelike.kgroup import (
    asphericality_class,
    blow_up,
    curve_sheaf_class,
    euler_pairing_surface,
    exceptional_curve,
    k3_model,
    pullback,
    ruled_elliptic_model,
    structure_sheaf,
)
from spherelike.textio import format_class


def main() -> None:
    X = k3_model()
    O, OC = structure_sheaf(X), curve_sheaf_class(X, (1,), 0)
    print("K3:  chi(O, O) =", euler_pairing_surface(X, O, O), " chi(O_C, O_C) =", euler_pairing_surface(X, OC, OC))

    B = blow_up(X)
    F = pullback(OC)
    OR = curve_sheaf_class(B, exceptional_curve(B), -1)
    print("blow-up:  F =", format_class(F), " chi(F, F) =", euler_pairing_surface(B, F, F))
    print("  [Q] =", format_class(asphericality_class(B, F, 2)), " chi(O_R(-1), F) =", euler_pairing_surface(B, OR, F))

    M = ruled_elliptic_model()
    OP = curve_sheaf_class(M, (0, 1), 0)
    print("ruled:  [Q(O_P)] =", format_class(asphericality_class(M, OP, 1)),
          " -2[O_P(-1)] =", format_class(curve_sheaf_class(M, (0, 1), -1).scale(-2)))


if __name__ == "__main__":
    main()

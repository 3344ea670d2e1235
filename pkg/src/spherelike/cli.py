"""Command-line front end.

Every command emits a JSON report with sorted keys. Exit codes: 0 when a
result was computed (whatever the verdict), 1 for input errors, 2 when a
mathematical precondition fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import shlex
import sys
from pathlib import Path

from .errors import ConsistencyError, PreconditionError
from .homcx import hom
from .kgroup import (
    asphericality_class,
    blow_up,
    check_braid,
    check_involution,
    euler_pairing_surface,
    pullback,
    reflect,
    tensor_canonical,
)
from .perfcx import is_isomorphic
from .quiveralg import AlgebraError
from .sphere import (
    analyze,
    asphericality,
    classify,
    in_spherical_subcategory,
    twist,
    twist_left,
)
from .textio import (
    ParseError,
    format_class,
    format_complex,
    parse_algebra,
    parse_class,
    parse_complex,
    parse_lattice,
    parse_surface,
    parse_vector,
)


class InputError(Exception):
    pass


class _Inputs:
    """Reads files relative to a base directory and records their digests."""

    def __init__(self, base: Path):
        self.base = base
        self.digests: dict[str, str] = {}

    def read(self, name: str) -> str:
        path = Path(name)
        if not path.is_absolute():
            path = self.base / path
        try:
            data = path.read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {name}: {exc.strerror}") from None
        self.digests[name] = hashlib.sha256(data).hexdigest()
        return data.decode("utf-8")

    def parsed(self, name: str, parser, *args):
        text = self.read(name)
        try:
            return parser(*args, text)
        except ParseError as exc:
            raise InputError(f"{name}: {exc}") from None


def _table(d: dict[int, int]) -> dict[str, int]:
    return {str(k): v for k, v in sorted(d.items())}


def _terms(C) -> dict[str, list[str]]:
    return {str(n): [f"P{v}" for v in vs] for n, vs in C.graded_terms().items()}


def _second_choice(report, rng: random.Random):
    def nz():
        return rng.choice([x for x in range(-9, 10) if x])

    if report.d != 0:
        return nz()
    if report.flavor == "nilpotent":
        return (rng.randint(-9, 9), nz())
    return (nz(), nz())


def cmd_analyze(args, inputs: _Inputs) -> dict:
    alg = inputs.parsed(args.algebra, parse_algebra)
    F = inputs.parsed(args.complex, parse_complex, alg)
    rep = classify(F)
    out = {
        "algebra": {"dimension": alg.dimension, "global_dimension": alg.gldim},
        "classification": rep.classification,
        "hom_table": _table(rep.hom_table),
    }
    if rep.is_spherelike:
        out["d"] = rep.d
        out["flavor"] = rep.flavor
        if rep.flavor == "irreducible-quadratic":
            out["minimal_polynomial"] = rep.minimal_polynomial
            raise PreconditionError("End(F) is a quadratic field; minimal polynomial " + rep.minimal_polynomial, out)
        rep = analyze(F)
        data = rep.asphericality
        rng = random.Random(args.seed)
        other = asphericality(F, _second_choice(rep, rng), rep)
        out["asphericality"] = {
            "spherical": data.Q.is_zero(),
            "Q_terms": _terms(data.Q),
            "Q": format_complex(data.Q),
            "choice": data.choice,
            "Q_independent_of_w": is_isomorphic(data.Q, other.Q, args.seed, args.trials),
            "second_choice": other.choice,
        }
    out["verdict"] = rep.verdict
    return out


def cmd_twist(args, inputs: _Inputs) -> dict:
    alg = inputs.parsed(args.algebra, parse_algebra)
    F = inputs.parsed(args.F, parse_complex, alg)
    A = inputs.parsed(args.A, parse_complex, alg)
    T = twist_left(F, A) if args.left else twist(F, A)
    return {
        "functor": "left_twist" if args.left else "twist",
        "result": format_complex(T),
        "result_terms": _terms(T),
        "isomorphic_to_input": is_isomorphic(T, A, args.seed, args.trials),
        "hom_table_FA": _table(hom(F, A).dims()),
    }


def cmd_member(args, inputs: _Inputs) -> dict:
    alg = inputs.parsed(args.algebra, parse_algebra)
    F = inputs.parsed(args.F, parse_complex, alg)
    U = inputs.parsed(args.U, parse_complex, alg)
    rep = classify(F)
    if not rep.is_spherelike or rep.flavor == "irreducible-quadratic":
        raise PreconditionError(
            "F is not spherelike",
            {"classification": rep.classification, "hom_table": _table(rep.hom_table)},
        )
    data = asphericality(F, None, rep)
    return {
        "member": in_spherical_subcategory(U, data),
        "witness_hom_UQ": _table(hom(U, data.Q).dims()),
        "Q_terms": _terms(data.Q),
        "classification": rep.classification,
        "d": rep.d,
    }


def _frac(x) -> str:
    return str(x)


def cmd_kgroup(args, inputs: _Inputs) -> dict:
    try:
        if args.kind == "involution":
            L = inputs.parsed(args.lattice, parse_lattice)
            f = parse_vector(args.f)
            return {
                "chi_ff": _frac(L.chi(f, f)),
                "reflect_f": [_frac(x) for x in reflect(L, f, f)],
                "involution": check_involution(L, f, args.samples, args.seed),
            }
        if args.kind == "braid":
            L = inputs.parsed(args.lattice, parse_lattice)
            e, f = parse_vector(args.e), parse_vector(args.f)
            return {"s": _frac(L.chi(e, f)), "verdict": check_braid(L, e, f)}
        M = inputs.parsed(args.surface, parse_surface)
        classes = [parse_class(c) for c in args.cls]
        for _ in range(args.blow_up):
            M = blow_up(M)
            classes = [pullback(c) for c in classes]
        out = {
            "K2": _frac(M.K2),
            "chi_o": _frac(M.chi_o),
            "classes": [format_class(c) for c in classes],
            "chi": [[_frac(euler_pairing_surface(M, a, b)) for b in classes] for a in classes],
            "tensor_canonical": [format_class(tensor_canonical(M, c)) for c in classes],
        }
        if args.d is not None:
            out["asphericality_class"] = [format_class(asphericality_class(M, c, args.d)) for c in classes]
        return out
    except ParseError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise InputError(str(exc)) from None


def _add_globals(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="seed for randomized isomorphism tests")
    p.add_argument("--trials", type=int, default=8, help="samples per isomorphism test")
    p.add_argument("--json", metavar="OUT", help="write the report here instead of stdout")
    p.add_argument("--batch", metavar="FILE", help="run one command per line of FILE")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spherelike", description=__doc__.splitlines()[0])
    _add_globals(p)
    sub = p.add_subparsers(dest="command")

    a = sub.add_parser("analyze", help="classify F and compute its asphericality")
    a.add_argument("algebra")
    a.add_argument("complex")

    t = sub.add_parser("twist", help="twist A by F")
    t.add_argument("algebra")
    t.add_argument("F")
    t.add_argument("A")
    t.add_argument("--left", action="store_true", help="use the left adjoint twist")

    m = sub.add_parser("member", help="decide whether U lies in the spherical subcategory of F")
    m.add_argument("algebra")
    m.add_argument("F")
    m.add_argument("U")

    k = sub.add_parser("kgroup", help="K-group reflections and surface pairings")
    ks = k.add_subparsers(dest="kind", required=True)
    ki = ks.add_parser("involution")
    ki.add_argument("lattice")
    ki.add_argument("--f", required=True, help="class as comma separated coordinates")
    ki.add_argument("--samples", type=int, default=10)
    kb = ks.add_parser("braid")
    kb.add_argument("lattice")
    kb.add_argument("--e", required=True)
    kb.add_argument("--f", required=True)
    kf = ks.add_parser("surface")
    kf.add_argument("surface")
    kf.add_argument("--class", dest="cls", action="append", default=[], help="class literal")
    kf.add_argument("--blow-up", type=int, default=0, help="blow up this many times, pulling classes back")
    kf.add_argument("--d", type=int, default=None, help="spherelike degree for the class of Q")
    return p


COMMANDS = {"analyze": cmd_analyze, "twist": cmd_twist, "member": cmd_member, "kgroup": cmd_kgroup}


def run_one(argv: list[str], base: Path, seed: int | None = None, trials: int | None = None) -> tuple[int, dict]:
    """Execute one command line; returns ``(exit_code, report)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return 1, {"command": argv, "error": "usage error", "exit_code": 1}
    if seed is not None:
        args.seed = seed
    if trials is not None:
        args.trials = trials
    report = {"command": argv, "seed": args.seed, "trials": args.trials}
    inputs = _Inputs(base)
    code = 0
    try:
        if args.command is None:
            raise InputError("no command given")
        report["result"] = COMMANDS[args.command](args, inputs)
    except (InputError, AlgebraError) as exc:
        code = 1
        report["error"] = str(exc)
    except PreconditionError as exc:
        code = 2
        report["error"] = str(exc.args[0])
        if len(exc.args) > 1:
            report["result"] = exc.args[1]
    except ConsistencyError as exc:
        code = 3
        report["error"] = "internal consistency failure: " + str(exc)
    except ValueError as exc:
        code = 1
        report["error"] = str(exc)
    report["inputs"] = dict(sorted(inputs.digests.items()))
    report["exit_code"] = code
    return code, report


def run_batch(path: Path, seed: int, trials: int) -> tuple[int, list[dict]]:
    try:
        text = path.read_text()
    except OSError as exc:
        return 1, [{"error": f"cannot read batch file: {exc.strerror}", "exit_code": 1}]
    reports = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        reports.append(run_one(shlex.split(line), path.parent, seed, trials)[1])
    # per-command exit codes live in the reports; the batch itself succeeded
    return 0, reports


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _without_json(argv: list[str]) -> list[str]:
    """Drop ``--json OUT`` so the echoed command does not depend on the output path."""
    out, skip = [], False
    for tok in argv:
        if skip:
            skip = False
        elif tok == "--json":
            skip = True
        elif not tok.startswith("--json="):
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if any(tok in ("-h", "--help") for tok in argv):
        build_parser().parse_args(argv)
    # global flags only, so that a broken subcommand line still produces a report
    pre = argparse.ArgumentParser(add_help=False)
    _add_globals(pre)
    args, _ = pre.parse_known_args(argv)
    if args.batch:
        code, reports = run_batch(Path(args.batch), args.seed, args.trials)
        payload = {"batch": args.batch, "seed": args.seed, "reports": reports}
    else:
        code, payload = run_one(_without_json(argv), Path.cwd())
    text = dumps(payload)
    if args.json:
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

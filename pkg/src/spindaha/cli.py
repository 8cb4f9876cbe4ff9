"""Command line: ``spindaha normalize EXPR`` and ``spindaha verify SUITE``.

Exit codes: 0 pass, 1 a check failed, 2 usage or parse error, 3 internal
integrity error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .clifford import clifford
from .groupalg import group_algebra, verify_extweyl_presentation, verify_weyl_presentation
from .heckecliff import Params, thc
from .isoverify import (
    _smash_relations,
    spin_pbw_probe,
    tensor,
    verify_iso_big,
    verify_iso_fin,
    verify_tensor_supersign,
    verify_wang,
    wang,
    wang_center_check,
)
from .linear import Algebra
from .parse import Namespace, ParseError, parse
from .report import Check, Report
from .scalar import Scalar, ScalarParseError
from .smash import smash
from .spinhecke import tsh
from .spinweyl import spin_algebra, verify_spin_presentation
from .thcverify import center_check, elementary_x2, pbw_probe, verify_thc_presentation
from .tshverify import elementary_xi2, tsh_center_check, verify_tsh_presentation
from .weyl import IntegrityError, WeylType

ALGEBRAS = ("weyl", "extweyl", "clifford", "spinweyl", "thc", "tsh", "smash", "tensor", "wang")
SUITES = ("presentation", "iso", "pbw", "center", "wang", "all")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTEGRITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Session:
    algebra: str
    typ: WeylType
    params: Params
    seed: int
    samples: int = 100

    def algebra_object(self) -> Algebra:
        a, t, p = self.algebra, self.typ, self.params
        if a in ("weyl", "extweyl"):
            return group_algebra(t, a == "extweyl")
        if a == "clifford":
            return clifford(t.n)
        if a == "spinweyl":
            return spin_algebra(t)
        if a == "smash":
            return smash(t)
        if a == "thc":
            return thc(t, p)
        if a == "tsh":
            return tsh(t, p)
        if a == "tensor":
            return tensor(tsh(t, p))
        return wang(t.n, p)

    def namespace(self) -> Namespace:
        alg = self.algebra_object()
        extra = None
        if self.algebra == "clifford":
            extra = {f"c{i}": alg.gen(i) for i in range(1, self.typ.n + 1)}
        return Namespace(alg, self.params, extra)


def _scalar(text: str) -> Scalar:
    try:
        return Scalar.parse(text)
    except ScalarParseError as exc:
        raise UsageError(f"bad scalar {text!r}: {exc}") from None


def make_session(args) -> Session:
    try:
        typ = WeylType(args.type, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.algebra == "wang" and typ.family != "A":
        raise UsageError("the wang algebra requires type A")
    if args.formal_params:
        params = Params.symbolic()
    else:
        params = Params(_scalar(args.u), _scalar(args.v), False)
    return Session(args.algebra, typ, params, args.seed, args.samples)


# -- suites -----------------------------------------------------------------------


def _pbw_checks(result, control, label: str) -> list[Check]:
    return [
        Check(f"{label}: full rank over {result.columns} PBW monomials", f"rank {result.rank}",
              f"rank {result.columns}", result.independent,
              note=f"method {result.method}"),
        Check(f"{label}: duplicated column detected as dependent", f"rank {control.rank} of {control.columns}",
              f"rank < {control.columns}", not control.independent),
    ]


def _presentation(s: Session) -> list[Check]:
    a, t, p = s.algebra, s.typ, s.params
    if a == "weyl":
        return verify_weyl_presentation(t)
    if a == "extweyl":
        return verify_extweyl_presentation(t)
    if a == "clifford":
        C = clifford(t.n)
        out = []
        for i in range(1, t.n + 1):
            ci = C.gen(i)
            out.append(Check(f"c{i}^2 = 1", str(ci * ci), "1", ci * ci == C.one()))
            for j in range(i + 1, t.n + 1):
                cj = C.gen(j)
                out.append(Check(f"c{i} c{j} = -c{j} c{i}", str(ci * cj), str(-(cj * ci)), ci * cj == -(cj * ci)))
        return out
    if a == "spinweyl":
        return verify_spin_presentation(t)
    if a == "smash":
        S = smash(t)
        out = []
        for name, l, r in _smash_relations(t):
            x, y = parse(l, S), parse(r, S)
            out.append(Check(name, str(x), str(y), x == y))
        return out
    if a == "thc":
        out = verify_thc_presentation(t, p)
        if t.family == "D" and t.n % 2 == 0:
            for c in out:
                if c.relation == f"pi{t.n}^2 = 1":
                    c.note = "t_pi^2 = (-1)^(n/2+1) on the spin side; the Clifford factor of Phi(pi_n) accounts for the sign"
        return out
    if a == "tsh":
        return verify_tsh_presentation(t, p)
    if a == "tensor":
        return verify_tensor_supersign(t, p)
    return verify_wang(t.n, p)


def _iso(s: Session) -> list[Check]:
    if s.algebra in ("spinweyl", "smash"):
        return verify_iso_fin(s.typ, s.seed, s.samples)
    if s.algebra in ("thc", "tsh", "tensor"):
        return verify_iso_fin(s.typ, s.seed, s.samples) + verify_iso_big(s.typ, s.params, s.seed, s.samples)
    raise UsageError(f"suite iso does not apply to {s.algebra}")


def _pbw(s: Session) -> list[Check]:
    if s.algebra == "thc":
        return _pbw_checks(pbw_probe(s.typ, s.params), pbw_probe(s.typ, s.params, duplicate=True), "H^c")
    if s.algebra == "tsh":
        return _pbw_checks(spin_pbw_probe(s.typ, s.params), spin_pbw_probe(s.typ, s.params, duplicate=True), "H^-")
    raise UsageError(f"suite pbw does not apply to {s.algebra}")


def _center(s: Session) -> list[Check]:
    t, p = s.typ, s.params
    if s.algebra == "thc":
        H = thc(t, p)
        out = []
        for k in range(1, t.n + 1):
            for c in center_check(H, elementary_x2(H, k)):
                c.relation = f"e{k}(x^2): {c.relation}"
                out.append(c)
        if t.family == "A":
            for c in wang_center_check(t.n, p):
                c.relation = f"digamma(e^eps_1 + .. + e^eps_n): {c.relation}"
                out.append(c)
        return out
    if s.algebra == "tsh":
        T = tsh(t, p)
        out = []
        for k in range(1, t.n + 1):
            for c in tsh_center_check(T, elementary_xi2(T, k)):
                c.relation = f"e{k}(xi^2): {c.relation}"
                out.append(c)
        return out
    if s.algebra == "wang":
        return wang_center_check(t.n, p)
    raise UsageError(f"suite center does not apply to {s.algebra}")


def _wang(s: Session) -> list[Check]:
    if s.algebra in ("wang", "thc") and s.typ.family == "A":
        return verify_wang(s.typ.n, s.params)
    raise UsageError("suite wang needs --algebra wang or thc with type A")


RUNNERS = {"presentation": _presentation, "iso": _iso, "pbw": _pbw, "center": _center, "wang": _wang}


def applicable(s: Session) -> list[str]:
    out = ["presentation"]
    if s.algebra in ("spinweyl", "smash", "thc", "tsh", "tensor"):
        out.append("iso")
    if s.algebra in ("thc", "tsh"):
        out.append("pbw")
    if s.algebra in ("thc", "tsh", "wang"):
        out.append("center")
    if s.algebra == "thc" and s.typ.family == "A":
        out.append("wang")
    return out


def run_suite(s: Session, suite: str) -> Report:
    report = Report(suite, s.algebra, str(s.typ), s.params.describe(), s.seed)
    names = applicable(s) if suite == "all" else [suite]
    for name in names:
        report.extend(RUNNERS[name](s))
    return report


# -- entry point --------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=ALGEBRAS, default="thc")
    common.add_argument("--type", choices=("A", "B", "D"), default="A")
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--u", default="1", help="value of u, e.g. 1, 1/2, 2*z")
    common.add_argument("--v", default="1", help="value of v (type B)")
    common.add_argument("--formal-params", action="store_true", help="keep u and v as indeterminates")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=100, help="random elements per round-trip check")
    common.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")

    p = argparse.ArgumentParser(prog="spindaha", description="Exact normal forms and verification suites for H^c and H^-.")
    sub = p.add_subparsers(dest="command", required=True)
    n = sub.add_parser("normalize", parents=[common], help="print the PBW normal form of an expression")
    n.add_argument("expr")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        session = make_session(args)
        if args.command == "normalize":
            print(parse(args.expr, session.namespace()))
            return EXIT_OK
        report = run_suite(session, args.suite)
    except (UsageError, ParseError, ScalarParseError) as exc:
        print(f"spindaha: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"spindaha: integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    if args.json == "-":
        print(report.to_json())
    else:
        print(report.to_text())
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``hopfinv {hopf,act,demo} ...``.

Exit codes: 0 all checks pass, 1 a mathematical check failed (or a demanded
witness is absent), 2 input or parse error, 3 a resource bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import __version__
from .action import (
    ActionError,
    ActionSpec,
    IntegralityWitness,
    frobenius_chain,
    integrality_witness,
    invariants,
    minimal_generators,
    pth_power_bound_check,
    subspace_polys,
    verify_action,
)
from .commalg import BudgetExceeded, FPCommAlgebra, WorkspaceOverflow, format_poly
from .exactfield import FieldError, FieldSpec, Subspace, UnsupportedOperation
from .exprparse import ParseError
from .findim import DefinitionError, HopfAlgebraData, NotACoalgebra, verify_hopf_axioms
from .groups import GroupError
from .models import ModelError, cyclic_sign_action, example31, example31_closed_form_check, group_algebra, taft
from .structure import (
    Inconclusive,
    StructuralError,
    UnsupportedConfiguration,
    classify,
    coradical,
    coradical_filtration,
    filtration_checks,
    grouplike_epimorphism,
    grouplikes,
    ideal_generated,
    is_semisimple,
    quotient_hopf,
    verify_hopf_ideal,
)

EXIT_OK, EXIT_MATH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

INPUT_ERRORS = (
    ParseError,
    DefinitionError,
    ActionError,
    FieldError,
    GroupError,
    ModelError,
    NotACoalgebra,
    UnsupportedConfiguration,
    UnsupportedOperation,
    json.JSONDecodeError,
    OSError,
)
BUDGET_ERRORS = (BudgetExceeded, WorkspaceOverflow, Inconclusive)


class InputError(ValueError):
    pass


@dataclass
class Report:
    """Result tree: ``checks`` maps name -> {passed, witness}; ``results`` holds computed data."""

    command: str
    checks: dict = dc_field(default_factory=dict)
    results: dict = dc_field(default_factory=dict)

    def check(self, name: str, passed: bool, witness=None) -> None:
        self.checks[name] = {"passed": bool(passed), "witness": witness}

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks.values())

    def to_json(self) -> dict:
        return {"command": self.command, "passed": self.passed, "checks": self.checks, "results": self.results}

    @classmethod
    def from_json(cls, obj: dict) -> "Report":
        return cls(obj["command"], obj.get("checks", {}), obj.get("results", {}))


def render_report(report: Report, fmt: str = "text") -> str:
    if fmt == "machine":
        return json.dumps(report.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    lines = [f"== {report.command} =="]
    for name in sorted(report.checks):
        c = report.checks[name]
        line = f"  [{'PASS' if c['passed'] else 'FAIL'}] {name}"
        if not c["passed"] and c["witness"] is not None:
            line += f"  witness: {_text(c['witness'])}"
        lines.append(line)
    for key in sorted(report.results):
        lines.append(f"  {key}: {_text(report.results[key])}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> Report:
    return Report.from_json(json.loads(text))


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text(v[k])}" for k in sorted(v)) + "}"
    return "none" if v is None else str(v)


# -- loading --------------------------------------------------------------------------


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_hopf(path: str) -> HopfAlgebraData:
    try:
        return HopfAlgebraData.from_json(_load_json(path))
    except (DefinitionError, FieldError, ParseError) as exc:
        raise InputError(f"{path}: {exc}") from None


def load_algebra(path: str) -> FPCommAlgebra:
    try:
        return FPCommAlgebra.from_json(_load_json(path))
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, BudgetExceeded):
            raise
        raise InputError(f"{path}: {exc}") from None


def load_action(hopf_path: str, alg_path: str, action_path: str) -> ActionSpec:
    H = load_hopf(hopf_path)
    A = load_algebra(alg_path)
    try:
        return ActionSpec.from_json(_load_json(action_path), H, A)
    except (ActionError, ParseError) as exc:
        raise InputError(f"{action_path}: {exc}") from None


_FIELD_RE = re.compile(r"^(?:F_?(\d+)|GF\((\d+)\)|Q\(zeta_?(\d+)\)|cyclotomic:(\d+)|prime:(\d+))$")


def parse_field(text: str | None) -> FieldSpec | None:
    """Q, F_p / F3 / prime:3, Q(zeta_N) / cyclotomic:N."""
    if text is None:
        return None
    t = text.strip()
    if t in ("Q", "QQ", "rational"):
        return FieldSpec.rational()
    m = _FIELD_RE.match(t)
    if not m:
        raise InputError(f"unrecognized field {text!r}; use Q, F_p or Q(zeta_N)")
    p = m.group(1) or m.group(2) or m.group(5)
    if p:
        return FieldSpec.prime(int(p))
    return FieldSpec.cyclotomic(int(m.group(3) or m.group(4)))


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("bounds must be non-negative")
    return v


# -- hopf commands ---------------------------------------------------------------------


def cmd_hopf_verify(args) -> Report:
    H = load_hopf(args.file)
    rep = Report("hopf verify")
    for c in verify_hopf_axioms(H).checks:
        rep.check(c.name, c.passed, c.witness)
    rep.results["dim"] = H.dim
    rep.results["field"] = H.field.describe()
    return rep


def _names(H: HopfAlgebraData, vecs) -> list[str]:
    return [H.format_element(v) for v in vecs]


def cmd_hopf_analyze(args) -> Report:
    H = load_hopf(args.file)
    rep = Report("hopf analyze")
    axioms = verify_hopf_axioms(H)
    rep.check("hopf_axioms", axioms.passed, axioms.failed() or None)
    if not axioms.passed:
        return rep
    G = grouplikes(H)
    ss = is_semisimple(H)
    C0 = coradical(H)
    filt = coradical_filtration(H, C0=C0)
    cls = classify(H, C0, G)
    rep.results["grouplikes"] = _names(H, G.elements)
    rep.results["integral"] = H.format_element(ss.integral)
    rep.results["eps_integral"] = H.field.format(ss.eps_integral)
    rep.results["semisimple"] = ss.semisimple
    rep.results["coradical_dim"] = C0.dim
    rep.results["filtration_dims"] = filt.dims
    rep.results["pointed"] = cls.pointed
    rep.results["connected"] = cls.connected
    for name, ok in filtration_checks(H, filt).items():
        rep.check(f"filtration.{name}", ok)
    return rep


def _parse_elements(H: HopfAlgebraData, exprs: list[str]) -> list[list]:
    out = []
    for e in exprs:
        for part in e.split(","):
            if part.strip():
                try:
                    out.append(H.element(part))
                except ParseError as exc:
                    raise InputError(f"--gens {part.strip()!r}: {exc}") from None
    if not out:
        raise InputError("--gens needs at least one element")
    return out


def cmd_hopf_quotient(args) -> Report:
    H = load_hopf(args.file)
    rep = Report("hopf quotient")
    gens = _parse_elements(H, args.gens)
    J = ideal_generated(H, gens)
    flags = verify_hopf_ideal(H, J)
    rep.results["ideal_basis"] = _names(H, J.basis)
    rep.results["ideal_dim"] = J.dim
    for name, ok in flags.flags().items():
        rep.check(f"ideal.{name}", ok)
    if not flags.hopf_ideal:
        return rep
    Q, proj = quotient_hopf(H, J)
    G = grouplikes(Q)
    cls = classify(Q, None, G)
    rep.results["quotient_dim"] = Q.dim
    rep.results["quotient_basis"] = list(Q.basis)
    rep.results["quotient_grouplikes"] = _names(Q, G.elements)
    rep.results["quotient_pointed"] = cls.pointed
    rep.results["quotient_connected"] = cls.connected
    epi = grouplike_epimorphism(H, Q, proj)
    rep.check("grouplike_epimorphism", epi["images_grouplike"] and epi["surjective"], epi)
    if args.emit:
        Path(args.emit).write_text(json.dumps(Q.to_json(), sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return rep


# -- act commands ------------------------------------------------------------------------


def _polys(A, V: Subspace, d: int) -> list[str]:
    return [format_poly(p) for p in subspace_polys(A, V, d)]


def cmd_act_verify(args) -> Report:
    spec = load_action(args.hopf, args.algebra, args.action)
    rep = Report("act verify")
    res = verify_action(spec, args.degree)
    for name, ok in res.checks.items():
        rep.check(name, ok, res.counterexamples.get(name))
    rep.results["degree"] = args.degree
    rep.results["jump"] = spec.jump
    return rep


def cmd_act_invariants(args) -> Report:
    spec = load_action(args.hopf, args.algebra, args.action)
    rep = Report("act invariants")
    V = invariants(spec, args.sub, args.degree)
    rep.results["subset"] = args.sub
    rep.results["degree"] = args.degree
    rep.results["basis"] = _polys(spec.algebra, V, args.degree)
    rep.results["dim"] = V.dim
    return rep


def _witness_json(w) -> dict:
    return w.to_json()


def cmd_act_integrality(args) -> Report:
    spec = load_action(args.hopf, args.algebra, args.action)
    A = spec.algebra
    rep = Report("act integrality")
    try:
        a = A.normal_form(A.ring.parse(args.element))
    except ParseError as exc:
        raise InputError(f"--element: {exc}") from None
    if args.over == "gens":
        if not args.gens:
            raise InputError("--over gens needs --gens")
        try:
            sub = [A.ring.parse(g) for part in args.gens for g in part.split(",") if g.strip()]
        except ParseError as exc:
            raise InputError(f"--gens: {exc}") from None
    else:
        V = invariants(spec, args.over, args.degree)
        sub = minimal_generators(A, V, args.degree)
    w = integrality_witness(A, a, sub, args.monic_deg, args.coeff_deg)
    rep.results["over"] = args.over
    rep.results["subalgebra_generators"] = [format_poly(g) for g in sub]
    rep.results["witness"] = _witness_json(w)
    found = isinstance(w, IntegralityWitness)
    rep.check("witness_found", found, None if found else w.to_json()["result"])
    if found:
        rep.check("witness_reverifies", w.verify())
    return rep


# -- demos -----------------------------------------------------------------------------------


def cmd_demo_counterexample(args) -> Report:
    field = parse_field(args.field)
    bundle = example31(args.N, field, args.degree)
    if bundle.hopf.field.characteristic:
        raise InputError("the counterexample demo runs in characteristic 0; use 'demo charp' for F_p")
    spec, A, d = bundle.action, bundle.algebra, args.degree
    rep = Report("demo counterexample")
    va = verify_action(spec, min(d, 6))
    rep.check("action_verified", va.passed, va.counterexamples or None)
    cf = example31_closed_form_check(bundle, 12)
    rep.check("closed_form_oracle", cf.passed, cf.mismatches[:3] or None)
    AH = invariants(spec, "H", d)
    AG = invariants(spec, "G", d)
    got_H, got_G = _polys(A, AH, d), _polys(A, AG, d)
    want_H = [format_poly(p) for p in bundle.expected["A^H"]]
    want_G = [format_poly(p) for p in bundle.expected["A^G"]]
    rep.check("A^H = k", got_H == want_H, got_H)
    rep.check("A^G = k[y]", got_G == want_G, got_G)
    rep.check("A^H subset A^G", AG.contains_space(AH))
    y = A.ring.var("y")
    wH = integrality_witness(A, y, minimal_generators(A, AH, d), args.monic_deg, args.coeff_deg)
    wG = integrality_witness(A, y, minimal_generators(A, AG, d), args.monic_deg, args.coeff_deg)
    rep.check("y not integral over A^H (bounded)", not isinstance(wH, IntegralityWitness), _witness_json(wH))
    rep.check("y integral over A^G", isinstance(wG, IntegralityWitness), _witness_json(wG))
    rep.results.update(
        {
            "N": args.N,
            "field": bundle.hopf.field.describe(),
            "degree": d,
            "A^H": got_H,
            "A^G": got_G,
            "y over A^H": _witness_json(wH),
            "y over A^G": _witness_json(wG),
        }
    )
    return rep


def cmd_demo_charp(args) -> Report:
    p = args.p
    F = FieldSpec.prime(p)
    bundle = example31(args.N, F, args.degree)
    spec, A, d = bundle.action, bundle.algebra, args.degree
    rep = Report("demo charp")
    va = verify_action(spec, min(d, 6))
    rep.check("action_verified", va.passed, va.counterexamples or None)
    AH = invariants(spec, "H", d)
    got_H = _polys(A, AH, d)
    want = [format_poly(A.ring.monomial((k, 0))) for k in range(0, d + 1, p)]
    rep.check("A^H contains y^(kp)", all(w in got_H for w in want), got_H)
    y = A.ring.var("y")
    w = integrality_witness(A, y, minimal_generators(A, AH, d), args.monic_deg, args.coeff_deg)
    rep.check("y integral over A^H", isinstance(w, IntegralityWitness), _witness_json(w))
    chain = frobenius_chain(spec, p, args.depth, d)
    for r in chain.records:
        rep.check(f"chain: {r['check']}", r["passed"], r.get("counterexample"))
    pc = pth_power_bound_check(spec, p, min(d, 4))
    rep.check("(A^G)^(p^dim H) in A^H", pc.passed, pc.failures or None)
    rep.results.update(
        {
            "p": p,
            "N": args.N,
            "degree": d,
            "A^H": got_H,
            "y over A^H": _witness_json(w),
            "chain_levels": [[format_poly(g) for g in lvl] for lvl in chain.levels],
            "power_check": {"exponent": pc.exponent, "checked": pc.checked, "skipped": pc.skipped},
        }
    )
    return rep


def cmd_demo_dump(args) -> Report:
    field = parse_field(args.field)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files: dict[str, dict] = {}
    if args.model == "taft":
        files["hopf.json"] = taft(args.N, field).to_json()
    elif args.model == "sweedler":
        files["hopf.json"] = taft(2, field or FieldSpec.rational()).to_json()
    elif args.model == "group":
        files["hopf.json"] = group_algebra(args.N, field).to_json()
    elif args.model == "example31":
        b = example31(args.N, field, 8)
        files["hopf.json"] = b.hopf.to_json()
        files["algebra.json"] = b.algebra.to_json()
        files["action.json"] = b.action.to_json("hopf.json", "algebra.json")
    elif args.model == "sign":
        H, A, spec = cyclic_sign_action(field)
        files["hopf.json"] = H.to_json()
        files["algebra.json"] = A.to_json()
        files["action.json"] = spec.to_json("hopf.json", "algebra.json")
    for name, obj in files.items():
        (out / name).write_text(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    rep = Report("demo dump")
    rep.results["model"] = args.model
    rep.results["files"] = sorted(str(out / n) for n in files)
    return rep


# -- argument parsing ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfinv", description="Exact Hopf-algebra actions and invariants.")
    ap.add_argument("--version", action="version", version=f"hopfinv {__version__}")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    top = ap.add_subparsers(dest="group", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    hopf = top.add_parser("hopf", help="finite-dimensional Hopf algebras").add_subparsers(dest="cmd", required=True)
    p = hopf.add_parser("verify", help="check the Hopf axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_hopf_verify)
    common(p)
    p = hopf.add_parser("analyze", help="group-likes, integrals, coradical filtration")
    p.add_argument("file")
    p.set_defaults(func=cmd_hopf_analyze)
    common(p)
    p = hopf.add_parser("quotient", help="quotient by the ideal generated by elements")
    p.add_argument("file")
    p.add_argument("--gens", nargs="+", required=True, help="element expressions, e.g. 'g - 1'")
    p.add_argument("--emit", help="write the quotient definition to this path")
    p.set_defaults(func=cmd_hopf_quotient)
    common(p)

    act = top.add_parser("act", help="actions on commutative algebras").add_subparsers(dest="cmd", required=True)

    def act_files(p):
        p.add_argument("hopf")
        p.add_argument("algebra")
        p.add_argument("action")
        p.add_argument("--degree", type=_positive, default=8)
        common(p)

    p = act.add_parser("verify", help="check the module-algebra axioms")
    act_files(p)
    p.set_defaults(func=cmd_act_verify)
    p = act.add_parser("invariants", help="truncated invariant subspace")
    act_files(p)
    p.add_argument("--sub", choices=["H", "G"], default="H")
    p.set_defaults(func=cmd_act_invariants)
    p = act.add_parser("integrality", help="search for a monic dependence")
    act_files(p)
    p.add_argument("--element", required=True)
    p.add_argument("--over", choices=["H", "G", "gens"], default="H")
    p.add_argument("--gens", nargs="+")
    p.add_argument("--monic-deg", type=_positive, default=8)
    p.add_argument("--coeff-deg", type=_positive, default=8)
    p.set_defaults(func=cmd_act_integrality)

    demo = top.add_parser("demo", help="built-in models").add_subparsers(dest="cmd", required=True)
    p = demo.add_parser("counterexample", help="Taft algebra acting on k[y,z]/(z^2), characteristic 0")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--degree", type=_positive, default=8)
    p.add_argument("--field")
    p.add_argument("--monic-deg", type=_positive, default=8)
    p.add_argument("--coeff-deg", type=_positive, default=8)
    p.set_defaults(func=cmd_demo_counterexample)
    common(p)
    p = demo.add_parser("charp", help="the same action over F_p")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--degree", type=_positive, default=9)
    p.add_argument("--depth", type=_positive, default=1)
    p.add_argument("--monic-deg", type=_positive, default=8)
    p.add_argument("--coeff-deg", type=_positive, default=8)
    p.set_defaults(func=cmd_demo_charp)
    common(p)
    p = demo.add_parser("dump", help="write a model's definition files")
    p.add_argument("model", choices=["taft", "sweedler", "group", "example31", "sign"])
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--field")
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_demo_dump)
    common(p)
    return ap


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        report = args.func(args)
    except InputError as exc:
        print(f"hopfinv: error: {exc}", file=stderr)
        return EXIT_INPUT
    except BUDGET_ERRORS as exc:
        print(f"hopfinv: resource bound exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except StructuralError as exc:
        print(f"hopfinv: check failed: {exc}", file=stderr)
        return EXIT_MATH
    except INPUT_ERRORS as exc:
        print(f"hopfinv: error: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write(render_report(report, "machine" if args.json else "text"))
    return EXIT_OK if report.passed else EXIT_MATH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

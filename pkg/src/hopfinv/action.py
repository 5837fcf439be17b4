"""Hopf-algebra actions on finitely presented commutative algebras.

An action is fixed by the images e_i . y_v of the algebra generators and is
extended through h(y_v m) = sum (h_(1) . y_v)(h_(2) . m), h . 1 = eps(h) 1.
All computations happen on degree-truncated workspaces; an element of degree
<= d is mapped into degree <= d(1 + J) where J is the action's degree jump.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .commalg import (
    BudgetExceeded,
    FPCommAlgebra,
    Poly,
    WorkspaceOverflow,
    format_poly,
    gen_products,
    monomials_up_to,
    subalgebra_elements,
)
from .exactfield import Subspace, mat_kernel, solve_linear
from .exprparse import ParseError
from .findim import HopfAlgebraData

DEFAULT_WITNESS_BUDGET = 50_000


class ActionError(ValueError):
    pass


def witness_budget() -> int:
    return int(os.environ.get("HOPFINV_WITNESS_BUDGET", DEFAULT_WITNESS_BUDGET))


class ActionSpec:
    """Total map (Hopf basis index, variable index) -> e_i . y_v, with memoized extension."""

    def __init__(self, hopf: HopfAlgebraData, algebra: FPCommAlgebra, values: dict[tuple[int, int], Poly]):
        n, s = hopf.dim, len(algebra.vars)
        missing = [(hopf.basis[i], algebra.vars[v]) for i in range(n) for v in range(s) if (i, v) not in values]
        if missing:
            raise ActionError(f"action table is not total; missing (basis, var) pairs {missing[:5]}")
        if hopf.field != algebra.field:
            raise ActionError("Hopf algebra and commutative algebra are over different fields")
        self.hopf = hopf
        self.algebra = algebra
        self.values = {k: algebra.normal_form(v) for k, v in values.items()}
        self._memo: dict[tuple[int, tuple], Poly] = {}

    @property
    def jump(self) -> int:
        """J = max over (i, v) of max(0, deg(e_i . y_v) - 1)."""
        return max((max(0, p.degree - 1) for p in self.values.values()), default=0)

    def target_degree(self, d: int) -> int:
        return d * (1 + self.jump)

    def unit_values_ok(self) -> bool:
        A = self.algebra
        for v in range(len(A.vars)):
            acc = A.ring.zero()
            for i, c in enumerate(self.hopf.unit):
                if c:
                    acc = acc + self.values[(i, v)].scale(c)
            if A.normal_form(acc - A.ring.var(v)).terms:
                return False
        return True

    # -- the extension -------------------------------------------------------
    def act_monomial(self, i: int, exp: tuple) -> Poly:
        key = (i, exp)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        # peel the first variable repeatedly; fill the memo bottom-up
        path = [exp]
        cur = exp
        while any(cur):
            v = next(k for k, x in enumerate(cur) if x)
            cur = cur[:v] + (cur[v] - 1,) + cur[v + 1 :]
            path.append(cur)
        A = self.algebra
        H = self.hopf
        for m in reversed(path):
            if all((j, m) in self._memo for j in range(H.dim)):
                continue
            if not any(m):
                for j in range(H.dim):
                    self._memo[(j, m)] = A.ring.const(H.counit[j])
                continue
            v = next(k for k, x in enumerate(m) if x)
            rest = m[:v] + (m[v] - 1,) + m[v + 1 :]
            for j in range(H.dim):
                acc = A.ring.zero()
                for a, b, c in H.comult_terms(j):
                    left = self.values[(a, v)]
                    if not left:
                        continue
                    right = self._memo[(b, rest)]
                    if right:
                        acc = acc + (left * right).scale(c)
                self._memo[(j, m)] = A.normal_form(acc)
        return self._memo[key]

    def act(self, i: int, f: Poly, max_degree: int | None = None) -> Poly:
        """e_i . f, reduced; raises WorkspaceOverflow if the result leaves degree max_degree."""
        A = self.algebra
        acc = A.ring.zero()
        for e, c in f.terms.items():
            r = self.act_monomial(i, e)
            if r:
                acc = acc + r.scale(c)
        acc = A.normal_form(acc)
        if max_degree is not None and acc.degree > max_degree:
            need = self.target_degree(max(f.degree, 0))
            raise WorkspaceOverflow(
                f"e_{self.hopf.basis[i]} . f has degree {acc.degree} beyond workspace {max_degree}; need d' >= {need}",
                required=need,
            )
        return acc

    def act_element(self, h: Sequence, f: Poly) -> Poly:
        A = self.algebra
        acc = A.ring.zero()
        for i, c in enumerate(h):
            if c:
                acc = acc + self.act(i, f).scale(c)
        return acc

    # -- serialization -----------------------------------------------------------
    def to_json(self, hopf_ref: str | None = None, algebra_ref: str | None = None) -> dict:
        entries = []
        for i, name in enumerate(self.hopf.basis):
            for v, var in enumerate(self.algebra.vars):
                entries.append({"basis": name, "var": var, "value": format_poly(self.values[(i, v)])})
        return {"hopf": hopf_ref, "algebra": algebra_ref, "action": entries}

    @classmethod
    def from_json(cls, obj: dict, hopf: HopfAlgebraData, algebra: FPCommAlgebra) -> "ActionSpec":
        if not isinstance(obj, dict) or not isinstance(obj.get("action"), list):
            raise ActionError("action definition needs an 'action' list")
        values = {}
        for k, entry in enumerate(obj["action"]):
            try:
                b = entry["basis"]
                i = b if isinstance(b, int) else hopf.basis.index(b)
                v = algebra.vars.index(entry["var"])
                values[(i, v)] = algebra.ring.parse(entry["value"])
            except (KeyError, TypeError) as exc:
                raise ActionError(f"action[{k}]: missing or malformed key {exc}") from None
            except ValueError as exc:
                if isinstance(exc, ParseError):
                    raise ParseError(f"action[{k}].value: {exc}") from None
                raise ActionError(f"action[{k}]: unknown basis element or variable ({exc})") from None
        return cls(hopf, algebra, values)


def action_from_generators(
    H: HopfAlgebraData,
    A: FPCommAlgebra,
    generators: dict[str, Sequence],
    gen_values: dict[str, dict[str, Poly]],
) -> ActionSpec:
    """Extend an action given on algebra generators of H to every basis element.

    Each generator's coproduct must involve only the unit and generators; basis
    elements are written as combinations of words in the generators.
    """
    F = H.field
    n = H.dim
    names = list(generators)
    gvecs = {g: [F(c) for c in generators[g]] for g in names}
    unit = [F(c) for c in H.unit]
    allowed = [unit] + [gvecs[g] for g in names]
    allowed_space = Subspace.span(allowed, n, F)
    for g in names:
        d = H.comul(gvecs[g])
        for jk, c in enumerate(d):
            if c:
                j, k = divmod(jk, n)
                if not (allowed_space.contains(H.basis_vector(j)) and allowed_space.contains(H.basis_vector(k))):
                    raise ActionError(f"coproduct of generator {g} leaves span(1, generators)")

    def expand(vec) -> list[tuple[str | None, object]]:
        """Write a vector supported on unit/generator basis elements as (generator or None, coeff)."""
        out = []
        for idx, c in enumerate(vec):
            if not c:
                continue
            e = H.basis_vector(idx)
            if e == unit:
                out.append((None, c))
            else:
                g = next((g for g in names if gvecs[g] == e), None)
                if g is None:
                    raise ActionError("generators must be basis vectors")
                out.append((g, c))
        return out

    delta = {}
    for g in names:
        terms = []
        d = H.comul(gvecs[g])
        for jk, c in enumerate(d):
            if c:
                j, k = divmod(jk, n)
                for gl, cl in expand(H.basis_vector(j)):
                    for gr, cr in expand(H.basis_vector(k)):
                        terms.append((gl, gr, c * cl * cr))
        delta[g] = terms
    eps = {g: H.eps(gvecs[g]) for g in names}
    nvars = len(A.vars)
    var_values = {g: [A.normal_form(gen_values[g][A.vars[v]]) for v in range(nvars)] for g in names}
    memo: dict = {}

    def gen_act_mono(g, exp):
        key = (g, exp)
        if key in memo:
            return memo[key]
        if not any(exp):
            r = A.ring.const(eps[g])
        else:
            v = next(k for k, x in enumerate(exp) if x)
            rest = exp[:v] + (exp[v] - 1,) + exp[v + 1 :]
            acc = A.ring.zero()
            for gl, gr, c in delta[g]:
                left = A.ring.var(v) if gl is None else var_values[gl][v]
                right = A.ring.monomial(rest) if gr is None else gen_act_mono(gr, rest)
                acc = acc + (left * right).scale(c)
            r = A.normal_form(acc)
        memo[key] = r
        return r

    def gen_act(g, f: Poly) -> Poly:
        acc = A.ring.zero()
        for e, c in f.terms.items():
            acc = acc + gen_act_mono(g, e).scale(c)
        return A.normal_form(acc)

    # words in the generators, breadth first, until they span H
    words: list[tuple[tuple[str, ...], list]] = [((), unit)]
    span = Subspace.span([unit], n, F)
    frontier = [((), unit)]
    while frontier and span.dim < n:
        nxt = []
        for w, vec in frontier:
            for g in names:
                nv = H.mul(vec, gvecs[g])
                if not span.contains(nv):
                    span = span + Subspace.span([nv], n, F)
                    words.append((w + (g,), nv))
                    nxt.append((w + (g,), nv))
        frontier = nxt
    if span.dim < n:
        raise ActionError("generators do not generate H as an algebra")
    W = [vec for _, vec in words]
    values = {}
    for i in range(n):
        sol = solve_linear([[W[c][r] for c in range(len(W))] for r in range(n)], H.basis_vector(i), F)
        coeffs = sol[0]
        for v in range(nvars):
            acc = A.ring.zero()
            for (w, _), c in zip(words, coeffs):
                if not c:
                    continue
                f = A.ring.var(v)
                for g in reversed(w):  # word g1 g2 ... gk acts as g1(g2(...gk(f)))
                    f = gen_act(g, f)
                acc = acc + f.scale(c)
            values[(i, v)] = A.normal_form(acc)
    return ActionSpec(H, A, values)


# -- matrices and verification ------------------------------------------------------


@dataclass
class ActionMatrices:
    degree: int
    target_degree: int
    source_monomials: list[tuple]
    target_monomials: list[tuple]
    images: list[list[list]]  # images[i][s] = target coordinates of e_i . m_s


def action_matrices(spec: ActionSpec, d: int) -> ActionMatrices:
    A = spec.algebra
    src = A.workspace(d)
    tgt = A.workspace(spec.target_degree(d))
    images = []
    for i in range(spec.hopf.dim):
        images.append([tgt.vector(spec.act_monomial(i, m), reduced=True) for m in src.monomials])
    return ActionMatrices(d, tgt.degree, src.monomials, tgt.monomials, images)


@dataclass
class ActionReport:
    checks: dict[str, bool]
    counterexamples: dict[str, dict] = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_action(spec: ActionSpec, d: int) -> ActionReport:
    """Relations annihilate, module axiom, unit axiom and multiplicativity on degree <= d."""
    H, A = spec.hopf, spec.algebra
    R = A.ring
    n = H.dim
    checks: dict[str, bool] = {}
    cex: dict[str, dict] = {}
    std = A.standard_monomials(d)
    bh = H.basis

    # (1) relations: e_i . (m r) reduces to 0 for relation lifts r and multipliers m
    ok = True
    for r in spec.algebra.relations:
        mults = [e for e in monomials_up_to(R.nvars, max(0, d - r.degree))] if r.degree <= d else [(0,) * R.nvars]
        for m in mults:
            f = r.mul_term(m, R.field.one)
            for i in range(n):
                if spec.act(i, f).terms:
                    ok = False
                    cex["relations"] = {"h": bh[i], "element": format_poly(f), "image": format_poly(spec.act(i, f))}
                    break
            if not ok:
                break
        if not ok:
            break
    checks["relations"] = ok

    # (2) module axiom: e_i . (e_j . m) = (e_i e_j) . m
    ok = True
    for m in std:
        mono = R.monomial(m)
        inner = [spec.act(j, mono) for j in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = spec.act(i, inner[j])
                rhs = spec.act_element(H.mult[i][j], mono)
                if not A.normal_form(lhs - rhs).is_zero():
                    ok = False
                    cex["module"] = {"h": f"({bh[i]})*({bh[j]})", "element": format_poly(mono)}
                    break
            if not ok:
                break
        if not ok:
            break
    checks["module"] = ok

    # (3) unit axiom: 1_H . m = m and h . 1 = eps(h)
    ok = spec.unit_values_ok()
    if not ok:
        cex["unit"] = {"h": "1", "element": "generators"}
    else:
        for m in std:
            mono = R.monomial(m)
            if not A.normal_form(spec.act_element(H.unit, mono) - mono).is_zero():
                ok = False
                cex["unit"] = {"h": "1", "element": format_poly(mono)}
                break
    checks["unit"] = ok

    # (4) multiplicativity h(ab) = sum (h1 a)(h2 b) on pairs of standard monomials
    ok = True
    for a in std:
        for b in std:
            if sum(a) + sum(b) > d:
                continue
            pa, pb = R.monomial(a), R.monomial(b)
            prod = A.normal_form(pa * pb)
            for i in range(n):
                lhs = spec.act(i, prod)
                rhs = R.zero()
                for j, k, c in H.comult_terms(i):
                    rhs = rhs + (spec.act(j, pa) * spec.act(k, pb)).scale(c)
                if not A.normal_form(lhs - rhs).is_zero():
                    ok = False
                    cex["multiplicative"] = {"h": bh[i], "element": f"({format_poly(pa)})*({format_poly(pb)})"}
                    break
            if not ok:
                break
        if not ok:
            break
    checks["multiplicative"] = ok
    return ActionReport(checks, cex)


# -- invariants ------------------------------------------------------------------------


def resolve_subset(spec: ActionSpec, subset) -> list[list]:
    H = spec.hopf
    if subset in ("H", "full", None):
        return [H.basis_vector(i) for i in range(H.dim)]
    if subset in ("G", "grouplikes"):
        from .structure import grouplikes

        return grouplikes(H).elements
    return [list(h) for h in subset]


def invariants(spec: ActionSpec, subset="H", d: int = 8) -> Subspace:
    """{a of degree <= d : h . a = eps(h) a for every chosen h}, in standard-monomial coordinates."""
    H, A = spec.hopf, spec.algebra
    F = A.field
    elems = resolve_subset(spec, subset)
    src = A.workspace(d)
    D = spec.target_degree(d)
    tgt = A.workspace(D)
    rows = []
    images_by_basis = {}
    for h in elems:
        cols = []
        e = H.eps(h)
        for s, m in enumerate(src.monomials):
            img = A.ring.zero()
            for i, c in enumerate(h):
                if c:
                    key = (i, m)
                    if key not in images_by_basis:
                        images_by_basis[key] = spec.act_monomial(i, m)
                    img = img + images_by_basis[key].scale(c)
            vec = tgt.vector(img, reduced=True)
            vec[tgt.index[m]] = vec[tgt.index[m]] - e
            cols.append(vec)
        for t in range(tgt.dim):
            row = [cols[s][t] for s in range(src.dim)]
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.full(src.dim, F)
    return mat_kernel(rows, src.dim, F)


def subspace_polys(A: FPCommAlgebra, V: Subspace, d: int) -> list[Poly]:
    ws = A.workspace(d)
    return [ws.poly(v) for v in V.basis]


def embed(V: Subspace, d_from: int, d_to: int, A: FPCommAlgebra) -> Subspace:
    src, tgt = A.workspace(d_from), A.workspace(d_to)
    vecs = []
    for v in V.basis:
        w = [A.field.zero] * tgt.dim
        for m, c in zip(src.monomials, v):
            w[tgt.index[m]] = c
        vecs.append(w)
    return Subspace.span(vecs, tgt.dim, A.field) if vecs else Subspace.zero(tgt.dim, A.field)


@dataclass
class TraceImage:
    integral: list
    span: Subspace
    invariants: Subspace
    degree: int
    included: bool
    equal: bool


def trace_image(spec: ActionSpec, d: int, integral: Sequence | None = None) -> TraceImage:
    """span{t . m : deg m <= d} and its inclusion in A^H (compared in degree <= d(1+J))."""
    from .structure import left_integral_space

    H, A = spec.hopf, spec.algebra
    if integral is None:
        L = left_integral_space(H)
        integral = list(L.basis[0]) if L.dim else H.zero()
    D = spec.target_degree(d)
    tgt = A.workspace(D)
    vecs = [tgt.vector(spec.act_element(integral, A.ring.monomial(m)), reduced=True) for m in A.standard_monomials(d)]
    T = Subspace.span(vecs, tgt.dim, A.field)
    inv = invariants(spec, "H", D)
    return TraceImage(list(integral), T, inv, D, inv.contains_space(T), T == inv)


# -- integrality -----------------------------------------------------------------------


@dataclass
class IntegralityWitness:
    """a^D + sum_i b_i a^i = 0 with each b_i a combination of products of ``gens``."""

    algebra: FPCommAlgebra
    element: Poly
    degree: int
    gens: list[Poly]
    coefficients: list[dict[tuple, object]]  # b_i as {exponent vector over gens: scalar}

    def coefficient(self, i: int) -> Poly:
        A = self.algebra
        acc = A.ring.zero()
        for exp, c in self.coefficients[i].items():
            term = A.ring.const(c)
            for g, k in zip(self.gens, exp):
                if k:
                    term = term * g**k
            acc = acc + term
        return A.normal_form(acc)

    def verify(self) -> bool:
        A = self.algebra
        total = self.element**self.degree
        for i in range(self.degree):
            total = total + self.coefficient(i) * self.element**i
        return A.normal_form(total).is_zero()

    def format(self, var: str = "T") -> str:
        parts = [(self.degree, "1")]
        for i in range(self.degree - 1, -1, -1):
            b = self.coefficient(i)
            if b:
                parts.append((i, format_poly(b)))
        out = ""
        for k, (i, coeff) in enumerate(parts):
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            multi = " + " in coeff or " - " in coeff.lstrip("-")
            neg = coeff.startswith("-") and not multi
            mag = coeff[1:] if neg else coeff
            if multi:
                body = f"({mag})*{mono}" if mono else f"({mag})"
            elif not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            out = (("-" if neg else "") + body) if k == 0 else out + (" - " if neg else " + ") + body
        return out

    def to_json(self) -> dict:
        F = self.algebra.field
        return {
            "element": format_poly(self.element),
            "degree": self.degree,
            "polynomial": self.format(),
            "coefficients": [format_poly(self.coefficient(i)) for i in range(self.degree)],
            "generators": [format_poly(g) for g in self.gens],
            "coefficient_expressions": [
                {",".join(map(str, e)): F.format(c) for e, c in sorted(b.items())} for b in self.coefficients
            ],
        }


@dataclass
class NoWitness:
    """No monic dependence exists with monic degree <= D and coefficients of generator-degree <= e."""

    element: Poly
    monic_bound: int
    coeff_bound: int

    def to_json(self) -> dict:
        return {
            "element": format_poly(self.element),
            "result": f"none up to ({self.monic_bound}, {self.coeff_bound})",
            "monic_bound": self.monic_bound,
            "coeff_bound": self.coeff_bound,
        }


def integrality_witness(
    A: FPCommAlgebra,
    a,
    sub_gens: Sequence,
    D: int = 8,
    e: int = 8,
    budget: int | None = None,
) -> IntegralityWitness | NoWitness:
    """Lowest-degree monic dependence of ``a`` over the subalgebra generated by ``sub_gens``."""
    budget = witness_budget() if budget is None else budget
    a = A.normal_form(A(a))
    gens = [A.normal_form(A(g)) for g in sub_gens]
    gens = [g for g in gens if not g.is_constant()]
    products = subalgebra_elements(A, gens, e)
    exps = [exp for exp, _ in products]
    span_polys = [p for _, p in products]
    max_gen = max((g.degree for g in gens), default=0)
    ws = A.workspace(max(0, D * max(a.degree, 0) + e * max_gen))
    powers = [A.ring.one()]
    for _ in range(D):
        powers.append(A.normal_form(powers[-1] * a))
    col_vecs_by_power: dict[int, list[list]] = {}
    for Dp in range(1, D + 1):
        unknowns = Dp * len(span_polys)
        if unknowns > budget:
            raise BudgetExceeded(f"witness search at monic degree {Dp} needs {unknowns} unknowns (> {budget})")
        for i in range(Dp):
            if i not in col_vecs_by_power:
                col_vecs_by_power[i] = [ws.vector(A.normal_form(b * powers[i]), reduced=True) for b in span_polys]
        cols = [v for i in range(Dp) for v in col_vecs_by_power[i]]
        rhs = [-c for c in ws.vector(powers[Dp], reduced=True)]
        M = [[col[t] for col in cols] for t in range(ws.dim)]
        sol = solve_linear(M, rhs, A.field, ncols=len(cols))
        if sol is None:
            continue
        x0 = sol[0]
        coeffs = []
        m = len(span_polys)
        for i in range(Dp):
            coeffs.append({exps[l]: x0[i * m + l] for l in range(m) if x0[i * m + l]})
        w = IntegralityWitness(A, a, Dp, gens, coeffs)
        if not w.verify():
            raise ArithmeticError("integrality witness failed re-verification")
        return w
    return NoWitness(a, D, e)


# -- characteristic p chain ---------------------------------------------------------------


def minimal_generators(A: FPCommAlgebra, V: Subspace, d: int) -> list[Poly]:
    """Algebra generators of the truncated subalgebra spanned by V, chosen degree by degree."""
    ws = A.workspace(d)
    F = A.field
    if V.ambient != ws.dim:
        raise ValueError(f"subspace lives in dimension {V.ambient}, not the degree-{d} workspace ({ws.dim})")
    gens: list[Poly] = []
    for deg in range(1, d + 1):
        mask = [i for i, m in enumerate(ws.monomials) if sum(m) > deg]
        layer = [v for v in V.basis if not any(v[i] for i in mask)]
        if not layer:
            continue
        max_exp = deg
        generated = [p for _, p in subalgebra_elements(A, gens, max_exp) if p.degree <= deg]
        S = Subspace.span([ws.vector(p, reduced=True) for p in generated] or [[F.zero] * ws.dim], ws.dim, F)
        for v in layer:
            if not S.contains(v):
                gens.append(ws.poly(v))
                S = S + Subspace.span([v], ws.dim, F)
    return gens


@dataclass
class FrobeniusChain:
    levels: list[list[Poly]]  # levels[0] = generators of A_0 = A^G, levels[m+1] = p-th powers
    records: list[dict]

    @property
    def passed(self) -> bool:
        return all(r["passed"] for r in self.records)


def annihilates(spec: ActionSpec, h: Sequence, f: Poly) -> bool:
    return spec.act_element(h, f).is_zero()


def frobenius_chain(spec: ActionSpec, p: int, depth: int, d: int = 8, hint=None) -> FrobeniusChain:
    """A_0 = A^G (generators up to degree d), A_{m+1} = A_m^p; checks H_i^+ kills A_i and each step is integral."""
    from .structure import coradical_filtration, filtration_plus, grouplikes

    H, A = spec.hopf, spec.algebra
    F = A.field
    if F.characteristic == 0:
        raise ActionError("the Frobenius chain needs positive characteristic")
    if p != F.characteristic:
        raise ActionError(f"p = {p} does not match the characteristic {F.characteristic}")
    G = grouplikes(H)
    AG = invariants(spec, G.elements, d)
    levels = [minimal_generators(A, AG, d)]
    for _ in range(depth):
        levels.append([A.normal_form(g**p) for g in levels[-1]])
    filt = coradical_filtration(H, hint)
    records = []
    # A over A_0: every variable is integral over the G-invariants (finite group)
    for v in range(len(A.vars)):
        w = integrality_witness(A, A.ring.var(v), levels[0], D=len(G), e=len(G))
        records.append(
            {
                "check": f"{A.vars[v]} integral over A_0",
                "passed": isinstance(w, IntegralityWitness),
                "witness": w.format() if isinstance(w, IntegralityWitness) else None,
            }
        )
    for level, gens in enumerate(levels):
        Hplus = filtration_plus(H, level, filt)
        bad = [
            (H.format_element(x), format_poly(g))
            for x in Hplus.basis
            for g in gens
            if not annihilates(spec, x, g)
        ]
        records.append(
            {
                "check": f"H_{level}^+ annihilates A_{level}",
                "passed": not bad,
                "generators": [format_poly(g) for g in gens],
                "counterexample": bad[0] if bad else None,
            }
        )
        if level + 1 < len(levels):
            ws = []
            ok = True
            for g in gens:
                w = integrality_witness(A, g, levels[level + 1], D=p, e=1)
                if isinstance(w, IntegralityWitness):
                    ws.append(w.format())
                else:
                    ok = False
            records.append({"check": f"A_{level} integral over A_{level + 1}", "passed": ok, "witnesses": ws})
    return FrobeniusChain(levels, records)


@dataclass
class PowerCheck:
    applicable: bool
    exponent: int | None
    checked: list[str]
    skipped: list[str]
    failures: list[str]

    @property
    def passed(self) -> bool:
        return self.applicable and not self.failures


def pth_power_bound_check(spec: ActionSpec, p: int, d: int, max_degree: int = 256) -> PowerCheck:
    """a^(p^dim H) is H-invariant for every basis element a of the degree-<=d G-invariants (where feasible)."""
    from .structure import grouplikes

    H, A = spec.hopf, spec.algebra
    if A.field.characteristic == 0 or p != A.field.characteristic:
        return PowerCheck(False, None, [], [], [])
    q = p**H.dim
    G = grouplikes(H)
    AG = invariants(spec, G.elements, d)
    checked, skipped, failures = [], [], []
    for a in subspace_polys(A, AG, d):
        label = format_poly(a)
        if max(a.degree, 0) * q > max_degree:
            skipped.append(f"{label}: degree {a.degree * q} exceeds workspace {max_degree}")
            continue
        P = A.normal_form(a**q) if a.degree > 0 else a
        ok = all(
            A.normal_form(spec.act(i, P) - P.scale(H.counit[i])).is_zero() for i in range(H.dim)
        )
        (checked if ok else failures).append(label)
    return PowerCheck(True, q, checked, skipped, failures)

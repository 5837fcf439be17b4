"""Structural analysis of a verified Hopf algebra.

Group-likes are found by solving Delta g = g (x) g, eps(g) = 1 exactly (over
Q(zeta_N) after restriction of scalars to Q) with a lexicographic Gröbner basis
and back-substitution.  The coradical comes from the radical of the trace form
of the dual algebra, or from a verified hint in small positive characteristic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .commalg import Poly, PolyRing, buchberger
from .exactfield import QQ, FieldSpec, Subspace, UniPoly, mat_inverse, mat_kernel, roots_in_field
from .findim import HopfAlgebraData, dual_algebra, verify_hopf_axioms


class StructuralError(RuntimeError):
    """Data violates a structural expectation (e.g. integral space not one-dimensional)."""


class UnsupportedConfiguration(RuntimeError):
    pass


class Inconclusive(RuntimeError):
    """The group-like solver could not extract a triangular solution."""


# -- group-likes ---------------------------------------------------------------


@dataclass
class GroupLikeSet:
    elements: list[list]
    table: list[list[int]]
    inverses: list[int]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _kpoly_mul(P: list[Poly], Q: list[Poly], field: FieldSpec) -> list[Poly]:
    """Product of Q(zeta)-valued polynomials stored as coefficient lists in powers of zeta."""
    d = len(P)
    ring = P[0].ring
    prod = [ring.zero() for _ in range(2 * d - 1)]
    for s1, a in enumerate(P):
        if a:
            for s2, b in enumerate(Q):
                if b:
                    prod[s1 + s2] = prod[s1 + s2] + a * b
    out = prod[:d]
    if d > 1:
        ctx = field.ctx
        for k in range(d, 2 * d - 1):
            if prod[k]:
                row = ctx._power_row(k)
                for s in range(d):
                    if row[s]:
                        out[s] = out[s] + prod[k].scale(row[s])
    return out


def _kconst(c, field: FieldSpec, ring: PolyRing) -> list[Poly]:
    if field.kind == "cyclotomic":
        return [ring.const(x) for x in field(c).c]
    return [ring.const(c)]


def grouplike_equations(H: HopfAlgebraData) -> tuple[PolyRing, list[Poly], int]:
    """Polynomial system over the prime field (Q or F_p) whose rational points are the group-likes.

    Returns (ring, equations, phi) where coordinate s of g_i is variable i*phi + s.
    """
    F = H.field
    n = H.dim
    if F.kind == "cyclotomic":
        phi = F.ctx.deg
        base = QQ
    else:
        phi = 1
        base = F
    names = [f"g{i}" if phi == 1 else f"g{i}_{s}" for i in range(n) for s in range(phi)]
    ring = PolyRing(base, names, "lex")
    g = [[ring.var(i * phi + s) for s in range(phi)] for i in range(n)]

    def scal(c, v):
        return _kpoly_mul(_kconst(c, F, ring), v, F) if phi > 1 else [v[0].scale(c)]

    def add(u, v):
        return [a + b for a, b in zip(u, v)]

    eqs: list[Poly] = []
    # Delta(g) - g (x) g = 0, coordinate by coordinate
    lin: dict[tuple[int, int], list[Poly]] = {}
    for i in range(n):
        for j, k, c in H.comult_terms(i):
            cur = lin.get((j, k), [ring.zero()] * phi)
            lin[(j, k)] = add(cur, scal(c, g[i]))
    for j in range(n):
        for k in range(n):
            quad = _kpoly_mul(g[j], g[k], F) if phi > 1 else [g[j][0] * g[k][0]]
            rhs = lin.get((j, k), [ring.zero()] * phi)
            for a, b in zip(rhs, quad):
                e = a - b
                if e:
                    eqs.append(e)
    # eps(g) = 1
    e = [ring.zero()] * phi
    for i in range(n):
        if H.counit[i]:
            e = add(e, scal(H.counit[i], g[i]))
    e = add(e, _kconst(-1, F, ring))
    eqs.extend(x for x in e if x)
    return ring, eqs, phi


def solve_zero_dimensional(ring: PolyRing, eqs: Sequence[Poly], budget: int | None = None) -> list[list]:
    """All points over the coefficient field (Q or F_p) of a zero-dimensional system.

    Lex Gröbner basis, then for the last remaining variable take the roots of
    the univariate basis element, substitute each and recurse.
    """
    if ring.order != "lex":
        ring = ring.with_order("lex")
    nv = ring.nvars
    solutions: list[list] = []

    def rec(system: list[Poly], assigned: dict[int, object]):
        G = buchberger(ring, system, budget)
        if len(G) == 1 and G[0].is_constant() and G[0].terms:
            return
        remaining = [v for v in range(nv) if v not in assigned]
        if not remaining:
            if not G:
                solutions.append([assigned[v] for v in range(nv)])
            return
        v = remaining[-1]
        uni = [g for g in G if g.variables_used() <= {v}]
        if not uni:
            raise Inconclusive(f"no univariate basis element in variable {ring.vars[v]}; system is not zero-dimensional")
        f = min(uni, key=lambda p: p.degree)
        coeffs = [f.ring.field.zero] * (f.degree + 1)
        for e, c in f.terms.items():
            coeffs[e[v]] = c
        for r in roots_in_field(UniPoly(coeffs, ring.field)):
            sub = [g.substitute(v, r) for g in G]
            sub = [p for p in sub if p.terms]
            rec(sub, {**assigned, v: r})

    rec(list(eqs), {})
    return solutions


def _random_unimodular(nv: int, field: FieldSpec, rng: random.Random) -> list[list]:
    M = [[field.one if i == j else field.zero for j in range(nv)] for i in range(nv)]
    for i in range(nv - 1):
        M[i][nv - 1] = field(rng.randint(1, 7))
    return M


def _solve_with_retry(ring: PolyRing, eqs: list[Poly], budget: int | None) -> list[list]:
    try:
        return solve_zero_dimensional(ring, eqs, budget)
    except Inconclusive:
        pass
    # one retry after x = M x' with a random rational shear
    rng = random.Random(20240601)
    nv = ring.nvars
    M = _random_unimodular(nv, ring.field, rng)
    images = [Poly({}, ring) for _ in range(nv)]
    for i in range(nv):
        for j in range(nv):
            if M[i][j]:
                images[i] = images[i] + ring.var(j).scale(M[i][j])
    sub = [compose(p, images) for p in eqs]
    try:
        pts = solve_zero_dimensional(ring, sub, budget)
    except Inconclusive as exc:
        raise Inconclusive(f"group-like solver inconclusive after coordinate change: {exc}") from None
    out = []
    for x in pts:
        out.append([sum((M[i][j] * x[j] for j in range(nv)), ring.field.zero) for i in range(nv)])
    return out


def compose(p: Poly, images: Sequence[Poly]) -> Poly:
    """Substitute variable i -> images[i]."""
    ring = p.ring
    out = ring.zero()
    for e, c in p.terms.items():
        term = ring.const(c)
        for i, k in enumerate(e):
            if k:
                term = term * images[i] ** k
        out = out + term
    return out


def is_grouplike(H: HopfAlgebraData, g: Sequence) -> bool:
    n = H.dim
    d = H.comul(g)
    if H.eps(g) != 1:
        return False
    return all(d[j * n + k] == g[j] * g[k] for j in range(n) for k in range(n))


def grouplikes(H: HopfAlgebraData, budget: int | None = None) -> GroupLikeSet:
    """All k-rational group-like elements of H, with multiplication and inverse tables."""
    F = H.field
    ring, eqs, phi = grouplike_equations(H)
    pts = _solve_with_retry(ring, eqs, budget)
    elems: list[list] = []
    for x in pts:
        if phi > 1:
            v = [F.ctx.element(x[i * phi : (i + 1) * phi]) for i in range(H.dim)]
        else:
            v = [F(c) for c in x]
        if not is_grouplike(H, v):
            raise StructuralError("solver returned a point that is not group-like")
        if v not in elems:
            elems.append(v)
    unit = [F(u) for u in H.unit]
    elems.sort(key=lambda v: (v != unit, _support_key(v)))
    idx = {tuple(v): i for i, v in enumerate(elems)}
    table = []
    for a in elems:
        row = []
        for b in elems:
            prod = tuple(F(c) for c in H.mul(a, b))
            if prod not in idx:
                raise StructuralError("group-like set is not closed under multiplication")
            row.append(idx[prod])
        table.append(row)
    e = idx[tuple(unit)]
    inverses = [row.index(e) for row in table]
    return GroupLikeSet(elems, table, inverses)


def _support_key(v):
    return tuple((i, str(c)) for i, c in enumerate(v) if c)


# -- integrals -------------------------------------------------------------------


def left_integral_space(H: HopfAlgebraData) -> Subspace:
    """Kernel of t -> (e_i t - eps(e_i) t)_i."""
    n = H.dim
    F = H.field
    rows = []
    for i in range(n):
        for l in range(n):
            row = [F.zero] * n
            for j in range(n):
                c = H.mult[i][j][l]
                if c:
                    row[j] = row[j] + c
            if H.counit[i]:
                row[l] = row[l] - H.counit[i]
            if any(row):
                rows.append(row)
    return mat_kernel(rows, n, F)


@dataclass
class Semisimplicity:
    semisimple: bool
    integral: list
    eps_integral: object


def is_semisimple(H: HopfAlgebraData) -> Semisimplicity:
    """Maschke criterion: eps(t) != 0 for a spanning left integral t."""
    L = left_integral_space(H)
    if L.dim != 1:
        raise StructuralError(f"left integral space has dimension {L.dim}, expected 1")
    t = list(L.basis[0])
    e = H.eps(t)
    return Semisimplicity(bool(e), t, e)


# -- coradical and filtration -------------------------------------------------------


def trace_form_radical(H: HopfAlgebraData) -> Subspace:
    """Radical of (f, g) -> Tr(L_{fg}) on the dual algebra, in dual-basis coordinates."""
    A = dual_algebra(H)
    n = A.dim
    F = A.field
    tr = [sum((A.mult[l][m][m] for m in range(n)), F.zero) for l in range(n)]
    gram = [[sum((A.mult[i][j][l] * tr[l] for l in range(n) if A.mult[i][j][l]), F.zero) for j in range(n)] for i in range(n)]
    return mat_kernel(gram, n, F)


def is_subcoalgebra(H: HopfAlgebraData, C: Subspace) -> bool:
    n = H.dim
    ann = C.annihilator().basis
    for c in C.basis:
        d = H.comul(c)
        for u in ann:
            for k in range(n):
                if sum((u[j] * d[j * n + k] for j in range(n) if u[j]), H.field.zero):
                    return False
            for j in range(n):
                if sum((d[j * n + k] * u[k] for k in range(n) if u[k]), H.field.zero):
                    return False
    return True


def coradical(H: HopfAlgebraData, hint: Sequence | Subspace | None = None) -> Subspace:
    """Sum of the simple subcoalgebras of H."""
    F = H.field
    n = H.dim
    p = F.characteristic
    if hint is None and (p == 0 or p > n):
        rad = trace_form_radical(H)
        if rad.dim == 0:
            return Subspace.full(n, F)
        return mat_kernel([list(r) for r in rad.basis], n, F)
    if hint is None:
        hint = H.coradical_hint
    if hint is None:
        raise UnsupportedConfiguration(
            f"coradical in characteristic {p} <= dim H = {n} requires a hint subspace"
        )
    C = hint if isinstance(hint, Subspace) else Subspace.span(hint, n, F)
    if not is_subcoalgebra(H, C):
        raise StructuralError("coradical hint is not a subcoalgebra")
    G = grouplikes(H)
    span_G = Subspace.span(G.elements, n, F)
    if not C.contains_space(span_G):
        raise StructuralError("coradical hint does not contain the group-likes")
    return C


@dataclass
class CoradicalFiltration:
    layers: list[Subspace]

    @property
    def coradical(self) -> Subspace:
        return self.layers[0]

    @property
    def dims(self) -> list[int]:
        return [L.dim for L in self.layers]

    @property
    def length(self) -> int:
        """Index of the last layer (C_length = H)."""
        return len(self.layers) - 1

    def layer(self, r: int) -> Subspace:
        return self.layers[min(max(r, 0), self.length)]

    def adapted_basis(self) -> tuple[list[list], list[int]]:
        """Basis extending C_0 to C_1 to ... with the level of each vector."""
        basis: list[list] = []
        levels: list[int] = []
        F = self.layers[0].field
        n = self.layers[0].ambient
        cur = Subspace.zero(n, F)
        for lev, L in enumerate(self.layers):
            for v in L.basis:
                if not cur.contains(v):
                    basis.append(list(v))
                    levels.append(lev)
                    cur = cur + Subspace.span([v], n, F)
        return basis, levels


def _preimage_layer(H: HopfAlgebraData, U: Sequence, V: Sequence) -> Subspace:
    """{h : (u (x) v)(Delta h) = 0 for all u in U, v in V}."""
    n = H.dim
    F = H.field
    rows = []
    for u in U:
        # uM_i[k] = sum_j u_j Delta_i[j,k]
        uM = []
        for i in range(n):
            w = [F.zero] * n
            for j, k, c in H.comult_terms(i):
                if u[j]:
                    w[k] = w[k] + u[j] * c
            uM.append(w)
        for v in V:
            row = [sum((w[k] * v[k] for k in range(n) if w[k] and v[k]), F.zero) for w in uM]
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.full(n, F)
    return mat_kernel(rows, n, F)


def coradical_filtration(H: HopfAlgebraData, hint=None, C0: Subspace | None = None) -> CoradicalFiltration:
    """C_n = Delta^{-1}(H (x) C_{n-1} + C_0 (x) H) iterated to stability."""
    C0 = C0 if C0 is not None else coradical(H, hint)
    layers = [C0]
    ann0 = C0.annihilator().basis
    while True:
        prev = layers[-1]
        nxt = _preimage_layer(H, ann0, prev.annihilator().basis)
        if nxt.dim == prev.dim:
            break
        if not nxt.contains_space(prev):
            raise StructuralError("filtration is not increasing")
        layers.append(nxt)
        if nxt.dim == H.dim:
            break
    if layers[-1].dim != H.dim:
        raise StructuralError(f"coradical filtration stabilizes at dimension {layers[-1].dim} < {H.dim}")
    return CoradicalFiltration(layers)


def _adapted_coords(P_inv, v):
    n = len(P_inv)
    out = [0] * n
    for j, x in enumerate(v):
        if x:
            row = P_inv[j]
            for a in range(n):
                if row[a]:
                    out[a] = out[a] + x * row[a]
    return out


def filtration_checks(H: HopfAlgebraData, filt: CoradicalFiltration) -> dict[str, bool]:
    """Nesting, exhaustion, Delta-compatibility and (if C_0 is a sub-Hopf algebra) Hopf-filtration laws."""
    n = H.dim
    layers = filt.layers
    out = {
        "nested": all(layers[i + 1].contains_space(layers[i]) for i in range(len(layers) - 1)),
        "exhausts": layers[-1].dim == n,
    }
    P, lev = filt.adapted_basis()
    Q = mat_inverse(P, H.field)  # e_j = sum_a Q[j][a] p_a

    def level_of(v):
        c = _adapted_coords(Q, v)
        return max((lev[a] for a in range(n) if c[a]), default=-1)

    ok = True
    for b, lb in zip(P, lev):
        d = H.comul(b)
        # T' = Q^T T Q
        left = [[0] * n for _ in range(n)]
        for j in range(n):
            for k in range(n):
                t = d[j * n + k]
                if t:
                    for a in range(n):
                        if Q[j][a]:
                            left[a][k] = left[a][k] + t * Q[j][a]
        for a in range(n):
            row = _adapted_coords(Q, left[a])
            if any(row[c] and lev[a] + lev[c] > lb for c in range(n)):
                ok = False
    out["delta_compatible"] = ok
    C0 = layers[0]
    sub_hopf = (
        C0.contains(H.unit)
        and all(C0.contains(H.mul(a, b)) for a in C0.basis for b in C0.basis)
        and all(C0.contains(H.S(a)) for a in C0.basis)
    )
    out["coradical_is_sub_hopf"] = sub_hopf
    if sub_hopf:
        out["mult_law"] = all(level_of(H.mul(a, b)) <= la + lb for a, la in zip(P, lev) for b, lb in zip(P, lev))
        out["antipode_law"] = all(level_of(H.S(a)) <= la for a, la in zip(P, lev))
    return out


@dataclass
class Classification:
    pointed: bool
    connected: bool
    coradical_dim: int
    grouplike_count: int


def classify(H: HopfAlgebraData, C0: Subspace | None = None, G: GroupLikeSet | None = None) -> Classification:
    C0 = C0 if C0 is not None else coradical(H)
    G = G if G is not None else grouplikes(H)
    return Classification(C0.dim == len(G), C0.dim == 1, C0.dim, len(G))


# -- ideals and quotients -----------------------------------------------------------


def ideal_generated(H: HopfAlgebraData, elements: Sequence[Sequence]) -> Subspace:
    """Smallest two-sided ideal containing ``elements``."""
    n = H.dim
    F = H.field
    J = Subspace.span([list(v) for v in elements], n, F) if elements else Subspace.zero(n, F)
    while True:
        new = list(J.basis)
        for v in J.basis:
            for i in range(n):
                e = H.basis_vector(i)
                new.append(H.mul(e, v))
                new.append(H.mul(v, e))
        J2 = Subspace.span(new, n, F)
        if J2.dim == J.dim:
            return J
        J = J2


def left_ideal_product(H: HopfAlgebraData, V: Subspace) -> Subspace:
    """H * V = span{h v}."""
    return Subspace.span([H.mul(H.basis_vector(i), v) for i in range(H.dim) for v in V.basis] or [H.zero()], H.dim, H.field)


@dataclass
class HopfIdealReport:
    subspace: Subspace
    two_sided_ideal: bool
    coideal: bool
    counit_zero: bool
    antipode_stable: bool

    @property
    def hopf_ideal(self) -> bool:
        return self.two_sided_ideal and self.coideal and self.counit_zero and self.antipode_stable

    def flags(self) -> dict[str, bool]:
        return {
            "two_sided_ideal": self.two_sided_ideal,
            "coideal": self.coideal,
            "counit_zero": self.counit_zero,
            "antipode_stable": self.antipode_stable,
            "hopf_ideal": self.hopf_ideal,
        }


def is_coideal(H: HopfAlgebraData, J: Subspace) -> bool:
    """Delta J within J (x) H + H (x) J: every pair of annihilating functionals kills Delta(v)."""
    n = H.dim
    ann = J.annihilator().basis
    for v in J.basis:
        d = H.comul(v)
        for u in ann:
            w = [sum((u[j] * d[j * n + k] for j in range(n) if u[j]), H.field.zero) for k in range(n)]
            for u2 in ann:
                if sum((w[k] * u2[k] for k in range(n) if u2[k]), H.field.zero):
                    return False
    return True


def verify_hopf_ideal(H: HopfAlgebraData, J: Subspace) -> HopfIdealReport:
    n = H.dim
    two_sided = all(
        J.contains(H.mul(H.basis_vector(i), v)) and J.contains(H.mul(v, H.basis_vector(i))) for v in J.basis for i in range(n)
    )
    return HopfIdealReport(
        J,
        two_sided,
        is_coideal(H, J),
        all(not H.eps(v) for v in J.basis),
        all(J.contains(H.S(v)) for v in J.basis),
    )


class _ReverseProjection:
    """Projection H -> H/J onto the span of the basis vectors kept by a last-column-first echelon form."""

    def __init__(self, J: Subspace):
        n = J.ambient
        self.n = n
        self.rev = Subspace.span([list(reversed(v)) for v in J.basis], n, J.field)
        pivots = {n - 1 - p for p in self.rev.pivots}
        self.keep = [i for i in range(n) if i not in pivots]

    def __call__(self, v) -> list:
        r = list(reversed(self.rev.reduce(list(reversed(list(v))))))
        return [r[i] for i in self.keep]


def quotient_hopf(H: HopfAlgebraData, J: Subspace) -> tuple[HopfAlgebraData, list[list]]:
    """H/J on representatives of the kept basis elements, plus rows pi(e_i)."""
    rep = verify_hopf_ideal(H, J)
    if not rep.hopf_ideal:
        bad = [k for k, v in rep.flags().items() if not v]
        raise StructuralError(f"not a Hopf ideal; failed flags {bad}")
    F = H.field
    pi = _ReverseProjection(J)
    keep = pi.keep
    m = len(keep)
    mult = [[pi(H.mult[a][b]) for b in keep] for a in keep]
    unit = pi(H.unit)
    comult = []
    n = H.dim
    for a in keep:
        d = H.comult[a]
        out = [F.zero] * (m * m)
        for j in range(n):
            pj = None
            for k in range(n):
                c = d[j * n + k]
                if not c:
                    continue
                if pj is None:
                    pj = pi(H.basis_vector(j))
                pk = pi(H.basis_vector(k))
                for x, u in enumerate(pj):
                    if u:
                        for y, w in enumerate(pk):
                            if w:
                                out[x * m + y] = out[x * m + y] + c * u * w
        comult.append(out)
    counit = [H.counit[a] for a in keep]
    antipode = [pi(H.antipode[a]) for a in keep]
    hint = None
    if H.coradical_hint is not None:
        hint = Subspace.span([pi(v) for v in H.coradical_hint] or [[F.zero] * m], m, F).vectors()
    Q = HopfAlgebraData(F, tuple(H.basis[a] for a in keep), mult, unit, comult, counit, antipode, hint)
    report = verify_hopf_axioms(Q)
    if not report.passed:
        raise StructuralError(f"quotient failed axiom checks {report.failed()}")
    proj = [pi(H.basis_vector(i)) for i in range(n)]
    return Q, proj


def project(proj: Sequence[Sequence], v: Sequence) -> list:
    m = len(proj[0]) if proj else 0
    out = [0] * m
    for i, x in enumerate(v):
        if x:
            for a, c in enumerate(proj[i]):
                if c:
                    out[a] = out[a] + x * c
    return out


def grouplike_epimorphism(H: HopfAlgebraData, Q: HopfAlgebraData, proj) -> dict:
    """Compare pi(G(H)) with G(H/J): inclusion and equal counts."""
    GH = grouplikes(H)
    GQ = grouplikes(Q)
    images = []
    for g in GH.elements:
        v = [Q.field(c) for c in project(proj, g)]
        if v not in images:
            images.append(v)
    return {
        "images_grouplike": all(v in GQ.elements for v in images),
        "surjective": len(images) == len(GQ),
        "image_count": len(images),
        "quotient_count": len(GQ),
    }


def filtration_plus(H: HopfAlgebraData, r: int, filt: CoradicalFiltration | None = None) -> Subspace:
    """H_r intersected with ker(eps); r past the last layer clamps."""
    filt = filt or coradical_filtration(H)
    ker_eps = mat_kernel([list(H.counit)], H.dim, H.field)
    return filt.layer(r).intersect(ker_eps)

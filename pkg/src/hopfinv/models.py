"""Builders for concrete Hopf algebras and actions: Taft algebras, group algebras, the y/z counterexample action."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactfield import FieldSpec, Fp
from .findim import HopfAlgebraData, tensor_square_multiply, verify_hopf_axioms
from .groups import FiniteGroup, cyclic


class ModelError(ValueError):
    pass


def element_order(xi, field: FieldSpec, bound: int) -> int | None:
    """Multiplicative order of xi if it is at most ``bound``."""
    acc = field.one
    for k in range(1, bound + 1):
        acc = acc * xi
        if acc == 1:
            return k
    return None


def default_root(N: int, field: FieldSpec):
    """Canonical primitive N-th root of unity in ``field`` (or raise)."""
    if field.kind == "cyclotomic":
        if field.N == N:
            return field.zeta()
        if field.N % N == 0:
            return field.zeta() ** (field.N // N)
        raise ModelError(f"Q(zeta_{field.N}) has no primitive {N}-th root of unity")
    if field.kind == "rational":
        if N == 2:
            return field(-1)
        if N == 1:
            return field(1)
        raise ModelError(f"Q has no primitive {N}-th root of unity for N = {N}")
    for a in range(1, field.p):
        xi = Fp(a, field.p)
        if element_order(xi, field, N) == N:
            return xi
    raise ModelError(f"F_{field.p} has no primitive {N}-th root of unity")


def taft_name(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("g" if a == 1 else f"g^{a}")
    if b:
        parts.append("x" if b == 1 else f"x^{b}")
    return "*".join(parts) or "1"


def taft_index(N: int, a: int, b: int) -> int:
    """Basis index of g^a x^b; ordered by x-degree first so filtration layers are prefixes."""
    return b * N + (a % N)


def taft(N: int, field: FieldSpec | None = None, xi=None, verify: bool = True) -> HopfAlgebraData:
    """Taft algebra A_{N,xi}: g^N = 1, x^N = 0, xg = xi gx, Delta g = g(x)g, Delta x = g(x)x + x(x)1."""
    if N < 2:
        raise ModelError("Taft algebras need N >= 2")
    if field is None:
        field = FieldSpec.rational() if N == 2 else FieldSpec.cyclotomic(N)
    xi = default_root(N, field) if xi is None else field(xi)
    if element_order(xi, field, N) != N:
        raise ModelError(f"xi = {field.format(xi)} is not a primitive {N}-th root of unity in {field.describe()}")
    n = N * N
    F = field
    xi_pow = [xi**k for k in range(N * N)]
    mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for b in range(N):
        for a in range(N):
            i = taft_index(N, a, b)
            for d in range(N):
                for c in range(N):
                    if b + d < N:
                        j = taft_index(N, c, d)
                        mult[i][j][taft_index(N, a + c, b + d)] = xi_pow[(b * c) % N]
    unit = [F.one if i == 0 else F.zero for i in range(n)]
    shell = HopfAlgebraData(F, tuple(taft_name(a, b) for b in range(N) for a in range(N)), mult, unit, [], [], [])

    def tvec(pairs):
        v = [F.zero] * (n * n)
        for (p, q), c in pairs:
            v[p * n + q] = v[p * n + q] + c
        return v

    g, x = taft_index(N, 1, 0), taft_index(N, 0, 1)
    delta_g = tvec([((g, g), F.one)])
    delta_x = tvec([((g, x), F.one), ((x, 0), F.one)])
    one_one = tvec([((0, 0), F.one)])
    comult = [None] * n
    g_pow = [one_one]
    for _ in range(1, N):
        g_pow.append(tensor_square_multiply(shell, g_pow[-1], delta_g))
    x_pow = [one_one]
    for _ in range(1, N):
        x_pow.append(tensor_square_multiply(shell, x_pow[-1], delta_x))
    for b in range(N):
        for a in range(N):
            comult[taft_index(N, a, b)] = tensor_square_multiply(shell, g_pow[a], x_pow[b])
    counit = [F.one if i < N else F.zero for i in range(n)]

    # S is an anti-homomorphism: S(g^a x^b) = S(x)^b S(g)^a
    S_g = shell.basis_vector(taft_index(N, N - 1, 0))
    S_x = [-c for c in shell.basis_vector(taft_index(N, N - 1, 1))]
    antipode = [None] * n
    for b in range(N):
        for a in range(N):
            antipode[taft_index(N, a, b)] = shell.mul(shell.power(S_x, b), shell.power(S_g, a))
    hint = [shell.basis_vector(taft_index(N, a, 0)) for a in range(N)]
    H = HopfAlgebraData(F, shell.basis, mult, unit, comult, counit, antipode, hint)
    if verify:
        _require_axioms(H, f"Taft algebra N={N}")
    return H


def sweedler(field: FieldSpec | None = None) -> HopfAlgebraData:
    """Sweedler's four-dimensional algebra H_4 = A_{2,-1}."""
    return taft(2, field or FieldSpec.rational())


def group_algebra(group: FiniteGroup | int, field: FieldSpec | None = None, verify: bool = True) -> HopfAlgebraData:
    """kG with Delta g = g (x) g, eps(g) = 1, S(g) = g^-1; an int means the cyclic group of that order."""
    G = cyclic(group) if isinstance(group, int) else group
    G.validate()
    F = field or FieldSpec.rational()
    n = G.order
    mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mult[i][j][G.mul(i, j)] = F.one
    unit = [F.one if i == G.identity else F.zero for i in range(n)]
    comult = []
    for i in range(n):
        v = [F.zero] * (n * n)
        v[i * n + i] = F.one
        comult.append(v)
    counit = [F.one] * n
    antipode = []
    for i in range(n):
        v = [F.zero] * n
        v[G.inverse(i)] = F.one
        antipode.append(v)
    hint = [[F.one if j == i else F.zero for j in range(n)] for i in range(n)]
    H = HopfAlgebraData(F, G.names, mult, unit, comult, counit, antipode, hint)
    if verify:
        _require_axioms(H, f"group algebra of order {n}")
    return H


def _require_axioms(H: HopfAlgebraData, what: str) -> None:
    rep = verify_hopf_axioms(H)
    if not rep.passed:
        raise ModelError(f"{what} failed axiom checks {rep.failed()}")


# -- A_{N,xi} acting on k[y,z]/(z^2) ---------------------------------------------


@dataclass
class ModelBundle:
    hopf: HopfAlgebraData
    algebra: object  # FPCommAlgebra
    action: object  # ActionSpec
    grouplike_vectors: list
    expected: dict = dc_field(default_factory=dict)
    xi: object = None


def example31(N: int = 2, field: FieldSpec | None = None, max_degree: int = 8, xi=None) -> ModelBundle:
    """The y/z counterexample: A = k[y,z]/(z^2) with x(y^n) = n y^(n-1) z and g(y^n z) = xi^-1 y^n z."""
    from .action import ActionSpec, action_from_generators
    from .commalg import FPCommAlgebra

    H = taft(N, field, xi)
    F = H.field
    xi = default_root(N, F) if xi is None else F(xi)
    if F.characteristic == 2:
        raise ModelError("characteristic 2 is excluded for the counterexample action")
    A = FPCommAlgebra(F, ["y", "z"], ["z^2"])
    y, z = A.ring.var("y"), A.ring.var("z")
    gens = {
        "g": {"y": y, "z": z.scale(1 / xi)},
        "x": {"y": z, "z": A.ring.zero()},
    }
    spec: ActionSpec = action_from_generators(H, A, {"g": H.basis_vector(1), "x": H.basis_vector(N)}, gens)
    G = [H.basis_vector(taft_index(N, a, 0)) for a in range(N)]
    p = F.characteristic
    if p == 0:
        expected_H = [A.ring.one()]
    else:
        expected_H = [A.ring.monomial((k, 0)) for k in range(0, max_degree + 1) if k % p == 0]
    expected = {
        "A^G": [A.ring.monomial((k, 0)) for k in range(max_degree + 1)],
        "A^H": expected_H,
        "grouplikes": N,
        "max_degree": max_degree,
    }
    return ModelBundle(H, A, spec, G, expected, xi)


@dataclass
class ClosedFormVerdict:
    passed: bool
    checked: int
    mismatches: list[str]


def example31_closed_form_check(bundle: ModelBundle, n_max: int = 12) -> ClosedFormVerdict:
    """Compare the computed action with g(y^n) = y^n, g(y^n z) = xi^-1 y^n z, x(y^n) = n y^(n-1) z, x(y^n z) = 0."""
    H, A, spec, xi = bundle.hopf, bundle.algebra, bundle.action, bundle.xi
    N = round(H.dim**0.5)
    R = A.ring
    g, x = taft_index(N, 1, 0), taft_index(N, 0, 1)
    mismatches = []
    checked = 0
    for n in range(n_max + 1):
        yn, ynz = R.monomial((n, 0)), R.monomial((n, 1))
        closed = {
            (g, "y^n"): yn,
            (g, "y^n*z"): ynz.scale(1 / xi),
            (x, "y^n"): R.monomial((n - 1, 1), n) if n else R.zero(),
            (x, "y^n*z"): R.zero(),
        }
        for (i, label), want in closed.items():
            got = spec.act(i, yn if label == "y^n" else ynz)
            checked += 1
            if not (got - want).is_zero():
                mismatches.append(f"{H.basis[i]} . {label.replace('n', str(n))}: got {got}, expected {want}")
    return ClosedFormVerdict(not mismatches, checked, mismatches)


def cyclic_sign_action(field: FieldSpec | None = None):
    """kC_2 acting on k[y] by g.y = -y; returns (H, A, ActionSpec)."""
    from .action import ActionSpec
    from .commalg import FPCommAlgebra

    F = field or FieldSpec.rational()
    H = group_algebra(2, F)
    A = FPCommAlgebra(F, ["y"], [])
    y = A.ring.var("y")
    spec = ActionSpec(H, A, {(0, 0): y, (1, 0): -y})
    return H, A, spec

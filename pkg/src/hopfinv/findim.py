"""Finite-dimensional Hopf algebras given by structure constants, with exact axiom checks.

Conventions (row convention throughout):

* ``mult[i][j]`` is the coordinate vector of e_i * e_j;
* ``comult[i]`` is Delta(e_i) in H (x) H, flattened with (j, k) -> j*n + k;
* ``antipode[i]`` is the coordinate vector of S(e_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Any, Sequence

from .exactfield import FieldSpec, Subspace, mat_inverse
from .exprparse import ParseError, evaluate

MAX_DIM = 64


class DefinitionError(ValueError):
    """Malformed structure-constant data (dimension mismatch, bad scalar, duplicate names)."""


class NotACoalgebra(ValueError):
    pass


@dataclass(eq=False)
class HopfAlgebraData:
    field: FieldSpec
    basis: tuple[str, ...]
    mult: list  # n x n x n
    unit: list
    comult: list  # n x n^2
    counit: list
    antipode: list  # n x n
    coradical_hint: list | None = dc_field(default=None)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- sparse views ----------------------------------------------------
    @cached_property
    def _mult_nz(self) -> list[list[list[tuple[int, Any]]]]:
        return [[[(l, c) for l, c in enumerate(v) if c] for v in row] for row in self.mult]

    @cached_property
    def _comult_nz(self) -> list[list[tuple[int, int, Any]]]:
        n = self.dim
        return [[(jk // n, jk % n, c) for jk, c in enumerate(v) if c] for v in self.comult]

    # -- element arithmetic (dense coordinate lists) ---------------------
    def zero(self) -> list:
        return [self.field.zero] * self.dim

    def basis_vector(self, i: int) -> list:
        v = self.zero()
        v[i] = self.field.one
        return v

    def mul(self, a: Sequence, b: Sequence) -> list:
        out = self.zero()
        nz_b = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            row = self._mult_nz[i]
            for j, y in nz_b:
                xy = x * y
                for l, c in row[j]:
                    out[l] = out[l] + xy * c
        return out

    def comul(self, a: Sequence) -> list:
        n = self.dim
        out = [self.field.zero] * (n * n)
        for i, x in enumerate(a):
            if x:
                for j, k, c in self._comult_nz[i]:
                    out[j * n + k] = out[j * n + k] + x * c
        return out

    def eps(self, a: Sequence):
        acc = self.field.zero
        for x, e in zip(a, self.counit):
            if x and e:
                acc = acc + x * e
        return acc

    def S(self, a: Sequence) -> list:
        out = self.zero()
        for i, x in enumerate(a):
            if x:
                for l, c in enumerate(self.antipode[i]):
                    if c:
                        out[l] = out[l] + x * c
        return out

    def power(self, a: Sequence, k: int) -> list:
        out = list(self.unit)
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def comult_terms(self, i: int) -> list[tuple[int, int, Any]]:
        """Nonzero (j, k, c) with Delta(e_i) = sum c e_j (x) e_k."""
        return self._comult_nz[i]

    def mult_terms(self, i: int, j: int) -> list[tuple[int, Any]]:
        return self._mult_nz[i][j]

    # -- text --------------------------------------------------------------
    def element(self, text: str) -> list:
        """Parse an element such as ``"g - 1"`` or ``"x + g*x"`` (products are taken in H)."""
        return [self.field(c) for c in evaluate(str(text), _ElementAdapter(self))]

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise DefinitionError(f"unknown basis element {name!r}") from None

    def format_element(self, v: Sequence) -> str:
        F = self.field
        parts = []
        for name, c in zip(self.basis, v):
            if not c:
                continue
            s = F.format(c)
            multi = " + " in s or " - " in s.lstrip("-")
            neg = s.startswith("-") and not multi
            mag = s[1:] if neg else s
            if name == "1":
                body = f"({mag})" if multi else mag
            elif multi:
                body = f"({mag})*{name}"
            elif mag == "1":
                body = name
            else:
                body = f"{mag}*{name}"
            parts.append((neg, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        f = self.field.format
        obj = {
            "field": self.field.to_json(),
            "dim": self.dim,
            "basis": list(self.basis),
            "mult": [[[f(c) for c in v] for v in row] for row in self.mult],
            "unit": [f(c) for c in self.unit],
            "comult": [[f(c) for c in v] for v in self.comult],
            "counit": [f(c) for c in self.counit],
            "antipode": [[f(c) for c in row] for row in self.antipode],
        }
        if self.coradical_hint is not None:
            obj["coradical_hint"] = [[f(c) for c in v] for v in self.coradical_hint]
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "HopfAlgebraData":
        if not isinstance(obj, dict):
            raise DefinitionError("Hopf algebra definition must be a JSON object")
        for key in ("field", "dim", "basis", "mult", "unit", "comult", "counit", "antipode"):
            if key not in obj:
                raise DefinitionError(f"missing field {key!r}")
        F = FieldSpec.from_json(obj["field"])
        H = build_from_tables(
            F,
            obj["basis"],
            obj["mult"],
            obj["unit"],
            obj["comult"],
            obj["counit"],
            obj["antipode"],
            coradical_hint=obj.get("coradical_hint"),
            strict=True,
        )
        if obj["dim"] != H.dim:
            raise DefinitionError(f"dim: declared {obj['dim']} but basis has {H.dim} names")
        return H

    def __repr__(self):
        return f"HopfAlgebraData(dim={self.dim}, field={self.field.describe()}, basis={list(self.basis)})"


class _ElementAdapter:
    def __init__(self, H: HopfAlgebraData):
        self.H = H

    def _scalar(self, c):
        return [c * u for u in self.H.unit]

    def number(self, n):
        return self._scalar(self.H.field(n))

    def name(self, s):
        if s in self.H.basis:
            return self.H.basis_vector(self.H.basis.index(s))
        if s == "z" and self.H.field.kind == "cyclotomic":
            return self._scalar(self.H.field.zeta())
        raise ParseError(f"unknown basis element {s!r}; basis is {list(self.H.basis)}")

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def mul(self, a, b):
        return self.H.mul(a, b)

    def div(self, a, b):
        c = _as_scalar(self.H, b)
        if c is None or not c:
            raise ParseError("division is only allowed by a nonzero scalar")
        return [x / c for x in a]

    def neg(self, a):
        return [-x for x in a]

    def pow(self, a, e):
        return self.H.power(a, e)


def _as_scalar(H: HopfAlgebraData, v):
    k = next((i for i, u in enumerate(H.unit) if u), None)
    if k is None:
        return None
    c = v[k] / H.unit[k]
    if all(x == c * u for x, u in zip(v, H.unit)):
        return c
    return None


def _parse_vec(F: FieldSpec, raw, length: int, where: str, strict: bool = False) -> list:
    if not isinstance(raw, (list, tuple)):
        raise DefinitionError(f"{where}: expected a list of {length} scalars")
    if len(raw) != length:
        raise DefinitionError(f"{where}: expected length {length}, got {len(raw)}")
    out = []
    for k, x in enumerate(raw):
        if strict and not isinstance(x, str):
            raise DefinitionError(f"{where}[{k}]: scalars must be strings, got {type(x).__name__} {x!r}")
        try:
            out.append(F.parse(x) if isinstance(x, str) else F(x))
        except (ParseError, ValueError, TypeError) as exc:
            raise DefinitionError(f"{where}[{k}]: {exc}") from None
    return out


def build_from_tables(
    field: FieldSpec,
    basis: Sequence[str],
    mult,
    unit,
    comult,
    counit,
    antipode,
    coradical_hint=None,
    strict: bool = False,
) -> HopfAlgebraData:
    """Validate shapes and parse scalars; axioms are NOT checked here."""
    names = tuple(str(b) for b in basis)
    n = len(names)
    if n == 0:
        raise DefinitionError("basis: at least one element required")
    if n > MAX_DIM:
        raise DefinitionError(f"basis: dimension {n} exceeds the supported maximum {MAX_DIM}")
    if len(set(names)) != n:
        dup = next(b for b in names if names.count(b) > 1)
        raise DefinitionError(f"basis: duplicate name {dup!r}")
    if not isinstance(mult, (list, tuple)) or len(mult) != n:
        raise DefinitionError(f"mult: expected {n} rows")
    M = []
    for i, row in enumerate(mult):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise DefinitionError(f"mult[{i}]: expected {n} entries")
        M.append([_parse_vec(field, v, n, f"mult[{i}][{j}]", strict) for j, v in enumerate(row)])
    U = _parse_vec(field, unit, n, "unit", strict)
    if not isinstance(comult, (list, tuple)) or len(comult) != n:
        raise DefinitionError(f"comult: expected {n} rows")
    D = [_parse_vec(field, v, n * n, f"comult[{i}]", strict) for i, v in enumerate(comult)]
    E = _parse_vec(field, counit, n, "counit", strict)
    if not isinstance(antipode, (list, tuple)) or len(antipode) != n:
        raise DefinitionError(f"antipode: expected {n} rows")
    S = [_parse_vec(field, v, n, f"antipode[{i}]", strict) for i, v in enumerate(antipode)]
    hint = None
    if coradical_hint is not None:
        hint = [_parse_vec(field, v, n, f"coradical_hint[{i}]", strict) for i, v in enumerate(coradical_hint)]
    return HopfAlgebraData(field, names, M, U, D, E, S, hint)


# -- axiom verification ------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"passed": self.passed, "witness": self.witness}


@dataclass
class AxiomReport:
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {c.name: c.to_json() for c in self.checks}


AXIOMS = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comultiplication_is_algebra_map",
    "counit_is_algebra_map",
    "antipode",
)


def _tensor_dict(H: HopfAlgebraData, t: Sequence) -> dict:
    n = H.dim
    return {(jk // n, jk % n): c for jk, c in enumerate(t) if c}


def _vec_eq(a, b) -> bool:
    return all(x == y for x, y in zip(a, b))


def check_associativity(H: HopfAlgebraData) -> Check:
    n = H.dim
    for i in range(n):
        ei = H.basis_vector(i)
        for j in range(n):
            ij = H.mult[i][j]
            for k in range(n):
                if not _vec_eq(H.mul(ij, H.basis_vector(k)), H.mul(ei, H.mult[j][k])):
                    return Check("associativity", False, {"i": H.basis[i], "j": H.basis[j], "k": H.basis[k]})
    return Check("associativity", True)


def check_unit(H: HopfAlgebraData) -> Check:
    for i in range(H.dim):
        e = H.basis_vector(i)
        if not _vec_eq(H.mul(H.unit, e), e) or not _vec_eq(H.mul(e, H.unit), e):
            return Check("unit", False, {"i": H.basis[i]})
    return Check("unit", True)


def _delta_left(H, i) -> dict:
    """(Delta (x) id) Delta(e_i) as a dict over index triples."""
    out: dict = {}
    for j, k, c in H.comult_terms(i):
        for a, b, d in H.comult_terms(j):
            key = (a, b, k)
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _delta_right(H, i) -> dict:
    out: dict = {}
    for j, k, c in H.comult_terms(i):
        for a, b, d in H.comult_terms(k):
            key = (j, a, b)
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _dict_eq(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


def check_coassociativity(H: HopfAlgebraData) -> Check:
    for i in range(H.dim):
        if not _dict_eq(_delta_left(H, i), _delta_right(H, i)):
            return Check("coassociativity", False, {"i": H.basis[i]})
    return Check("coassociativity", True)


def check_counit(H: HopfAlgebraData) -> Check:
    n = H.dim
    for i in range(n):
        left = H.zero()
        right = H.zero()
        for j, k, c in H.comult_terms(i):
            if H.counit[j]:
                left[k] = left[k] + c * H.counit[j]
            if H.counit[k]:
                right[j] = right[j] + c * H.counit[k]
        e = H.basis_vector(i)
        if not _vec_eq(left, e) or not _vec_eq(right, e):
            return Check("counit", False, {"i": H.basis[i]})
    return Check("counit", True)


def tensor_square_multiply(H: HopfAlgebraData, a: Sequence, b: Sequence) -> list:
    """Product in H (x) H of two flattened tensors: (p (x) q)(r (x) s) = pr (x) qs."""
    n = H.dim
    if len(a) != n * n or len(b) != n * n:
        raise ValueError(f"tensor-square elements must have length {n * n}")
    out = [H.field.zero] * (n * n)
    A = _tensor_dict(H, a)
    B = _tensor_dict(H, b)
    for (j, k), c in A.items():
        for (l, m), d in B.items():
            cd = c * d
            for p, x in H.mult_terms(j, l):
                cdx = cd * x
                for q, y in H.mult_terms(k, m):
                    out[p * n + q] = out[p * n + q] + cdx * y
    return out


def tensor(H: HopfAlgebraData, a: Sequence, b: Sequence) -> list:
    n = H.dim
    out = [H.field.zero] * (n * n)
    for j, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                if y:
                    out[j * n + k] = x * y
    return out


def check_comult_algebra_map(H: HopfAlgebraData) -> Check:
    n = H.dim
    if not _vec_eq(H.comul(H.unit), tensor(H, H.unit, H.unit)):
        return Check("comultiplication_is_algebra_map", False, {"element": "unit"})
    for i in range(n):
        for j in range(n):
            lhs = H.comul(H.mult[i][j])
            rhs = tensor_square_multiply(H, H.comult[i], H.comult[j])
            if not _vec_eq(lhs, rhs):
                return Check("comultiplication_is_algebra_map", False, {"i": H.basis[i], "j": H.basis[j]})
    return Check("comultiplication_is_algebra_map", True)


def check_counit_algebra_map(H: HopfAlgebraData) -> Check:
    if H.eps(H.unit) != 1:
        return Check("counit_is_algebra_map", False, {"element": "unit"})
    for i in range(H.dim):
        for j in range(H.dim):
            if H.eps(H.mult[i][j]) != H.counit[i] * H.counit[j]:
                return Check("counit_is_algebra_map", False, {"i": H.basis[i], "j": H.basis[j]})
    return Check("counit_is_algebra_map", True)


def antipode_convolutions(H: HopfAlgebraData, i: int) -> tuple[list, list]:
    """(sum S(h1) h2, sum h1 S(h2)) for h = e_i, by tensor contraction."""
    left = H.zero()
    right = H.zero()
    for j, k, c in H.comult_terms(i):
        Sj = H.antipode[j]
        Sk = H.antipode[k]
        for a, x in enumerate(Sj):
            if x:
                for l, y in H.mult_terms(a, k):
                    left[l] = left[l] + c * x * y
        for b, x in enumerate(Sk):
            if x:
                for l, y in H.mult_terms(j, b):
                    right[l] = right[l] + c * x * y
    return left, right


def check_antipode(H: HopfAlgebraData) -> Check:
    for i in range(H.dim):
        target = [H.counit[i] * u for u in H.unit]
        left, right = antipode_convolutions(H, i)
        if not _vec_eq(left, target):
            return Check("antipode", False, {"i": H.basis[i], "side": "S*id"})
        if not _vec_eq(right, target):
            return Check("antipode", False, {"i": H.basis[i], "side": "id*S"})
    return Check("antipode", True)


def verify_hopf_axioms(H: HopfAlgebraData) -> AxiomReport:
    """Run the seven exact axiom checks on basis elements."""
    return AxiomReport(
        [
            check_associativity(H),
            check_unit(H),
            check_coassociativity(H),
            check_counit(H),
            check_comult_algebra_map(H),
            check_counit_algebra_map(H),
            check_antipode(H),
        ]
    )


def is_cocommutative(H: HopfAlgebraData) -> bool:
    n = H.dim
    return all(v[j * n + k] == v[k * n + j] for v in H.comult for j in range(n) for k in range(n))


def is_commutative(H: HopfAlgebraData) -> bool:
    return all(_vec_eq(H.mult[i][j], H.mult[j][i]) for i in range(H.dim) for j in range(H.dim))


# -- duals and base change -----------------------------------------------------


@dataclass(eq=False)
class AlgebraTables:
    """Finite-dimensional unital algebra given by structure constants."""

    field: FieldSpec
    basis: tuple[str, ...]
    mult: list
    unit: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    def mul(self, a, b) -> list:
        n = self.dim
        out = [self.field.zero] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        for l, c in enumerate(self.mult[i][j]):
                            if c:
                                out[l] = out[l] + x * y * c
        return out

    def left_mult_matrix(self, a) -> list:
        """Matrix of b -> a*b with columns indexed by b's basis (out[l][j])."""
        n = self.dim
        cols = [self.mul(a, [self.field.one if k == j else self.field.zero for k in range(n)]) for j in range(n)]
        return [[cols[j][l] for j in range(n)] for l in range(n)]

    def verify(self) -> AxiomReport:
        shim = HopfAlgebraData(self.field, self.basis, self.mult, self.unit, [], [], [])
        return AxiomReport([check_associativity(shim), check_unit(shim)])


def dual_algebra(H: HopfAlgebraData) -> AlgebraTables:
    """Convolution algebra H*: (f g)(h) = (f (x) g)(Delta h), unit epsilon, on the dual basis."""
    coalg = [check_coassociativity(H), check_counit(H)]
    bad = [c.name for c in coalg if not c.passed]
    if bad:
        raise NotACoalgebra(f"dual algebra needs a coalgebra; failed checks: {bad}")
    n = H.dim
    F = H.field
    mult = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j, k, c in H.comult_terms(i):
            mult[j][k][i] = c
    names = tuple(f"{b}*" for b in H.basis)
    return AlgebraTables(F, names, mult, list(H.counit))


def dual_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    """Full dual Hopf algebra H* on the dual basis."""
    A = dual_algebra(H)
    n = H.dim
    F = H.field
    comult = [[F.zero] * (n * n) for _ in range(n)]
    for j in range(n):
        for k in range(n):
            for l, c in H.mult_terms(j, k):
                comult[l][j * n + k] = c
    antipode = [[H.antipode[j][i] for j in range(n)] for i in range(n)]
    return HopfAlgebraData(F, A.basis, A.mult, list(A.unit), comult, list(H.unit), antipode)


def change_basis(H: HopfAlgebraData, P: Sequence[Sequence], names: Sequence[str] | None = None) -> HopfAlgebraData:
    """Same Hopf algebra on the basis f_i = sum_j P[i][j] e_j."""
    n = H.dim
    F = H.field
    P = [[F(x) for x in row] for row in P]
    Q = mat_inverse(P, F)  # e_j = sum_i Q[j][i] f_i

    def to_new(v):
        out = [F.zero] * n
        for j, x in enumerate(v):
            if x:
                for i, q in enumerate(Q[j]):
                    if q:
                        out[i] = out[i] + x * q
        return out

    fvecs = [list(row) for row in P]
    mult = [[to_new(H.mul(fvecs[a], fvecs[b])) for b in range(n)] for a in range(n)]
    unit = to_new(H.unit)
    comult = []
    for a in range(n):
        d = _tensor_dict(H, H.comul(fvecs[a]))
        out = [F.zero] * (n * n)
        for (j, k), c in d.items():
            for p, x in enumerate(Q[j]):
                if x:
                    for q, y in enumerate(Q[k]):
                        if y:
                            out[p * n + q] = out[p * n + q] + c * x * y
        comult.append(out)
    counit = [H.eps(v) for v in fvecs]
    antipode = [to_new(H.S(v)) for v in fvecs]
    hint = None
    if H.coradical_hint is not None:
        hint = [to_new(v) for v in H.coradical_hint]
    return HopfAlgebraData(F, tuple(names or (f"f{i}" for i in range(n))), mult, unit, comult, counit, antipode, hint)


def span_of(H: HopfAlgebraData, vectors) -> Subspace:
    return Subspace.span(vectors, H.dim, H.field)

"""Finitely presented commutative algebras k[y_1..y_s]/(r_1..r_m).

Polynomials are sparse ``{exponent tuple: coefficient}`` maps.  Gröbner bases
come from a plain Buchberger loop (normal selection strategy, coprime-leading-
monomial criterion only) followed by full interreduction.
"""

from __future__ import annotations

import heapq
import itertools
import logging
import os
from functools import cached_property
from typing import Iterable, Sequence

from .exactfield import FieldSpec, Subspace
from .exprparse import ParseError, evaluate

log = logging.getLogger(__name__)

ORDERS = ("grevlex", "grlex", "lex")
DEFAULT_GB_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """A configurable step budget was exhausted."""


class WorkspaceOverflow(ValueError):
    """A result left the truncated degree workspace."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


def gb_budget() -> int:
    return int(os.environ.get("HOPFINV_GB_BUDGET", DEFAULT_GB_BUDGET))


def _order_key(order: str):
    if order == "lex":
        return lambda e: e
    if order == "grlex":
        return lambda e: (sum(e), e)
    if order == "grevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise ValueError(f"unknown term order {order!r}; expected one of {ORDERS}")


class PolyRing:
    """k[vars] with a fixed term order."""

    def __init__(self, field: FieldSpec, variables: Sequence[str], order: str = "grevlex"):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.field = field
        self.vars = names
        self.nvars = len(names)
        self.order = order
        self.key = _order_key(order)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.vars == other.vars
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.vars, self.order))

    @property
    def graded(self) -> bool:
        return self.order != "lex"

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.field, self.vars, order)

    def zero(self) -> "Poly":
        return Poly({}, self)

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.field(c)
        return Poly({(0,) * self.nvars: c} if c else {}, self)

    def var(self, name_or_index) -> "Poly":
        i = self.vars.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        e = [0] * self.nvars
        e[i] = 1
        return Poly({tuple(e): self.field.one}, self)

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp: Sequence[int], c=1) -> "Poly":
        c = self.field(c)
        return Poly({tuple(exp): c} if c else {}, self)

    def parse(self, text: str) -> "Poly":
        return evaluate(str(text), _PolyAdapter(self))

    def __call__(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring != self:
                return Poly(dict(x.terms), self)
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)


class _PolyAdapter:
    def __init__(self, ring: PolyRing):
        self.R = ring

    def number(self, n):
        return self.R.const(n)

    def name(self, s):
        if s in self.R.vars:
            return self.R.var(s)
        if s in ("z", "zeta") and self.R.field.kind == "cyclotomic":
            return self.R.const(self.R.field.zeta())
        raise ParseError(f"unknown variable {s!r}; declared variables are {list(self.R.vars)}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b.is_constant() or b.is_zero():
            raise ParseError("division is only allowed by a nonzero scalar")
        return a * (1 / b.constant_term())

    def neg(self, a):
        return -a

    def pow(self, a, e):
        return a**e


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    __slots__ = ("terms", "ring")

    def __init__(self, terms: dict, ring: PolyRing):
        self.terms = terms
        self.ring = ring

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def lm(self) -> tuple:
        return max(self.terms, key=self.ring.key)

    def lc(self):
        return self.terms[self.lm()]

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, o) -> "Poly":
        if isinstance(o, Poly):
            if o.ring.vars != self.ring.vars or o.ring.field != self.ring.field:
                raise ValueError("polynomials from different rings")
            return o
        return self.ring.const(o)

    def __add__(self, o):
        o = self._coerce(o)
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return Poly(t, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        return Poly({e: v * c for e, v in self.terms.items()}, self.ring)

    def mul_term(self, mono: tuple, c) -> "Poly":
        return Poly({mono_mul(e, mono): v * c for e, v in self.terms.items()}, self.ring)

    def __mul__(self, o):
        if not isinstance(o, Poly):
            return self.scale(o)
        o = self._coerce(o)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = mono_mul(e1, e2)
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly({e: c for e, c in t.items() if c}, self.ring)

    def __rmul__(self, o):
        return self.scale(o)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self) -> "Poly":
        return self.scale(1 / self.lc()) if self.terms else self

    def __eq__(self, o):
        if isinstance(o, Poly):
            return self.ring.vars == o.ring.vars and self.terms == o.terms
        try:
            return self.terms == self.ring.const(o).terms
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, point: Sequence):
        F = self.ring.field
        acc = F.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * F(x) ** k
            acc = acc + v
        return acc

    def substitute(self, index: int, value) -> "Poly":
        """Replace variable ``index`` by a scalar."""
        F = self.ring.field
        value = F(value)
        out = self.ring.zero()
        for e, c in self.terms.items():
            k = e[index]
            ne = e[:index] + (0,) + e[index + 1 :]
            out = out + self.ring.monomial(ne, c * value**k if k else c)
        return out

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    # -- text ----------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def format_monomial(exp: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    F = f.ring.field
    # a ring variable called z shadows the scalar symbol for zeta
    symbol = "zeta" if "z" in f.ring.vars else "z"
    out = ""
    for idx, (e, c) in enumerate(f.sorted_terms()):
        mono = format_monomial(e, f.ring.vars)
        s = F.format(c, symbol)
        multi = F.kind == "cyclotomic" and (" + " in s or " - " in s.lstrip("-"))
        neg = s.startswith("-") and not multi
        mag = s[1:] if neg else s
        if multi:
            body = f"({mag})*{mono}" if mono else f"({mag})"
        elif not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


# -- reduction and Buchberger -----------------------------------------------


def reduce_poly(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Fully reduce ``f`` modulo ``basis`` (multivariate division remainder)."""
    if not basis or not f.terms:
        return f
    key = f.ring.key
    leads = [(g.lm(), g) for g in basis]
    inv_lc = [1 / g.terms[lm] for lm, g in leads]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for (lm, g), il in zip(leads, inv_lc):
            if divides(lm, m):
                q = mono_div(m, lm)
                factor = c * il
                for e, v in g.terms.items():
                    ne = mono_mul(e, q)
                    w = p.get(ne)
                    w = -factor * v if w is None else w - factor * v
                    if w:
                        p[ne] = w
                    else:
                        p.pop(ne, None)
                break
        else:
            rem[m] = c
            del p[m]
    return Poly(rem, f.ring)


def spoly(f: Poly, g: Poly) -> Poly:
    mf, mg = f.lm(), g.lm()
    L = mono_lcm(mf, mg)
    a = f.mul_term(mono_div(L, mf), 1 / f.terms[mf])
    b = g.mul_term(mono_div(L, mg), 1 / g.terms[mg])
    return a - b


def interreduce(polys: Iterable[Poly]) -> list[Poly]:
    """Autoreduce a set; applied to a Gröbner basis this yields the reduced Gröbner basis."""
    G = [p.monic() for p in polys if p.terms]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(G):
            r = reduce_poly(G[i], G[:i] + G[i + 1 :])
            if r.terms != G[i].terms:
                changed = True
                if r.terms:
                    G[i] = r.monic()
                else:
                    del G[i]
                    continue
            i += 1
    G.sort(key=lambda p: p.ring.key(p.lm()), reverse=True)
    return G


def buchberger(ring: PolyRing, gens: Iterable, budget: int | None = None) -> list[Poly]:
    """Reduced Gröbner basis of the ideal generated by ``gens``, sorted by decreasing leading monomial."""
    budget = gb_budget() if budget is None else budget
    G = interreduce(ring(g) for g in gens)
    if any(g.is_constant() for g in G):
        return [ring.one()]
    key = ring.key
    heap: list = []

    def push(i, j):
        a, b = G[i].lm(), G[j].lm()
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            return  # coprime leading monomials
        heapq.heappush(heap, (key(mono_lcm(a, b)), i, j))

    for i in range(len(G)):
        for j in range(i):
            push(i, j)
    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"Gröbner basis computation exceeded {budget} S-polynomial reductions")
        h = reduce_poly(spoly(G[i], G[j]), G)
        if h.terms:
            h = h.monic()
            if h.is_constant():
                return [ring.one()]
            G.append(h)
            n = len(G) - 1
            for k in range(n):
                push(n, k)
    return interreduce(G)


def is_groebner(G: Sequence[Poly]) -> bool:
    for f, g in itertools.combinations(G, 2):
        if reduce_poly(spoly(f, g), G).terms:
            return False
    return True


def is_reduced(G: Sequence[Poly]) -> bool:
    for i, g in enumerate(G):
        if g.lc() != 1:
            return False
        others = [q.lm() for j, q in enumerate(G) if j != i]
        for e in g.terms:
            if any(divides(lm, e) for lm in others):
                return False
    return True


# -- finitely presented algebras --------------------------------------------


def monomials_up_to(nvars: int, d: int) -> Iterable[tuple]:
    for deg in range(d + 1):
        yield from monomials_of_degree(nvars, deg)


def monomials_of_degree(nvars: int, deg: int) -> Iterable[tuple]:
    if nvars == 0:
        if deg == 0:
            yield ()
        return
    if nvars == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(nvars - 1, deg - first):
            yield (first,) + rest


class FPCommAlgebra:
    """A = k[vars]/(relations) with a reduced Gröbner basis under ``order``."""

    def __init__(
        self,
        field: FieldSpec,
        variables: Sequence[str],
        relations: Iterable = (),
        order: str = "grevlex",
        budget: int | None = None,
    ):
        self.ring = PolyRing(field, variables, order)
        self.relations = [self.ring(r) for r in relations]
        self.relations = [r for r in self.relations if r.terms]
        self.gb = buchberger(self.ring, self.relations, budget)
        self.reduced = True
        self._lead = [g.lm() for g in self.gb]
        self._nf_cache: dict = {}

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    @property
    def vars(self) -> tuple[str, ...]:
        return self.ring.vars

    @cached_property
    def is_homogeneous(self) -> bool:
        return all(len({sum(e) for e in r.terms}) <= 1 for r in self.relations)

    def __call__(self, x) -> Poly:
        return self.ring(x)

    def normal_form(self, f) -> Poly:
        f = self.ring(f)
        return reduce_poly(f, self.gb)

    def nf_monomial(self, exp: tuple) -> Poly:
        r = self._nf_cache.get(exp)
        if r is None:
            r = self.normal_form(self.ring.monomial(exp))
            self._nf_cache[exp] = r
        return r

    def multiply(self, f: Poly, g: Poly) -> Poly:
        return self.normal_form(f * g)

    def contains(self, f) -> bool:
        """Ideal membership: NF(f) == 0."""
        return not self.normal_form(f).terms

    def is_standard(self, exp: tuple) -> bool:
        return not any(divides(lm, exp) for lm in self._lead)

    def standard_monomials(self, d: int) -> list[tuple]:
        """Monomials of degree <= d not divisible by any leading monomial; by degree, then decreasing order."""
        out = []
        for deg in range(d + 1):
            layer = [e for e in monomials_of_degree(self.ring.nvars, deg) if self.is_standard(e)]
            layer.sort(key=self.ring.key, reverse=True)
            out.extend(layer)
        return out

    def workspace(self, d: int) -> "Workspace":
        return Workspace(self, d)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "vars": list(self.vars),
            "relations": [format_poly(r) for r in self.relations],
            "order": self.ring.order,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FPCommAlgebra":
        for key in ("field", "vars"):
            if key not in obj:
                raise ValueError(f"algebra definition is missing {key!r}")
        F = FieldSpec.from_json(obj["field"])
        ring = PolyRing(F, obj["vars"], obj.get("order", "grevlex"))
        rels = []
        for k, text in enumerate(obj.get("relations", [])):
            try:
                rels.append(ring.parse(text))
            except ParseError as exc:
                raise ParseError(f"relations[{k}]: {exc}") from None
        return cls(F, obj["vars"], rels, obj.get("order", "grevlex"))

    def __repr__(self):
        rels = ", ".join(format_poly(r) for r in self.relations)
        return f"FPCommAlgebra({self.field.describe()}[{', '.join(self.vars)}]/({rels}))"


class Workspace:
    """Coordinates on the span of standard monomials of degree <= d."""

    def __init__(self, algebra: FPCommAlgebra, d: int):
        self.algebra = algebra
        self.degree = d
        self.monomials = algebra.standard_monomials(d)
        self.index = {e: i for i, e in enumerate(self.monomials)}
        self.dim = len(self.monomials)

    def vector(self, f: Poly, reduced: bool = False) -> list:
        F = self.algebra.field
        if not reduced:
            f = self.algebra.normal_form(f)
        v = [F.zero] * self.dim
        for e, c in f.terms.items():
            i = self.index.get(e)
            if i is None:
                raise WorkspaceOverflow(
                    f"term of degree {sum(e)} lies outside the degree-{self.degree} workspace",
                    required=sum(e),
                )
            v[i] = c
        return v

    def poly(self, v: Sequence) -> Poly:
        R = self.algebra.ring
        return Poly({e: R.field(c) for e, c in zip(self.monomials, v) if c}, R)

    def degree_mask(self, d: int) -> list[int]:
        return [i for i, e in enumerate(self.monomials) if sum(e) <= d]


def gen_products(gens: Sequence[Poly], e: int) -> list[tuple[tuple, ...]]:
    """Exponent vectors over ``gens`` of total degree <= e (the empty product first)."""
    return list(monomials_up_to(len(gens), e)) if gens else [()]


def subalgebra_elements(A: FPCommAlgebra, gens: Sequence, e: int) -> list[tuple[tuple, Poly]]:
    """(exponent vector over gens, NF of the product) for all products of generator-degree <= e."""
    gens = [A.normal_form(g) for g in gens]
    out = []
    cache: dict[tuple, Poly] = {(0,) * len(gens): A.ring.one()}
    for exp in gen_products(gens, e):
        if exp in cache:
            out.append((exp, cache[exp]))
            continue
        i = next(k for k, x in enumerate(exp) if x)
        prev = exp[:i] + (exp[i] - 1,) + exp[i + 1 :]
        val = A.normal_form(cache[prev] * gens[i])
        cache[exp] = val
        out.append((exp, val))
    return out


def subalgebra_span(A: FPCommAlgebra, gens: Sequence, e: int, workspace: Workspace | None = None) -> Subspace:
    """RREF span of NF(products of gens) of total generator-degree <= e, including 1."""
    elems = subalgebra_elements(A, gens, e)
    if workspace is None:
        need = max((p.degree for _, p in elems), default=0)
        workspace = A.workspace(max(need, 0))
    return Subspace.span([workspace.vector(p, reduced=True) for _, p in elems], workspace.dim, A.field)

"""Exact scalar fields: rationals, prime fields and cyclotomic fields Q(zeta_N).

Rationals are ``gmpy2.mpq`` values.  Prime-field and cyclotomic elements are
small immutable classes supporting the usual operators, so every algorithm in
the package is written once against ``+ - * /`` and truthiness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import gmpy2
from gmpy2 import mpq

from ..exprparse import ParseError, evaluate


class FieldError(ValueError):
    """Raised on mixed-field arithmetic or invalid field parameters."""


class UnsupportedOperation(FieldError):
    pass


_RATIONAL_TYPES = (int, type(mpq(0)), Fraction)
MPQ = type(mpq(0))


def to_mpq(x) -> Any:
    if isinstance(x, MPQ):
        return x
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    raise FieldError(f"cannot coerce {x!r} to a rational")


# -- prime fields -----------------------------------------------------------


class Fp:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, Fp):
            if o.p != self.p:
                raise FieldError(f"mixed prime fields F_{self.p} and F_{o.p}")
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, (MPQ, Fraction)):
            num, den = int(o.numerator), int(o.denominator)
            if den % self.p == 0:
                raise FieldError(f"denominator divisible by {self.p}")
            return num * pow(den, -1, self.p)
        raise FieldError(f"cannot combine F_{self.p} element with {type(o).__name__}")

    def __add__(self, o):
        return Fp(self.v + self._other(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Fp(self.v - self._other(o), self.p)

    def __rsub__(self, o):
        return Fp(self._other(o) - self.v, self.p)

    def __mul__(self, o):
        return Fp(self.v * self._other(o), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self):
        if not self.v:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        return self * Fp(self._other(o), self.p).inverse()

    def __rtruediv__(self, o):
        return Fp(self._other(o), self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        try:
            return (self.v - self._other(o)) % self.p == 0
        except FieldError:
            return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


# -- cyclotomic fields ------------------------------------------------------


class CyclotomicContext:
    """Arithmetic tables for Q[t]/Phi_N(t)."""

    def __init__(self, N: int):
        from .unipoly import cyclotomic_polynomial

        self.N = N
        phi = cyclotomic_polynomial(N)
        self.modulus = tuple(mpq(c) for c in phi.coeffs)
        self.deg = len(self.modulus) - 1
        d = self.deg
        # rows for t^k with k >= d, enough to cover products and t^(k mod N)
        self.reduce_rows: list[tuple] = []
        cur = [-c for c in self.modulus[:d]]  # t^d
        for _ in range(max(d - 1, self.N - d)):
            self.reduce_rows.append(tuple(cur))
            top = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if top:
                cur = [cur[i] - top * self.modulus[i] for i in range(d)]
        self.zero = Cyc(tuple([mpq(0)] * d), self)
        self.one = Cyc(tuple([mpq(1)] + [mpq(0)] * (d - 1)), self)

    def reduce(self, coeffs: list) -> tuple:
        d = self.deg
        head = list(coeffs[:d]) + [mpq(0)] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._power_row(k)
                for i in range(d):
                    if row[i]:
                        head[i] += c * row[i]
        return tuple(head)

    def _power_row(self, k):
        d = self.deg
        if k - d >= len(self.reduce_rows):
            k %= self.N  # t^N = 1
            if k < d:
                return tuple(mpq(1) if i == k else mpq(0) for i in range(d))
        return self.reduce_rows[k - d]

    def element(self, coeffs) -> "Cyc":
        return Cyc(self.reduce([to_mpq(c) for c in coeffs]), self)

    def gen(self) -> "Cyc":
        if self.deg == 1:
            return Cyc((-self.modulus[0],), self)
        return self.element([0, 1])


@lru_cache(maxsize=None)
def cyclotomic_context(N: int) -> CyclotomicContext:
    return CyclotomicContext(N)


class Cyc:
    __slots__ = ("c", "ctx")

    def __init__(self, c: tuple, ctx: CyclotomicContext):
        self.c = c
        self.ctx = ctx

    def _lift(self, o) -> tuple:
        if isinstance(o, Cyc):
            if o.ctx is not self.ctx:
                raise FieldError(f"mixed cyclotomic fields Q(zeta_{self.ctx.N}) and Q(zeta_{o.ctx.N})")
            return o.c
        if isinstance(o, _RATIONAL_TYPES):
            return (mpq(o),) + self.ctx.zero.c[1:]
        raise FieldError(f"cannot combine Q(zeta_{self.ctx.N}) element with {type(o).__name__}")

    def __add__(self, o):
        oc = self._lift(o)
        return Cyc(tuple(a + b for a, b in zip(self.c, oc)), self.ctx)

    __radd__ = __add__

    def __sub__(self, o):
        oc = self._lift(o)
        return Cyc(tuple(a - b for a, b in zip(self.c, oc)), self.ctx)

    def __rsub__(self, o):
        oc = self._lift(o)
        return Cyc(tuple(b - a for a, b in zip(self.c, oc)), self.ctx)

    def __neg__(self):
        return Cyc(tuple(-a for a in self.c), self.ctx)

    def __mul__(self, o):
        if isinstance(o, _RATIONAL_TYPES):
            o = mpq(o)
            return Cyc(tuple(a * o for a in self.c), self.ctx)
        oc = self._lift(o)
        d = self.ctx.deg
        prod = [mpq(0)] * (2 * d - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(oc):
                    if b:
                        prod[i + j] += a * b
        return Cyc(self.ctx.reduce(prod), self.ctx)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        from .unipoly import UniPoly, QQ_SPEC

        if not self:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        a = UniPoly(list(self.c), QQ_SPEC)
        m = UniPoly(list(self.ctx.modulus), QQ_SPEC)
        g, s, _ = a.xgcd(m)
        # g is a nonzero constant because Phi_N is irreducible
        inv = s.scale(1 / g.coeffs[0])
        return self.ctx.element(list(inv.coeffs))

    def __truediv__(self, o):
        if isinstance(o, _RATIONAL_TYPES):
            o = mpq(o)
            if not o:
                raise ZeroDivisionError("division by zero")
            return Cyc(tuple(a / o for a in self.c), self.ctx)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.c)

    def __eq__(self, o):
        try:
            oc = self._lift(o)
        except FieldError:
            return NotImplemented
        return self.c == oc

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __repr__(self):
        return f"Cyc({format_cyclotomic(self)!r}, N={self.ctx.N})"

    def __str__(self):
        return format_cyclotomic(self)


def _format_rational(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_cyclotomic(a: Cyc, symbol: str = "z") -> str:
    terms = []
    for k in range(len(a.c) - 1, -1, -1):
        c = a.c[k]
        if not c:
            continue
        mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = _format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_rational(mag)}*{mono}"
        terms.append((neg, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -- field specs ------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """One of Q, F_p or Q(zeta_N).  Calling it coerces a value into the field."""

    kind: str  # "rational" | "prime" | "cyclotomic"
    p: int | None = None
    N: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.p, int) or self.p < 2 or self.p >= 2**31 or not gmpy2.is_prime(self.p):
                raise FieldError(f"prime field needs a prime p < 2^31, got {self.p!r}")
        elif self.kind == "cyclotomic":
            if not isinstance(self.N, int) or self.N < 1:
                raise FieldError(f"cyclotomic field needs N >= 1, got {self.N!r}")
        elif self.kind != "rational":
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p=p)

    @classmethod
    def cyclotomic(cls, N: int) -> "FieldSpec":
        return cls("cyclotomic", N=N)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0

    @property
    def ctx(self) -> CyclotomicContext:
        return cyclotomic_context(self.N)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def zeta(self):
        """Distinguished primitive N-th root of unity (class of t)."""
        if self.kind != "cyclotomic":
            raise UnsupportedOperation("zeta is only defined for cyclotomic fields")
        return self.ctx.gen()

    def __call__(self, x):
        if self.kind == "rational":
            if isinstance(x, (Fp, Cyc)):
                raise FieldError(f"{x!r} is not a rational")
            return to_mpq(x)
        if self.kind == "prime":
            if isinstance(x, Fp):
                if x.p != self.p:
                    raise FieldError(f"element of F_{x.p} used in F_{self.p}")
                return x
            if isinstance(x, Cyc):
                raise FieldError(f"{x!r} is not in F_{self.p}")
            return Fp(0, self.p) + x
        if isinstance(x, Cyc):
            if x.ctx.N != self.N:
                raise FieldError(f"element of Q(zeta_{x.ctx.N}) used in Q(zeta_{self.N})")
            return x
        if isinstance(x, Fp):
            raise FieldError(f"{x!r} is not in Q(zeta_{self.N})")
        return self.ctx.zero + to_mpq(x)

    def owns(self, x) -> bool:
        if self.kind == "rational":
            return isinstance(x, (MPQ, int, Fraction))
        if self.kind == "prime":
            return (isinstance(x, Fp) and x.p == self.p) or isinstance(x, int)
        return (isinstance(x, Cyc) and x.ctx.N == self.N) or isinstance(x, (MPQ, int, Fraction))

    def elements(self):
        """Iterate over all elements of a prime field."""
        if self.kind != "prime":
            raise UnsupportedOperation("only prime fields are enumerable")
        return (Fp(v, self.p) for v in range(self.p))

    def format(self, x, symbol: str = "z") -> str:
        """Canonical text; ``symbol`` names zeta in cyclotomic fields."""
        x = self(x)
        if self.kind == "rational":
            return _format_rational(x)
        if self.kind == "cyclotomic":
            return format_cyclotomic(x, symbol)
        return str(x)

    def parse(self, text: str):
        try:
            return self(evaluate(str(text), _ScalarAdapter(self)))
        except (ParseError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {text!r} for {self.describe()}: {exc}") from None

    def describe(self) -> str:
        if self.kind == "rational":
            return "Q"
        if self.kind == "prime":
            return f"F_{self.p}"
        return f"Q(zeta_{self.N})"

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        return {"kind": "cyclotomic", "N": self.N}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise FieldError(f"field must be an object with a 'kind' key, got {obj!r}")
        kind = obj["kind"]
        if kind == "rational":
            return cls.rational()
        if kind == "prime":
            return cls.prime(obj.get("p"))
        if kind == "cyclotomic":
            return cls.cyclotomic(obj.get("N"))
        raise FieldError(f"unknown field kind {kind!r}")


class _ScalarAdapter:
    def __init__(self, F: FieldSpec):
        self.F = F

    def number(self, n):
        return self.F(n)

    def name(self, s):
        if s in ("z", "zeta") and self.F.kind == "cyclotomic":
            return self.F.zeta()
        raise ParseError(f"unknown symbol {s!r} in scalar for {self.F.describe()}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def pow(self, a, e):
        return a**e


def field_of(x) -> FieldSpec | None:
    """Field an element belongs to; ``None`` for plain rationals/ints (compatible with Q or Q(zeta))."""
    if isinstance(x, Fp):
        return FieldSpec.prime(x.p)
    if isinstance(x, Cyc):
        return FieldSpec.cyclotomic(x.ctx.N)
    if isinstance(x, _RATIONAL_TYPES):
        return None
    raise FieldError(f"not a field element: {x!r}")


QQ = FieldSpec.rational()

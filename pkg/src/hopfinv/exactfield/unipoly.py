"""Dense univariate polynomials over an exact field, cyclotomic polynomials and root finding."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

from gmpy2 import mpq

from .fields import FieldSpec, UnsupportedOperation

QQ_SPEC = FieldSpec.rational()


class UniPoly:
    """Polynomial with coefficients lowest degree first; trailing zeros stripped."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: FieldSpec = QQ_SPEC):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def monomial(cls, k: int, field: FieldSpec = QQ_SPEC, c=1) -> "UniPoly":
        return cls([0] * k + [c], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def lead(self):
        return self.coeffs[-1]

    def __add__(self, o: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (self.field.zero,) * (n - len(self.coeffs))
        b = o.coeffs + (self.field.zero,) * (n - len(o.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)], self.field)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.field)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o: "UniPoly") -> "UniPoly":
        if not self or not o:
            return UniPoly([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.field)

    def scale(self, c) -> "UniPoly":
        return UniPoly([c * x for x in self.coeffs], self.field)

    def monic(self) -> "UniPoly":
        return self.scale(1 / self.lead()) if self else self

    def divmod(self, d: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.field.zero] * max(0, len(rem) - len(d.coeffs) + 1)
        inv = 1 / d.lead()
        dd = d.degree
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv
            q[k - dd] = c
            for j, b in enumerate(d.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - c * b
        return UniPoly(q, self.field), UniPoly(rem[:dd] if dd > 0 else [], self.field)

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def xgcd(self, o: "UniPoly") -> tuple["UniPoly", "UniPoly", "UniPoly"]:
        """Return (g, s, t) with s*self + t*o = g."""
        F = self.field
        r0, r1 = self, o
        s0, s1 = UniPoly([1], F), UniPoly([], F)
        t0, t1 = UniPoly([], F), UniPoly([1], F)
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        return r0, s0, t0

    def gcd(self, o: "UniPoly") -> "UniPoly":
        return self.xgcd(o)[0].monic()

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]}, {self.field.describe()})"

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
                parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> UniPoly:
    """Phi_N over Q: t^N - 1 divided by Phi_d for every proper divisor d of N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    f = UniPoly([-1] + [0] * (N - 1) + [1])
    for d in range(1, N):
        if N % d == 0:
            q, r = f.divmod(cyclotomic_polynomial(d))
            assert not r
            f = q
    return f


def euler_phi(N: int) -> int:
    return sum(1 for k in range(1, N + 1) if gcd(k, N) == 1)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n > 10**12:
        from sympy import divisors

        return [int(d) for d in divisors(n)]
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def roots_in_field(f: UniPoly, field: FieldSpec | None = None) -> list:
    """All roots of ``f`` in Q or F_p, without multiplicity, in increasing order."""
    F = field or f.field
    if F.kind == "cyclotomic":
        raise UnsupportedOperation("root finding over Q(zeta_N) is not supported; restrict scalars to Q first")
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    if F.kind == "prime":
        g = UniPoly(f.coeffs, F)
        return [a for a in F.elements() if not g(a)]
    coeffs = [mpq(c) for c in f.coeffs]
    roots = []
    if not coeffs[0]:
        roots.append(mpq(0))
        while not coeffs[0]:
            coeffs.pop(0)
    den = 1
    for c in coeffs:
        den = den * int(c.denominator) // gcd(den, int(c.denominator))
    ints = [int(c * den) for c in coeffs]
    g = UniPoly(coeffs, QQ_SPEC)
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if gcd(p, q) != 1:
                continue
            for cand in (mpq(p, q), mpq(-p, q)):
                if not g(cand) and cand not in roots:
                    roots.append(cand)
    return sorted(roots)

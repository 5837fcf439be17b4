from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from hopfinv.exactfield import (
    FieldError,
    FieldSpec,
    Fp,
    Subspace,
    UniPoly,
    cyclotomic_polynomial,
    euler_phi,
    mat_kernel,
    mat_mul,
    mat_rref,
    rank,
    roots_in_field,
    solve_linear,
)
from hopfinv.exprparse import ParseError

import pytest

QQ = FieldSpec.rational()


def test_cyclotomic_polynomials():
    # coefficients lowest degree first
    assert list(cyclotomic_polynomial(1).coeffs) == [-1, 1]
    assert list(cyclotomic_polynomial(4).coeffs) == [1, 0, 1]
    assert list(cyclotomic_polynomial(6).coeffs) == [1, -1, 1]
    assert list(cyclotomic_polynomial(12).coeffs) == [1, 0, -1, 0, 1]
    for N in range(1, 13):
        assert len(cyclotomic_polynomial(N).coeffs) - 1 == euler_phi(N)


def test_cyclotomic_parse_reduces():
    K4 = FieldSpec.cyclotomic(4)
    assert K4.format(K4.parse("z^9")) == "z"
    assert K4.format(K4.parse("z^2")) == "-1"
    K3 = FieldSpec.cyclotomic(3)
    z = K3.zeta()
    assert z**3 == K3.one
    assert K3.format(1 / z) == "-z - 1"
    assert K3.parse("1/2*z^2 - 1") == K3(mpq(1, 2)) * z * z - 1


def test_scalar_text_roundtrip():
    for F, text in [(QQ, "-3/4"), (FieldSpec.prime(7), "2"), (FieldSpec.cyclotomic(5), "1/2*z^3 - z + 4")]:
        assert F.format(F.parse(text)) == text


def test_prime_field_checks():
    with pytest.raises(FieldError):
        FieldSpec.prime(9)
    with pytest.raises(FieldError):
        Fp(1, 3) + Fp(1, 5)
    F5 = FieldSpec.prime(5)
    assert F5.parse("-1") == Fp(4, 5)
    with pytest.raises(ParseError):
        F5.parse("1/0")


def test_rref_and_kernel_examples():
    A, piv = mat_rref([[1, 2], [2, 4]])
    assert A == [[1, 2], [0, 0]] and piv == [0]
    K = mat_kernel([[1, 1]], 2)
    assert K.dim == 1 and list(K.basis[0]) in ([1, -1], [-1, 1])
    x0, ker = solve_linear([[1, 1]], [2])
    assert x0 == [2, 0] and ker.dim == 1
    assert solve_linear([[0]], [1]) is None


def test_roots():
    assert roots_in_field(UniPoly([-1, 0, 1], QQ), QQ) == [-1, 1]
    assert roots_in_field(UniPoly([-2, 0, 1], QQ), QQ) == []
    F5 = FieldSpec.prime(5)
    assert [int(r.v) for r in roots_in_field(UniPoly([1, 0, 1], F5), F5)] == [2, 3]


def test_subspace_operations():
    U = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    V = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
    assert (U + V).dim == 3
    assert U.intersect(V) == Subspace.span([[0, 1, 0]], 3)
    assert U.annihilator() == Subspace.span([[0, 0, 1]], 3)
    assert U.contains([2, 3, 0]) and not U.contains([0, 0, 1])


# -- properties ------------------------------------------------------------

rationals = st.fractions(max_denominator=50).map(lambda f: mpq(f.numerator, f.denominator))
residues = st.integers(0, 6).map(lambda v: Fp(v, 7))
K5 = FieldSpec.cyclotomic(5)
cyc = st.lists(st.integers(-4, 4), min_size=4, max_size=4).map(lambda c: K5.ctx.element([mpq(x) for x in c]))


@pytest.mark.parametrize("elements", [rationals, residues, cyc], ids=["Q", "F7", "Q(zeta5)"])
def test_field_axioms(elements):
    @settings(max_examples=60, deadline=None)
    @given(elements, elements, elements)
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == 0 * a
        if a != 0 * a:
            assert a * (1 / a) == 1 + 0 * a

    check()


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rref_idempotent_and_rank_nullity(M):
    R, piv = mat_rref(M)
    R2, piv2 = mat_rref(R)
    assert R2 == R and piv2 == piv
    n = len(M[0])
    K = mat_kernel(M, n)
    assert rank(M) + K.dim == n
    for v in K.basis:
        assert all(x == 0 for x in mat_mul(M, [[c] for c in v]) for x in x)


@settings(max_examples=50, deadline=None)
@given(matrices, st.data())
def test_solve_linear_roundtrip(M, data):
    n = len(M[0])
    x = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    b = [sum(mpq(a) * c for a, c in zip(row, x)) for row in M]
    sol = solve_linear(M, b)
    assert sol is not None
    x0, _ = sol
    assert [sum(a * c for a, c in zip(row, x0)) for row in M] == b

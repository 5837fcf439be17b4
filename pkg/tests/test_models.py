import pytest

from hopfinv.exactfield import FieldSpec, Fp
from hopfinv.findim import is_cocommutative, verify_hopf_axioms
from hopfinv.groups import dihedral, symmetric
from hopfinv.models import (
    ModelError,
    example31,
    example31_closed_form_check,
    group_algebra,
    sweedler,
    taft,
)
from hopfinv.structure import grouplikes, is_semisimple

QQ = FieldSpec.rational()


def test_sweedler_is_taft_2():
    H = sweedler()
    assert H.dim == 4 and H.basis == ("1", "g", "x", "g*x")
    assert H.S(H.element("x")) == H.element("-g*x")


def test_taft_rejects_non_primitive_roots():
    with pytest.raises(ModelError):
        taft(2, FieldSpec.prime(2))
    with pytest.raises(ModelError):
        taft(4, FieldSpec.cyclotomic(4), xi=-1)
    with pytest.raises(ModelError):
        taft(3, QQ)


def test_taft_over_prime_field():
    F5 = FieldSpec.prime(5)
    H = taft(4, F5, xi=Fp(2, 5))
    assert verify_hopf_axioms(H).passed
    assert len(grouplikes(H)) == 4


def test_group_algebra_examples():
    assert group_algebra(2).dim == 2
    c3 = group_algebra(3, FieldSpec.prime(3))
    assert c3.dim == 3 and not is_semisimple(c3).semisimple
    s3 = group_algebra(symmetric(3))
    assert s3.dim == 6 and is_semisimple(s3).semisimple and is_cocommutative(s3)
    d4 = group_algebra(dihedral(4), FieldSpec.prime(5))
    assert d4.dim == 8 and is_semisimple(d4).semisimple


def test_example31_rejects_characteristic_two():
    with pytest.raises(ModelError):
        example31(2, FieldSpec.prime(2))


@pytest.mark.parametrize("N", [2, 3, 4])
def test_closed_form_oracle(N):
    verdict = example31_closed_form_check(example31(N), 12)
    assert verdict.passed, verdict.mismatches
    assert verdict.checked == 13 * 4


def test_closed_form_values():
    b = example31(2)
    H, A, spec = b.hopf, b.algebra, b.action
    x = H.index("x")
    assert spec.act(x, A("y")) == A("z")
    assert spec.act(x, A("1")).is_zero()
    assert spec.act(x, A("y^5")) == A("5*y^4*z")


def test_charp_bundle_makes_y3_invariant():
    from hopfinv.action import invariants

    b = example31(2, FieldSpec.prime(3))
    A = b.algebra
    ws = A.workspace(3)
    assert invariants(b.action, "H", 3).contains(ws.vector(A("y^3")))


@pytest.mark.parametrize("field", [None, FieldSpec.prime(3)], ids=["Q", "F3"])
def test_bundle_expectations_at_every_degree(field):
    from hopfinv.action import invariants

    b = example31(2, field, max_degree=6)
    A = b.algebra
    for d in range(b.expected["max_degree"] + 1):
        ws = A.workspace(d)
        for key, sub in (("A^G", "G"), ("A^H", "H")):
            want = [p for p in b.expected[key] if p.degree <= d]
            V = invariants(b.action, sub, d)
            assert V.dim == len(want)
            assert all(V.contains(ws.vector(p)) for p in want)

import json

import pytest

from hopfinv.exactfield import FieldSpec
from hopfinv.findim import (
    AXIOMS,
    DefinitionError,
    HopfAlgebraData,
    build_from_tables,
    change_basis,
    dual_hopf,
    is_cocommutative,
    is_commutative,
    verify_hopf_axioms,
)
from hopfinv.groups import symmetric
from hopfinv.models import group_algebra, taft, taft_index

QQ = FieldSpec.rational()


def test_seven_axioms_on_models(tafts):
    assert len(AXIOMS) == 7
    for N, H in tafts.items():
        rep = verify_hopf_axioms(H)
        assert rep.passed and len(rep.checks) == 7
        assert H.dim == N * N


def test_corrupted_antipode_fails_only_antipode(H4):
    obj = H4.to_json()
    obj["antipode"][H4.index("x")] = ["0", "0", "0", "1"]
    rep = verify_hopf_axioms(HopfAlgebraData.from_json(obj))
    assert rep.failed() == ["antipode"]
    assert rep["antipode"].witness is not None


def test_corrupted_comult_is_caught(H4):
    obj = H4.to_json()
    obj["comult"][H4.index("g")] = ["0"] * 16
    assert not verify_hopf_axioms(HopfAlgebraData.from_json(obj)).passed


def test_json_roundtrip_is_identical(tafts):
    for H in tafts.values():
        text = json.dumps(H.to_json(), sort_keys=True)
        again = HopfAlgebraData.from_json(json.loads(text))
        assert json.dumps(again.to_json(), sort_keys=True) == text


@pytest.mark.parametrize(
    "mutate,needle",
    [
        (lambda o: o["mult"].__setitem__(0, o["mult"][0][:3]), "mult[0]"),
        (lambda o: o.pop("counit"), "counit"),
        (lambda o: o["basis"].__setitem__(1, "1"), "duplicate"),
        (lambda o: o["unit"].__setitem__(0, "1/0"), "unit"),
        (lambda o: o["antipode"][1].__setitem__(0, 7), "antipode[1]"),
    ],
)
def test_definition_errors_point_at_field(H4, mutate, needle):
    obj = H4.to_json()
    mutate(obj)
    with pytest.raises(DefinitionError) as exc:
        HopfAlgebraData.from_json(obj)
    assert needle in str(exc.value)


def test_element_parser(H4):
    v = H4.element("2*g*x - 1/2 + x")
    assert H4.format_element(v) == "-1/2 + x + 2*g*x"
    assert H4.element("x*g") == H4.element("-g*x")
    assert H4.element("g^2") == H4.element("1")


def test_taft_multiplication_rule():
    H = taft(3)
    xi = H.field.zeta()
    g, x = H.element("g"), H.element("x")
    assert H.mul(x, g) == [xi * c for c in H.mul(g, x)]
    assert H.power(x, 3) == H.zero()
    assert H.power(g, 3) == H.element("1")


def _qbinom(n, k, q, F):
    def fact(m):
        acc = F.one
        for j in range(1, m + 1):
            acc = acc * sum((q**i for i in range(j)), F.zero)
        return acc

    return fact(n) / (fact(k) * fact(n - k))


@pytest.mark.parametrize("N", [3, 4])
def test_taft_coproduct_matches_q_binomials(N):
    """Delta(x^n) = sum_k [n choose k]_xi g^k x^(n-k) (x) x^k."""
    H = taft(N)
    F = H.field
    xi = F.zeta()
    n2 = H.dim
    for n in range(N):
        want = [F.zero] * (n2 * n2)
        for k in range(n + 1):
            want[taft_index(N, k, n - k) * n2 + taft_index(N, 0, k)] = _qbinom(n, k, xi, F)
        assert H.comult[taft_index(N, 0, n)] == want


def test_group_algebras_and_dual():
    kS3 = group_algebra(symmetric(3))
    assert is_cocommutative(kS3) and not is_commutative(kS3)
    D = dual_hopf(kS3)
    assert verify_hopf_axioms(D).passed
    assert is_commutative(D) and not is_cocommutative(D)


def test_build_from_tables_scalar_strings():
    H = build_from_tables(QQ, ["1"], [[["1"]]], ["1"], [["1"]], ["1"], [["1"]])
    assert verify_hopf_axioms(H).passed


def test_basis_change_preserves_axioms(H4):
    P = [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 2], [0, 0, 0, 1]]
    H2 = change_basis(H4, P)
    assert verify_hopf_axioms(H2).passed
    assert H2.eps(H2.basis_vector(1)) == 2

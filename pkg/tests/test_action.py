import pytest

from hopfinv.action import (
    ActionError,
    ActionSpec,
    IntegralityWitness,
    NoWitness,
    action_from_generators,
    frobenius_chain,
    integrality_witness,
    invariants,
    minimal_generators,
    pth_power_bound_check,
    subspace_polys,
    trace_image,
    verify_action,
)
from hopfinv.commalg import FPCommAlgebra, WorkspaceOverflow
from hopfinv.exactfield import FieldSpec, Subspace
from hopfinv.models import cyclic_sign_action, example31, group_algebra

QQ = FieldSpec.rational()
F3 = FieldSpec.prime(3)


def _span(A, d, texts):
    ws = A.workspace(d)
    return Subspace.span([ws.vector(A(t)) for t in texts] or [[A.field.zero] * ws.dim], ws.dim, A.field)


def test_action_values_example31(ex31):
    for N, b in ex31.items():
        H, A, spec = b.hopf, b.algebra, b.action
        x, g = H.index("x"), H.index("g")
        assert spec.act(x, A("y^2")) == A("2*y*z")
        assert spec.act(g, A("y*z")) == A("y*z").scale(1 / b.xi)
        assert spec.act(x, A("y*z")).is_zero()
        assert spec.act(x, A("1")).is_zero()


def test_verify_action_passes(ex31, ex31_f3):
    assert verify_action(ex31[2].action, 6).passed
    assert verify_action(ex31[3].action, 4).passed
    assert verify_action(ex31_f3.action, 6).passed


def test_modified_action_fails_relation_check(ex31):
    b = ex31[3]
    H, A = b.hopf, b.algebra
    y, z = A.ring.var("y"), A.ring.var("z")
    gens = {"g": {"y": y, "z": z.scale(1 / b.xi)}, "x": {"y": z, "z": y}}
    spec = action_from_generators(H, A, {"g": H.element("g"), "x": H.element("x")}, gens)
    rep = verify_action(spec, 4)
    assert not rep.checks["relations"]
    cex = rep.counterexamples["relations"]
    assert cex["h"] == "x" and cex["element"] == "z^2"
    # x(z^2) = (1 + xi^-1) y z
    assert A.ring.parse(cex["image"]) == A("y*z").scale(1 + 1 / b.xi)


def test_unit_axiom_failure(ex31):
    b = ex31[2]
    vals = dict(b.action.values)
    vals[(0, 0)] = b.algebra("2*y")
    rep = verify_action(ActionSpec(b.hopf, b.algebra, vals), 3)
    assert not rep.checks["unit"]


def test_missing_pair_is_rejected(ex31):
    b = ex31[2]
    vals = dict(b.action.values)
    del vals[(1, 1)]
    with pytest.raises(ActionError):
        ActionSpec(b.hopf, b.algebra, vals)


def test_workspace_overflow(ex31):
    b = ex31[2]
    with pytest.raises(WorkspaceOverflow):
        b.action.act(b.hopf.index("g"), b.algebra("y^3"), max_degree=2)


def test_invariants_example31(ex31, ex31_f3):
    for b in ex31.values():
        A = b.algebra
        assert invariants(b.action, "G", 4) == _span(A, 4, ["1", "y", "y^2", "y^3", "y^4"])
        assert invariants(b.action, "H", 4) == _span(A, 4, ["1"])
    A = ex31_f3.algebra
    assert invariants(ex31_f3.action, "H", 6) == _span(A, 6, ["1", "y^3", "y^6"])


def test_trace_image():
    H, A, spec = cyclic_sign_action()
    tr = trace_image(spec, 4)
    assert tr.span == _span(A, 4, ["1", "y^2", "y^4"]) and tr.included and tr.equal


def test_trace_image_sweedler(ex31):
    b = ex31[2]
    tr = trace_image(b.action, 4)
    assert tr.span.dim == 0 and tr.included and not tr.equal
    zero = trace_image(b.action, 4, integral=b.hopf.zero())
    assert zero.span.dim == 0 and zero.included


def test_integrality_witnesses(ex31, ex31_f3):
    A = ex31[2].algebra
    none = integrality_witness(A, "y", [], 8, 8)
    assert isinstance(none, NoWitness)
    assert none.to_json()["result"] == "none up to (8, 8)"
    w = integrality_witness(A, "y", ["y"], 8, 8)
    assert isinstance(w, IntegralityWitness) and w.degree == 1 and w.format() == "T - y"
    A3 = ex31_f3.algebra
    w3 = integrality_witness(A3, "y", ["y^3"], 4, 2)
    assert w3.degree == 3 and w3.coefficient(0) == A3("-y^3") and w3.verify()
    wz = integrality_witness(A, "z", ["y"], 4, 2)
    assert wz.format() == "T^2"


def test_witness_budget(monkeypatch, ex31):
    from hopfinv.commalg import BudgetExceeded

    monkeypatch.setenv("HOPFINV_WITNESS_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        integrality_witness(ex31[2].algebra, "y", [], 8, 8)


def test_frobenius_chain_sweedler_f3(ex31_f3):
    chain = frobenius_chain(ex31_f3.action, 3, 1, 6)
    A = ex31_f3.algebra
    assert chain.levels == [[A("y")], [A("y^3")]]
    assert chain.passed
    depth0 = frobenius_chain(ex31_f3.action, 3, 0, 6)
    assert len(depth0.levels) == 1 and depth0.passed


def test_frobenius_chain_sign_action():
    H, A, spec = cyclic_sign_action(F3)
    chain = frobenius_chain(spec, 3, 1, 6)
    assert chain.levels == [[A("y^2")], [A("y^6")]]
    assert chain.passed


def test_frobenius_chain_rejects_char_zero(ex31):
    with pytest.raises(ActionError):
        frobenius_chain(ex31[2].action, 3, 1, 4)


def test_pth_power_bound(ex31, ex31_f3):
    pc = pth_power_bound_check(ex31_f3.action, 3, 4)
    assert pc.applicable and pc.exponent == 81 and pc.passed
    assert "y" in pc.checked and "1" in pc.checked
    assert any(s.startswith("y^4") for s in pc.skipped)
    assert not pth_power_bound_check(ex31[2].action, 3, 4).applicable


def test_action_json_roundtrip(ex31):
    b = ex31[3]
    obj = b.action.to_json("h", "a")
    again = ActionSpec.from_json(obj, b.hopf, b.algebra)
    assert again.values == b.action.values
    obj["action"].pop()
    with pytest.raises(ActionError):
        ActionSpec.from_json(obj, b.hopf, b.algebra)


# -- properties on every verified action ----------------------------------------


def _verified_actions():
    out = [example31(2), example31(3), example31(2, F3), cyclic_sign_action()[2], cyclic_sign_action(F3)[2]]
    return [b.action if hasattr(b, "action") else b for b in out]


@pytest.fixture(scope="module")
def actions():
    return _verified_actions()


def test_invariant_inclusions_and_trace(actions):
    for spec in actions:
        d = 6
        AH = invariants(spec, "H", d)
        AG = invariants(spec, "G", d)
        assert AG.contains_space(AH)
        assert trace_image(spec, 4).included


def test_invariants_form_subalgebras(actions):
    for spec in actions:
        A = spec.algebra
        d = 6
        AH = invariants(spec, "H", d)
        polys = subspace_polys(A, AH, d)
        ws = A.workspace(d)
        for p in polys:
            for q in polys:
                r = A.normal_form(p * q)
                if r.degree <= d:
                    assert AH.contains(ws.vector(r))


def test_emitted_witnesses_reverify(actions):
    for spec in actions:
        A = spec.algebra
        gens = minimal_generators(A, invariants(spec, "G", 4), 4)
        for v in A.vars:
            w = integrality_witness(A, v, gens, 4, 4)
            assert isinstance(w, IntegralityWitness) and w.verify()


def test_commutative_group_algebra_invariants_agree():
    # C3 permuting three variables cyclically
    H = group_algebra(3)
    A = FPCommAlgebra(QQ, ["a", "b", "c"], [])
    a, b, c = A.ring.gens()
    spec = ActionSpec(H, A, {(0, 0): a, (0, 1): b, (0, 2): c, (1, 0): b, (1, 1): c, (1, 2): a, (2, 0): c, (2, 1): a, (2, 2): b})
    assert verify_action(spec, 3).passed
    for d in range(5):
        assert invariants(spec, "H", d) == invariants(spec, "G", d)

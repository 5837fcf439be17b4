import pytest

from hopfinv.exactfield import FieldSpec, Subspace
from hopfinv.findim import dual_hopf
from hopfinv.groups import symmetric
from hopfinv.models import group_algebra, sweedler, taft, taft_index
from hopfinv.structure import (
    CoradicalFiltration,
    UnsupportedConfiguration,
    classify,
    coradical,
    coradical_filtration,
    filtration_checks,
    filtration_plus,
    grouplike_epimorphism,
    grouplikes,
    ideal_generated,
    is_coideal,
    is_semisimple,
    left_ideal_product,
    left_integral_space,
    quotient_hopf,
    verify_hopf_ideal,
)

QQ = FieldSpec.rational()
F3 = FieldSpec.prime(3)


def _names(H, vecs):
    return [H.format_element(v) for v in vecs]


def test_grouplikes_of_models(tafts):
    assert _names(group_algebra(2), grouplikes(group_algebra(2)).elements) == ["1", "g"]
    for N, H in tafts.items():
        G = grouplikes(H)
        assert len(G) == N
        assert sorted(_names(H, G.elements)) == sorted(H.basis[taft_index(N, a, 0)] for a in range(N))
    assert len(grouplikes(group_algebra(symmetric(3)))) == 6


def test_grouplikes_of_dual_group_algebra_are_characters():
    # kS3* has one group-like per 1-dimensional character: trivial and sign
    G = grouplikes(dual_hopf(group_algebra(symmetric(3))))
    assert len(G) == 2
    assert G.table == [[0, 1], [1, 0]]


def test_grouplikes_over_f3():
    assert len(grouplikes(sweedler(F3))) == 2


def test_integrals_and_semisimplicity(H4, tafts):
    ss = is_semisimple(H4)
    assert not ss.semisimple
    assert Subspace.span([ss.integral], 4) == Subspace.span([H4.element("x + g*x")], 4)
    c2 = is_semisimple(group_algebra(2))
    assert c2.semisimple and c2.eps_integral * 1 == 2 * c2.integral[0]
    assert not is_semisimple(group_algebra(3, F3)).semisimple
    assert is_semisimple(group_algebra(symmetric(3))).semisimple
    for H in tafts.values():
        assert left_integral_space(H).dim == 1
        assert not is_semisimple(H).semisimple


@pytest.mark.parametrize("N", [2, 3, 4])
def test_taft_coradical_filtration(tafts, N):
    H = tafts[N]
    filt = coradical_filtration(H)
    assert filt.dims == [N * (r + 1) for r in range(N)]
    assert filt.length == N - 1
    for r in range(N):
        layer = Subspace.span([H.basis_vector(taft_index(N, a, j)) for a in range(N) for j in range(r + 1)], H.dim, H.field)
        assert filt.layer(r) == layer
    assert all(filtration_checks(H, filt).values())


def test_filtration_checks_reject_bogus_layers(H4):
    F = H4.field
    bogus = CoradicalFiltration([Subspace.span([H4.element("1"), H4.element("x")], 4, F), Subspace.full(4, F)])
    checks = filtration_checks(H4, bogus)
    assert not checks["delta_compatible"]


def test_coradical_paths():
    kS3_dual = dual_hopf(group_algebra(symmetric(3)))
    C0 = coradical(kS3_dual)
    assert C0.dim == 6
    cls = classify(kS3_dual, C0)
    assert not cls.pointed and cls.grouplike_count == 2
    H = sweedler(F3)
    assert coradical_filtration(H).dims == [2, 4]
    bare = sweedler(F3)
    bare.coradical_hint = None
    with pytest.raises(UnsupportedConfiguration):
        coradical(bare)


def test_classification(H4):
    cls = classify(H4)
    assert cls.pointed and not cls.connected and cls.coradical_dim == 2


def test_ideal_generated_by_g_minus_one(H4):
    # x(g-1) = -gx - x and (g-1)x = gx - x, so x and gx lie in the ideal
    J = ideal_generated(H4, [H4.element("g - 1")])
    want = Subspace.span([H4.element(t) for t in ("g - 1", "x", "g*x")], 4)
    assert J == want
    rep = verify_hopf_ideal(H4, J)
    assert rep.flags() == {
        "two_sided_ideal": True,
        "coideal": True,
        "counit_zero": True,
        "antipode_stable": True,
        "hopf_ideal": True,
    }
    Q, proj = quotient_hopf(H4, J)
    assert Q.basis == ("1",)
    cls = classify(Q)
    assert cls.pointed and cls.connected and cls.grouplike_count == 1
    epi = grouplike_epimorphism(H4, Q, proj)
    assert epi["images_grouplike"] and epi["surjective"]


def test_span_x_is_not_an_ideal(H4):
    rep = verify_hopf_ideal(H4, Subspace.span([H4.element("x")], 4))
    assert not rep.two_sided_ideal


def test_quotient_c4_by_g2_minus_one():
    H = group_algebra(4)
    J = ideal_generated(H, [H.element("g^2 - 1")])
    Q, _ = quotient_hopf(H, J)
    assert Q.basis == ("1", "g")
    assert Q.mul(Q.element("g"), Q.element("g")) == Q.element("1")


@pytest.mark.parametrize("N", [2, 3, 4])
def test_h_times_h0_plus_is_coideal(tafts, N):
    H = tafts[N]
    V = left_ideal_product(H, filtration_plus(H, 0))
    assert is_coideal(H, V)


def test_filtration_plus_sweedler(H4):
    assert filtration_plus(H4, 0) == Subspace.span([H4.element("1 - g")], 4)
    assert filtration_plus(H4, 1) == Subspace.span([H4.element(t) for t in ("1 - g", "x", "g*x")], 4)
    assert filtration_plus(H4, 5) == filtration_plus(H4, 1)

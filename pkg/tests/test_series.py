import json
import random
from collections import Counter

import pytest

from treeseries import trees as T
from treeseries.coeff import ParseError, Poly
from treeseries.operads import AS, DUP
from treeseries.series import (
    Carrier,
    GradedSeries,
    SemidirectElement,
    act,
    alpha_from,
    alpha_membership,
    comp_inverse,
    compose,
    compose_by_powers,
    embed_lambda_rho,
    extract_lambda_rho,
    factor_under_rho,
    format_series,
    inv_monoid,
    mul_monoid,
    parse_series,
    project_order,
    section_comb,
    semidirect_inverse,
    semidirect_mul,
    semidirect_unit,
    series_from_json,
    series_to_json,
)
from treeseries.verify import NAMED, composition_example, random_diffeo, random_monoid_series

a, b, c, d = (Poly.var(v) for v in "abcd")
vtx, AB, BA = NAMED["vtx"], NAMED["AB"], NAMED["BA"]
ABC, BAC, ACA, CAB, CBA = (NAMED[k] for k in ("ABC", "BAC", "ACA", "CAB", "CBA"))

OVER = Carrier.monoid(DUP, "over")
UNDER = Carrier.monoid(DUP, "under")
TREE_OP = Carrier.operad(DUP)
INT_MON = Carrier.monoid(AS)
INT_OP = Carrier.operad(AS)


def S(carrier, n, terms):
    return GradedSeries(carrier, n, terms)


# monoid law ----------------------------------------------------------------

def test_mul_square():
    f = S(OVER, 2, {T.LEAF: 1, vtx: c})
    assert mul_monoid(f, f) == S(OVER, 2, {T.LEAF: 1, vtx: 2 * c, AB: c * c})


def test_mul_unit_and_truncation():
    f = S(OVER, 3, {T.LEAF: 1, vtx: a, BA: b})
    assert mul_monoid(f, GradedSeries.unit(OVER, 3)) == f
    assert mul_monoid(f, GradedSeries.unit(OVER, 2)).truncation == 2


def test_mul_abc_coefficient():
    psi = S(OVER, 3, {vtx: 1, AB: c, BA: d})
    assert mul_monoid(psi, psi)[ABC] == 2 * c


def test_mul_carrier_mismatch():
    with pytest.raises(ValueError):
        mul_monoid(S(OVER, 2, {T.LEAF: 1}), S(UNDER, 2, {T.LEAF: 1}))


def test_inverse_examples():
    assert inv_monoid(GradedSeries.unit(OVER, 4)) == GradedSeries.unit(OVER, 4)
    geo = inv_monoid(S(OVER, 4, {T.LEAF: 1, vtx: -1}))
    assert geo == S(OVER, 4, {T.comb(n, "left"): 1 for n in range(5)})
    f = S(OVER, 3, {T.LEAF: 1, vtx: c})
    assert inv_monoid(f) == S(OVER, 3, {T.LEAF: 1, vtx: -c, AB: c ** 2, ABC: -(c ** 3)})


def test_inverse_rejects_bad_constant():
    with pytest.raises(ValueError):
        inv_monoid(S(OVER, 2, {T.LEAF: 2, vtx: 1}))


@pytest.mark.parametrize("carrier", [OVER, UNDER, INT_MON], ids=lambda c: c.describe())
def test_inverse_round_trip(carrier):
    rng = random.Random(5)
    for _ in range(10):
        f = random_monoid_series(rng, carrier, 4)
        unit = GradedSeries.unit(carrier, 4)
        assert mul_monoid(f, inv_monoid(f)) == unit == mul_monoid(inv_monoid(f), f)


# composition ----------------------------------------------------------------

def test_composition_example():
    out = composition_example()
    assert len(out) == 16
    low = {vtx: 1, AB: a + c, BA: b + d, ABC: 2 * a * c, BAC: a * d,
           ACA: a * d + b * c, CAB: b * c, CBA: 2 * b * d}
    for t, want in low.items():
        assert out[t] == want
    order4 = [v for t, v in out.items() if t.order == 4]
    assert len(order4) == 8
    want4 = [a * c * c, a * c * d, a * c * d, a * d * d, b * c * c, b * c * d, b * c * d, b * d * d]
    assert Counter(map(str, order4)) == Counter(map(str, want4))


def test_compose_units():
    rng = random.Random(1)
    phi = random_diffeo(rng, DUP, 3)
    ident = GradedSeries.unit(TREE_OP, 3)
    assert compose(phi, ident) == phi == compose(ident, phi)


def test_compose_matches_power_expansion():
    rng = random.Random(2)
    for _ in range(5):
        phi, psi = random_diffeo(rng, DUP, 3), random_diffeo(rng, DUP, 3)
        assert compose(phi, psi) == compose_by_powers(phi, psi)


def test_compose_rejects_monoid_series():
    with pytest.raises(ValueError):
        compose(S(OVER, 2, {T.LEAF: 1}), GradedSeries.unit(TREE_OP, 2))


def test_comp_inverse_examples():
    assert comp_inverse(GradedSeries.unit(TREE_OP, 3)) == GradedSeries.unit(TREE_OP, 3)
    inv = comp_inverse(S(TREE_OP, 2, {vtx: 1, AB: 1}))
    assert inv == S(TREE_OP, 2, {vtx: 1, AB: -1, ABC: 2})
    classic = comp_inverse(S(INT_OP, 4, {1: 1, 2: 1}))
    assert classic == S(INT_OP, 4, {1: 1, 2: -1, 3: 2, 4: -5, 5: 14})


def test_comp_inverse_round_trip():
    rng = random.Random(3)
    for _ in range(5):
        phi = random_diffeo(rng, DUP, 4)
        ident = GradedSeries.unit(TREE_OP, 4)
        assert compose(phi, comp_inverse(phi)) == ident == compose(comp_inverse(phi), phi)


def test_comp_inverse_rejects_non_diffeo():
    with pytest.raises(ValueError):
        comp_inverse(S(TREE_OP, 2, {vtx: 2}))


# action and semidirect products ---------------------------------------------

def test_action_examples():
    rng = random.Random(4)
    f = random_monoid_series(rng, OVER, 3)
    assert act(f, GradedSeries.unit(TREE_OP, 3)) == f
    psi = random_diffeo(rng, DUP, 3)
    shifted = act(S(OVER, 3, {T.LEAF: 1, vtx: 1}), psi)
    assert shifted == S(OVER, 3, {T.LEAF: 1, **psi.terms})
    assert act(S(INT_MON, 2, {0: 1, 1: 1}), S(INT_OP, 2, {1: 1, 2: 1})) == S(INT_MON, 2, {0: 1, 1: 1, 2: 1})


def test_action_axioms():
    rng = random.Random(6)
    for _ in range(5):
        f, g = random_monoid_series(rng, UNDER, 4), random_monoid_series(rng, UNDER, 4)
        phi, psi = random_diffeo(rng, DUP, 4), random_diffeo(rng, DUP, 4)
        assert act(act(f, phi), psi) == act(f, compose(phi, psi))
        assert act(mul_monoid(f, g), phi) == mul_monoid(act(f, phi), act(g, phi))


def test_semidirect_laws():
    rng = random.Random(8)
    unit = semidirect_unit(OVER, 3)

    def sample():
        return SemidirectElement(random_diffeo(rng, DUP, 3), random_monoid_series(rng, OVER, 3))

    for _ in range(5):
        x, y, z = sample(), sample(), sample()
        assert semidirect_mul(unit, x) == x == semidirect_mul(x, unit)
        assert semidirect_mul(semidirect_mul(x, y), z) == semidirect_mul(x, semidirect_mul(y, z))
        assert semidirect_mul(x, semidirect_inverse(x)) == unit
    f, g = random_monoid_series(rng, OVER, 3), random_monoid_series(rng, OVER, 3)
    ident = GradedSeries.unit(TREE_OP, 3)
    prod = semidirect_mul(SemidirectElement(ident, f), SemidirectElement(ident, g))
    assert prod == SemidirectElement(ident, mul_monoid(f, g))


def test_semidirect_rejects_mismatch():
    with pytest.raises(ValueError):
        SemidirectElement(GradedSeries.unit(TREE_OP, 3), GradedSeries.unit(OVER, 2))


# lambda / rho embeddings and alpha --------------------------------------------

def test_embedding_examples():
    assert embed_lambda_rho(GradedSeries.unit(OVER, 2), "rho") == S(TREE_OP, 2, {vtx: 1})
    assert embed_lambda_rho(S(OVER, 2, {T.LEAF: 1, AB: c}), "rho") == S(TREE_OP, 2, {vtx: 1, ABC: c})
    for t in T.trees_up_to(3, start=1):
        lam = embed_lambda_rho(S(UNDER, 3, {T.LEAF: 1, t: c}), "lambda")
        assert lam == S(TREE_OP, 3, {vtx: 1, T.v_wrap(t): c})


def test_embedding_extraction_round_trip():
    rng = random.Random(9)
    for car, side in ((OVER, "rho"), (UNDER, "lambda"), (OVER, "lambda"), (UNDER, "rho")):
        f = random_monoid_series(rng, car, 4)
        assert extract_lambda_rho(embed_lambda_rho(f, side), side, car.p2) == f


def test_extraction_rejects_outside_image():
    with pytest.raises(ValueError, match="outside the rho image"):
        extract_lambda_rho(S(TREE_OP, 2, {vtx: 1, BA: 1}), "rho", "over")


def test_embed_rejects_unknown_element():
    with pytest.raises(ValueError):
        embed_lambda_rho(GradedSeries.unit(OVER, 2), "rho", "sideways")


def test_alpha_from_examples():
    assert alpha_from(S(OVER, 3, {})) == S(TREE_OP, 3, {vtx: 1})
    geometric = alpha_from(S(OVER, 3, {T.LEAF: c}))
    assert geometric == S(TREE_OP, 3, {vtx: 1, AB: c, ABC: c ** 2, T.comb(4, "left"): c ** 3})
    # V(vtx) = BA and BA over vtx = BAC
    assert alpha_from(S(OVER, 3, {vtx: c})) == S(TREE_OP, 3, {vtx: 1, BAC: c})


def test_alpha_membership_examples():
    assert alpha_membership(GradedSeries.unit(TREE_OP, 3))
    g = {T.LEAF: 1, vtx: 2, AB: 4, BA: 5, ACA: 10}
    assert alpha_membership(embed_lambda_rho(S(OVER, 2, g), "rho"))
    assert not alpha_membership(embed_lambda_rho(S(OVER, 2, {T.LEAF: 1, vtx: 2, AB: 5}), "rho"))
    assert not alpha_membership(S(TREE_OP, 2, {vtx: 1, BA: 1}))


def test_alpha_closed_under_group_law():
    rng = random.Random(10)
    for _ in range(3):
        f = alpha_from(random_monoid_series(rng, OVER, 4))
        g = alpha_from(random_monoid_series(rng, OVER, 4))
        assert alpha_membership(f) and alpha_membership(g)
        assert alpha_membership(compose(f, g))
        assert alpha_membership(comp_inverse(f))


# projection, sections, factorization -----------------------------------------

def test_projection_examples():
    assert project_order(S(TREE_OP, 1, {vtx: 1, AB: 3, BA: 4})) == S(INT_OP, 1, {1: 1, 2: 7})
    assert project_order(GradedSeries.unit(OVER, 3)) == GradedSeries.unit(INT_MON, 3)
    classic = compose(project_order(S(TREE_OP, 3, {vtx: 1, AB: a, BA: b})),
                      project_order(S(TREE_OP, 3, {vtx: 1, AB: c, BA: d})))
    assert project_order(composition_example()) == classic
    assert classic[2] == a + b + c + d


def test_projection_is_homomorphism():
    rng = random.Random(12)
    f, g = random_monoid_series(rng, UNDER, 4), random_monoid_series(rng, UNDER, 4)
    phi, psi = random_diffeo(rng, DUP, 4), random_diffeo(rng, DUP, 4)
    P = project_order
    assert P(mul_monoid(f, g)) == mul_monoid(P(f), P(g))
    assert P(compose(phi, psi)) == compose(P(phi), P(psi))
    assert P(act(f, psi)) == act(P(f), P(psi))


def test_section_examples():
    assert section_comb(S(INT_OP, 1, {1: 1, 2: 1}), "under", "dif") == S(TREE_OP, 1, {vtx: 1, BA: 1})
    assert section_comb(S(INT_MON, 3, {0: 1, 3: 1}), "over", "inv") == S(OVER, 3, {T.LEAF: 1, ABC: 1})
    rng = random.Random(13)
    for side in ("over", "under"):
        s = random_diffeo(rng, AS, 5)
        assert project_order(section_comb(s, side)) == s
        m = random_monoid_series(rng, INT_MON, 5)
        assert project_order(section_comb(m, side)) == m


def test_section_rejects_kind_mismatch():
    with pytest.raises(ValueError):
        section_comb(S(INT_OP, 1, {1: 1}), "over", "inv")


def test_factor_examples():
    psi, g = factor_under_rho(S(TREE_OP, 3, {vtx: 1}))
    assert psi == GradedSeries.unit(INT_OP, 3) and g == GradedSeries.unit(OVER, 3)
    psi, g = factor_under_rho(S(TREE_OP, 1, {vtx: 1, AB: a, BA: b}))
    assert psi == S(INT_OP, 1, {1: 1, 2: b})
    assert g == S(OVER, 1, {T.LEAF: 1, vtx: a})


def test_factor_round_trip():
    rng = random.Random(14)
    for _ in range(5):
        psi = random_diffeo(rng, AS, 4)
        g = random_monoid_series(rng, OVER, 4)
        eta = compose(section_comb(psi, "under"), embed_lambda_rho(g, "rho"))
        assert factor_under_rho(eta) == (psi, g)


def test_factor_rejects_series_outside_the_image():
    with pytest.raises(ValueError, match="residual at 1100100"):
        factor_under_rho(S(TREE_OP, 3, {vtx: 1, ACA: 1}))


# lambda subgroup structure ---------------------------------------------------------

def test_lambda_closure_and_cocycle():
    rng = random.Random(15)
    for _ in range(3):
        f, g = random_monoid_series(rng, UNDER, 4), random_monoid_series(rng, UNDER, 4)
        lf, lg = embed_lambda_rho(f, "lambda"), embed_lambda_rho(g, "lambda")
        assert compose(lf, lg) == embed_lambda_rho(mul_monoid(g, act(f, lg)), "lambda")
        cocycle = lambda x: extract_lambda_rho(x, "lambda", "under")
        standard = mul_monoid(mul_monoid(inv_monoid(cocycle(compose(lf, lg))), cocycle(lg)), act(cocycle(lf), lg))
        assert standard == GradedSeries.unit(UNDER, 4)


def test_literal_cocycle_ordering_fails():
    rng = random.Random(3)
    failures = 0
    for _ in range(5):
        f, g = random_monoid_series(rng, UNDER, 5), random_monoid_series(rng, UNDER, 5)
        phi, psi = embed_lambda_rho(f, "lambda"), embed_lambda_rho(g, "lambda")
        cocycle = lambda x: extract_lambda_rho(x, "lambda", "under")
        literal = mul_monoid(mul_monoid(cocycle(psi), inv_monoid(cocycle(compose(phi, psi)))), act(cocycle(phi), psi))
        failures += literal != GradedSeries.unit(UNDER, 5)
    assert failures > 0


def test_action_differs_from_composition():
    f = S(UNDER, 3, {T.LEAF: 1, vtx: 1})
    lf = embed_lambda_rho(f, "lambda")
    assert embed_lambda_rho(act(f, lf), "lambda") != compose(lf, lf)


# serialization -------------------------------------------------------------------

def test_json_round_trip():
    rng = random.Random(16)
    for s in (composition_example(), random_monoid_series(rng, UNDER, 3), random_diffeo(rng, AS, 4)):
        doc = series_to_json(s)
        assert series_from_json(json.dumps(doc)) == s
        assert doc["terms"] == sorted(doc["terms"], key=lambda r: s.carrier.sort_key(s.carrier.instance.parse_element(r["key"])))


def test_json_shape():
    doc = series_to_json(S(TREE_OP, 1, {vtx: 1, AB: 3}))
    assert doc == {
        "carrier": "operad", "instance": "dup", "p2": None, "truncation": 1,
        "terms": [{"key": "100", "coeff": "1/1"}, {"key": "11000", "coeff": "3/1"}],
    }


def test_json_missing_field():
    with pytest.raises(ValueError, match="missing field 'terms'"):
        series_from_json({"carrier": "operad", "instance": "dup", "truncation": 1})


def test_text_round_trip():
    s = composition_example()
    assert parse_series(format_series(s), TREE_OP, s.truncation) == s
    m = S(INT_MON, 3, {0: 1, 1: Poly.var("a") - 2, 3: -1})
    assert parse_series(format_series(m), INT_MON, 3) == m


def test_text_parse_errors():
    with pytest.raises(ParseError):
        parse_series("x^{100} + 2*x^{1}", TREE_OP)
    with pytest.raises(ParseError):
        parse_series("x^{100} + (a*x^{11000}", TREE_OP)


def test_carrier_mismatch_is_reported():
    with pytest.raises(ValueError, match="carrier"):
        mul_monoid(GradedSeries.unit(OVER, 2), GradedSeries.unit(INT_MON, 2))
    with pytest.raises(ValueError):
        GradedSeries(TREE_OP, 2, {T.LEAF: 1})

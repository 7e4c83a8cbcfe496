import json

import pytest
from hypothesis import given, strategies as st

from conftest import e_polys, symmetric_e_polys
from ltphodge.motive import (
    E_K3,
    E_POINT,
    AsymmetricError,
    EPolynomial,
    HodgeDiamond,
    NonPureError,
    diamond_from_e,
    e_blowup,
    e_curve,
    e_from_diamond,
    e_projective,
    e_projective_bundle,
    euler_char,
)

UV = EPolynomial.from_terms({(1, 1): 1})


def test_projective_space():
    assert e_projective(2) == EPolynomial.from_terms({(0, 0): 1, (1, 1): 1, (2, 2): 1})
    assert euler_char(e_projective(3)) == 4


def test_sextic_curve_polynomial():
    e = e_curve(10)
    assert e.terms == {(0, 0): 1, (1, 0): -10, (0, 1): -10, (1, 1): 1}


@pytest.mark.parametrize("g", range(6))
def test_curve_euler(g):
    assert euler_char(e_curve(g)) == 2 - 2 * g


def test_bundle_over_point():
    assert e_projective_bundle(E_POINT, 3) == e_projective(2)


def test_bundle_over_p2_has_h11_two():
    d = diamond_from_e(e_projective_bundle(e_projective(2), 3), 4)
    assert d[1, 1] == 2


def test_bundle_over_curve():
    d = diamond_from_e(e_projective_bundle(e_curve(3), 3), 3)
    assert (d[1, 0], d[1, 1], d[2, 1], d[2, 2]) == (3, 2, 3, 2)


def test_blowup_point_in_p2():
    assert e_blowup(e_projective(2), E_POINT, 2) == EPolynomial.from_terms({(0, 0): 1, (1, 1): 2, (2, 2): 1})


def test_blowup_bundle_along_section():
    eb = e_curve(2) * e_projective(1)
    assert e_blowup(e_projective_bundle(eb, 3), eb, 2) == (EPolynomial.constant(1) + UV * 2 + UV * UV) * eb


def test_codim3_center_shifts_h12_by_h10():
    amb = e_projective_bundle(e_projective(2) * e_projective(1), 3)
    after = e_blowup(amb, e_curve(7) * e_projective(1), 3)
    before_d, after_d = diamond_from_e(amb, 5), diamond_from_e(after, 5)
    assert after_d[1, 2] - before_d[1, 2] == 7


def test_blowup_rejects_codim_one():
    with pytest.raises(ValueError):
        e_blowup(e_projective(2), E_POINT, 1)


def test_diamond_examples():
    assert diamond_from_e(e_projective(2), 2).h == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert diamond_from_e(e_curve(3), 1)[1, 0] == 3
    blown = (EPolynomial.constant(1) + UV * 2 + UV * UV) * e_projective(3)
    assert diamond_from_e(blown, 5)[1, 1] == 3


def test_diamond_rejects_impure():
    with pytest.raises(NonPureError):
        diamond_from_e(EPolynomial.from_terms({(0, 0): 1, (1, 1): -1}), 1)
    with pytest.raises(NonPureError):
        diamond_from_e(e_projective(3), 2)
    with pytest.raises(AsymmetricError):
        diamond_from_e(EPolynomial.from_terms({(0, 0): 1, (1, 0): -2, (1, 1): 1}), 1)


def test_k3_euler():
    assert euler_char(E_K3) == 24
    assert diamond_from_e(E_K3, 2).satisfies_serre()


def test_json_round_trip():
    e = e_curve(4) * e_projective(2)
    assert EPolynomial.from_json(json.loads(json.dumps(e.to_json()))) == e
    d = diamond_from_e(e, 3)
    assert HodgeDiamond.from_json(json.loads(json.dumps(d.to_json()))) == d


def test_zero_coefficients_pruned():
    e = EPolynomial.from_terms({(0, 0): 1, (1, 1): 0})
    assert e == EPolynomial.constant(1)
    assert (e - e).is_zero()


@given(e_polys, e_polys, e_polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(e_polys, e_polys)
def test_euler_is_homomorphism(a, b):
    assert euler_char(a + b) == euler_char(a) + euler_char(b)
    assert euler_char(a * b) == euler_char(a) * euler_char(b)


@given(e_polys, e_polys, st.integers(2, 5))
def test_blowup_difference_is_center_times_uv_sum(a, c, k):
    diff = e_blowup(a, c, k) - a
    factor = sum((UV ** j for j in range(1, k)), EPolynomial())
    assert diff == factor * c
    assert all(p >= 1 and q >= 1 for (p, q) in diff.terms)


@given(symmetric_e_polys(), symmetric_e_polys())
def test_symmetry_preserved(a, b):
    assert (a + b).is_conjugation_symmetric()
    assert (a * b).is_conjugation_symmetric()


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.lists(st.integers(0, 4), max_size=2))
def test_products_of_smooth_pieces_round_trip(dims, genera):
    e = EPolynomial.constant(1)
    for n in dims:
        e = e * e_projective(n)
    for g in genera:
        e = e * e_curve(g)
    dim = sum(dims) + len(genera)
    d = diamond_from_e(e, dim)
    assert d.satisfies_serre()
    assert e_from_diamond(d) == e
    assert diamond_from_e(d.to_e(), dim) == d
    assert d.euler() == euler_char(e)

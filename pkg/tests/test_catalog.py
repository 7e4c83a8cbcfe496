import pytest

from ltphodge.bases import Curve, RationalSurface, Toric3, base_diamond, c1_cubed
from ltphodge.catalog import (
    A_Y,
    BORCEA_VOISIN,
    E6_FAMILY,
    E7_FAMILY,
    E8_FAMILY,
    LIE_RANKS,
    REGISTRY,
    SMOOTH_KINDS,
    SURFACE,
    SURFACE_PRODUCT,
    TABLE1,
    ConstraintViolatedError,
    IncompatibleBaseError,
    NotCalabiYauError,
    SurfaceNotApplicableError,
    borcea_voisin_data,
    chi_smooth_weierstrass_4fold,
    fourfold_diamond,
    fourfold_hodge,
    get_family,
    k3_product_counterexample,
    make_e6_family,
    resolve,
    resolved_h11,
    surface_family_data,
    trisection_genus,
)
from ltphodge.motive import diamond_from_e, e_curve
from ltphodge.toric import FAN_IDS, load_fan

TOR = {i: Toric3(load_fan(i), i) for i in FAN_IDS}
E_FAMILIES = (E8_FAMILY, E7_FAMILY, E6_FAMILY)


def test_table1_has_fourteen_families():
    assert len(TABLE1) == 14
    assert len({f.id for f in TABLE1}) == 14


@pytest.mark.parametrize("fam", TABLE1, ids=lambda f: f.id)
def test_table1_invariants(fam):
    assert fam.mw_rank == 0
    assert fam.gamma == fam.n == fam.gauge.lie_rank == LIE_RANKS[fam.gauge.group_name]
    assert all(c.codim == 2 for c in fam.resolution)


def test_torsion_flags():
    torsion = {f.id for f in TABLE1 if f.has_torsion}
    assert torsion == {"so3", "so5", "so6"}
    assert get_family("so5").mw_torsion == "Z/2"


def test_so5_ambient_h11():
    for k2 in range(-5, 10):
        s = resolve(get_family("so5"), RationalSurface(k2))
        assert s.n == 2
        assert s.ambient_diamond()[1, 1] == (10 - k2) + 3


def test_e8_gauge_over_k2_8():
    assert resolved_h11(get_family("e8-gauge"), RationalSurface(8)) == 11
    assert resolve(get_family("e8-gauge"), RationalSurface(8)).ambient_diamond()[1, 1] == 11


def test_smooth_family_h11():
    b = RationalSurface(5)
    h = base_diamond(b)[1, 1]
    assert resolved_h11(E8_FAMILY, b) == h + 1
    assert resolved_h11(E7_FAMILY, b) == h + 2
    assert resolved_h11(E6_FAMILY, b) == h + 3


def test_e8_ambient_is_plain_bundle():
    s = resolve(E8_FAMILY, TOR[1])
    assert s.n == 0 and s.ambient_diamond()[1, 1] == 2


def test_e6_locus_enters_shifted():
    # A genus-g locus C appears as h^{p-2,q-2}(C) in the ambient 5-fold.
    fam = make_e6_family(lambda base: e_curve(4))
    d = resolve(fam, TOR[1]).ambient_diamond()
    d0 = resolve(E6_FAMILY, TOR[1]).ambient_diamond()
    assert d[3, 2] - d0[3, 2] == 4
    assert all(d[p, q] == d0[p, q] for p in range(3) for q in range(3) if p + q < 4)


def test_surface_base_rejects_stw():
    with pytest.raises(SurfaceNotApplicableError):
        resolved_h11(E8_FAMILY, Curve(0))


def test_incompatible_bases():
    with pytest.raises(IncompatibleBaseError):
        resolve(get_family("su2"), TOR[1])
    with pytest.raises(IncompatibleBaseError):
        resolve(BORCEA_VOISIN, TOR[1])
    with pytest.raises(IncompatibleBaseError):
        resolve(E8_FAMILY, Curve(1))


@pytest.mark.parametrize("fam", E_FAMILIES, ids=lambda f: f.id)
@pytest.mark.parametrize("fan_id", FAN_IDS)
def test_fourfold_consistency(fam, fan_id):
    b = TOR[fan_id]
    h = fourfold_hodge(fam, b)
    assert h.chi == 288 + A_Y[fam.kind] * c1_cubed(b)
    assert h.chi == 6 * (8 + h.h11 + h.h13 - h.h12)
    assert h.h22 == 44 + 4 * h.h11 + 4 * h.h13 - 2 * h.h12
    assert fourfold_diamond(h.h11, h.h12, h.h13, h.h22).euler() == h.chi


def test_fourfold_examples():
    assert fourfold_hodge(E8_FAMILY, TOR[1]) == fourfold_hodge(get_family("e8"), TOR[1])
    h = fourfold_hodge(E8_FAMILY, TOR[1])
    assert (h.h11, h.h31, h.h22, h.chi) == (2, 3878, 15564, 23328)
    h = fourfold_hodge(E7_FAMILY, TOR[2])
    assert (h.h11, h.h31, h.h22) == (4, 1332, 5388)
    h = fourfold_hodge(E6_FAMILY, TOR[4])
    assert (h.h11, h.h31, h.h22) == (5, 779, 3180)


def test_chi_smooth_weierstrass():
    assert chi_smooth_weierstrass_4fold(TOR[1]) == 23328
    assert chi_smooth_weierstrass_4fold(TOR[2]) == 19728


def test_fourfold_rejects_bad_base():
    from ltphodge.bases import Explicit
    from ltphodge.motive import e_projective

    bad = Explicit(diamond_from_e(e_projective(3), 3), 64, 48)
    with pytest.raises(ConstraintViolatedError):
        fourfold_hodge(E8_FAMILY, bad)


def test_borcea_voisin():
    data = borcea_voisin_data()
    assert data.x_hodge == {"h11": 5, "h21": 30, "h22": 552, "h31": 137}
    assert data.ambient == {"h11": 5, "h12": 30}
    assert data.sextic_genus == 10
    assert data.chi == 720
    assert [trisection_genus(n) for n in range(13)] == [10] * 13
    assert resolved_h11(BORCEA_VOISIN) == 5


@pytest.mark.parametrize("g", range(6))
def test_surface_families(g):
    d = surface_family_data(SURFACE, g)
    assert (d.x_h10, d.ambient_h10) == (g, g) and d.ltp_holds
    d = surface_family_data(SURFACE_PRODUCT, g)
    assert (d.x_h10, d.ambient_h10) == (g + 1, g) and not d.ltp_holds


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_k3_product(n):
    data = k3_product_counterexample(n)
    assert (data.x_h11, data.ambient_h11) == (21, 3)
    with pytest.raises(NotCalabiYauError):
        resolved_h11(get_family(f"k3xp{n}"))


def test_registry_json_schema():
    for fam in REGISTRY.values():
        d = fam.to_json()
        assert {"id", "gauge", "rank", "n", "gamma", "mw_rank", "mw_torsion", "tate_orders"} <= set(d)
    assert not any(REGISTRY[k].cy_total_space for k in ("k3xp1", "k3xp2", "k3xp3"))


def test_unknown_family():
    with pytest.raises(KeyError):
        get_family("su7")

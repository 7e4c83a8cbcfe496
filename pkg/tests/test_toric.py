import json

import pytest

from ltphodge.toric import (
    FAN_DIR_ENV,
    FAN_IDS,
    Fan3,
    IntersectionRing,
    InvalidFanError,
    anticanonical_degree,
    anticanonical_sections,
    betti_numbers,
    c1c2,
    face_fan,
    load_fan,
    toric_hodge,
    validate_fan,
    weierstrass_anticanonical_h0,
    weierstrass_h0_from_rays,
)

DEGREES = {1: 64, 2: 54, 3: 56, 4: 62}


@pytest.mark.parametrize("fan_id", FAN_IDS)
def test_catalog_fans_valid(fan_id):
    assert validate_fan(load_fan(fan_id)).valid


@pytest.mark.parametrize("fan_id", FAN_IDS)
def test_degree_two_oracles(fan_id):
    f = load_fan(fan_id)
    ring = IntersectionRing(f)
    assert anticanonical_degree(f) == ring.anticanonical_cube()
    assert c1c2(f) == ring.c1c2() == 24


@pytest.mark.parametrize("fan_id,deg", sorted(DEGREES.items()))
def test_degrees_of_first_four(fan_id, deg):
    assert anticanonical_degree(load_fan(fan_id)) == deg


def test_fans_three_and_four_differ():
    assert set(load_fan(3).rays) != set(load_fan(4).rays)


@pytest.mark.parametrize("fan_id,h11", [(1, 1), (2, 2), (6, 3), (17, 5)])
def test_picard_numbers(fan_id, h11):
    d = toric_hodge(load_fan(fan_id))
    assert d[1, 1] == h11 == len(load_fan(fan_id).rays) - 3
    assert d[1, 2] == d[0, 1] == d[0, 2] == 0


@pytest.mark.parametrize("fan_id", FAN_IDS)
def test_betti_poincare_duality(fan_id):
    b = betti_numbers(load_fan(fan_id))
    assert b[0] == b[3] == 1 and b[1] == b[2]


def test_weierstrass_sections_over_p3():
    assert weierstrass_anticanonical_h0(load_fan(1)) == 4551


def test_weierstrass_sections_over_p1():
    assert weierstrass_h0_from_rays([(1,), (-1,)]) == 39


def test_negative_twist_has_no_sections():
    assert anticanonical_sections(load_fan(1).rays, -1) == 0


def test_duplicate_ray_rejected():
    f = load_fan(1)
    bad = Fan3(f.rays + (f.rays[0],), f.max_cones)
    rep = validate_fan(bad)
    assert not rep.valid and "duplicate" in rep.reason


def test_singular_cone_rejected():
    f = Fan3(((1, 0, 0), (0, 1, 0), (1, 1, 2), (-1, -1, -1)), ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))
    assert not validate_fan(f).valid


def test_incomplete_fan_rejected():
    f = load_fan(1)
    assert not validate_fan(Fan3(f.rays, f.max_cones[:-1])).valid
    with pytest.raises(InvalidFanError):
        anticanonical_degree(Fan3(f.rays, f.max_cones[:-1]))


def test_non_primitive_ray_rejected():
    f = load_fan(1)
    rays = ((2, 0, 0),) + f.rays[1:]
    assert "primitive" in validate_fan(Fan3(rays, f.max_cones)).reason


def test_face_fan_reproduces_p3():
    f = face_fan(load_fan(1).rays)
    assert {frozenset(c) for c in f.max_cones} == {frozenset(c) for c in load_fan(1).max_cones}


def test_json_round_trip():
    f = load_fan(12)
    assert Fan3.from_json(json.loads(json.dumps(f.to_json()))) == f


def test_unknown_id():
    with pytest.raises(KeyError):
        load_fan(19)


def test_fan_dir_override(tmp_path, monkeypatch):
    src = load_fan(1)
    for i in FAN_IDS:
        (tmp_path / f"fan_{i:02d}.json").write_text(json.dumps(load_fan(i).to_json()))
    renamed = Fan3(src.rays, src.max_cones, "relocated P3")
    (tmp_path / "fan_01.json").write_text(json.dumps(renamed.to_json()))
    monkeypatch.setenv(FAN_DIR_ENV, str(tmp_path))
    assert load_fan(1).name == "relocated P3"

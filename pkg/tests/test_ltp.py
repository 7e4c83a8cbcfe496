import dataclasses

import pytest
from hypothesis import given, settings, strategies as st

from ltphodge.bases import Curve, RationalSurface, Toric3
from ltphodge.catalog import E6_FAMILY, E7_FAMILY, E8_FAMILY, TABLE1, get_family
from ltphodge.ltp import (
    CONDITIONAL_CAVEAT,
    NOT_CY_CAVEAT,
    TORSION_CAVEAT,
    compared_indices,
    counterexample_verdicts,
    table1_sweep,
    table3_render,
    verdict,
)
from ltphodge.toric import FAN_IDS, load_fan

CY_FAMILIES = list(TABLE1)
SMOOTH = [E8_FAMILY, E7_FAMILY, E6_FAMILY]


def cmp(v, p, q):
    return next((c.lhs, c.rhs) for c in v.compared if (c.p, c.q) == (p, q))


def test_so5_over_p2():
    v = verdict("so5", "rational:K2=9")
    assert v.holds and cmp(v, 1, 1) == (4, 4)
    assert TORSION_CAVEAT in v.caveats


def test_e8_over_p3():
    v = verdict("e8", "P3")
    assert v.holds
    assert cmp(v, 1, 1) == (2, 2) and cmp(v, 1, 2) == (0, 0)
    assert v.details["h13"] == 3878 and v.details["chi"] == 23328
    assert CONDITIONAL_CAVEAT not in v.caveats


def test_conditional_for_non_toric_fourfold_base():
    assert CONDITIONAL_CAVEAT in verdict("e7", "P2xP1").caveats


def test_k3_product_fails():
    v = verdict("k3xp1")
    assert not v.holds and cmp(v, 1, 1) == (21, 3)
    assert v.expected_failure and v.as_documented
    assert NOT_CY_CAVEAT in v.caveats


@pytest.mark.parametrize("k2", [9, 0, -3])
def test_table1_sweep_holds(k2):
    vs = table1_sweep(RationalSurface(k2))
    assert len(vs) == 14 and all(v.holds for v in vs)
    for fam, v in zip(TABLE1, vs):
        assert cmp(v, 1, 1)[0] == 11 - k2 + fam.n


def test_comparison_range():
    assert compared_indices(3) == [(0, 0), (0, 1), (0, 2), (1, 1)]
    assert (1, 3) not in compared_indices(4) and (2, 2) not in compared_indices(4)


def test_counterexamples_as_documented():
    vs = counterexample_verdicts()
    assert all(v.expected_failure and not v.holds for v in vs)


def test_table3_cells():
    cells = {(c.kind, c.fan_id): (c.h11, c.h31, c.h22) for c in table3_render()}
    assert cells[("e8", 1)] == (2, 3878, 15564)
    assert cells[("e6", 2)] == (5, 683, 2796)
    assert cells[("e7", 3)] == (4, 1380, 5580)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CY_FAMILIES), st.integers(-5, 9), st.integers(-2, 2), st.integers(0, 2))
def test_holds_iff_blowups_match_stw(fam, k2, dgamma, mw):
    # Perturb gamma / MW rank while keeping the blowup sequence: the verdict
    # must track n == gamma + rank MW exactly.
    gamma = max(0, fam.gamma + dgamma)
    mod = dataclasses.replace(fam, gamma=gamma, mw_rank=mw)
    v = verdict(mod, RationalSurface(k2))
    assert v.holds == (mod.n == gamma + mw)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMOOTH), st.sampled_from(FAN_IDS), st.integers(-1, 1))
def test_holds_iff_blowups_match_stw_fourfolds(fam, fan_id, dmw):
    mw = max(0, fam.mw_rank + dmw)
    mod = dataclasses.replace(fam, mw_rank=mw)
    v = verdict(mod, Toric3(load_fan(fan_id), fan_id))
    assert v.holds == (mod.n == mod.gamma + mw)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CY_FAMILIES + SMOOTH), st.integers(-5, 9))
def test_forced_zeros_and_range(fam, k2):
    v = verdict(fam, RationalSurface(k2))
    assert all(c.p + c.q < v.total_dim for c in v.compared)
    for c in v.compared:
        if c.p == 0 and c.q > 0:
            assert c.lhs == c.rhs == 0


def test_verdict_json_schema():
    d = verdict("so5", "P2").to_json()
    assert {"family", "base", "dim", "comparisons", "holds", "caveats"} <= set(d)
    assert all(len(row) == 4 for row in d["comparisons"])


def test_surface_verdicts():
    for g in range(6):
        assert verdict("surface", Curve(g)).holds
        assert not verdict("surface-product", Curve(g)).holds

"""Smooth complete toric 3-folds: fans, Betti numbers, c_1^3 and section counts.

The catalog of toric Fano 3-folds ships as JSON files ``fan_01.json`` ...
``fan_18.json`` in ``ltphodge/data/fans``; set ``LTPHODGE_FAN_DIR`` to read
them from elsewhere.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb
from pathlib import Path
from typing import Sequence

from .motive import HodgeDiamond
from .polytope import (
    LatticePolytope,
    _cross,
    _dot,
    det3,
    dual_polytope,
    lattice_points,
    normalized_volume,
    solve_exact,
)

FAN_DIR_ENV = "LTPHODGE_FAN_DIR"
FAN_IDS = tuple(range(1, 19))

Ray = tuple[int, int, int]


class InvalidFanError(ValueError):
    pass


@dataclass(frozen=True)
class Fan3:
    rays: tuple[Ray, ...]
    max_cones: tuple[tuple[int, int, int], ...]
    name: str = ""

    @classmethod
    def from_json(cls, data: dict) -> "Fan3":
        return cls(
            tuple(tuple(int(x) for x in r) for r in data["rays"]),
            tuple(tuple(int(i) for i in c) for c in data["cones"]),
            data.get("name", ""),
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rays": [list(r) for r in self.rays],
            "cones": [list(c) for c in self.max_cones],
        }

    def edges(self) -> set[frozenset[int]]:
        return {frozenset(e) for c in self.max_cones for e in itertools.combinations(c, 2)}

    def cone_counts(self) -> tuple[int, int, int, int]:
        """Number of cones of dimension 0, 1, 2, 3."""
        return (1, len(self.rays), len(self.edges()), len(self.max_cones))


@dataclass(frozen=True)
class FanReport:
    valid: bool
    reason: str = ""
    n_rays: int = 0
    n_cones: int = 0

    def __bool__(self):
        return self.valid


def validate_fan(f: Fan3) -> FanReport:
    """Check primitivity, smoothness and completeness; report the first violation."""

    def bad(msg):
        return FanReport(False, msg, len(f.rays), len(f.max_cones))

    if any(len(r) != 3 for r in f.rays):
        return bad("rays must be 3-vectors")
    for i, r in enumerate(f.rays):
        if math.gcd(*r) != 1:
            return bad(f"ray {i} {r} is not primitive")
    if len(set(f.rays)) != len(f.rays):
        dup = next(i for i, r in enumerate(f.rays) if f.rays.index(r) != i)
        return bad(f"ray {dup} {f.rays[dup]} is a duplicate")
    if not f.max_cones:
        return bad("no maximal cones")
    for c in f.max_cones:
        if len(c) != 3 or len(set(c)) != 3 or any(not 0 <= i < len(f.rays) for i in c):
            return bad(f"cone {c} is not a triple of distinct ray indices")
    if len({frozenset(c) for c in f.max_cones}) != len(f.max_cones):
        return bad("repeated maximal cone")
    for c in f.max_cones:
        d = det3(*(f.rays[i] for i in c))
        if abs(d) != 1:
            return bad(f"cone {c} has determinant {d}, not smooth")
    used = {i for c in f.max_cones for i in c}
    if used != set(range(len(f.rays))):
        missing = sorted(set(range(len(f.rays))) - used)
        return bad(f"rays {missing} lie in no maximal cone")

    # Every 2-face is shared by exactly two maximal cones lying on opposite
    # sides of it.
    adjacent: dict[frozenset[int], list[int]] = {}
    for c in f.max_cones:
        for e in itertools.combinations(c, 2):
            adjacent.setdefault(frozenset(e), []).append(next(k for k in c if k not in e))
    for e, opposite in adjacent.items():
        if len(opposite) != 2:
            return bad(f"2-face {sorted(e)} lies in {len(opposite)} maximal cones")
        i, j = sorted(e)
        s0 = det3(f.rays[i], f.rays[j], f.rays[opposite[0]])
        s1 = det3(f.rays[i], f.rays[j], f.rays[opposite[1]])
        if s0 * s1 >= 0:
            return bad(f"cones across 2-face {sorted(e)} overlap")
    v, e_, fc = len(f.rays), len(adjacent), len(f.max_cones)
    if v - e_ + fc != 2:
        return bad(f"Euler count V-E+F = {v - e_ + fc} != 2")
    # With consistent pairing the covering degree is constant; a generic
    # vector must land in exactly one cone.
    probe = (1, 1000, 1000003)
    hits = sum(1 for c in f.max_cones if _in_cone(probe, [f.rays[i] for i in c]))
    if hits != 1:
        return bad(f"support covers a generic direction {hits} times")
    return FanReport(True, "", len(f.rays), len(f.max_cones))


def _in_cone(x, gens) -> bool:
    coeffs = solve_exact([[g[k] for g in gens] for k in range(3)], list(x))
    return coeffs is not None and all(c >= 0 for c in coeffs)


def _require_valid(f: Fan3) -> None:
    rep = validate_fan(f)
    if not rep:
        raise InvalidFanError(rep.reason)


def face_fan(rays: Sequence[Sequence[int]], name: str = "") -> Fan3:
    """Fan over the faces of conv(rays); used to build fans of toric Fano 3-folds.

    Every ray must be a vertex and every facet a triangle.
    """
    rays = [tuple(int(x) for x in r) for r in rays]
    cones = []
    for i, j, k in itertools.combinations(range(len(rays)), 3):
        a, b, c = rays[i], rays[j], rays[k]
        n = _cross(tuple(y - x for x, y in zip(a, b)), tuple(y - x for x, y in zip(a, c)))
        off = _dot(n, a)
        if off == 0:
            continue
        if off < 0:
            n, off = tuple(-x for x in n), -off
        side = [_dot(n, r) - off for r in rays]
        if all(s <= 0 for s in side):
            if sum(1 for s in side if s == 0) > 3:
                raise InvalidFanError(f"non-simplicial facet through rays {i},{j},{k}")
            cones.append((i, j, k))
    return Fan3(tuple(rays), tuple(cones), name)


def fan_dir() -> Path:
    override = os.environ.get(FAN_DIR_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("ltphodge") / "data" / "fans"))


@lru_cache(maxsize=None)
def _load_fan_cached(directory: str, fan_id: int) -> Fan3:
    path = Path(directory) / f"fan_{fan_id:02d}.json"
    with open(path) as fh:
        return Fan3.from_json(json.load(fh))


def load_fan(fan_id: int) -> Fan3:
    if fan_id not in FAN_IDS:
        raise KeyError(f"unknown toric fan id {fan_id}; expected 1..18")
    return _load_fan_cached(str(fan_dir()), fan_id)


def all_fans() -> dict[int, Fan3]:
    return {i: load_fan(i) for i in FAN_IDS}


def betti_numbers(f: Fan3) -> tuple[int, int, int, int]:
    """Even Betti numbers ``b_0, b_2, b_4, b_6`` from the cone counts."""
    d = f.cone_counts()
    n = 3
    return tuple(
        sum((-1) ** (i - k) * comb(i, k) * d[n - i] for i in range(k, n + 1)) for k in range(n + 1)
    )


def toric_hodge(f: Fan3) -> HodgeDiamond:
    _require_valid(f)
    b = betti_numbers(f)
    rows = [[b[p] if p == q else 0 for q in range(4)] for p in range(4)]
    return HodgeDiamond(3, tuple(tuple(r) for r in rows))


def anticanonical_degree(f: Fan3) -> int:
    """``(-K)^3 = 3! vol(P)``, ``P = {y : <y, v_i> >= -1}``."""
    _require_valid(f)
    vol6 = normalized_volume(dual_polytope(f.rays))
    if vol6.denominator != 1:
        raise ArithmeticError(f"normalized volume {vol6} is not an integer")
    return int(vol6)


def c1c2(f: Fan3) -> int:
    """``c_1 c_2 = 24 chi(O_B)``; for a smooth complete toric variety chi(O_B) = h^{0,0} = 1."""
    d = toric_hodge(f)
    chi_o = sum((-1) ** q * d[0, q] for q in range(4))
    return 24 * chi_o


def anticanonical_sections(rays: Sequence[Sequence[int]], k: int) -> int:
    """h^0(omega^{-k}) of the smooth complete toric variety with these rays."""
    if k < 0:
        return 0
    return lattice_points(dual_polytope(rays, k))


def weierstrass_h0_from_rays(rays: Sequence[Sequence[int]]) -> int:
    """h^0(Z, omega_Z^{-1}) for Z = P(O + omega^{-2} + omega^{-3}) over the toric base.

    A degree-3 monomial x^a y^b z^c has coefficient in omega_B^{-(6-2a-3b)}.
    """
    total = 0
    for a, b in itertools.product(range(4), repeat=2):
        if a + b <= 3:
            total += anticanonical_sections(rays, 6 - 2 * a - 3 * b)
    return total


def weierstrass_anticanonical_h0(base: Fan3) -> int:
    _require_valid(base)
    return weierstrass_h0_from_rays(base.rays)


class IntersectionRing:
    """Triple intersections of torus-invariant divisors on a smooth complete toric 3-fold.

    Independent of the polytope route: uses only the cone structure and the
    linear relations ``sum_l <m, v_l> D_l = 0``.
    """

    def __init__(self, f: Fan3):
        _require_valid(f)
        self.fan = f
        self._cones = [frozenset(c) for c in f.max_cones]
        self._memo: dict[tuple[int, int, int], int] = {}

    def triple(self, i: int, j: int, k: int) -> int:
        key = tuple(sorted((i, j, k)))
        if key not in self._memo:
            self._memo[key] = self._compute(key)
        return self._memo[key]

    def _compute(self, key) -> int:
        support = set(key)
        cone = next((c for c in self._cones if support <= c), None)
        if cone is None:
            return 0
        if len(support) == 3:
            return 1
        # Replace one copy of a repeated divisor D_r via the dual basis vector
        # m of the cone: D_r = -sum_{l not in cone} <m, v_l> D_l.
        r = next(x for x in key if key.count(x) > 1)
        rest = list(key)
        rest.remove(r)
        order = sorted(cone)
        gens = [self.fan.rays[x] for x in order]
        m = solve_exact(gens, [1 if x == r else 0 for x in order])
        total = Fraction(0)
        for l, v in enumerate(self.fan.rays):
            if l in cone:
                continue
            coeff = _dot(m, v)
            if coeff:
                total -= coeff * self.triple(l, *rest)
        if total.denominator != 1:
            raise ArithmeticError("non-integral intersection number")
        return int(total)

    def anticanonical_cube(self) -> int:
        n = len(self.fan.rays)
        return sum(self.triple(i, j, k) for i in range(n) for j in range(n) for k in range(n))

    def c1c2(self) -> int:
        """``c_1 . c_2`` with ``c_2 = sum_{i<j} D_i D_j``."""
        n = len(self.fan.rays)
        return sum(
            self.triple(l, i, j) for l in range(n) for i, j in itertools.combinations(range(n), 2)
        )


def intersection_degree(f: Fan3) -> int:
    return IntersectionRing(f).anticanonical_cube()

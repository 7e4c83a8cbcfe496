"""Catalog of elliptic fibration families and their closed-form Hodge numbers.

Each :class:`FibrationFamily` records the data the LTP comparison needs:
Mordell-Weil rank and torsion, the number ``gamma`` of fibral divisors
missing the zero section, and the sequence of blowup centers that produces the
crepant resolution inside the blown-up P^2-bundle.

Tate models carry a blowup count equal to the rank of the gauge
algebra.  Only the SO(5) resolution (two blowups along curves isomorphic to
S) is worked out explicitly; the other counts are rank-derived.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .bases import (
    BaseSpace,
    Curve,
    Explicit,
    RationalSurface,
    Toric3,
    base_diamond,
    base_e,
    c1_cubed,
    check_c1c2_constraint,
    curve_genus_in_surface,
    is_cy_admissible,
    p1_times_pn,
    p2_times_p1,
    rh_genus,
)
from .motive import (
    E_K3,
    EPolynomial,
    HodgeDiamond,
    diamond_from_e,
    e_blowup,
    e_curve,
    e_mul,
    e_projective,
    e_projective_bundle,
)


class IncompatibleBaseError(ValueError):
    pass


class SurfaceNotApplicableError(ValueError):
    """The STW identity h^{1,1} = rho only holds for total spaces of dim > 2."""


class NotCalabiYauError(ValueError):
    pass


class ConstraintViolatedError(ValueError):
    pass


class Kind(str, Enum):
    TATE = "tate"
    E8 = "e8"
    E7 = "e7"
    E6 = "e6"
    BORCEA_VOISIN = "borcea-voisin"
    PRODUCT_K3 = "product-k3"
    SURFACE = "surface"


SMOOTH_KINDS = (Kind.E8, Kind.E7, Kind.E6)

# Coefficient of c_1(B)^3 in chi of the smooth E8/E7/E6 4-folds.
A_Y = {Kind.E8: 360, Kind.E7: 144, Kind.E6: 72}


@dataclass(frozen=True)
class GaugeData:
    group_name: str
    lie_rank: int


@dataclass(frozen=True)
class BlowupCenterSpec:
    codim: int
    center_e: Callable[[BaseSpace], EPolynomial] = field(compare=False)
    label: str

    def __post_init__(self):
        if self.codim < 2:
            raise ValueError("blowup center must have codimension >= 2")


@dataclass(frozen=True)
class FibrationFamily:
    id: str
    kind: Kind
    mw_rank: int
    mw_torsion: str
    gamma: int
    resolution: tuple[BlowupCenterSpec, ...]
    cy_total_space: bool = True
    gauge: Optional[GaugeData] = None
    equation: str = ""
    # Vanishing orders of (a1, a2, a3, a4, a6) along S; None = coefficient absent.
    tate_orders: Optional[tuple[Optional[int], ...]] = None
    # Multiple m of -K_B whose smooth member is the divisor S (Tate models).
    s_class_multiple: int = 1
    product: bool = False
    fiber_factor_dim: int = 0
    counterexample: bool = False
    notes: str = ""

    @property
    def n(self) -> int:
        return len(self.resolution)

    @property
    def has_torsion(self) -> bool:
        return self.mw_torsion not in ("", "0", "trivial")

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "gauge": self.gauge.group_name if self.gauge else None,
            "rank": self.gauge.lie_rank if self.gauge else None,
            "n": self.n,
            "gamma": self.gamma,
            "mw_rank": self.mw_rank,
            "mw_torsion": self.mw_torsion,
            "tate_orders": list(self.tate_orders) if self.tate_orders else None,
            "cy": self.cy_total_space,
        }


# ---------------------------------------------------------------------------
# Tate models


def _s_genus(base: BaseSpace, multiple: int) -> int:
    """Genus of a smooth S in |-m K_B|, floored at 0.

    For very negative K^2 adjunction gives a negative arithmetic genus; the
    center is then modelled as a rational curve.  Only h^{0,0} of the center
    enters Hodge numbers with p + q < 3, so the verdict is unaffected.
    """
    k2 = base.k_squared
    s_self, s_k = multiple * multiple * k2, -multiple * k2
    twice = s_self + s_k
    if twice < -2:
        return 0
    return curve_genus_in_surface(s_self, s_k)


def _curve_s(multiple: int) -> Callable[[BaseSpace], EPolynomial]:
    return lambda base: e_curve(_s_genus(base, multiple))


def _tate(id_, group, rank, equation, orders, torsion="trivial", multiple=1, notes=""):
    centers = tuple(
        BlowupCenterSpec(2, _curve_s(multiple), f"curve isomorphic to S (blowup {i + 1})")
        for i in range(rank)
    )
    return FibrationFamily(
        id=id_,
        kind=Kind.TATE,
        mw_rank=0,
        mw_torsion=torsion,
        gamma=rank,
        resolution=centers,
        gauge=GaugeData(group, rank),
        equation=equation,
        tate_orders=orders,
        s_class_multiple=multiple,
        notes=notes,
    )


_X = None  # coefficient absent from the Tate equation

TABLE1 = (
    _tate("su2", "SU(2)", 1, "y^2z = x^3 + a_{4,1}sxz^2 + a_{6,2}s^2z^3", (_X, _X, _X, 1, 2)),
    _tate("su3", "SU(3)", 2, "y^2z + a_{3,1}syz^2 = x^3 + a_{4,2}s^2xz^2 + a_{6,3}s^3z^3", (_X, _X, 1, 2, 3)),
    _tate("su4", "SU(4)", 3, "y^2z + a_1xyz = x^3 + a_{2,1}sx^2z + a_{4,2}s^2xz^2 + a_{6,4}s^4z^3", (0, 1, _X, 2, 4)),
    _tate(
        "su5", "SU(5)", 4,
        "y^2z + a_1xyz + a_{3,2}s^2yz^2 = x^3 + a_{2,1}sx^2z + a_{4,3}s^3xz^2 + a_{6,5}s^5z^3",
        (0, 1, 2, 3, 5),
    ),
    _tate("usp4", "USp(4)", 2, "y^2z = x^3 + a_2x^2z + a_{4,3}s^3xz^2 + a_{6,5}s^5z^3", (_X, 0, _X, 3, 5)),
    _tate(
        "so3", "SO(3)", 1, "y^2z = x^3 + a_2x^2z + sxz^2", (_X, 0, _X, 1, _X), torsion="Z/2",
        notes="resolution not worked out explicitly; blowup count taken from the rank, needs confirmation",
    ),
    _tate(
        "so5", "SO(5)", 2, "y^2z = x^3 + a_2x^2z + s^2xz^2", (_X, 0, _X, 2, _X), torsion="Z/2", multiple=2,
        notes="two blowups along curves isomorphic to S in |-2K_B|; discriminant s^4(a_2 - 2s)(a_2 + 2s)",
    ),
    _tate("so6", "SO(6)", 3, "y^2z + a_1xyz = x^3 + sx^2z + s^2xz^2", (0, 1, _X, 2, _X), torsion="Z/2"),
    _tate("spin7", "Spin(7)", 3, "y^2z = x^3 + a_{2,1}sx^2z + a_{4,2}s^2xz^2 + a_{6,4}s^4z^3", (_X, 1, _X, 2, 4)),
    _tate("g2", "G2", 2, "y^2z = x^3 + a_{4,2}s^2xz^2 + a_{6,3}s^3z^3", (_X, _X, _X, 2, 3)),
    _tate("f4", "F4", 4, "y^2z = x^3 + a_{4,3}s^3xz^2 + a_{6,4}s^4z^3", (_X, _X, _X, 3, 4)),
    _tate("e6-gauge", "E6", 6, "y^2z + a_{3,2}s^2yz^2 = x^3 + a_{4,3}s^3xz^2 + a_{6,5}s^5z^3", (_X, _X, 2, 3, 5)),
    _tate("e7-gauge", "E7", 7, "y^2z = x^3 + a_{4,3}s^3xz^2 + a_{6,5}s^5z^3", (_X, _X, _X, 3, 5)),
    _tate("e8-gauge", "E8", 8, "y^2z = x^3 + a_{4,4}s^4xz^2 + a_{6,5}s^5z^3", (_X, _X, _X, 4, 5)),
)

# Nodes of the finite Dynkin diagram of each gauge algebra.
LIE_RANKS = {
    "SU(2)": 1, "SU(3)": 2, "SU(4)": 3, "SU(5)": 4, "USp(4)": 2, "SO(3)": 1, "SO(5)": 2,
    "SO(6)": 3, "Spin(7)": 3, "G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8,
}


# ---------------------------------------------------------------------------
# Smooth E8 / E7 / E6 families


def _base_center(base: BaseSpace) -> EPolynomial:
    return base_e(base)


def e6_locus_default(base: BaseSpace) -> EPolynomial:
    """Placeholder E-polynomial for the codim-2 locus C in B blown up by the E6 resolution.

    Modelled as P^{dim B - 2}.  C only enters h^{p,q} with p, q >= 2 of the
    ambient space, outside every compared entry.
    """
    return e_projective(base.dim - 2)


def make_e6_family(locus: Callable[[BaseSpace], EPolynomial] = e6_locus_default) -> FibrationFamily:
    def blown_up_base(base):
        # Bl_C B with C of codimension 2 in B.
        return e_blowup(base_e(base), locus(base), 2)

    return FibrationFamily(
        id="e6",
        kind=Kind.E6,
        mw_rank=2,
        mw_torsion="trivial",
        gamma=0,
        resolution=(
            BlowupCenterSpec(2, _base_center, "section Sigma_1 (isomorphic to B)"),
            BlowupCenterSpec(2, blown_up_base, "proper transform of Sigma_2 (Bl_C B)"),
        ),
        equation="x^3 + y^3 = b_1xyz + b_2xz^2 + e_2yz^2 + b_3z^3 in P(O + K^-1 + K^-1)",
        notes="reducible fibers only in codim >= 2; three natural sections",
    )


E8_FAMILY = FibrationFamily(
    id="e8",
    kind=Kind.E8,
    mw_rank=0,
    mw_torsion="trivial",
    gamma=0,
    resolution=(),
    equation="y^2z = x^3 + fxz^2 + gz^3 in P(O + K^-2 + K^-3)",
    notes="smooth Weierstrass model; singular fibers irreducible",
)

E7_FAMILY = FibrationFamily(
    id="e7",
    kind=Kind.E7,
    mw_rank=1,
    mw_torsion="trivial",
    gamma=0,
    resolution=(BlowupCenterSpec(2, _base_center, "image of the second section (isomorphic to B)"),),
    equation="y^2z - 2x^2y + c_2x^2z + c_3xz^2 + c_4z^3 = 0 in P(O + K^-1 + K^-2)",
    notes="two natural sections; Weierstrass model resolved by one blowup along the second section",
)

E6_FAMILY = make_e6_family()


# ---------------------------------------------------------------------------
# Borcea-Voisin 4-fold over P^2 x P^1

SEXTIC_GENUS = curve_genus_in_surface(36, -18)


def trisection_genus(n_cusps: int = 0) -> int:
    """Genus of the 3:1 cover of P^1 ramified at n triple and 24 - 2n double points."""
    if not 0 <= n_cusps <= 12:
        raise ValueError("number of type II fibers must lie in 0..12")
    return rh_genus(3, [(3, n_cusps), (2, 24 - 2 * n_cusps)])


BV_HODGE = {"h11": 5, "h21": 30, "h22": 552, "h31": 137}


def _bv_s_center(base):
    return e_mul(e_curve(SEXTIC_GENUS), e_projective(1))


def _bv_t_center(base):
    return e_mul(e_curve(SEXTIC_GENUS), e_curve(trisection_genus(0)))


BORCEA_VOISIN = FibrationFamily(
    id="borcea-voisin",
    kind=Kind.BORCEA_VOISIN,
    mw_rank=0,
    mw_torsion="trivial",
    gamma=2,
    resolution=(
        BlowupCenterSpec(3, _bv_s_center, "S = C x P^1 (x = y = f = 0)"),
        BlowupCenterSpec(3, _bv_t_center, "T = C x (trisection curve)"),
    ),
    equation="y^2z = x^3 + (Af^2)xz^2 + (Bf^3)z^3 over P^2 x P^1",
    notes="gamma = 2 inferred from h^{1,1}(X) = 5 = h^{1,1}(B) + 1 + gamma with MW rank 0",
)


# ---------------------------------------------------------------------------
# Non-Calabi-Yau families


def k3_product_family(n: int) -> FibrationFamily:
    if n < 1:
        raise ValueError("fiber factor dimension must be positive")
    return FibrationFamily(
        id=f"k3xp{n}",
        kind=Kind.PRODUCT_K3,
        mw_rank=0,
        mw_torsion="trivial",
        gamma=0,
        resolution=(),
        cy_total_space=False,
        equation=f"(elliptic K3 over P^1) x P^{n}, L = O(2,0)",
        fiber_factor_dim=n,
        counterexample=True,
        notes="total space is not Calabi-Yau; LTP expected to fail",
    )


def surface_family(product: bool, point_blowups: int = 0) -> FibrationFamily:
    """Minimal elliptic surface over a curve; Du Val points resolve by point blowups."""
    centers = tuple(
        BlowupCenterSpec(3, lambda base: EPolynomial.constant(1), f"point {i + 1}")
        for i in range(point_blowups)
    )
    return FibrationFamily(
        id="surface-product" if product else "surface",
        kind=Kind.SURFACE,
        mw_rank=0,
        mw_torsion="trivial",
        gamma=0,
        resolution=centers,
        cy_total_space=False,
        product=product,
        counterexample=product,
        equation="B x E" if product else "minimal elliptic surface, not a product",
    )


SURFACE = surface_family(False)
SURFACE_PRODUCT = surface_family(True)

REGISTRY: dict[str, FibrationFamily] = {
    f.id: f
    for f in (
        *TABLE1,
        E8_FAMILY,
        E7_FAMILY,
        E6_FAMILY,
        BORCEA_VOISIN,
        k3_product_family(1),
        k3_product_family(2),
        k3_product_family(3),
        SURFACE,
        SURFACE_PRODUCT,
    )
}


def get_family(family_id: str) -> FibrationFamily:
    if family_id in REGISTRY:
        return REGISTRY[family_id]
    m = re.fullmatch(r"k3xp(\d+)", family_id)
    if m and int(m.group(1)) >= 1:
        return k3_product_family(int(m.group(1)))
    raise KeyError(f"unknown family {family_id!r}")


def default_base(family: FibrationFamily) -> Optional[BaseSpace]:
    if family.kind is Kind.BORCEA_VOISIN:
        return p2_times_p1()
    if family.kind is Kind.PRODUCT_K3:
        return p1_times_pn(family.fiber_factor_dim)
    return None


# ---------------------------------------------------------------------------
# Operations


@dataclass(frozen=True)
class ResolutionSummary:
    n: int
    ambient_e: EPolynomial
    ambient_dim: int
    centers: tuple[tuple[str, int, EPolynomial], ...]
    caveats: tuple[str, ...] = ()

    def ambient_diamond(self) -> HodgeDiamond:
        return diamond_from_e(self.ambient_e, self.ambient_dim)


def _is_p2xp1(base: BaseSpace) -> bool:
    if isinstance(base, Toric3):
        return base.fan_id == 2
    return isinstance(base, Explicit) and base.label == "P2xP1"


def check_compatible(family: FibrationFamily, base: BaseSpace) -> None:
    k = family.kind
    if k is Kind.TATE:
        if not isinstance(base, RationalSurface):
            raise IncompatibleBaseError(f"{family.id} is defined over rational surfaces, not {base.describe()}")
    elif k in SMOOTH_KINDS:
        if not 1 <= base.dim <= 3:
            raise IncompatibleBaseError(f"{family.id} needs a base of dimension 1..3")
        if not is_cy_admissible(base):
            raise IncompatibleBaseError(f"base {base.describe()} has h^{{0,k}} != 0; no CY total space")
    elif k is Kind.BORCEA_VOISIN:
        if not _is_p2xp1(base):
            raise IncompatibleBaseError("the Borcea-Voisin 4-fold lives over P2xP1")
    elif k is Kind.PRODUCT_K3:
        d = base_diamond(base)
        expected = diamond_from_e(e_projective(1) * e_projective(family.fiber_factor_dim), family.fiber_factor_dim + 1)
        if d != expected:
            raise IncompatibleBaseError(f"{family.id} lives over P1xP{family.fiber_factor_dim}")
    elif k is Kind.SURFACE:
        if not isinstance(base, Curve):
            raise IncompatibleBaseError("elliptic surfaces live over curves")


def _resolve_base(family, base):
    if base is None:
        base = default_base(family)
        if base is None:
            raise IncompatibleBaseError(f"{family.id} needs an explicit base")
    check_compatible(family, base)
    return base


def resolve(family: FibrationFamily, base: Optional[BaseSpace] = None) -> ResolutionSummary:
    """Fold the blowup formula over the family's centers, starting from P(O + L^2 + L^3)."""
    base = _resolve_base(family, base)
    ambient = e_projective_bundle(base_e(base), 3)
    centers = []
    for spec in family.resolution:
        ce = spec.center_e(base)
        ambient = e_blowup(ambient, ce, spec.codim)
        centers.append((spec.label, spec.codim, ce))
    caveats = []
    if family.kind is Kind.TATE:
        k2 = base.k_squared
        m = family.s_class_multiple
        if m * m * k2 - m * k2 < -2:
            caveats.append("AdjunctionGenusNegative")
    return ResolutionSummary(len(centers), ambient, base.dim + 2, tuple(centers), tuple(caveats))


def resolved_h11(family: FibrationFamily, base: Optional[BaseSpace] = None) -> int:
    """h^{1,1} of the resolved total space from the Shioda-Tate-Wazir formula."""
    base = _resolve_base(family, base)
    if not family.cy_total_space:
        raise NotCalabiYauError(f"{family.id} does not have a Calabi-Yau total space")
    if base.dim + 1 <= 2:
        raise SurfaceNotApplicableError("h^{1,1} = rho fails for surfaces (K3: h^{1,1} = 20)")
    return base_diamond(base)[1, 1] + 1 + family.gamma + family.mw_rank


@dataclass(frozen=True)
class FourfoldHodge:
    h11: int
    h12: int
    h13: int
    h22: int
    chi: int

    @property
    def h31(self) -> int:
        return self.h13


def _exact_div(num: int, den: int) -> int:
    if num % den:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return num // den


def fourfold_hodge(family: FibrationFamily, base: BaseSpace) -> FourfoldHodge:
    if family.kind not in SMOOTH_KINDS:
        raise ValueError("4-fold formulas apply to the E8/E7/E6 families")
    if base.dim != 3:
        raise IncompatibleBaseError("4-fold formulas need a 3-dimensional base")
    if not check_c1c2_constraint(base):
        raise ConstraintViolatedError(f"c1c2 != 24 for base {base.describe()}")
    check_compatible(family, base)
    a = A_Y[family.kind]
    c3 = c1_cubed(base)
    hb = base_diamond(base)
    h11b, h12b, n = hb[1, 1], hb[1, 2], family.n
    if h12b != 0:
        raise ConstraintViolatedError("closed formulas assume h^{1,2}(B) = 0")
    h11 = h11b + 1 + n
    h12 = 0
    h13 = 39 + _exact_div(a * c3, 6) - h11b - n
    h22 = 204 + _exact_div(2 * a * c3, 3)
    chi = 12 * 24 + a * c3
    if 6 * (8 + h11 + h13 - h12) != chi:
        raise ArithmeticError("chi/6 = 8 + h11 + h13 - h12 violated")
    if h22 != 44 + 4 * h11 + 4 * h13 - 2 * h12:
        raise ArithmeticError("h22 = 44 + 4h11 + 4h13 - 2h12 violated")
    return FourfoldHodge(h11, h12, h13, h22, chi)


def chi_smooth_weierstrass_4fold(base: BaseSpace) -> int:
    if base.dim != 3 or not check_c1c2_constraint(base):
        raise ConstraintViolatedError("needs a 3-fold base with c1c2 = 24")
    return 288 + 360 * c1_cubed(base)


def fourfold_diamond(h11: int, h21: int, h31: int, h22: int) -> HodgeDiamond:
    """Full Hodge diamond of a CY 4-fold with h^{p,0} = 0 for 0 < p < 4."""
    rows = [
        [1, 0, 0, 0, 1],
        [0, h11, h21, h31, 0],
        [0, h21, h22, h21, 0],
        [0, h31, h21, h11, 0],
        [1, 0, 0, 0, 1],
    ]
    return HodgeDiamond.from_matrix(rows)


@dataclass(frozen=True)
class BorceaVoisinData:
    x_hodge: dict
    ambient: dict
    centers: tuple[tuple[str, int, EPolynomial], ...]
    sextic_genus: int
    trisection_genus: int
    chi: int


def borcea_voisin_data(n_cusps: int = 0) -> BorceaVoisinData:
    g_t = trisection_genus(n_cusps)
    summary = resolve(BORCEA_VOISIN)
    amb = summary.ambient_diamond()
    x = fourfold_diamond(BV_HODGE["h11"], BV_HODGE["h21"], BV_HODGE["h31"], BV_HODGE["h22"])
    return BorceaVoisinData(
        x_hodge=dict(BV_HODGE),
        ambient={"h11": amb[1, 1], "h12": amb[1, 2]},
        centers=summary.centers,
        sextic_genus=SEXTIC_GENUS,
        trisection_genus=g_t,
        chi=x.euler(),
    )


@dataclass(frozen=True)
class SurfaceData:
    x_h10: int
    ambient_h10: int

    @property
    def ltp_holds(self) -> bool:
        return self.x_h10 == self.ambient_h10


def surface_x_h10(family: FibrationFamily, g: int) -> int:
    if family.product:
        # B x E by Kunneth.
        return diamond_from_e(e_curve(g) * e_curve(1), 2)[1, 0]
    # A non-product minimal elliptic surface has q(X) = g(B).
    return g


def surface_family_data(family: FibrationFamily, g: int) -> SurfaceData:
    if family.kind is not Kind.SURFACE:
        raise ValueError("not a surface family")
    amb = resolve(family, Curve(g)).ambient_diamond()
    return SurfaceData(surface_x_h10(family, g), amb[1, 0])


@dataclass(frozen=True)
class K3ProductData:
    x_h11: int
    ambient_h11: int
    x_diamond: HodgeDiamond


def k3_product_x_diamond(n: int) -> HodgeDiamond:
    return diamond_from_e(e_mul(E_K3, e_projective(n)), n + 2)


def k3_product_counterexample(n: int) -> K3ProductData:
    fam = k3_product_family(n)
    amb = resolve(fam).ambient_diamond()
    x = k3_product_x_diamond(n)
    return K3ProductData(x[1, 1], amb[1, 1], x)

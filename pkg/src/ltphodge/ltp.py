"""LTP verdicts: compare the resolved fibration with the blown-up ambient bundle.

The ambient side always comes from folding the blowup formula over the
family's centers (:func:`ltphodge.catalog.resolve`).  The fibration side comes
from Shioda-Tate-Wazir arithmetic, Kunneth products or stored catalog
values, so the two columns of a verdict are produced by unrelated code.
Only Hodge numbers with ``p + q < dim`` are compared; ``holds`` is a
statement about numbers, never about integral cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .bases import BaseSpace, RationalSurface, Toric3, base_diamond, parse_base
from .catalog import (
    BV_HODGE,
    SMOOTH_KINDS,
    TABLE1,
    FibrationFamily,
    Kind,
    _resolve_base,
    fourfold_hodge,
    get_family,
    k3_product_x_diamond,
    resolve,
    resolved_h11,
    surface_x_h10,
)
from .toric import load_fan

TORSION_CAVEAT = "IntegralTorsionPresent"
NOT_CY_CAVEAT = "NotCalabiYau"
CONDITIONAL_CAVEAT = "Conditional"

CAVEAT_TEXT = {
    TORSION_CAVEAT: "Mordell-Weil torsion puts torsion in H^2(W~, Z); only rational Hodge structures can agree",
    NOT_CY_CAVEAT: "total space is not Calabi-Yau; LTP is not expected",
    CONDITIONAL_CAVEAT: "h^{1,2} of the fibration is taken from the base diamond, not a toric computation",
    "AdjunctionGenusNegative": "S in |-mK_B| has negative arithmetic genus; blowup centers modelled as rational curves",
}


@dataclass(frozen=True)
class Comparison:
    p: int
    q: int
    lhs: int
    rhs: int
    source: str

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class LtpVerdict:
    family_id: str
    base: str
    total_dim: int
    compared: tuple[Comparison, ...]
    holds: bool
    caveats: tuple[str, ...] = ()
    expected_failure: bool = False
    details: dict = field(default_factory=dict, compare=False)

    @property
    def as_documented(self) -> bool:
        """Holds, or is a designated counterexample that fails."""
        return self.holds != self.expected_failure

    def to_json(self) -> dict:
        return {
            "family": self.family_id,
            "base": self.base,
            "dim": self.total_dim,
            "comparisons": [[c.p, c.q, c.lhs, c.rhs] for c in self.compared],
            "holds": self.holds,
            "caveats": list(self.caveats),
            "expected_failure": self.expected_failure,
            "sources": [c.source for c in self.compared],
            "details": self.details,
        }


def compared_indices(total_dim: int) -> list[tuple[int, int]]:
    """``(p, q)`` with ``p <= q`` and ``p + q < total_dim``; conjugates are implied."""
    return [(p, q) for s in range(total_dim) for p in range(s + 1) for q in [s - p] if p <= q]


def _fibration_side(family: FibrationFamily, base: BaseSpace, total_dim: int) -> dict[tuple[int, int], tuple[int, str]]:
    k = family.kind
    if k is Kind.PRODUCT_K3:
        x = k3_product_x_diamond(family.fiber_factor_dim)
        return {pq: (x[pq], "kunneth") for pq in compared_indices(total_dim)}
    if k is Kind.SURFACE:
        g = base_diamond(base)[0, 1]
        return {(0, 0): (1, "structural"), (0, 1): (surface_x_h10(family, g), "catalog")}

    # Calabi-Yau families: h^{0,q} vanishes for 0 < q < dim.
    side = {(0, 0): (1, "structural")}
    for q in range(1, total_dim):
        side[(0, q)] = (0, "structural")
    if total_dim >= 3:
        side[(1, 1)] = (resolved_h11(family, base), "stw")
    if total_dim == 4:
        if k is Kind.BORCEA_VOISIN:
            side[(1, 2)] = (BV_HODGE["h21"], "catalog")
        else:
            side[(1, 2)] = (base_diamond(base)[1, 2], "family-claim")
    if total_dim > 4:
        raise ValueError("verdicts are implemented for total spaces of dimension <= 4")
    return side


def verdict(family: FibrationFamily | str, base: BaseSpace | str | None = None) -> LtpVerdict:
    if isinstance(family, str):
        family = get_family(family)
    if isinstance(base, str):
        base = parse_base(base)
    base = _resolve_base(family, base)
    total_dim = base.dim + 1
    summary = resolve(family, base)
    ambient = summary.ambient_diamond()
    lhs = _fibration_side(family, base, total_dim)

    compared = tuple(
        Comparison(p, q, lhs[(p, q)][0], ambient[p, q], lhs[(p, q)][1]) for p, q in compared_indices(total_dim)
    )
    caveats = list(summary.caveats)
    if family.has_torsion:
        caveats.append(TORSION_CAVEAT)
    if not family.cy_total_space and family.kind is not Kind.SURFACE:
        caveats.append(NOT_CY_CAVEAT)
    if total_dim == 4 and family.kind in SMOOTH_KINDS and not isinstance(base, Toric3):
        caveats.append(CONDITIONAL_CAVEAT)

    details = {"n": summary.n, "gamma": family.gamma, "mw_rank": family.mw_rank, "mw_torsion": family.mw_torsion}
    if total_dim == 4 and family.kind in SMOOTH_KINDS:
        try:
            fh = fourfold_hodge(family, base)
        except ValueError:
            pass
        else:
            details.update({"h13": fh.h13, "h22": fh.h22, "chi": fh.chi})
    return LtpVerdict(
        family_id=family.id,
        base=base.describe(),
        total_dim=total_dim,
        compared=compared,
        holds=all(c.equal for c in compared),
        caveats=tuple(caveats),
        expected_failure=family.counterexample,
        details=details,
    )


def table1_sweep(base: RationalSurface) -> list[LtpVerdict]:
    return [verdict(f, base) for f in TABLE1]


TABLE3_BASES = (1, 2, 3, 4)
TABLE3_KINDS = ("e8", "e7", "e6")


@dataclass(frozen=True)
class Table3Cell:
    kind: str
    fan_id: int
    base_name: str
    h11: int
    h31: int
    h22: int


def table3_render(kinds: Sequence[str] = TABLE3_KINDS, bases: Iterable[int] = TABLE3_BASES) -> list[Table3Cell]:
    cells = []
    bases = tuple(bases)
    for kind in kinds:
        fam = get_family(kind)
        for fan_id in bases:
            b = Toric3(load_fan(fan_id), fan_id)
            fh = fourfold_hodge(fam, b)
            cells.append(Table3Cell(kind, fan_id, b.fan.name, fh.h11, fh.h31, fh.h22))
    return cells


def counterexample_verdicts(
    k3_dims: Iterable[int] = (1, 2, 3), genera: Iterable[int] = (0, 1, 2)
) -> list[LtpVerdict]:
    from .bases import Curve
    from .catalog import SURFACE_PRODUCT

    out = [verdict(f"k3xp{n}") for n in k3_dims]
    out += [verdict(SURFACE_PRODUCT, Curve(g)) for g in genera]
    return out

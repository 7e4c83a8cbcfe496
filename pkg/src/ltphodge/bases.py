"""Base spaces of elliptic fibrations and the numbers the fibration formulas consume."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .motive import (
    EPolynomial,
    HodgeDiamond,
    diamond_from_e,
    e_curve,
    e_from_diamond,
    e_projective,
)
from .toric import Fan3, anticanonical_degree, c1c2, load_fan, toric_hodge


class NonIntegralError(ValueError):
    pass


class NegativeGenusError(ValueError):
    pass


class WrongDimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Curve:
    g: int
    label: str = ""

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def dim(self) -> int:
        return 1

    def describe(self) -> str:
        return self.label or ("P1" if self.g == 0 else f"curve:g={self.g}")


@dataclass(frozen=True)
class RationalSurface:
    """A rational surface known only through K_B^2 (h^{1,1} = 10 - K^2 by Noether)."""

    k_squared: int
    label: str = ""

    def __post_init__(self):
        if self.k_squared > 9:
            raise ValueError(f"rational surface needs K^2 <= 9, got {self.k_squared}")

    @property
    def dim(self) -> int:
        return 2

    def describe(self) -> str:
        return self.label or f"rational:K2={self.k_squared}"


@dataclass(frozen=True)
class Toric3:
    fan: Fan3
    fan_id: Optional[int] = None

    @property
    def dim(self) -> int:
        return 3

    def describe(self) -> str:
        return f"toric:{self.fan_id}" if self.fan_id is not None else f"toric:{self.fan.name}"


@dataclass(frozen=True)
class Explicit:
    """A base given by its Hodge diamond, with optional Chern numbers for 3-folds."""

    diamond: HodgeDiamond
    c1_cubed: Optional[int] = None
    c1c2: Optional[int] = None
    label: str = "explicit"

    @property
    def dim(self) -> int:
        return self.diamond.dim

    def describe(self) -> str:
        return self.label


BaseSpace = Union[Curve, RationalSurface, Toric3, Explicit]


def base_diamond(b: BaseSpace) -> HodgeDiamond:
    if isinstance(b, Curve):
        return HodgeDiamond(1, ((1, b.g), (b.g, 1)))
    if isinstance(b, RationalSurface):
        return HodgeDiamond(2, ((1, 0, 0), (0, 10 - b.k_squared, 0), (0, 0, 1)))
    if isinstance(b, Toric3):
        return toric_hodge(b.fan)
    if isinstance(b, Explicit):
        return b.diamond
    raise TypeError(f"not a base space: {b!r}")


def base_e(b: BaseSpace) -> EPolynomial:
    if isinstance(b, Curve):
        return e_curve(b.g)
    return e_from_diamond(base_diamond(b))


def is_cy_admissible(b: BaseSpace) -> bool:
    """h^{0,k}(B) = 0 for 1 <= k <= dim B, necessary for a Calabi-Yau total space."""
    d = base_diamond(b)
    return all(d[0, k] == 0 for k in range(1, d.dim + 1))


def curve_genus_in_surface(s_self: int, s_k: int) -> int:
    """Genus of a smooth curve S on a surface from adjunction 2g - 2 = S.(K + S)."""
    twice = s_self + s_k
    if twice % 2:
        raise NonIntegralError(f"S.(K+S) = {twice} is odd")
    g = 1 + twice // 2
    if g < 0:
        raise NegativeGenusError(f"adjunction gives genus {g}")
    return g


def rh_genus(degree: int, ramification: Sequence[tuple[int, int]]) -> int:
    """Genus of a degree-``d`` cover of P^1 by Riemann-Hurwitz.

    ``ramification`` lists ``(multiplicity, count)`` pairs of ramification
    points; ``2g - 2 = -2d + sum count * (multiplicity - 1)``.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    r = sum(count * (mult - 1) for mult, count in ramification)
    if r % 2:
        raise NonIntegralError(f"total ramification {r} is odd")
    g = 1 - degree + r // 2
    if g < 0:
        raise NegativeGenusError(f"Riemann-Hurwitz gives genus {g}")
    return g


def check_c1c2_constraint(b: BaseSpace) -> bool:
    """Whether c_1 c_2(B) = 24, the condition for B to carry an elliptic CY 4-fold.

    An :class:`Explicit` base without a stored c_1 c_2 cannot be certified and
    yields False.
    """
    if b.dim != 3:
        raise WrongDimensionError(f"c1c2 constraint applies to 3-folds, base has dim {b.dim}")
    if isinstance(b, Toric3):
        return c1c2(b.fan) == 24
    return b.c1c2 == 24


def c1_cubed(b: BaseSpace) -> int:
    if isinstance(b, Toric3):
        return anticanonical_degree(b.fan)
    if isinstance(b, Explicit) and b.c1_cubed is not None:
        return b.c1_cubed
    raise ValueError(f"c1^3 unknown for base {b.describe()}")


def product_diamond(*factors: EPolynomial, dim: int) -> HodgeDiamond:
    out = EPolynomial.constant(1)
    for f in factors:
        out = out * f
    return diamond_from_e(out, dim)


def p2_times_p1() -> Explicit:
    return Explicit(product_diamond(e_projective(2), e_projective(1), dim=3), 54, 24, "P2xP1")


def p1_times_pn(n: int) -> Explicit:
    if n < 1:
        raise ValueError("n must be positive")
    return Explicit(product_diamond(e_projective(1), e_projective(n), dim=n + 1), label=f"P1xP{n}")


_DESCRIPTOR_HELP = "P1, P2, P3, P2xP1, P1xP<n>, curve:g=<g>, rational:K2=<k>, toric:<1..18>"


def parse_base(text: str) -> BaseSpace:
    """Parse a CLI base descriptor such as ``P2``, ``rational:K2=5`` or ``toric:7``."""
    t = text.strip()
    if t == "P1":
        return Curve(0, "P1")
    if t == "P2":
        return RationalSurface(9, "P2")
    if t == "P3":
        return Toric3(load_fan(1), 1)
    if t == "P2xP1":
        return p2_times_p1()
    m = re.fullmatch(r"P1xP(\d+)", t)
    if m:
        return p1_times_pn(int(m.group(1)))
    m = re.fullmatch(r"curve:g=(\d+)", t)
    if m:
        return Curve(int(m.group(1)))
    m = re.fullmatch(r"rational:K2=(-?\d+)", t)
    if m:
        return RationalSurface(int(m.group(1)))
    m = re.fullmatch(r"toric:(\d+)", t)
    if m:
        fan_id = int(m.group(1))
        try:
            return Toric3(load_fan(fan_id), fan_id)
        except KeyError as exc:
            raise ValueError(str(exc)) from None
    raise ValueError(f"unknown base descriptor {text!r}; expected one of {_DESCRIPTOR_HELP}")

"""Hodge--Deligne polynomials and Hodge diamonds.

An :class:`EPolynomial` is the sparse integer polynomial

    E_Z(u, v) = sum_{p,q} (-1)^{p+q} h^{p,q}(Z) u^p v^q

and behaves motivically: it is additive over a decomposition into a closed
piece and its open complement, multiplicative over Zariski locally trivial
fibrations, and changes under a blowup along a smooth center of codimension
``m + 1`` by ``(uv + ... + (uv)^m) * E_center``.

Intermediate polynomials may have either sign in any coefficient (open
varieties, differences); only :func:`diamond_from_e` enforces the sign pattern
of a smooth compact variety.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

__all__ = [
    "EPolynomial",
    "HodgeDiamond",
    "NonPureError",
    "AsymmetricError",
    "e_add",
    "e_mul",
    "e_projective",
    "e_curve",
    "e_projective_bundle",
    "e_blowup",
    "diamond_from_e",
    "e_from_diamond",
    "euler_char",
    "E_POINT",
    "E_K3",
]


class NonPureError(ValueError):
    """Recovered Hodge numbers are negative or out of range."""


class AsymmetricError(ValueError):
    """Recovered Hodge numbers violate h^{p,q} = h^{q,p}."""


@dataclass(frozen=True)
class EPolynomial:
    """Sparse bivariate integer polynomial keyed by exponent pairs ``(p, q)``.

    Stored as a sorted tuple of ``((p, q), coeff)`` with zero coefficients
    removed, so equality and hashing are structural.
    """

    items: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        for (p, q), c in self.items:
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent ({p}, {q})")
            if c == 0:
                raise ValueError("zero coefficient stored; use EPolynomial.from_terms")

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]]) -> "EPolynomial":
        acc: dict[tuple[int, int], int] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for (p, q), c in pairs:
            key = (int(p), int(q))
            acc[key] = acc.get(key, 0) + int(c)
        return cls(tuple(sorted((k, c) for k, c in acc.items() if c != 0)))

    @classmethod
    def constant(cls, c: int) -> "EPolynomial":
        return cls.from_terms({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self.items)

    def coeff(self, p: int, q: int) -> int:
        for key, c in self.items:
            if key == (p, q):
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.items

    def degrees(self) -> tuple[int, int]:
        """Largest ``p`` and largest ``q`` occurring (``(-1, -1)`` for zero)."""
        if not self.items:
            return (-1, -1)
        return (max(p for (p, _), _ in self.items), max(q for (_, q), _ in self.items))

    def is_conjugation_symmetric(self) -> bool:
        t = self.terms
        return all(t.get((q, p), 0) == c for (p, q), c in t.items())

    def __add__(self, other: "EPolynomial") -> "EPolynomial":
        if not isinstance(other, EPolynomial):
            return NotImplemented
        return EPolynomial.from_terms(list(self.items) + list(other.items))

    def __neg__(self) -> "EPolynomial":
        return EPolynomial(tuple((k, -c) for k, c in self.items))

    def __sub__(self, other: "EPolynomial") -> "EPolynomial":
        if not isinstance(other, EPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "EPolynomial":
        if isinstance(other, int):
            return EPolynomial.from_terms([(k, c * other) for k, c in self.items])
        if not isinstance(other, EPolynomial):
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self.items:
            for (p2, q2), c2 in other.items:
                key = (p1 + p2, q1 + q2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return EPolynomial.from_terms(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "EPolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = E_POINT
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, u: int, v: int) -> int:
        return sum(c * u**p * v**q for (p, q), c in self.items)

    def to_json(self) -> list[list[int]]:
        return [[p, q, c] for (p, q), c in self.items]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "EPolynomial":
        return cls.from_terms([((p, q), c) for p, q, c in data])

    def __str__(self) -> str:
        if not self.items:
            return "0"
        parts = []
        for (p, q), c in self.items:
            mono = "".join(
                f"{var}^{e}" if e > 1 else var for var, e in (("u", p), ("v", q)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


E_POINT = EPolynomial.constant(1)


def e_add(a: EPolynomial, b: EPolynomial) -> EPolynomial:
    return a + b


def e_mul(a: EPolynomial, b: EPolynomial) -> EPolynomial:
    return a * b


def _uv_power_sum(lo: int, hi: int) -> EPolynomial:
    return EPolynomial.from_terms({(k, k): 1 for k in range(lo, hi + 1)})


def e_projective(n: int) -> EPolynomial:
    """E-polynomial of P^n, ``1 + uv + ... + (uv)^n``."""
    if n < 0:
        raise ValueError("projective space of negative dimension")
    return _uv_power_sum(0, n)


def e_curve(g: int) -> EPolynomial:
    """E-polynomial of a smooth projective curve of genus ``g``."""
    if g < 0:
        raise ValueError("negative genus")
    return EPolynomial.from_terms({(0, 0): 1, (1, 0): -g, (0, 1): -g, (1, 1): 1})


def e_projective_bundle(base: EPolynomial, fiber_rank: int) -> EPolynomial:
    """Projectivization of a rank ``fiber_rank`` vector bundle over ``base``."""
    if fiber_rank < 1:
        raise ValueError("fiber rank must be positive")
    return base * e_projective(fiber_rank - 1)


def e_blowup(ambient: EPolynomial, center: EPolynomial, codim: int) -> EPolynomial:
    """Blow up ``ambient`` along a smooth center of codimension ``codim >= 2``."""
    if codim < 2:
        raise ValueError(f"blowup center must have codimension >= 2, got {codim}")
    return ambient + _uv_power_sum(1, codim - 1) * center


def euler_char(e: EPolynomial) -> int:
    return e.evaluate(1, 1)


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers ``h[p][q]`` of a compact variety of dimension ``dim``."""

    dim: int
    h: tuple[tuple[int, ...], ...]
    connected: bool = field(default=True, compare=False)

    def __post_init__(self):
        n = self.dim
        rows = tuple(tuple(int(x) for x in row) for row in self.h)
        object.__setattr__(self, "h", rows)
        if n < 0 or len(rows) != n + 1 or any(len(r) != n + 1 for r in rows):
            raise ValueError(f"diamond table must be {n + 1}x{n + 1}")
        for p in range(n + 1):
            for q in range(n + 1):
                if rows[p][q] < 0:
                    raise NonPureError(f"h^{{{p},{q}}} = {rows[p][q]} < 0")
                if rows[p][q] != rows[q][p]:
                    raise AsymmetricError(f"h^{{{p},{q}}} != h^{{{q},{p}}}")
        if self.connected and rows[0][0] != 1:
            raise ValueError("connected variety must have h^{0,0} = 1")

    @classmethod
    def from_matrix(cls, rows, connected: bool = True) -> "HodgeDiamond":
        return cls(len(rows) - 1, tuple(tuple(r) for r in rows), connected)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if 0 <= p <= self.dim and 0 <= q <= self.dim:
            return self.h[p][q]
        return 0

    def satisfies_serre(self) -> bool:
        n = self.dim
        return all(self.h[p][q] == self.h[n - p][n - q] for p in range(n + 1) for q in range(n + 1))

    def betti(self, k: int) -> int:
        return sum(self[p, k - p] for p in range(k + 1))

    def euler(self) -> int:
        return sum((-1) ** (p + q) * self.h[p][q] for p in range(self.dim + 1) for q in range(self.dim + 1))

    def to_e(self) -> EPolynomial:
        return e_from_diamond(self)

    def to_json(self) -> dict:
        return {"dim": self.dim, "rows": [list(r) for r in self.h]}

    @classmethod
    def from_json(cls, data: Mapping) -> "HodgeDiamond":
        return cls(int(data["dim"]), tuple(tuple(r) for r in data["rows"]))

    def pretty(self) -> str:
        """Diamond layout with ``h^{n,n}`` on top, ``h^{0,0}`` at the bottom."""
        n = self.dim
        cells = []
        for k in range(2 * n, -1, -1):
            row = [self[p, k - p] for p in range(n, -1, -1) if 0 <= k - p <= n]
            cells.append(row)
        width = max(len(str(x)) for row in cells for x in row) + 2
        lines = []
        for row in cells:
            pad = (n + 1 - len(row)) * width // 2
            lines.append(" " * pad + "".join(str(x).center(width) for x in row))
        return "\n".join(line.rstrip() for line in lines)


def e_from_diamond(d: HodgeDiamond) -> EPolynomial:
    return EPolynomial.from_terms(
        {(p, q): (-1) ** (p + q) * d.h[p][q] for p in range(d.dim + 1) for q in range(d.dim + 1)}
    )


def diamond_from_e(e: EPolynomial, dim: int) -> HodgeDiamond:
    """Read off the Hodge diamond of a smooth compact ``dim``-fold from ``e``.

    Raises :class:`NonPureError` if a coefficient lies outside the
    ``(dim+1) x (dim+1)`` box or has the wrong sign, and
    :class:`AsymmetricError` if conjugation symmetry fails.
    """
    rows = [[0] * (dim + 1) for _ in range(dim + 1)]
    for (p, q), c in e.items:
        if p > dim or q > dim:
            raise NonPureError(f"term u^{p} v^{q} exceeds dimension {dim}")
        h = (-1) ** (p + q) * c
        if h < 0:
            raise NonPureError(f"h^{{{p},{q}}} would be {h}")
        rows[p][q] = h
    for p in range(dim + 1):
        for q in range(p):
            if rows[p][q] != rows[q][p]:
                raise AsymmetricError(f"h^{{{p},{q}}}={rows[p][q]} but h^{{{q},{p}}}={rows[q][p]}")
    return HodgeDiamond(dim, tuple(tuple(r) for r in rows), connected=rows[0][0] == 1)


E_K3 = EPolynomial.from_terms({(0, 0): 1, (2, 0): 1, (0, 2): 1, (1, 1): 20, (2, 2): 1})

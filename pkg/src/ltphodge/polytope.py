"""Exact rational polytopes given by half-spaces ``<a, y> >= b``.

Everything here is integer/Fraction arithmetic.  Volume is only implemented
in dimension 3, which is all the toric bases need; vertex enumeration and
lattice-point counting work in any dimension.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

Vec = tuple[int, ...]
QVec = tuple[Fraction, ...]


class UnboundedError(ValueError):
    """The half-space system does not cut out a bounded region."""


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def det3(a, b, c):
    return _dot(a, _cross(b, c))


def solve_exact(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> QVec | None:
    """Solve a square system by Gaussian elimination over Q; ``None`` if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def rank(vectors: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


@dataclass(frozen=True)
class LatticePolytope:
    """Polytope ``{y : <normal_i, y> >= bound_i for all i}``.

    ``vertices`` is computed on construction (exact rationals) and the region
    is checked to be bounded.
    """

    normals: tuple[Vec, ...]
    bounds: tuple[int, ...]
    vertices: tuple[QVec, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if len(self.normals) != len(self.bounds) or not self.normals:
            raise ValueError("need one bound per normal")
        dims = {len(a) for a in self.normals}
        if len(dims) != 1:
            raise ValueError("normals of mixed dimension")
        self._check_bounded()
        object.__setattr__(self, "vertices", self._enumerate_vertices())

    @property
    def dim(self) -> int:
        return len(self.normals[0])

    def contains(self, y) -> bool:
        return all(_dot(a, y) >= b for a, b in zip(self.normals, self.bounds))

    def _check_bounded(self):
        # Bounded iff the recession cone {d : <a_i, d> >= 0} is {0}.
        d = self.dim
        if rank(self.normals) < d:
            raise UnboundedError("normals do not span; polytope has a lineality direction")
        # Extreme rays of the (pointed) recession cone lie on d-1 independent
        # facet hyperplanes; test each candidate direction.
        for idx in itertools.combinations(range(len(self.normals)), d - 1):
            rows = [self.normals[i] for i in idx]
            if rank(rows) < d - 1:
                continue
            for direction in _kernel_directions(rows, d):
                if all(_dot(a, direction) >= 0 for a in self.normals):
                    raise UnboundedError(f"recession direction {direction}")

    def _enumerate_vertices(self) -> tuple[QVec, ...]:
        d = self.dim
        found = set()
        for idx in itertools.combinations(range(len(self.normals)), d):
            sol = solve_exact([self.normals[i] for i in idx], [self.bounds[i] for i in idx])
            if sol is not None and self.contains(sol):
                found.add(sol)
        if not found:
            raise ValueError("empty polytope")
        return tuple(sorted(found))

    def tight(self, i: int) -> list[QVec]:
        a, b = self.normals[i], self.bounds[i]
        return [v for v in self.vertices if _dot(a, v) == b]

    def dilate(self, k: int) -> "LatticePolytope":
        if k < 0:
            raise ValueError("negative dilation")
        return LatticePolytope(self.normals, tuple(k * b for b in self.bounds))

    def is_full_dimensional(self) -> bool:
        v0 = self.vertices[0]
        return rank([_sub(v, v0) for v in self.vertices[1:]] or [[0] * self.dim]) == self.dim


def _kernel_directions(rows, d):
    """Both generators +-k of the 1-dim kernel of ``d-1`` independent rows."""
    if d == 1:
        return [(1,), (-1,)]
    # Generalized cross product via cofactors.
    k = []
    for j in range(d):
        minor = [[r[c] for c in range(d) if c != j] for r in rows]
        k.append((-1) ** j * _int_det(minor))
    return [tuple(k), tuple(-x for x in k)]


def _int_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _int_det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(n))


def normalized_volume(p: LatticePolytope) -> Fraction:
    """``3! * vol(p)`` for a bounded full-dimensional 3-polytope.

    Each facet polygon is ordered cyclically and coned off from the vertex
    centroid; the simplex determinants are summed exactly.
    """
    if p.dim != 3:
        raise NotImplementedError("volume is implemented for dimension 3 only")
    if not p.is_full_dimensional():
        raise ValueError("polytope is not full-dimensional")
    nv = len(p.vertices)
    c = tuple(sum(v[i] for v in p.vertices) / nv for i in range(3))
    total = Fraction(0)
    seen = set()
    for i, a in enumerate(p.normals):
        face = p.tight(i)
        if len(face) < 3:
            continue
        key = frozenset(face)
        if key in seen:
            continue
        seen.add(key)
        ring = _cyclic_order(face, a)
        f0 = ring[0]
        for f1, f2 in zip(ring[1:], ring[2:]):
            total += abs(det3(_sub(f0, c), _sub(f1, c), _sub(f2, c)))
    return total


def _cyclic_order(points, normal):
    n = len(points)
    ctr = tuple(sum(pt[i] for pt in points) / n for i in range(3))
    ref = _sub(points[0], ctr)

    def half(d):
        s = _dot(normal, _cross(ref, d))
        return 0 if s > 0 or (s == 0 and _dot(ref, d) > 0) else 1

    def cmp(x, y):
        dx, dy = _sub(x, ctr), _sub(y, ctr)
        hx, hy = half(dx), half(dy)
        if hx != hy:
            return hx - hy
        s = _dot(normal, _cross(dx, dy))
        return -1 if s > 0 else (1 if s < 0 else 0)

    return sorted(points, key=cmp_to_key(cmp))


def lattice_points(p: LatticePolytope) -> int:
    """Number of integer points of the closed polytope ``p``."""
    lo = [math.floor(min(v[i] for v in p.vertices)) for i in range(p.dim)]
    hi = [math.ceil(max(v[i] for v in p.vertices)) for i in range(p.dim)]
    count = 0
    ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
    # Peel the last coordinate: for fixed prefix, the feasible last coordinates
    # form an interval computable from the constraints.
    for prefix in itertools.product(*ranges[:-1]):
        lower, upper = lo[-1], hi[-1]
        ok = True
        for a, b in zip(p.normals, p.bounds):
            rest = b - _dot(a[:-1], prefix)
            an = a[-1]
            # an * y >= rest
            if an > 0:
                lower = max(lower, -((-rest) // an))
            elif an < 0:
                upper = min(upper, rest // an)
            elif rest > 0:
                ok = False
                break
        if ok and upper >= lower:
            count += upper - lower + 1
    return count


def dual_polytope(rays: Sequence[Vec], scale: int = 1) -> LatticePolytope:
    """``{y : <y, v> >= -scale for every ray v}``; lattice points count h^0 of ``-scale*K``."""
    return LatticePolytope(tuple(tuple(v) for v in rays), tuple(-scale for _ in rays))

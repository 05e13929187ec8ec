"""Toric geometry of the surfaces attached to an invariant ideal.

Two point configurations matter.  The generator exponents (projected to the
last two coordinates) control the image of the monomial map given by the
ideal: its degree is the normalized hull area divided by the index of the
difference lattice.  The complementary degree-d monomials parametrize the
variety cut out by the inverse system; smoothness is decided there, by
checking that every hull edge is fully populated and that the primitive edge
directions at each vertex form a basis of the difference lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .actions import GTIdeal, monomial_str
from .errors import ConsistencyError
from .polymat import SparsePoly

__all__ = [
    "BettiTable",
    "GeneratorPresentation",
    "LatticeModel",
    "SmoothnessReport",
    "betti_table",
    "classical_parametrization",
    "complement_exponents",
    "determinantal_generators",
    "exponent_polytope_degree",
    "polytope_smoothness",
]


def _convex_hull(points):
    """Monotone chain; returns hull vertices in counterclockwise order."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _normalized_area(hull):
    s = 0
    for i, (x0, y0) in enumerate(hull):
        x1, y1 = hull[(i + 1) % len(hull)]
        s += x0 * y1 - x1 * y0
    return abs(s)


def _hermite_basis(vectors):
    """Upper-triangular basis [(a, b), (0, c)] of the lattice the vectors span."""
    rows = [list(v) for v in vectors if v != (0, 0)]
    lead = None
    for row in rows:
        if row[0] == 0:
            continue
        if lead is None:
            lead = row
            continue
        while row[0]:
            if abs(row[0]) < abs(lead[0]):
                lead, row = row, lead
            q = row[0] // lead[0]
            row[0] -= q * lead[0]
            row[1] -= q * lead[1]
    c = 0
    for row in rows:
        if row is not lead and row[1]:
            c = math.gcd(c, abs(row[1]))
    if lead is None:
        return None if c == 0 else ((0, c), None)
    if c:
        lead[1] %= c
    return ((abs(lead[0]), lead[1] if lead[0] > 0 else -lead[1]), (0, c) if c else None)


class _Lattice:
    """Rank-2 sublattice of Z^2 described by a Hermite basis."""

    def __init__(self, vectors):
        basis = _hermite_basis(vectors)
        if basis is None or basis[1] is None:
            raise ValueError("point configuration does not span a rank-2 lattice")
        (self.a, self.b), (_, self.c) = basis

    @property
    def index(self):
        return self.a * self.c

    def contains(self, v):
        x, y = v
        if x % self.a:
            return False
        k = x // self.a
        return (y - k * self.b) % self.c == 0

    def primitive(self, v):
        """Largest Lambda-divisor u of v with v = n*u; returns (u, n)."""
        g = math.gcd(abs(v[0]), abs(v[1]))
        if g == 0:
            raise ValueError("zero vector has no primitive direction")
        for n in sorted((k for k in range(1, g + 1) if g % k == 0), reverse=True):
            u = (v[0] // n, v[1] // n)
            if self.contains(u):
                return u, n
        raise AssertionError("vector not in its own lattice")


@dataclass(frozen=True)
class LatticeModel:
    points: tuple
    hull: tuple
    normalized_area: int
    lattice_index: int
    degree: int

    def to_json(self):
        return {
            "points": [list(p) for p in self.points],
            "hull": [list(p) for p in self.hull],
            "normalized_area": self.normalized_area,
            "lattice_index": self.lattice_index,
            "degree": self.degree,
        }


def _projected(generators):
    return [(g[1], g[2]) for g in generators]


def exponent_polytope_degree(ideal: GTIdeal) -> LatticeModel:
    """Degree of the image surface from the generator exponent polytope."""
    pts = _projected(ideal.generators)
    hull = _convex_hull(pts)
    if len(hull) < 3:
        raise ValueError("exponent polytope is degenerate")
    area = _normalized_area(hull)
    base = pts[0]
    lattice = _Lattice([(p[0] - base[0], p[1] - base[1]) for p in pts])
    index = lattice.index
    degree, rem = divmod(area, index)
    if rem:
        raise ConsistencyError("lattice index does not divide the normalized area")
    return LatticeModel(tuple(sorted(pts)), tuple(hull), area, index, degree)


def complement_exponents(ideal: GTIdeal):
    """Exponent pairs of the degree-d monomials outside the ideal."""
    d = ideal.d
    gens = set(ideal.generators)
    return [
        (be, ga)
        for be in range(d + 1)
        for ga in range(d + 1 - be)
        if (d - be - ga, be, ga) not in gens
    ]


@dataclass(frozen=True)
class SmoothnessReport:
    smooth: bool
    lattice_index: int
    vertices: tuple  # (vertex, det, ok) per hull corner
    edge_gaps: tuple  # lattice points missing from hull edges
    interior_condition: bool  # every non-pure-power generator uses all three variables

    def to_json(self):
        return {
            "smooth": self.smooth,
            "lattice_index": self.lattice_index,
            "vertices": [
                {"vertex": list(v), "det": det, "ok": ok}
                for v, det, ok in self.vertices
            ],
            "edge_gaps": [list(p) for p in self.edge_gaps],
            "interior_condition": self.interior_condition,
        }


def polytope_smoothness(ideal: GTIdeal) -> SmoothnessReport:
    """Smoothness of the variety given by the complementary monomials.

    The configuration must contain every lattice point of every hull edge
    (a boundary gap forces a non-normal, hence singular, edge chart) and the
    primitive edge directions at each corner must span the whole difference
    lattice (determinant equal to plus or minus the index).
    """
    pts = complement_exponents(ideal)
    pset = set(pts)
    hull = _convex_hull(pts)
    if len(hull) < 3:
        raise ValueError("complement configuration is degenerate")
    base = pts[0]
    lattice = _Lattice([(p[0] - base[0], p[1] - base[1]) for p in pts])
    index = lattice.index

    gaps = []
    n = len(hull)
    for i in range(n):
        v, w = hull[i], hull[(i + 1) % n]
        step, count = lattice.primitive((w[0] - v[0], w[1] - v[1]))
        for t in range(1, count):
            q = (v[0] + t * step[0], v[1] + t * step[1])
            if q not in pset:
                gaps.append(q)

    vertices = []
    for i in range(n):
        v = hull[i]
        nxt, prv = hull[(i + 1) % n], hull[(i - 1) % n]
        u1, _ = lattice.primitive((nxt[0] - v[0], nxt[1] - v[1]))
        u2, _ = lattice.primitive((prv[0] - v[0], prv[1] - v[1]))
        det = u1[0] * u2[1] - u1[1] * u2[0]
        vertices.append((v, det, abs(det) == index))

    interior = all(
        g.count(0) == 0
        for g in ideal.generators
        if sorted(g) != [0, 0, ideal.d]
    )
    smooth = not gaps and all(ok for _, _, ok in vertices)
    return SmoothnessReport(smooth, index, tuple(vertices), tuple(gaps), interior)


def classical_parametrization(d):
    """Ordered monomials x^d, y^d, z^d, x^k y^k z^eps, ..., xyz^(d-2)."""
    if d < 3:
        raise ValueError("need d >= 3")
    k = d // 2
    out = [(d, 0, 0), (0, d, 0), (0, 0, d)]
    out.extend((i, i, d - 2 * i) for i in range(k, 0, -1))
    return out


@dataclass(frozen=True)
class GeneratorPresentation:
    d: int
    k: int
    matrix: tuple  # 2 x ncols entries as SparsePoly
    minors: tuple
    extra_quadric: SparsePoly | None
    quadric_count: int
    cubic_count: int
    pullbacks_vanish: bool

    @property
    def generators(self):
        gens = list(self.minors)
        if self.extra_quadric is not None:
            gens.append(self.extra_quadric)
        return gens

    def generator_strings(self):
        names = tuple(f"x{i}" for i in range(self.k + 3))
        return [g.render(names) for g in self.generators]

    def to_json(self):
        return {
            "d": self.d,
            "k": self.k,
            "generators": self.generator_strings(),
            "quadrics": self.quadric_count,
            "cubics": self.cubic_count,
            "pullbacks_vanish": self.pullbacks_vanish,
        }


def _pullback(poly: SparsePoly, params):
    out = SparsePoly.zero(3)
    for exp, c in poly.terms.items():
        tri = [0, 0, 0]
        for i, e in enumerate(exp):
            if e:
                tri[0] += e * params[i][0]
                tri[1] += e * params[i][1]
                tri[2] += e * params[i][2]
        out = out + SparsePoly.monomial(3, tuple(tri), c)
    return out


def determinantal_generators(d) -> GeneratorPresentation:
    """Presentation of the image surface of the degree-d classical system.

    For odd d the ideal is the 2x2 minors of a 2 x (k+1) matrix; for even d
    it is the minors of a 2 x k matrix together with one extra quadric.
    All generators must pull back to zero under the parametrization, which is
    verified here.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    k = d // 2
    nv = k + 3
    var = lambda i: SparsePoly.variable(nv, i)
    if d % 2:
        row1 = [var(3 + j) for j in range(k - 1)] + [var(k + 2), var(0) * var(1)]
        row2 = [var(4 + j) for j in range(k - 1)] + [var(2), var(3) * var(3)]
        extra = None
    else:
        row1 = [var(3 + j) for j in range(k - 1)] + [var(k + 2)]
        row2 = [var(4 + j) for j in range(k - 1)] + [var(2)]
        extra = var(0) * var(1) - var(3) * var(3)
    ncols = len(row1)
    minors = []
    for i in range(ncols):
        for j in range(i + 1, ncols):
            minors.append(row1[i] * row2[j] - row2[i] * row1[j])

    params = classical_parametrization(d)
    ok = all(_pullback(g, params).is_zero() for g in minors)
    if extra is not None:
        ok = ok and _pullback(extra, params).is_zero()
    if not ok:
        raise ConsistencyError(f"pullback of a presentation generator is nonzero at d={d}")

    gens = minors + ([extra] if extra is not None else [])
    quadrics = sum(1 for g in gens if g.total_degree() == 2)
    cubics = sum(1 for g in gens if g.total_degree() == 3)
    expected = (math.comb(k, 2), k) if d % 2 else (math.comb(k, 2) + 1, 0)
    if quadrics + cubics != len(gens) or (quadrics, cubics) != expected:
        raise ConsistencyError(f"unexpected generator degrees at d={d}")
    return GeneratorPresentation(
        d, k, (tuple(row1), tuple(row2)), tuple(minors), extra,
        quadrics, cubics, True,
    )


@dataclass(frozen=True)
class BettiTable:
    """Graded ranks beta_(i,j) of the free resolution of the surface ideal."""

    d: int
    k: int
    rows: tuple  # (homological step i, twist j, rank)

    @property
    def length(self):
        return max(i for i, _, _ in self.rows)

    def alternating_sum(self):
        return sum((-1) ** i * r for i, _, r in self.rows)

    def numerator(self):
        top = max(j for _, j, _ in self.rows)
        coeffs = [0] * (top + 1)
        for i, j, r in self.rows:
            coeffs[j] += (-1) ** i * r
        return coeffs

    def h_polynomial(self):
        """Divide the numerator by (1-t)^k exactly; ascending coefficients."""
        coeffs = list(self.numerator())
        for _ in range(self.k):
            out = []
            acc = 0
            for c in coeffs:
                acc += c
                out.append(acc)
            if out[-1] != 0:
                raise ConsistencyError(f"numerator not divisible by (1-t)^{self.k}")
            coeffs = out[:-1]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    def to_json(self):
        return {
            "d": self.d,
            "k": self.k,
            "rows": [{"i": i, "twist": j, "rank": r} for i, j, r in self.rows],
            "alternating_sum": self.alternating_sum(),
            "h_polynomial": self.h_polynomial(),
        }


def betti_table(d) -> BettiTable:
    """Resolution ranks for the image surface of the degree-d classical system.

    Odd d: the Eagon-Northcott complex of the 2 x (k+1) matrix, whose step i
    contributes i*C(k,i+1) in twist -(i+1) and i*C(k,i) in twist -(i+2).
    Even d: a mapping cone over the Eagon-Northcott complex of the 2 x k
    matrix, shifted copies accounting for the extra quadric; step 1 has rank
    1+C(k,2) in twist -2, step i >= 2 contributes i*C(k,i+1) in twist -(i+1)
    and (i-1)*C(k,i) in twist -(i+2).
    """
    if d < 3:
        raise ValueError("need d >= 3")
    k = d // 2
    rows = [(0, 0, 1)]
    if d % 2:
        for i in range(1, k + 1):
            r1 = i * math.comb(k, i + 1)
            if r1:
                rows.append((i, i + 1, r1))
            r2 = i * math.comb(k, i)
            if r2:
                rows.append((i, i + 2, r2))
    else:
        rows.append((1, 2, 1 + math.comb(k, 2)))
        for i in range(2, k + 1):
            r1 = i * math.comb(k, i + 1)
            if r1:
                rows.append((i, i + 1, r1))
            r2 = (i - 1) * math.comb(k, i)
            if r2:
                rows.append((i, i + 2, r2))
    table = BettiTable(d, k, tuple(rows))
    if table.alternating_sum() != 0:
        raise ConsistencyError(f"alternating rank sum nonzero at d={d}")
    h = table.h_polynomial()
    if sum(h) != d:
        raise ConsistencyError(f"h-polynomial does not evaluate to d at d={d}")
    return table

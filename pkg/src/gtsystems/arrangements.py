"""Line arrangements in the projective plane over Q(zeta_d).

Lines and points are coordinate triples with entries in Z[zeta_d] and all
incidence questions are decided exactly.  Deduplication up to projective
scaling uses a canonical key: a triple is multiplied by the product of the
Galois conjugates of its pivot coordinate, which makes the pivot a rational
integer, and the resulting integer coefficient vectors are divided by their
content and sign-normalized.  Two triples get the same key exactly when they
are proportional over the field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .actions import Action, invariant_monomials
from .circulant import scaled_ternary_product
from .cyclotomic import CyclotomicInt
from .errors import ConsistencyError
from .polymat import SparsePoly

__all__ = [
    "Arrangement",
    "CensusReport",
    "CevaCertificate",
    "FreenessReport",
    "MembershipCertificate",
    "build_arrangement",
    "certificate_product_membership",
    "ceva_configuration",
    "cross",
    "freeness_diagnostic",
    "projective_key",
    "proportional",
    "random_scales",
    "singular_census",
]


def _coerce(d, value):
    if isinstance(value, CyclotomicInt):
        assert value.order == d
        return value
    return CyclotomicInt.from_int(d, value)


def _triple(d, coords):
    t = tuple(_coerce(d, v) for v in coords)
    assert len(t) == 3
    if all(v.is_zero() for v in t):
        raise ValueError("zero triple is not a projective point")
    return t


def cross(u, v):
    """Coordinates of the intersection point of two lines (or the line
    through two points)."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def proportional(u, v):
    """Projective equality through vanishing of all 2x2 minors."""
    return all(c.is_zero() for c in cross(u, v))


def projective_key(d, triple):
    """Canonical hashable form of a triple up to scaling by Q(zeta_d)."""
    t = _triple(d, triple)
    pivot = next(v for v in t if not v.is_zero())
    adj = CyclotomicInt.one(d)
    for k in range(2, d):
        if math.gcd(k, d) == 1:
            adj = adj * pivot.substitute_power(k)
    vecs = []
    for v in t:
        red = list((v * adj).reduced())
        red += [0] * (d - len(red))
        vecs.append(red)
    content = 0
    for vec in vecs:
        for c in vec:
            content = math.gcd(content, abs(c))
    assert content > 0
    idx = next(i for i, v in enumerate(t) if not v.is_zero())
    pivot_vec = vecs[idx]
    # pivot * adj is the field norm of the pivot, a nonzero rational integer
    assert pivot_vec[0] != 0 and not any(pivot_vec[1:])
    sign = 1 if pivot_vec[0] > 0 else -1
    return tuple(tuple(sign * c // content for c in vec) for vec in vecs)


def _zeta(d, k):
    return CyclotomicInt.zeta(d, k % d)


def _int(d, n):
    return CyclotomicInt.from_int(d, n)


@dataclass(frozen=True)
class Arrangement:
    d: int
    name: str
    lines: tuple

    @property
    def n_lines(self):
        return len(self.lines)

    def to_json(self):
        return {
            "d": self.d,
            "name": self.name,
            "n_lines": self.n_lines,
            "lines": [[str(c) for c in line] for line in self.lines],
        }


def _ceva_lines(d):
    return [
        (_int(d, 1), _zeta(d, i), _zeta(d, j))
        for i in range(d)
        for j in range(d)
    ]


def _ceva_points(d):
    pts = [(_int(d, 1), _int(d, 0), -_zeta(d, t)) for t in range(d)]
    pts += [(_int(d, 0), _int(d, 1), -_zeta(d, t)) for t in range(d)]
    pts += [(_int(d, 1), -_zeta(d, t), _int(d, 0)) for t in range(d)]
    return pts


def _coordinate_lines(d):
    one, zero = _int(d, 1), _int(d, 0)
    return [(one, zero, zero), (zero, one, zero), (zero, zero, one)]


def build_arrangement(kind, d) -> Arrangement:
    """kind 'ceva' (d^2 lines), 'hd' (ceva plus the coordinate triangle) or
    'fermat' (the 3d lines splitting x^d-y^d, x^d-z^d, y^d-z^d)."""
    if d < 3:
        raise ValueError("need d >= 3")
    if kind == "ceva":
        lines = _ceva_lines(d)
    elif kind == "hd":
        lines = _coordinate_lines(d) + _ceva_lines(d)
    elif kind == "fermat":
        one, zero = _int(d, 1), _int(d, 0)
        lines = [(one, -_zeta(d, j), zero) for j in range(d)]
        lines += [(one, zero, -_zeta(d, j)) for j in range(d)]
        lines += [(zero, one, -_zeta(d, j)) for j in range(d)]
    else:
        raise ValueError(f"unknown arrangement kind {kind!r}")
    arr = Arrangement(d, kind, tuple(lines))
    if len({projective_key(d, ln) for ln in arr.lines}) != arr.n_lines:
        raise ConsistencyError("arrangement contains a repeated line")
    return arr


@dataclass(frozen=True)
class CevaCertificate:
    d: int
    n_lines: int
    n_points: int
    lines_per_point: int
    points_per_line: int

    def to_json(self):
        return {
            "d": self.d,
            "n_lines": self.n_lines,
            "n_points": self.n_points,
            "lines_per_point": self.lines_per_point,
            "points_per_line": self.points_per_line,
        }


def ceva_configuration(d) -> CevaCertificate:
    """Incidence certificate for the d^2 lines x + zeta^i y + zeta^j z: the
    3d distinguished points each lie on exactly d lines and every line passes
    through exactly 3 of them."""
    lines = _ceva_lines(d)
    points = _ceva_points(d)
    per_line = [0] * len(lines)
    for p in points:
        hits = [i for i, ln in enumerate(lines) if _dot(ln, p).is_zero()]
        if len(hits) != d:
            raise ConsistencyError(
                f"distinguished point lies on {len(hits)} lines, expected {d}"
            )
        for i in hits:
            per_line[i] += 1
    if any(c != 3 for c in per_line):
        raise ConsistencyError("a line misses the expected 3 distinguished points")
    return CevaCertificate(d, len(lines), len(points), d, 3)


@dataclass(frozen=True)
class CensusReport:
    name: str
    d: int
    n_lines: int
    counts: tuple  # sorted (multiplicity, number of points)

    @property
    def n_points(self):
        return sum(b for _, b in self.counts)

    def pair_identity(self):
        return sum(math.comb(h, 2) * b for h, b in self.counts)

    def to_json(self):
        return {
            "name": self.name,
            "d": self.d,
            "n_lines": self.n_lines,
            "n_points": self.n_points,
            "census": [{"mult": h, "count": b} for h, b in self.counts],
        }


def singular_census(arr: Arrangement) -> CensusReport:
    """Multiplicity census of the intersection points of an arrangement.

    Candidate points come from pairwise intersections, are deduplicated by
    canonical key, and the multiplicity of each is recounted directly as the
    number of incident lines.  The census must satisfy the pairing identity
    sum_h C(h,2) b_h = C(n,2), else a ConsistencyError is raised.
    """
    d, lines = arr.d, arr.lines
    seen = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = cross(lines[i], lines[j])
            key = projective_key(d, p)
            seen.setdefault(key, p)
    counts = {}
    for p in seen.values():
        mult = sum(1 for ln in lines if _dot(ln, p).is_zero())
        assert mult >= 2
        counts[mult] = counts.get(mult, 0) + 1
    report = CensusReport(arr.name, d, arr.n_lines, tuple(sorted(counts.items())))
    if report.pair_identity() != math.comb(arr.n_lines, 2):
        raise ConsistencyError("census violates the pairwise intersection identity")
    return report


@dataclass(frozen=True)
class FreenessReport:
    name: str
    n_lines: int
    c1: int
    c2: int
    weight: int
    discriminant: int
    exponents: tuple | None

    @property
    def status(self):
        if self.exponents is None:
            return "necessary condition fails"
        return "splits with integer exponents"

    def to_json(self):
        return {
            "name": self.name,
            "n_lines": self.n_lines,
            "c1": self.c1,
            "c2": self.c2,
            "discriminant": self.discriminant,
            "exponents": list(self.exponents) if self.exponents else None,
            "status": self.status,
        }


def freeness_diagnostic(census: CensusReport) -> FreenessReport:
    """Numerical freeness test from the census.

    With c1 = n-1 and c2 = C(n-1,2) - sum_h C(h-1,2) b_h, a free arrangement
    has exponents (a, b) with a + b = c1 and a*b = c2, so the quadratic must
    split over the nonnegative integers; otherwise the necessary condition
    fails and the arrangement cannot be free.
    """
    n = census.n_lines
    c1 = n - 1
    weight = sum(math.comb(h - 1, 2) * b for h, b in census.counts)
    c2 = math.comb(c1, 2) - weight
    disc = c1 * c1 - 4 * c2
    exponents = None
    if disc >= 0:
        s = math.isqrt(disc)
        if s * s == disc and (c1 - s) % 2 == 0 and c1 - s >= 0:
            exponents = ((c1 - s) // 2, (c1 + s) // 2)
            assert exponents[0] + exponents[1] == c1
            assert exponents[0] * exponents[1] == c2
    return FreenessReport(census.name, n, c1, c2, weight, disc, exponents)


@dataclass(frozen=True)
class MembershipCertificate:
    action: Action
    scales: tuple
    product: SparsePoly
    support_size: int

    def to_json(self):
        return {
            "action": self.action.to_json(),
            "scales": list(self.scales),
            "support_size": self.support_size,
            "product": self.product.to_json(),
        }


def certificate_product_membership(action: Action, scales) -> MembershipCertificate:
    """Expand prod_j (s0 x + s1 zeta^(aj) y + s2 zeta^(bj) z) for the
    normalized weights (0, a, b) and certify that it is an integer form
    supported on the invariant monomials, i.e. a member of the ideal's
    degree-d piece whenever the scales are nonzero."""
    scales = tuple(int(s) for s in scales)
    if len(scales) != 3 or any(s == 0 for s in scales):
        raise ValueError("need three nonzero integer scales")
    act = action.normalized()
    d = act.d
    _, a, b = act.weights
    product = scaled_ternary_product(d, a, b, scales)
    allowed = set(invariant_monomials(act).generators)
    if not set(product.terms) <= allowed:
        raise ConsistencyError("product escapes the invariant monomial span")
    return MembershipCertificate(act, scales, product, len(product.terms))


def random_scales(rng, low=1, high=9):
    """Three nonzero integer scales with random signs."""
    return tuple(rng.randint(low, high) * rng.choice((-1, 1)) for _ in range(3))

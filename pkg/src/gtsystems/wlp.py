"""Weak Lefschetz failure tests for invariant monomial ideals.

The decisive map is multiplication by L = x + y + z from degree d-1 to degree
d of the quotient ring.  Its matrix is a 0/1 integer matrix; ranks are exact.
For large d, injectivity failure is certified without any rank computation:
the product of the nontrivial eigenvalue forms is an explicit nonzero kernel
element whenever its product with L lands inside the ideal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .actions import Action, GTIdeal, invariant_monomials
from .circulant import cofactor_product, ternary_product
from .errors import ConsistencyError
from .polymat import SparsePoly, bareiss_rank, rank_mod_p

__all__ = [
    "WlpVerdict",
    "KernelCertificate",
    "conjecture_scan",
    "gt_verdict",
    "is_artinian",
    "kernel_certificate",
    "kernel_dimension",
    "minimality_circulant",
    "minimality_subset_oracle",
    "multiplication_matrix",
    "multiplication_rank",
]

EXACT_RANK_LIMIT = 16


def is_artinian(ideal: GTIdeal) -> bool:
    """An ideal generated in degree d is artinian iff it contains x^d, y^d, z^d."""
    return ideal.has_pure_powers()


def _monomials_of_degree(j):
    return [
        (j - be - ga, be, ga)
        for be in range(j + 1)
        for ga in range(j + 1 - be)
    ]


def _divides(g, m):
    return g[0] <= m[0] and g[1] <= m[1] and g[2] <= m[2]


def quotient_basis(ideal: GTIdeal, j):
    """Degree-j monomials outside the ideal, in descending lexicographic order."""
    gens = ideal.generators
    out = []
    for m in sorted(_monomials_of_degree(j), reverse=True):
        if not any(_divides(g, m) for g in gens):
            out.append(m)
    return out


def multiplication_matrix(ideal: GTIdeal, j, coeffs=(1, 1, 1)):
    """Matrix of multiplication by coeffs[0]*x + coeffs[1]*y + coeffs[2]*z
    from the degree-j to the degree-(j+1) part of the quotient.

    Returns (rows, source basis, target basis); rows are indexed by target."""
    src = quotient_basis(ideal, j)
    tgt = quotient_basis(ideal, j + 1)
    index = {m: i for i, m in enumerate(tgt)}
    rows = [[0] * len(src) for _ in tgt]
    steps = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for col, m in enumerate(src):
        for c, step in zip(coeffs, steps):
            image = (m[0] + step[0], m[1] + step[1], m[2] + step[2])
            i = index.get(image)
            if i is not None:
                rows[i][col] += c
    return rows, src, tgt


def multiplication_rank(ideal: GTIdeal, j):
    """Exact rank of the multiplication map, plus (dim source, dim target)."""
    rows, src, tgt = multiplication_matrix(ideal, j)
    return bareiss_rank(rows), (len(src), len(tgt))


def kernel_dimension(ideal: GTIdeal, j):
    rank, (dim_src, _) = multiplication_rank(ideal, j)
    return dim_src - rank


def _injective_at(ideal: GTIdeal, j) -> bool:
    """Exact injectivity test with a certified modular fast path.

    Full rank modulo p forces full rank over Q; only the (rare) deficient
    case falls back to fraction-free elimination.
    """
    rows, src, _ = multiplication_matrix(ideal, j)
    n = len(src)
    if not rows:
        return n == 0
    if rank_mod_p(rows) == n:
        return True
    return bareiss_rank(rows) == n


@dataclass(frozen=True)
class WlpVerdict:
    action: Action | None
    d: int
    mu: int
    dim_source: int
    dim_target: int
    rank: int | None
    fails_injectivity: bool
    fails_wlp_at_d_minus_1: bool | None
    generator_bound_ok: bool
    is_togliatti: bool
    is_gt: bool
    method: str

    def to_json(self):
        return {
            "action": self.action.to_json() if self.action else None,
            "d": self.d,
            "mu": self.mu,
            "dim_source": self.dim_source,
            "dim_target": self.dim_target,
            "rank": self.rank,
            "fails_injectivity": self.fails_injectivity,
            "fails_wlp_at_d_minus_1": self.fails_wlp_at_d_minus_1,
            "generator_bound_ok": self.generator_bound_ok,
            "is_togliatti": self.is_togliatti,
            "is_gt": self.is_gt,
            "method": self.method,
        }


@dataclass(frozen=True)
class KernelCertificate:
    """Explicit kernel element for multiplication by x+y+z at degree d-1.

    cofactor is the product of the eigenvalue forms for j = 1..d-1 (cyclotomic
    coefficients, monic of degree d-1 in x); product is (x+y+z) * cofactor,
    which has integer coefficients and is supported on the invariant set.
    """

    action: Action
    cofactor: SparsePoly
    product: SparsePoly

    def support_in(self, ideal: GTIdeal) -> bool:
        return self.product.support() <= set(ideal.generators)


def kernel_certificate(action: Action) -> KernelCertificate:
    d = action.d
    w = action.normalized().weights
    a, b = w[1], w[2]
    cof = cofactor_product(d, a, b)
    prod = ternary_product(d, a, b)
    ideal = invariant_monomials(Action(d, (0, a, b)))
    cert = KernelCertificate(Action(d, (0, a, b)), cof, prod)
    if cof.coefficient((d - 1, 0, 0)) != 1:
        raise ConsistencyError("cofactor is not monic in x^(d-1)")
    if not cert.support_in(ideal):
        raise ConsistencyError("certificate product escapes the invariant ideal")
    return cert


def gt_verdict(action: Action, exact_rank_limit: int = EXACT_RANK_LIMIT) -> WlpVerdict:
    """Full verdict for the invariant ideal of the action at degree d-1 -> d.

    Below exact_rank_limit the rank is computed by fraction-free elimination;
    above it, injectivity failure is certified by the explicit kernel element
    and the rank is left unreported.
    """
    d = action.d
    ideal = invariant_monomials(action)
    mu = ideal.mu
    dim_src = d * (d + 1) // 2
    dim_tgt = (d + 1) * (d + 2) // 2 - mu
    bound_ok = mu <= d + 1
    if d <= exact_rank_limit:
        rank, dims = multiplication_rank(ideal, d - 1)
        assert dims == (dim_src, dim_tgt)
        fails_inj = rank < dim_src
        fails_wlp = rank < min(dim_src, dim_tgt)
        method = "bareiss"
    else:
        kernel_certificate(action.normalized())
        rank = None
        fails_inj = True
        fails_wlp = True if dim_src <= dim_tgt else None
        method = "certificate"
    artinian = is_artinian(ideal)
    togliatti = artinian and bound_ok and fails_inj
    return WlpVerdict(
        action=action,
        d=d,
        mu=mu,
        dim_source=dim_src,
        dim_target=dim_tgt,
        rank=rank,
        fails_injectivity=fails_inj,
        fails_wlp_at_d_minus_1=fails_wlp,
        generator_bound_ok=bound_ok,
        is_togliatti=togliatti,
        is_gt=togliatti,
        method=method,
    )


def _subset_is_togliatti(ideal: GTIdeal) -> bool:
    if not is_artinian(ideal):
        return False
    if ideal.mu > ideal.d + 1:
        return False
    return not _injective_at(ideal, ideal.d - 1)


def minimality_subset_oracle(ideal: GTIdeal) -> bool:
    """True when no proper generator subset still gives a Togliatti system.

    Kernels only grow when generators are added, so a Togliatti subset forces
    a Togliatti subset of corank one; testing single removals suffices.
    """
    if not _subset_is_togliatti(ideal):
        raise ValueError("minimality oracle expects a Togliatti system")
    for g in ideal.generators:
        rest = tuple(x for x in ideal.generators if x != g)
        sub = GTIdeal(ideal.d, rest)
        if _subset_is_togliatti(sub):
            return False
    return True


def minimality_circulant(action: Action) -> bool:
    """Minimality via the determinant route: the expanded eigenvalue product
    must be supported on the whole invariant set."""
    norm = action.normalized()
    a, b = norm.weights[1], norm.weights[2]
    if a == b:
        raise ValueError("repeated weights do not give a Togliatti system")
    ideal = invariant_monomials(norm)
    support = ternary_product(norm.d, a, b).support()
    return support == set(ideal.generators)


def conjecture_scan(d_values, subset_mu_limit: int = 15):
    """Scan actions (0, a, b) for failures of minimality.

    For every d and every 1 <= a < b <= d-1 with gcd(a, b, d) = 1 the
    circulant route runs; the subset oracle confirms independently when mu
    is small.  A unit is a counterexample candidate exactly when one of the
    two minimality routes fails.  Pairs with a == b provably keep the
    Lefschetz property and are recorded as degenerate; units whose generator
    count exceeds d+1 are outside the Togliatti regime and are recorded as
    such without entering the oracle.
    """
    findings = []
    units = []
    for d in d_values:
        for a in range(1, d):
            for b in range(a, d):
                if math.gcd(a, b, d) != 1:
                    units.append({"d": d, "a": a, "b": b, "status": "skipped_gcd"})
                    continue
                if a == b:
                    units.append({"d": d, "a": a, "b": b, "status": "degenerate_wlp"})
                    continue
                action = Action(d, (0, a, b))
                ideal = invariant_monomials(action)
                unit = {
                    "d": d, "a": a, "b": b, "mu": ideal.mu,
                    "minimal_circulant": minimality_circulant(action),
                }
                bad = not unit["minimal_circulant"]
                togliatti = None
                if ideal.mu <= subset_mu_limit or ideal.mu > d + 1:
                    verdict = gt_verdict(action)
                    togliatti = verdict.is_togliatti
                    unit["togliatti"] = togliatti
                    if togliatti and ideal.mu <= subset_mu_limit:
                        unit["minimal_oracle"] = minimality_subset_oracle(ideal)
                        bad = bad or not unit["minimal_oracle"]
                if bad:
                    unit["status"] = "counterexample"
                    findings.append(unit)
                elif togliatti is False:
                    unit["status"] = "not_togliatti"
                else:
                    unit["status"] = "ok"
                units.append(unit)
    return {"units": units, "findings": findings}

"""Circulant determinants expanded exactly over Z[zeta_d].

The determinant of a circulant matrix is the product of its eigenvalue forms:
factor j sends each symbol to itself scaled by zeta^(j * position).  Products
are expanded incrementally; every coefficient of a factor is a single power of
zeta, so each elementary multiplication is a rotation of a length-d integer
vector rather than a full convolution.  Final coefficients must reduce to
rational integers, which is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicInt, _reduce_vector
from .errors import NonIntegerError
from .polymat import SparsePoly

__all__ = [
    "CirculantSpec",
    "circulant_det_oracle",
    "circulant_det_symbolic",
    "coefficient_query",
    "expand_linear_product",
    "ternary_product",
]

_GENERAL_LIMIT = 12
_TERNARY_LIMIT = 64


@dataclass(frozen=True)
class CirculantSpec:
    """A d x d circulant in the symbols v_0..v_(d-1), or its ternary section.

    The ternary section keeps x at position 0, y at position a and z at
    position b (all other symbols set to zero).
    """

    d: int
    a: int | None = None
    b: int | None = None

    @classmethod
    def general(cls, d):
        if not 2 <= d <= _GENERAL_LIMIT:
            raise ValueError(f"general form supported for 2 <= d <= {_GENERAL_LIMIT}")
        return cls(d)

    @classmethod
    def ternary(cls, d, a, b):
        if not 3 <= d <= _TERNARY_LIMIT:
            raise ValueError(f"ternary form supported for 3 <= d <= {_TERNARY_LIMIT}")
        if not 1 <= a < b <= d - 1:
            raise ValueError("need 1 <= a < b <= d-1")
        return cls(d, a, b)

    @property
    def is_ternary(self):
        return self.a is not None


def expand_linear_product(d, nvars, factors):
    """Expand a product of linear forms whose coefficients are integer
    multiples of powers of zeta_d.

    Each factor is a list of (variable index, zeta exponent, integer scale)
    triples.  Returns {exponent tuple: raw coefficient vector} with all-zero
    vectors pruned after every multiplication.
    """
    zero_exp = (0,) * nvars
    unit = (1,) + (0,) * (d - 1)
    state = {zero_exp: unit}
    for factor in factors:
        nxt = {}
        for exp, vec in state.items():
            for var, m, scale in factor:
                if scale == 0:
                    continue
                new_exp = exp[:var] + (exp[var] + 1,) + exp[var + 1:]
                m %= d
                rot = vec[-m:] + vec[:-m] if m else vec
                if scale != 1:
                    rot = tuple(scale * v for v in rot)
                acc = nxt.get(new_exp)
                if acc is None:
                    nxt[new_exp] = rot
                else:
                    nxt[new_exp] = tuple(x + y for x, y in zip(acc, rot))
        state = {e: v for e, v in nxt.items() if any(v)}
    return state


def _raw_to_integer_poly(d, nvars, state) -> SparsePoly:
    terms = {}
    for exp, vec in state.items():
        red = _reduce_vector(d, vec)
        if not any(red):
            continue
        if any(red[1:]):
            raise NonIntegerError(
                f"coefficient of {exp} is not a rational integer: {CyclotomicInt(d, vec)!r}"
            )
        terms[exp] = red[0]
    return SparsePoly(nvars, terms, prune=False)


def _raw_to_cyclotomic_poly(d, nvars, state) -> SparsePoly:
    terms = {}
    for exp, vec in state.items():
        c = CyclotomicInt(d, vec)
        if not c.is_zero():
            terms[exp] = c
    return SparsePoly(nvars, terms, prune=False)


def circulant_det_symbolic(spec: CirculantSpec) -> SparsePoly:
    """det Circ(v_0..v_(d-1)) as the product of eigenvalue forms, over Z."""
    d = spec.d
    if spec.is_ternary:
        return ternary_product(d, spec.a, spec.b)
    if d > _GENERAL_LIMIT:
        raise ValueError(f"general form supported for d <= {_GENERAL_LIMIT}")
    factors = [[(k, (j * k) % d, 1) for k in range(d)] for j in range(d)]
    return _raw_to_integer_poly(d, d, expand_linear_product(d, d, factors))


def circulant_det_oracle(spec: CirculantSpec) -> SparsePoly:
    """Same determinant by Laplace cofactor expansion of the symbolic matrix.

    Entirely integer arithmetic, no roots of unity: an independent check of
    the eigenvalue route.
    """
    d = spec.d
    if d > 6:
        raise ValueError("cofactor oracle supported for d <= 6")
    mat = [
        [SparsePoly.variable(d, (j - i) % d) for j in range(d)]
        for i in range(d)
    ]
    det = _laplace_det(mat, d)
    if spec.is_ternary:
        return _specialize_ternary(det, spec)
    return det


def _laplace_det(mat, nvars):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = SparsePoly.zero(nvars)
    for j in range(n):
        entry = mat[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        sub = _laplace_det(minor, nvars)
        term = entry * sub
        total = total + term if j % 2 == 0 else total - term
    return total


def _specialize_ternary(det: SparsePoly, spec: CirculantSpec) -> SparsePoly:
    """Set v_0 -> x, v_a -> y, v_b -> z and all other symbols to zero."""
    d = spec.d
    keep = {0: 0, spec.a: 1, spec.b: 2}
    terms = {}
    for exp, c in det.terms.items():
        if any(p and k not in keep for k, p in enumerate(exp)):
            continue
        new = [0, 0, 0]
        for k, slot in keep.items():
            new[slot] = exp[k]
        terms[tuple(new)] = terms.get(tuple(new), 0) + c
    return SparsePoly(3, terms)


def ternary_product(d, a, b) -> SparsePoly:
    """The product over j of (x + zeta^(aj) y + zeta^(bj) z), with integer
    coefficients, equal to the circulant determinant of the ternary section."""
    if not 3 <= d <= _TERNARY_LIMIT:
        raise ValueError(f"supported for 3 <= d <= {_TERNARY_LIMIT}")
    if not (0 < a < d and 0 < b < d and a != b):
        raise ValueError("need distinct nonzero positions a, b")
    factors = [
        [(0, 0, 1), (1, (a * j) % d, 1), (2, (b * j) % d, 1)]
        for j in range(d)
    ]
    return _raw_to_integer_poly(d, 3, expand_linear_product(d, 3, factors))


def scaled_ternary_product(d, a, b, scales) -> SparsePoly:
    """Like ternary_product but with integer scales on the three symbols."""
    al, be, ga = scales
    factors = [
        [(0, 0, al), (1, (a * j) % d, be), (2, (b * j) % d, ga)]
        for j in range(d)
    ]
    return _raw_to_integer_poly(d, 3, expand_linear_product(d, 3, factors))


def cofactor_product(d, a, b) -> SparsePoly:
    """The product over j = 1..d-1 only, kept with cyclotomic coefficients."""
    factors = [
        [(0, 0, 1), (1, (a * j) % d, 1), (2, (b * j) % d, 1)]
        for j in range(1, d)
    ]
    return _raw_to_cyclotomic_poly(d, 3, expand_linear_product(d, 3, factors))


def coefficient_query(d, indices) -> int:
    """Exact coefficient of the monomial v_(i1) ... v_(id) in the determinant.

    The query is a multiset of d row indices; entries outside 0..d-1 or a
    wrong count are rejected.
    """
    indices = list(indices)
    if len(indices) != d:
        raise ValueError(f"need exactly {d} indices")
    if any(not 0 <= i < d for i in indices):
        raise ValueError("indices must lie in 0..d-1")
    exp = [0] * d
    for i in indices:
        exp[i] += 1
    det = circulant_det_symbolic(CirculantSpec.general(d))
    return det.coefficient(exp)

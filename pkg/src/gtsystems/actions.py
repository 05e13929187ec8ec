"""Diagonal actions of Z/d on K[x,y,z] and their invariant monomial ideals.

An action is a weight triple (a,b,c): the group generator scales the variables
by zeta^a, zeta^b, zeta^c.  A degree-d monomial x^al y^be z^ga is invariant
exactly when a*al + b*be + c*ga = 0 (mod d).  The enumeration below is a
direct scan of the whole degree-d simplex; closed-form counts elsewhere in the
package are always checked against it, never the other way round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "Action",
    "GTIdeal",
    "InvalidActionError",
    "generalized_classical",
    "invariant_monomials",
    "inverse_data",
    "monomial_str",
    "n_sequence",
    "normalize_action",
]


class InvalidActionError(ValueError):
    """Weight triple does not generate a faithful action of Z/d."""


@dataclass(frozen=True)
class Action:
    """Weights of a diagonal Z/d action on (x, y, z)."""

    d: int
    weights: tuple
    source: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.d < 2:
            raise InvalidActionError("order must be at least 2")
        w = tuple(v % self.d for v in self.weights)
        if len(w) != 3:
            raise InvalidActionError("need exactly three weights")
        if math.gcd(*w, self.d) != 1:
            raise InvalidActionError(
                f"gcd{(*self.weights, self.d)} != 1: the action is not faithful"
            )
        object.__setattr__(self, "weights", w)

    @property
    def is_m_family(self):
        """True when the normalized weights have the shape (0, 1, a)."""
        w = self.normalized().weights
        return w[0] == 0 and w[1] == 1

    def normalized(self) -> "Action":
        return normalize_action(self.d, *self.weights)

    def to_json(self):
        return {"d": self.d, "weights": list(self.weights)}

    def __str__(self):
        return f"({self.weights[0]},{self.weights[1]},{self.weights[2]}) mod {self.d}"


def normalize_action(d, a, b, c) -> Action:
    """Canonical representative: subtract the first weight, then sort ascending."""
    probe = Action(d, (a, b, c))  # validates gcd before normalizing
    shifted = sorted((w - probe.weights[0]) % d for w in probe.weights)
    return Action(d, tuple(shifted), source=(a, b, c))


def monomial_str(exp, names=("x", "y", "z")):
    if not any(exp):
        return "1"
    return "".join(
        names[i] + (f"^{p}" if p > 1 else "")
        for i, p in enumerate(exp)
        if p
    )


@dataclass(frozen=True)
class GTIdeal:
    """Artinian monomial ideal generated in a single degree d.

    Generators are exponent triples summing to d, kept in descending
    lexicographic order.  The action is recorded when the ideal arose as the
    full invariant ideal of one.
    """

    d: int
    generators: tuple
    action: Action | None = None

    def __post_init__(self):
        gens = tuple(sorted({tuple(g) for g in self.generators}, reverse=True))
        for g in gens:
            if len(g) != 3 or any(v < 0 for v in g) or sum(g) != self.d:
                raise ValueError(f"bad degree-{self.d} generator {g}")
        object.__setattr__(self, "generators", gens)

    @property
    def mu(self):
        return len(self.generators)

    def has_pure_powers(self):
        need = {(self.d, 0, 0), (0, self.d, 0), (0, 0, self.d)}
        return need.issubset(set(self.generators))

    def generator_strings(self):
        return [monomial_str(g) for g in self.generators]

    def to_json(self):
        return {
            "d": self.d,
            "mu": self.mu,
            "generators": [list(g) for g in self.generators],
            "monomials": self.generator_strings(),
            "action": self.action.to_json() if self.action else None,
        }


def invariant_monomials(action: Action) -> GTIdeal:
    """All invariant degree-d monomials of the action, by direct scan."""
    d = action.d
    a, b, c = action.weights
    gens = []
    for be in range(d + 1):
        base = b * be
        for ga in range(d + 1 - be):
            al = d - be - ga
            if (a * al + base + c * ga) % d == 0:
                gens.append((al, be, ga))
    return GTIdeal(d, tuple(gens), action=action)


def inverse_data(d, alpha):
    """Return (b, k) with b*alpha = 1 + k*d, b minimal positive.

    Requires 2 <= alpha <= d-1 and gcd(alpha, d) = 1; then 1 < b < d and k > 0.
    """
    if not 2 <= alpha <= d - 1:
        raise ValueError("alpha out of range")
    if math.gcd(alpha, d) != 1:
        raise ValueError("alpha not invertible modulo d")
    b = pow(alpha, -1, d)
    k = (b * alpha - 1) // d
    assert 1 < b < d and k > 0
    return b, k


def n_sequence(d, a):
    """The sequence n_m = (n_1 * m) mod d where a*n_1 = -1 (mod d), m = 1..d-1."""
    if math.gcd(a, d) != 1:
        raise ValueError("a not invertible modulo d")
    n1 = (-pow(a, -1, d)) % d
    seq = [(n1 * m) % d for m in range(1, d)]
    if 0 in seq or len(set(seq)) != d - 1:
        raise AssertionError("n-sequence must be a permutation of 1..d-1")
    return seq


def generalized_classical(d) -> GTIdeal:
    """The system x^d, y^d, z^d, x^k y^k z^eps, ..., x^2 y^2 z^(d-4), xyz^(d-2).

    Here k = floor(d/2) and eps = d mod 2; the monomial set coincides with the
    invariant ideal of the action with weights (0, 2, 1).
    """
    if d < 3:
        raise ValueError("need d >= 3")
    k = d // 2
    gens = [(d, 0, 0), (0, d, 0), (0, 0, d)]
    gens.extend((i, i, d - 2 * i) for i in range(k, 0, -1))
    return GTIdeal(d, tuple(gens), action=Action(d, (0, 2, 1)))

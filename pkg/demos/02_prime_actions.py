"""Invariant ideals of prime order and their equivalence classes.

For a prime d >= 5 every weight pattern (0, 1, a) produces exactly
3 + (d-1)/2 invariant monomials, and distinct values of a collapse into a
small number of classes under the moves a -> d-a+1 and a -> a^{-1} mod d.
"""

from gtsystems import Action, invariant_monomials, classify_moves, prime_and_primepower_counts
from gtsystems.actions import monomial_str

print("generator counts at d = 7:")
for a in range(2, 7):
    ideal = invariant_monomials(Action(7, (0, 1, a)))
    gens = ", ".join(monomial_str(m) for m in ideal.generators)
    print(f"  a = {a}:  mu = {ideal.mu}   [{gens}]")

print()
print("equivalence classes of a-values:")
for d in (5, 7, 11, 13, 17):
    partition = classify_moves(d)
    pretty = "  ".join(
        "{" + ", ".join(map(str, members)) + "} (size-" + kind + ")"
        for members, kind in partition.classes
    )
    closed_form = prime_and_primepower_counts(d)
    print(f"  d = {d:2d}: {pretty}")
    print(f"         classes found: {len(partition.classes)}, closed form predicts: {closed_form}")

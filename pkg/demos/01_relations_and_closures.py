"""Relations on a tiny carrier: predicates, closures, meets and joins.

Everything in the library is built on dense boolean matrices over the
carrier {0, ..., n-1}.  This script walks through the raw relation
algebra before any order theory shows up.
"""

from preord import Rel, generated_equivalence, join_preorders

# a relation is just a set of arrows; nothing is assumed about it
r = Rel.from_pairs(4, [(0, 1), (1, 2)], reflexive=True)
print("raw relation:", r)
print("reflexive:", r.is_reflexive(), "| transitive:", r.is_transitive())

# the transitive closure adds the missing composite 0 -> 2
t = r.transitive_closure()
print("\ntransitive closure:", t)
print("now transitive:", t.is_transitive())

# forgetting direction and closing again gives the generated equivalence:
# 0, 1, 2 fall into one class, 3 stays alone
e = r.equivalence_closure()
print("\nequivalence closure:", e)
print("is an equivalence:", e.is_equivalence())

# the same thing from generators
g = generated_equivalence([(0, 1), (1, 2)], 4)
print("generated from pairs:", g == e)

# preorders on a fixed carrier form a lattice: pointwise meet,
# transitive-closure join
left = Rel.from_pairs(3, [(0, 1)], reflexive=True)
right = Rel.from_pairs(3, [(1, 2)], reflexive=True)
print("\nmeet:", left.meet(right))
print("join:", join_preorders(left, right))
print("join picked up the composite (0,2):", join_preorders(left, right)[0, 2])

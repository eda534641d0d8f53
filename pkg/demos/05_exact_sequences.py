"""Prekernels, precokernels and short preexact sequences.

There is no zero object among preordered sets, but morphisms that factor
through an equality-relation object make a workable substitute for zero
maps.  Relative to them every morphism has a kernel-like and a
cokernel-like companion, unique up to unique isomorphism.
"""

from preord import (
    Morph, Partition, canonical_preexact_from_morphism, chain,
    characterize_preexact, compose, identity_prekernel_test,
    image_equivalence, is_short_preexact, is_trivial_morphism,
    kernel_pair_equiv, make_object, precokernel, prekernel, Rel,
    torsion_sequence, verify_precokernel_definitional,
    verify_prekernel_definitional, objects_upto,
)

f = Morph(chain(3), chain(2), (0, 0, 1))
print("f:", f)

# the prekernel keeps the domain but cuts the relation down to pairs
# with equal image
k = prekernel(f)
print("\nprekernel domain:", k.dom)
print("f o k is trivial:", is_trivial_morphism(compose(f, k)))

# the precokernel collapses the codomain by the equivalence generated by
# images of related pairs
c = precokernel(f)
print("\nimage pairs equivalence:",
      Partition.from_equivalence(image_equivalence(f)).blocks)
print("precokernel codomain:", c.cod)

# both satisfy their universal property against every probe up to size 2
probes = objects_upto(2)
print("\nprekernel verifies:", verify_prekernel_definitional(k, f, probes))
print("precokernel verifies:", verify_precokernel_definitional(c, f, probes))

# chaining the two constructions always yields a short preexact sequence
seq = canonical_preexact_from_morphism(f)
print("\ncanonical sequence is short preexact:", is_short_preexact(seq))

# and every short preexact sequence is isomorphic to a canonical one
left, right = characterize_preexact(torsion_sequence(make_object(
    3, [(0, 1), (1, 0), (1, 2)])))
print("characterization witnesses:", left.map, right.map)

# which identity-carried maps are prekernels is a one-line criterion
sigma = kernel_pair_equiv(f).meet(chain(3).rel)
print("\nsigma =", sorted(sigma.pairs()), "inside the chain:",
      identity_prekernel_test(sigma, chain(3).rel))
print("the full chain inside the codiscrete pair:",
      identity_prekernel_test(chain(2).rel, Rel.full(2)))

"""The stable category: trivial behavior on clopen parts is forgotten.

Two parallel maps are identified when they agree except on a clopen
piece where both act trivially.  All equality-relation objects collapse
to a single zero object, kernels and cokernels appear, and short exact
sequences classify up to the quotient shape.
"""

from preord import (
    Morph, chain, classify_short_exact, coproduct, identity,
    is_stable_zero, make_object, objects_upto, stable_eq, stable_eq_oracle,
    stable_iso, stable_iso_witness, stable_kernel, torsion_sequence,
    trivial_object, verify_coproduct_preservation, verify_stable_kernel,
)

a = chain(2)
f = Morph(a, a, (0, 0))
g = Morph(a, a, (1, 1))
print("two constants on a chain are stably equal:", stable_eq(f, g))
print("the literal clopen-existential agrees:", stable_eq_oracle(f, g))
print("identity is stably zero on a chain:", is_stable_zero(identity(a)))
print("...but on a trivial object it is:",
      is_stable_zero(identity(trivial_object(2))))

# stable isomorphism only sees the multi-element components
b, _ = coproduct([chain(2), trivial_object(2)])
print("\nchain-plus-dust vs bare chain:", stable_iso(b, chain(2)))
fwd, back = stable_iso_witness(b, chain(2))
print("witnesses:", fwd.map, "/", back.map)
print("trivial objects of any size collapse together:",
      stable_iso(trivial_object(1), trivial_object(3)))

# kernels exist now; the prekernel represents them
h = Morph(chain(3), chain(2), (0, 0, 1))
probes = objects_upto(2)
print("\nstable kernel verifies:",
      verify_stable_kernel(stable_kernel(h), h, probes))

# classification of a short exact sequence in quotient form
mixed = make_object(3, [(0, 1), (1, 0), (1, 2)])
seq = torsion_sequence(mixed)
sim, left, right = classify_short_exact(seq.f, seq.g, probes)
print("\nclassifying the torsion sequence of", mixed)
print("kernel equivalence:", sorted(sim.pairs()))
print("left witness:", left.map, "| right witness:", right.map)

# passing to the stable category keeps coproducts universal
print("\ncoproducts survive stably:",
      verify_coproduct_preservation([chain(2), trivial_object(1)], probes))

"""The topology hiding inside a preorder.

A preorder and a topology closed under arbitrary intersections carry the
same data.  Here opens are the predecessor-closed sets, so y lies in the
closure of {x} exactly when x relates to y, and the specialization
preorder of the open-set family hands the relation back unchanged.
"""

import numpy as np

from preord import (
    chain, clopen_enumerate, components, coproduct, coproduct_decomposition,
    is_clopen, is_indecomposable, is_minimal, is_open, minimal_part,
    open_sets, specialization_preorder, subset_mask, trivial_object,
)

a, _ = coproduct([chain(2), trivial_object(1)])
print("object:", a, "(a chain next to an isolated point)")

print("\n{0} open:", is_open(a, subset_mask(3, [0])))
print("{1} open:", is_open(a, subset_mask(3, [1])))
print("{0,1} clopen:", is_clopen(a, subset_mask(3, [0, 1])))

# clopen subsets are exactly unions of connected components
part = components(a)
print("\ncomponents:", part.blocks)
print("clopen count = 2^components:", len(clopen_enumerate(a)) == 2 ** part.size)
print("indecomposable:", is_indecomposable(a))

# the minimal part gathers the components of size >= 2
print("\nminimal part mask:", minimal_part(a))
print("minimal object:", is_minimal(a), "(the isolated point spoils it)")

# round trip through the open sets
opens = open_sets(a)
print("\nopen sets:", [list(np.nonzero(s)[0]) for s in opens])
recovered = specialization_preorder(a.n, opens)
print("specialization preorder recovers the relation:", recovered == a.rel)

# and the canonical splitting into indecomposable pieces
factors, witness = coproduct_decomposition(a)
print("\nfactors:", factors)
print("witness map onto the original:", witness.map)

"""Objects and monotone maps: hom-sets, (co)products, isos and lifts.

Objects are non-empty carriers with a reflexive transitive relation;
morphisms are the relation-preserving maps.  On tiny carriers every
hom-set can simply be listed, which is what most of the verification
machinery leans on.
"""

from preord import (
    Morph, chain, compose, coproduct, find_lift, hom_enumerate, identity,
    is_epi, is_mono, is_trivial_morphism, iso_search, make_object, product,
    triv_enumerate, trivial_object,
)

v = chain(2)                 # 0 <= 1
w = make_object(3, [(0, 1), (0, 2)])   # one bottom, two tops
print("chain:", v)
print("vee:", w)

# every monotone map, in lexicographic order
homs = hom_enumerate(v, w)
print("\nhom(v, w) has", len(homs), "maps:", [f.map for f in homs])
print("trivial ones:", [f.map for f in triv_enumerate(v, w)])

f = homs[1]
print("\nf =", f.map, "| mono:", is_mono(f), "| epi:", is_epi(f),
      "| trivial:", is_trivial_morphism(f))
print("f after identity is f:", compose(f, identity(v)) == f)

# coproduct = disjoint union, product = cartesian with componentwise order
c, injections = coproduct([v, v])
print("\ncoproduct of two chains:", c)
p, projections = product([v, v])
print("product of two chains (the diamond):", p)

# isomorphism search is a pruned backtracking over degree profiles
upside_down = make_object(2, [(1, 0)])
print("\nchain vs reversed chain:", iso_search(v, upside_down).map)
print("chain vs two points:", iso_search(v, trivial_object(2)))

# equality-relation objects are projective: anything out of them lifts
# along any surjection
collapse = Morph(v, trivial_object(1), (0, 0))
point = Morph(trivial_object(1), trivial_object(1), (0,))
print("\nlift of a point along the collapse:", find_lift(point, collapse).map)

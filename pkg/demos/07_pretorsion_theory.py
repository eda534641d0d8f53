"""The pretorsion axioms, checked exhaustively on small carriers.

Equivalence-relation objects play torsion, partial orders play
torsion-free, and their intersection (the equality-relation objects)
plays zero.  Axiom 1: every object sits in a relatively preexact
sequence between the two classes; its own torsion sequence does the job.
Axiom 2: maps from torsion to torsion-free always factor through the
intersection.
"""

from preord import (
    ALL_PREORDERS, EQUIVALENCES, PARTIAL_ORDERS, TRIVIAL_OBJECTS,
    chain, closure_prop_check, ends_trivial_iff_iso, factors_through,
    identity, make_object, objects_upto, pretorsion_verify,
    relative_preexact, torsion_sequence, torsionfree_part, torsion_part,
)

mixed = make_object(3, [(0, 1), (1, 0), (1, 2)])
print("object:", mixed)
print("torsion part:", torsion_part(mixed))
print("torsion-free part:", torsionfree_part(mixed))

seq = torsion_sequence(mixed)
probes = objects_upto(2)
print("\ntorsion sequence is relatively preexact:",
      relative_preexact(seq.f, seq.g, TRIVIAL_OBJECTS, probes))
print("one end trivial iff the other leg is iso:",
      ends_trivial_iff_iso(seq.f, seq.g, TRIVIAL_OBJECTS, probes))

# class-relative triviality
print("\nidentity on a chain factors through a trivial object:",
      factors_through(identity(chain(2)), TRIVIAL_OBJECTS))
print("identity on a chain factors through an equivalence object:",
      factors_through(identity(chain(2)), EQUIVALENCES))

# the full axiom check
report = pretorsion_verify(EQUIVALENCES, PARTIAL_ORDERS, 3)
print("\n" + str(report))

# a degenerate pair for contrast: with everything declared null, the
# canonical sequence stops being relatively preexact
bad = pretorsion_verify(ALL_PREORDERS, ALL_PREORDERS, 3)
print("\n(all, all) verdict:", "pass" if bad.ok else "FAIL")
print("counterexample:", bad.axiom1_counterexample)

# closure: satisfying the hom condition against all posets forces
# membership in the torsion class
x = make_object(2, [(0, 1), (1, 0)])
print("\nclosure property for an equivalence object:",
      closure_prop_check(x, EQUIVALENCES, PARTIAL_ORDERS, 3))

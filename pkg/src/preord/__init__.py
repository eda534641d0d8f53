"""Finite preordered sets, their torsion-style decomposition, and the
stable category, with exhaustive small-instance verification tools."""

from .errors import (
    PreordError, ValidationError, BudgetError, ParseError, NotShortExactError,
)
from .relations import Rel, Partition, generated_equivalence, join_preorders
from .category import (
    DEFAULT_BUDGET, PreObj, Morph,
    make_object, trivial_object, chain,
    is_morphism, compose, identity,
    is_trivial_object, is_trivial_morphism,
    hom_enumerate, triv_enumerate, monotone_maps,
    is_mono, is_epi, coproduct, product,
    iso_search, iso_enumerate, find_lift,
)
from .topology import (
    subset_mask, is_open, is_clopen, open_sets,
    components, is_indecomposable, clopen_enumerate,
    minimal_part, is_minimal,
    specialization_preorder, restrict, coproduct_decomposition,
)
from .decompose import (
    symmetric_core, quotient_poset, assemble_preorder, roundtrip_check,
)
from .exactness import (
    Seq, kernel_pair_equiv, prekernel, quotient_object,
    image_equivalence, precokernel,
    prekernel_witness, is_prekernel, precokernel_witness, is_precokernel,
    verify_prekernel_definitional, verify_precokernel_definitional,
    is_short_preexact, canonical_preexact_from_morphism,
    characterize_preexact, identity_prekernel_test,
)
from .stable import (
    StableHom, stable_signature, stable_eq, stable_eq_oracle,
    is_stable_zero, congruence_check,
    stable_iso, stable_iso_witness, stable_inverse,
    stable_kernel, stable_cokernel,
    verify_stable_kernel, verify_stable_cokernel,
    classify_short_exact, verify_coproduct_preservation,
)
from .pretorsion import (
    ObjClass, EQUIVALENCES, PARTIAL_ORDERS, TRIVIAL_OBJECTS, ALL_PREORDERS,
    intersect_classes, factors_through,
    relative_prekernel_check, relative_precokernel_check,
    relative_preexact, ends_trivial_iff_iso,
    torsion_part, torsionfree_part, torsion_sequence,
    PretorsionReport, pretorsion_verify, closure_prop_check,
)
from .enumeration import KINDS, HARD_CAP, enumerate_objects, count_objects, objects_upto
from .io import save_object, load_object, load_morphism, export_dot

__version__ = "0.1.0"

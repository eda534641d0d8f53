"""Prekernels, precokernels, quotient objects and short preexact sequences.

Kernels and cokernels make no sense in a category without a zero object,
but "trivial" morphisms (those factoring through an equality-relation
object) play the role of zero maps.  A prekernel of f is universal among
morphisms whose composite with f is trivial; a precokernel is the dual.
Both exist canonically and are unique up to a unique isomorphism, which
is what `is_prekernel` / `is_precokernel` exploit: instead of quantifying
over the whole (infinite) category they compare against the canonical
construction.  The definitional verifiers below do quantify, over a
finite list of probe objects, and serve as independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .category import (
    Morph, PreObj, compose, is_trivial_morphism, monotone_maps,
    DEFAULT_BUDGET,
)
from .errors import ValidationError
from .relations import Partition, Rel, generated_equivalence, join_preorders

__all__ = [
    "Seq", "kernel_pair_equiv", "prekernel", "quotient_object",
    "image_equivalence", "precokernel",
    "prekernel_witness", "is_prekernel",
    "precokernel_witness", "is_precokernel",
    "verify_prekernel_definitional", "verify_precokernel_definitional",
    "is_short_preexact", "canonical_preexact_from_morphism",
    "characterize_preexact", "identity_prekernel_test",
]


@dataclass(frozen=True)
class Seq:
    """A composable pair of morphisms f: X -> Y, g: Y -> Z."""

    f: Morph
    g: Morph

    def __post_init__(self):
        if self.f.cod != self.g.dom:
            raise ValidationError("sequence legs do not compose")


def kernel_pair_equiv(f: Morph) -> Rel:
    """The fibre equivalence on the domain: a ~ b iff f(a) = f(b)."""
    m = np.array(f.map)
    return Rel(f.dom.n, m[:, None] == m[None, :])


def prekernel(f: Morph) -> Morph:
    """Canonical prekernel: the identity map out of the domain with the
    relation cut down to pairs sharing an f-image."""
    a = f.dom
    k_dom = PreObj(a.rel.meet(kernel_pair_equiv(f)))
    return Morph(k_dom, a, tuple(range(a.n)))


def quotient_object(a: PreObj, sim: Rel) -> tuple[PreObj, Morph]:
    """Quotient by an equivalence contained in the relation.

    The relation descends to blocks ([x] related to [y] iff x related to
    y, independent of representatives exactly because sim is contained in
    the relation).  Blocks are indexed by smallest member.  Returns the
    quotient object and the canonical projection.
    """
    if sim.n != a.n:
        raise ValidationError("equivalence carrier does not match the object")
    part = Partition.from_equivalence(sim)
    if not sim.is_subrel(a.rel):
        raise ValidationError("equivalence is not contained in the relation")
    reps = [blk[0] for blk in part.blocks]
    q = PreObj(Rel(part.size, a.rel.bits[np.ix_(reps, reps)]))
    return q, Morph(a, q, part.class_of)


def image_equivalence(f: Morph) -> Rel:
    """Smallest equivalence on the codomain relating f(a) and f(b) for
    every related pair a, b of the domain."""
    gens = [(f.map[a], f.map[b]) for a, b in f.dom.rel.pairs(include_diagonal=True)]
    return generated_equivalence(gens, f.cod.n)


def precokernel(f: Morph) -> Morph:
    """Canonical precokernel: collapse the codomain by `image_equivalence`
    and carry the join of the codomain relation with it."""
    b = f.cod
    zeta = image_equivalence(f)
    joined = join_preorders(b.rel, zeta)
    q, proj = quotient_object(PreObj(joined), zeta)
    return Morph(b, q, proj.map)


# ----------------------------------------------------------------------
# recognition against the canonical constructions

def prekernel_witness(k: Morph, f: Morph) -> Morph | None:
    """The unique iso onto the canonical prekernel domain, or None.

    k is a prekernel of f iff f o k is trivial and k's underlying map,
    read as a map into the canonical domain, is an isomorphism; the
    commuting condition forces that map, so no search is needed.
    """
    if k.cod != f.dom:
        raise ValidationError("candidate prekernel must land in the domain of f")
    if not is_trivial_morphism(compose(f, k)):
        return None
    x_can = prekernel(f).dom
    if sorted(k.map) != list(range(x_can.n)):
        return None
    # monotone into the cut-down relation is automatic given f o k trivial,
    # but the inverse direction is not
    inv = [0] * x_can.n
    for i, v in enumerate(k.map):
        inv[v] = i
    u = Morph(k.dom, x_can, k.map)
    if not _monotone_map(inv, x_can, k.dom):
        return None
    return u


def precokernel_witness(p: Morph, f: Morph) -> Morph | None:
    """The unique iso from the canonical precokernel codomain, or None."""
    if p.dom != f.cod:
        raise ValidationError("candidate precokernel must start at the codomain of f")
    if not is_trivial_morphism(compose(p, f)):
        return None
    c = precokernel(f)
    q = c.cod
    phi: list[int | None] = [None] * q.n
    for b in range(f.cod.n):
        cls = c.map[b]
        if phi[cls] is None:
            phi[cls] = p.map[b]
        elif phi[cls] != p.map[b]:
            return None  # p does not respect the canonical collapse
    vals = [v for v in phi if v is not None]
    if len(vals) != q.n or sorted(vals) != list(range(p.cod.n)):
        return None
    if not _monotone_map(vals, q, p.cod):
        return None
    inv = [0] * p.cod.n
    for i, v in enumerate(vals):
        inv[v] = i
    if not _monotone_map(inv, p.cod, q):
        return None
    return Morph(q, p.cod, tuple(vals))


def _monotone_map(map_, dom: PreObj, cod: PreObj) -> bool:
    return all(cod.rel.bits[map_[a], map_[b]] for a, b in dom.rel.pairs())


def is_prekernel(k: Morph, f: Morph) -> bool:
    return prekernel_witness(k, f) is not None


def is_precokernel(p: Morph, f: Morph) -> bool:
    return precokernel_witness(p, f) is not None


# ----------------------------------------------------------------------
# definitional verifiers (bounded universal properties, used as oracles)

def verify_prekernel_definitional(k: Morph, f: Morph, tests: list[PreObj],
                                  budget: int = DEFAULT_BUDGET) -> bool:
    """Check the prekernel universal property against probe objects.

    For every probe Y and every morphism lam: Y -> dom(f) with f o lam
    trivial there must be exactly one lam' with k o lam' = lam.
    """
    if k.cod != f.dom:
        raise ValidationError("candidate prekernel must land in the domain of f")
    if not is_trivial_morphism(compose(f, k)):
        return False
    fmap = np.array(f.map)
    kmap = np.array(k.map)
    for y in tests:
        lams = monotone_maps(y, f.dom, budget)
        primes = monotone_maps(y, k.dom, budget)
        k_after = kmap[primes] if len(primes) else primes
        triv = np.ones(len(lams), dtype=bool)
        for u, v in y.rel.pairs():
            triv &= fmap[lams[:, u]] == fmap[lams[:, v]]
        for lam in lams[triv]:
            matches = (k_after == lam).all(axis=1).sum() if len(primes) else 0
            if matches != 1:
                return False
    return True


def verify_precokernel_definitional(p: Morph, f: Morph, tests: list[PreObj],
                                    budget: int = DEFAULT_BUDGET) -> bool:
    """Dual check: unique factorization through p for every lam with
    lam o f trivial."""
    if p.dom != f.cod:
        raise ValidationError("candidate precokernel must start at the codomain of f")
    if not is_trivial_morphism(compose(p, f)):
        return False
    pmap = list(p.map)
    fmap = list(f.map)
    for t in tests:
        lams = monotone_maps(f.cod, t, budget)
        after = monotone_maps(p.cod, t, budget)
        p_before = after[:, pmap] if len(after) else after
        triv = np.ones(len(lams), dtype=bool)
        for a, b in f.dom.rel.pairs():
            triv &= lams[:, fmap[a]] == lams[:, fmap[b]]
        for lam in lams[triv]:
            matches = (p_before == lam).all(axis=1).sum() if len(after) else 0
            if matches != 1:
                return False
    return True


# ----------------------------------------------------------------------
# short preexact sequences

def is_short_preexact(s: Seq) -> bool:
    """f is a prekernel of g and g is a precokernel of f."""
    return is_prekernel(s.f, s.g) and is_precokernel(s.g, s.f)


def canonical_preexact_from_morphism(f: Morph) -> Seq:
    """The short preexact sequence induced by any morphism: its prekernel
    followed by that prekernel's precokernel."""
    k = prekernel(f)
    return Seq(k, precokernel(k))


def characterize_preexact(s: Seq) -> tuple[Morph, Morph]:
    """Witness isos matching a short preexact sequence to its canonical form.

    Returns (left, right) with left: X -> (Y, rel ^ fibre(g)) satisfying
    k o left = f, and right: Z -> quotient satisfying right o g = pi,
    where k, pi form the canonical sequence built from g.
    """
    if not is_short_preexact(s):
        raise ValidationError("sequence is not short preexact")
    f, g = s.f, s.g
    left = prekernel_witness(f, g)
    if left is None:
        raise ValidationError("no left witness; sequence is not short preexact")
    k = prekernel(g)
    pi = precokernel(k)
    q = pi.cod
    right_map: list[int | None] = [None] * g.cod.n
    for y in range(g.dom.n):
        z = g.map[y]
        if right_map[z] is None:
            right_map[z] = pi.map[y]
        elif right_map[z] != pi.map[y]:
            raise ValidationError("right witness is not well defined")
    if any(v is None for v in right_map):
        raise ValidationError("second leg is not surjective")
    vals = [int(v) for v in right_map]
    if sorted(vals) != list(range(q.n)):
        raise ValidationError("right witness is not bijective")
    right = Morph(g.cod, q, tuple(vals))
    inv = [0] * q.n
    for i, v in enumerate(vals):
        inv[v] = i
    if not _monotone_map(inv, q, g.cod):
        raise ValidationError("right witness inverse is not monotone")
    return left, right


def identity_prekernel_test(sigma: Rel, rho: Rel) -> bool:
    """Is the identity-carried map (A, sigma) -> (A, rho) a prekernel?

    Holds exactly when sigma equals rho intersected with the equivalence
    closure of sigma.  When it does, the identity is a prekernel of the
    projection onto the quotient by that closure, which is re-verified
    here as a sanity check.
    """
    if sigma.n != rho.n:
        raise ValidationError("relations live on different carriers")
    if not sigma.is_preorder() or not rho.is_preorder():
        raise ValidationError("both relations must be preorders")
    if not sigma.is_subrel(rho):
        raise ValidationError("identity is not a morphism: sigma exceeds rho")
    closure = sigma.equivalence_closure()
    ok = sigma == rho.meet(closure)
    if ok:
        a = PreObj(rho)
        joined = join_preorders(rho, closure)
        q, proj = quotient_object(PreObj(joined), closure)
        pi = Morph(a, q, proj.map)
        k = Morph(PreObj(sigma), a, tuple(range(rho.n)))
        assert is_prekernel(k, pi), "canonical projection lost its prekernel"
    return ok

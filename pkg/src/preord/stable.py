"""The stable category: morphisms up to trivial disagreement on a clopen part.

Two parallel morphisms are identified when they agree outside some clopen
subset on which both restrict to trivial morphisms.  Because every clopen
subset is a union of connected components, the identification is decided
component by component: equal restriction, or both restrictions trivial.
Under it all equality-relation objects collapse to a single zero object,
so kernels and cokernels exist; they are the images of the prekernel and
precokernel constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .category import (
    Morph, PreObj, compose, coproduct, identity, is_trivial_morphism,
    iso_search, monotone_maps, DEFAULT_BUDGET,
)
from .errors import NotShortExactError, ValidationError
from .exactness import image_equivalence, prekernel, precokernel
from .relations import Rel
from .topology import clopen_enumerate, components, minimal_part, restrict

__all__ = [
    "StableHom", "stable_signature", "stable_eq", "stable_eq_oracle",
    "is_stable_zero", "congruence_check",
    "stable_iso", "stable_iso_witness",
    "stable_kernel", "stable_cokernel",
    "verify_stable_kernel", "verify_stable_cokernel",
    "stable_inverse", "classify_short_exact", "verify_coproduct_preservation",
]


def _map_signature(map_row, blocks, rel_bits) -> tuple:
    """Per-component canonical form: the restriction tuple, or None when
    the restriction is a trivial morphism."""
    sig = []
    for blk in blocks:
        values = tuple(int(map_row[x]) for x in blk)
        trivial = True
        for i, x in enumerate(blk):
            for j, y in enumerate(blk):
                if rel_bits[x, y] and values[i] != values[j]:
                    trivial = False
                    break
            if not trivial:
                break
        sig.append(None if trivial else values)
    return tuple(sig)


def stable_signature(f: Morph) -> tuple:
    """Canonical form of a morphism's stable class (same dom and cod only)."""
    part = components(f.dom)
    return _map_signature(f.map, part.blocks, f.dom.rel.bits)


def stable_eq(f: Morph, g: Morph) -> bool:
    """Stable equality, decided per connected component of the domain."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValidationError("stable equality needs parallel morphisms")
    bits = f.dom.rel.bits
    for blk in components(f.dom).blocks:
        if all(f.map[x] == g.map[x] for x in blk):
            continue
        fv = [f.map[x] for x in blk]
        gv = [g.map[x] for x in blk]
        if _restriction_trivial(fv, blk, bits) and _restriction_trivial(gv, blk, bits):
            continue
        return False
    return True


def _restriction_trivial(values, blk, bits) -> bool:
    for i, x in enumerate(blk):
        for j, y in enumerate(blk):
            if bits[x, y] and values[i] != values[j]:
                return False
    return True


def stable_eq_oracle(f: Morph, g: Morph, budget: int = DEFAULT_BUDGET) -> bool:
    """Literal form of the identification: some clopen subset exists on
    which both morphisms are trivial while they agree on its complement."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValidationError("stable equality needs parallel morphisms")
    bits = f.dom.rel.bits
    for mask in clopen_enumerate(f.dom):
        inside = [int(i) for i in np.nonzero(mask)[0]]
        outside = [int(i) for i in np.nonzero(~mask)[0]]
        if any(f.map[x] != g.map[x] for x in outside):
            continue
        fv = [f.map[x] for x in inside]
        gv = [g.map[x] for x in inside]
        if _restriction_trivial(fv, inside, bits) and _restriction_trivial(gv, inside, bits):
            return True
    return False


def is_stable_zero(f: Morph) -> bool:
    """A morphism becomes the zero morphism exactly when it is trivial."""
    return is_trivial_morphism(f)


def congruence_check(f: Morph, g: Morph, h: Morph, l: Morph) -> bool:
    """Does stable equality of f and g survive pre- and post-composition?"""
    if not stable_eq(f, g):
        return True
    return stable_eq(compose(l, compose(f, h)), compose(l, compose(g, h)))


@dataclass(frozen=True, eq=False)
class StableHom:
    """A stable-category morphism, held by an arbitrary representative.

    Equality is stable equality of representatives; there is no canonical
    representative, so no hashing.
    """

    rep: Morph

    @property
    def dom(self) -> PreObj:
        return self.rep.dom

    @property
    def cod(self) -> PreObj:
        return self.rep.cod

    def __eq__(self, other) -> bool:
        if not isinstance(other, StableHom):
            return NotImplemented
        return stable_eq(self.rep, other.rep)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"StableHom({self.rep!r})"


# ----------------------------------------------------------------------
# stable isomorphism

def stable_iso_witness(a: PreObj, b: PreObj) -> tuple[Morph, Morph] | None:
    """Mutually stable-inverse morphisms between a and b, or None.

    Objects are stably isomorphic exactly when their minimal parts (the
    union of multi-element components) are isomorphic, with two empty
    minimal parts counting as isomorphic: such objects are zero objects.
    The witnesses restrict to an isomorphism on the minimal parts and sit
    constant elsewhere.
    """
    ma, mb = minimal_part(a), minimal_part(b)
    if not ma.any() and not mb.any():
        return Morph(a, b, (0,) * a.n), Morph(b, a, (0,) * b.n)
    if ma.any() != mb.any():
        return None
    a_sub, inc_a = restrict(a, ma)
    b_sub, inc_b = restrict(b, mb)
    phi = iso_search(a_sub, b_sub)
    if phi is None:
        return None
    fwd = [0] * a.n
    pos_a = {x: i for i, x in enumerate(inc_a.map)}
    for x in range(a.n):
        fwd[x] = inc_b.map[phi.map[pos_a[x]]] if ma[x] else 0
    back = [0] * b.n
    pos_b = {y: j for j, y in enumerate(inc_b.map)}
    inv_phi = [0] * a_sub.n
    for i, v in enumerate(phi.map):
        inv_phi[v] = i
    for y in range(b.n):
        back[y] = inc_a.map[inv_phi[pos_b[y]]] if mb[y] else 0
    return Morph(a, b, tuple(fwd)), Morph(b, a, tuple(back))


def stable_iso(a: PreObj, b: PreObj) -> bool:
    return stable_iso_witness(a, b) is not None


def stable_inverse(f: Morph, budget: int = DEFAULT_BUDGET) -> Morph | None:
    """Brute-force stable inverse of a single morphism, if one exists."""
    id_dom = identity(f.dom)
    id_cod = identity(f.cod)
    for row in monotone_maps(f.cod, f.dom, budget):
        g = Morph(f.cod, f.dom, tuple(row))
        if stable_eq(compose(g, f), id_dom) and stable_eq(compose(f, g), id_cod):
            return g
    return None


# ----------------------------------------------------------------------
# kernels and cokernels

def stable_kernel(f: Morph) -> StableHom:
    """The prekernel, viewed in the stable category."""
    return StableHom(prekernel(f))


def stable_cokernel(f: Morph) -> StableHom:
    """The precokernel, viewed in the stable category."""
    return StableHom(precokernel(f))


def verify_stable_kernel(k: StableHom, f: Morph, tests: list[PreObj],
                         budget: int = DEFAULT_BUDGET) -> bool:
    """Universal property of the kernel, quantified over probe objects.

    f o k must be trivial, and every lam: Y -> dom(f) with f o lam trivial
    must factor through k up to stable equality, uniquely up to stable
    equality.
    """
    krep = k.rep
    if krep.cod != f.dom:
        raise ValidationError("candidate kernel must land in the domain of f")
    if not is_trivial_morphism(compose(f, krep)):
        return False
    a, x = f.dom, krep.dom
    fmap = np.array(f.map)
    kmap = np.array(krep.map)
    for y in tests:
        lams = monotone_maps(y, a, budget)
        primes = monotone_maps(y, x, budget)
        part_y = components(y)
        triv = np.ones(len(lams), dtype=bool)
        for u, v in y.rel.pairs():
            triv &= fmap[lams[:, u]] == fmap[lams[:, v]]
        prime_sigs_in_a = [
            _map_signature(kmap[row], part_y.blocks, y.rel.bits) for row in primes
        ]
        prime_sigs_in_x = [
            _map_signature(row, part_y.blocks, y.rel.bits) for row in primes
        ]
        for lam in lams[triv]:
            lam_sig = _map_signature(lam, part_y.blocks, y.rel.bits)
            found = [i for i, s in enumerate(prime_sigs_in_a) if s == lam_sig]
            if not found:
                return False
            first = prime_sigs_in_x[found[0]]
            if any(prime_sigs_in_x[i] != first for i in found[1:]):
                return False
    return True


def verify_stable_cokernel(p: StableHom, f: Morph, tests: list[PreObj],
                           budget: int = DEFAULT_BUDGET) -> bool:
    """Dual universal property, quantified over probe objects."""
    prep = p.rep
    if prep.dom != f.cod:
        raise ValidationError("candidate cokernel must start at the codomain of f")
    if not is_trivial_morphism(compose(prep, f)):
        return False
    b, x = f.cod, prep.cod
    pmap = list(prep.map)
    fmap = list(f.map)
    part_b = components(b)
    part_x = components(x)
    for t in tests:
        lams = monotone_maps(b, t, budget)
        after = monotone_maps(x, t, budget)
        composed = after[:, pmap] if len(after) else after
        triv = np.ones(len(lams), dtype=bool)
        for a1, a2 in f.dom.rel.pairs():
            triv &= lams[:, fmap[a1]] == lams[:, fmap[a2]]
        comp_sigs = [
            _map_signature(row, part_b.blocks, b.rel.bits) for row in composed
        ]
        after_sigs = [
            _map_signature(row, part_x.blocks, x.rel.bits) for row in after
        ]
        for lam in lams[triv]:
            lam_sig = _map_signature(lam, part_b.blocks, b.rel.bits)
            found = [i for i, s in enumerate(comp_sigs) if s == lam_sig]
            if not found:
                return False
            first = after_sigs[found[0]]
            if any(after_sigs[i] != first for i in found[1:]):
                return False
    return True


# ----------------------------------------------------------------------
# classification of short exact sequences

def classify_short_exact(f: Morph, g: Morph, tests: list[PreObj],
                         budget: int = DEFAULT_BUDGET) -> tuple[Rel, Morph, Morph]:
    """Match a stable short exact sequence to its canonical quotient form.

    Returns the equivalence generated by the prekernel relation of g,
    plus stable isomorphism witnesses: left: dom(f) -> prekernel domain
    with k o left = f on the nose, and right: cod(g) -> quotient with
    right o g stably equal to the canonical projection.  Raises
    NotShortExactError naming the failing half otherwise.
    """
    if f.cod != g.dom:
        raise ValidationError("sequence legs do not compose")
    if not verify_stable_kernel(StableHom(f), g, tests, budget):
        raise NotShortExactError(
            "first morphism is not a kernel of the second in the stable category")
    if not verify_stable_cokernel(StableHom(g), f, tests, budget):
        raise NotShortExactError(
            "second morphism is not a cokernel of the first in the stable category")
    k = prekernel(g)
    sim = image_equivalence(k)
    pi = precokernel(k)
    left = Morph(f.dom, k.dom, f.map)
    if stable_inverse(left, budget) is None:
        raise NotShortExactError("left witness is not a stable isomorphism")
    part_b = components(g.dom)
    pi_sig = _map_signature(pi.map, part_b.blocks, g.dom.rel.bits)
    gmap = list(g.map)
    for row in monotone_maps(g.cod, pi.cod, budget):
        comp = [int(row[z]) for z in gmap]
        if _map_signature(comp, part_b.blocks, g.dom.rel.bits) != pi_sig:
            continue
        right = Morph(g.cod, pi.cod, tuple(int(v) for v in row))
        if stable_inverse(right, budget) is not None:
            return sim, left, right
    raise NotShortExactError("no stable right witness found")


def verify_coproduct_preservation(objs: list[PreObj], tests: list[PreObj],
                                  budget: int = DEFAULT_BUDGET) -> bool:
    """Coproducts survive the passage to the stable category.

    For every probe Y, a stable morphism out of the coproduct must be
    exactly determined by its restrictions along the injections, and
    every family of components must be realized.
    """
    summed, _ = coproduct(objs)
    offsets = []
    off = 0
    for a in objs:
        offsets.append(off)
        off += a.n
    part_c = components(summed)
    factor_parts = [components(a) for a in objs]
    for y in tests:
        cmaps = monotone_maps(summed, y, budget)
        groups: dict[tuple, set] = {}
        for row in cmaps:
            key = tuple(
                _map_signature(row[offsets[i]:offsets[i] + objs[i].n],
                               factor_parts[i].blocks, objs[i].rel.bits)
                for i in range(len(objs))
            )
            whole = _map_signature(row, part_c.blocks, summed.rel.bits)
            groups.setdefault(key, set()).add(whole)
        if any(len(v) > 1 for v in groups.values()):
            return False  # two stably distinct maps share all restrictions
        factor_sigs = []
        for i, a in enumerate(objs):
            sigs = {
                _map_signature(row, factor_parts[i].blocks, a.rel.bits)
                for row in monotone_maps(a, y, budget)
            }
            factor_sigs.append(sigs)
        for combo in iproduct(*factor_sigs):
            if tuple(combo) not in groups:
                return False  # some family of components is not realized
    return True

"""Boolean relation algebra on the finite carriers {0, ..., n-1}.

A relation is a dense n x n boolean matrix; entry (a, b) means "a is
related to b".  Carriers are tiny (exhaustive verification dominates
cost), so O(n^3) closures are deliberately preferred over anything
clever.  Carrier size 0 is allowed here for internal convenience; the
category layer rejects empty objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import ValidationError

__all__ = ["Rel", "Partition", "generated_equivalence", "join_preorders"]


def _freeze(n: int, bits) -> np.ndarray:
    a = np.asarray(bits, dtype=bool)
    if a.shape != (n, n):
        raise ValidationError(f"relation matrix must be {n}x{n}, got shape {a.shape}")
    a = a.copy()
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Rel:
    """An arbitrary binary relation on {0..n-1}.

    No structural property is baked in; reflexivity, transitivity and
    friends are queried per value.  Instances are immutable and hashable,
    so they work as dict keys and memoization keys.
    """

    n: int
    bits: np.ndarray

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("carrier size must be >= 0")
        object.__setattr__(self, "bits", _freeze(self.n, self.bits))

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def identity(cls, n: int) -> "Rel":
        """The equality relation (the diagonal)."""
        return cls(n, np.eye(n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "Rel":
        return cls(n, np.ones((n, n), dtype=bool))

    @classmethod
    def empty(cls, n: int) -> "Rel":
        return cls(n, np.zeros((n, n), dtype=bool))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]],
                   reflexive: bool = False) -> "Rel":
        bits = np.eye(n, dtype=bool) if reflexive else np.zeros((n, n), dtype=bool)
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValidationError(f"pair ({a}, {b}) out of range for n={n}")
            bits[a, b] = True
        return cls(n, bits)

    # ------------------------------------------------------------------
    # value semantics

    def __eq__(self, other) -> bool:
        return (isinstance(other, Rel) and self.n == other.n
                and np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def __getitem__(self, ab: tuple[int, int]) -> bool:
        return bool(self.bits[ab])

    def __repr__(self) -> str:
        return f"Rel({self.n}, {sorted(self.pairs())})"

    def pairs(self, include_diagonal: bool = False) -> Iterator[tuple[int, int]]:
        """Related pairs (a, b), diagonal omitted unless requested."""
        for a, b in zip(*np.nonzero(self.bits)):
            if include_diagonal or a != b:
                yield int(a), int(b)

    # ------------------------------------------------------------------
    # predicates

    def is_reflexive(self) -> bool:
        return bool(self.bits.diagonal().all())

    def is_transitive(self) -> bool:
        b = self.bits
        reach = (b.astype(np.uint8) @ b.astype(np.uint8)) > 0
        return bool(((b | reach) == b).all())

    def is_symmetric(self) -> bool:
        return bool((self.bits == self.bits.T).all())

    def is_antisymmetric(self) -> bool:
        both = self.bits & self.bits.T
        return bool((both <= np.eye(self.n, dtype=bool)).all())

    def is_preorder(self) -> bool:
        return self.is_reflexive() and self.is_transitive()

    def is_equivalence(self) -> bool:
        return self.is_preorder() and self.is_symmetric()

    def is_partial_order(self) -> bool:
        return self.is_preorder() and self.is_antisymmetric()

    # ------------------------------------------------------------------
    # closures and lattice operations

    def transitive_closure(self) -> "Rel":
        """Smallest transitive relation containing this one."""
        cur = self.bits.copy()
        while True:
            step = (cur.astype(np.uint8) @ cur.astype(np.uint8)) > 0
            nxt = cur | step
            if np.array_equal(nxt, cur):
                return Rel(self.n, cur)
            cur = nxt

    def reflexive_closure(self) -> "Rel":
        return Rel(self.n, self.bits | np.eye(self.n, dtype=bool))

    def equivalence_closure(self) -> "Rel":
        """Smallest equivalence containing this relation.

        Two elements end up related exactly when a zig-zag chain joins
        them, each consecutive pair related in one direction or the other.
        """
        sym = Rel(self.n, self.bits | self.bits.T)
        return sym.reflexive_closure().transitive_closure()

    def converse(self) -> "Rel":
        return Rel(self.n, self.bits.T)

    def meet(self, other: "Rel") -> "Rel":
        """Pointwise intersection; the meet in the lattice of relations."""
        self._same_carrier(other)
        return Rel(self.n, self.bits & other.bits)

    def union(self, other: "Rel") -> "Rel":
        self._same_carrier(other)
        return Rel(self.n, self.bits | other.bits)

    def is_subrel(self, other: "Rel") -> bool:
        self._same_carrier(other)
        return bool((self.bits <= other.bits).all())

    __and__ = meet
    __or__ = union
    __le__ = is_subrel

    def _same_carrier(self, other: "Rel") -> None:
        if self.n != other.n:
            raise ValidationError(f"carrier mismatch: {self.n} vs {other.n}")


def generated_equivalence(pairs: Iterable[tuple[int, int]], n: int) -> Rel:
    """Smallest equivalence relation on {0..n-1} containing the given pairs."""
    return Rel.from_pairs(n, pairs).equivalence_closure()


def join_preorders(r: Rel, s: Rel) -> Rel:
    """Least preorder above two preorders: the transitive closure of their union."""
    if not r.is_preorder():
        raise ValidationError("left argument is not a preorder")
    if not s.is_preorder():
        raise ValidationError("right argument is not a preorder")
    return r.union(s).transitive_closure()


@dataclass(frozen=True)
class Partition:
    """A partition of {0..n-1}: block index per element plus the block lists.

    Blocks are numbered by their smallest member, in increasing order, so
    every derived quotient carrier is deterministic.
    """

    class_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "class_of", tuple(int(c) for c in self.class_of))
        object.__setattr__(
            self, "blocks", tuple(tuple(int(x) for x in blk) for blk in self.blocks))
        n = len(self.class_of)
        seen = sorted(x for blk in self.blocks for x in blk)
        if seen != list(range(n)):
            raise ValidationError("blocks do not partition the carrier")
        for i, blk in enumerate(self.blocks):
            if list(blk) != sorted(blk):
                raise ValidationError("block members must be sorted")
            for x in blk:
                if self.class_of[x] != i:
                    raise ValidationError("class_of inconsistent with blocks")
        mins = [blk[0] for blk in self.blocks]
        if mins != sorted(mins):
            raise ValidationError("blocks must be ordered by smallest member")

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def size(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_class_ids(cls, ids: Iterable[int]) -> "Partition":
        """Build from an arbitrary element -> label map, renumbering blocks."""
        ids = list(ids)
        relabel: dict[int, int] = {}
        blocks: list[list[int]] = []
        for x, c in enumerate(ids):
            if c not in relabel:
                relabel[c] = len(blocks)
                blocks.append([])
            blocks[relabel[c]].append(x)
        class_of = tuple(relabel[c] for c in ids)
        return cls(class_of, tuple(tuple(b) for b in blocks))

    @classmethod
    def from_equivalence(cls, rel: Rel) -> "Partition":
        if not rel.is_equivalence():
            raise ValidationError("relation is not an equivalence")
        # representative of a class = its smallest member = first True column
        reps = rel.bits.argmax(axis=1)
        return cls.from_class_ids(int(r) for r in reps)

    def to_equivalence(self) -> Rel:
        ids = np.array(self.class_of)
        return Rel(self.n, ids[:, None] == ids[None, :])

    def block_of(self, x: int) -> tuple[int, ...]:
        return self.blocks[self.class_of[x]]

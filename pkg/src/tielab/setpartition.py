"""Set partitions of {1..n}: the monoid P_n.

A partition is stored as its restricted growth string: ``labels[k]`` is the
index of the block containing k+1, blocks numbered by their minima.  That
is exactly the standard indexation, so equality and hashing are literal.

The product ``I * J`` is the join (finest common coarsening), ``I <= J``
means every block of I lies in a block of J, and a permutation w acts by
w(I) = {w(I_1), ..., w(I_m)}.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .perm import Perm, cycles

__all__ = ["SetPartition", "apply_perm", "cycle_partition", "enumerate_partitions", "join", "leq", "mu"]

MAX_ENUMERATE = 8


def _canon(labels) -> tuple[int, ...]:
    seen: dict = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


class SetPartition:
    """Immutable set partition of {1..n}."""

    __slots__ = ("labels", "_hash")

    def __init__(self, labels):
        self.labels = _canon(labels)
        self._hash = hash(self.labels)

    @classmethod
    def _raw(cls, labels) -> "SetPartition":
        p = object.__new__(cls)
        p.labels = labels
        p._hash = hash(labels)
        return p

    @classmethod
    def from_blocks(cls, blocks, n: int | None = None) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        elems = [x for b in blocks for x in b]
        if n is None:
            n = max(elems, default=0)
        if sorted(elems) != list(range(1, n + 1)):
            raise ValueError("blocks must be disjoint and cover 1..n")
        labels = [0] * n
        for k, b in enumerate(blocks):
            for x in b:
                labels[x - 1] = k
        return cls(labels)

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls._raw(tuple(range(n)))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse ``"{1,3|2,5,6|4}"``; blocks may be unsorted."""
        m = re.fullmatch(r"\s*\{(.*)\}\s*", text)
        if not m:
            raise ValueError(f"malformed set partition {text!r}")
        blocks = []
        for part in m.group(1).split("|"):
            items = [x for x in re.split(r"[,\s]+", part.strip()) if x]
            if not items:
                raise ValueError(f"empty block in {text!r}")
            blocks.append([int(x) for x in items])
        return cls.from_blocks(blocks)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list = [[] for _ in range(self.num_blocks)]
        for i, k in enumerate(self.labels):
            out[k].append(i + 1)
        return tuple(tuple(b) for b in out)

    @property
    def num_blocks(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def block_of(self, i: int) -> tuple[int, ...]:
        k = self.labels[i - 1]
        return tuple(j + 1 for j, x in enumerate(self.labels) if x == k)

    def same_block(self, i: int, j: int) -> bool:
        return self.labels[i - 1] == self.labels[j - 1]

    def join(self, other: "SetPartition") -> "SetPartition":
        if other.n != self.n:
            raise ValueError("mismatched n")
        return _join(self.labels, other.labels)

    __mul__ = join

    def leq(self, other: "SetPartition") -> bool:
        if other.n != self.n:
            raise ValueError("mismatched n")
        owner: dict = {}
        for a, b in zip(self.labels, other.labels):
            if owner.setdefault(a, b) != b:
                return False
        return True

    __le__ = leq

    def apply_perm(self, w: Perm) -> "SetPartition":
        if len(w) != self.n:
            raise ValueError("size mismatch")
        labels = [0] * self.n
        for i, k in enumerate(self.labels):
            labels[w[i]] = k
        return SetPartition(labels)

    def embed(self, n: int) -> "SetPartition":
        """Add singletons n+1.. so the partition lives on n points."""
        m = self.num_blocks
        return SetPartition._raw(self.labels + tuple(range(m, m + n - self.n)))

    def drop_last(self) -> "SetPartition":
        """Delete the point n (its block shrinks by one)."""
        return SetPartition(self.labels[:-1])

    def isolate(self, i: int) -> "SetPartition":
        """Remove i from its block and make it a singleton."""
        labels = list(self.labels)
        labels[i - 1] = -1
        return SetPartition(labels)

    def is_singletons(self) -> bool:
        return self.num_blocks == self.n

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.labels == other.labels

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.labels < other.labels

    def __str__(self):
        return "{" + "|".join(",".join(map(str, b)) for b in self.blocks) + "}"

    def __repr__(self):
        return f"SetPartition({self})"


@lru_cache(maxsize=65536)
def _join(a: tuple, b: tuple) -> SetPartition:
    parent = list(range(len(a)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for labels in (a, b):
        first: dict = {}
        for i, k in enumerate(labels):
            if k in first:
                r1, r2 = find(first[k]), find(i)
                if r1 != r2:
                    parent[max(r1, r2)] = min(r1, r2)
            else:
                first[k] = i
    return SetPartition([find(i) for i in range(len(a))])


def mu(n: int, i: int, j: int) -> SetPartition:
    """The partition whose only non-singleton block is {i, j}."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("index out of range")
    labels = list(range(n))
    labels[max(i, j) - 1] = min(i, j) - 1
    return SetPartition(labels)


def enumerate_partitions(n: int) -> list[SetPartition]:
    """All partitions of {1..n} in lexicographic order of growth strings."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATE:
        raise ValueError(f"n={n} exceeds the enumeration guard {MAX_ENUMERATE}")
    out = []

    def grow(prefix, top):
        if len(prefix) == n:
            out.append(SetPartition._raw(tuple(prefix)))
            return
        for k in range(top + 2):
            grow(prefix + [k], max(top, k))

    grow([0], 0)
    return out


def cycle_partition(w: Perm) -> SetPartition:
    """Partition of the points into the cycles of w."""
    labels = [0] * len(w)
    for k, c in enumerate(cycles(w)):
        for x in c:
            labels[x] = k
    return SetPartition(labels)


def join(I: SetPartition, J: SetPartition) -> SetPartition:
    return I.join(J)


def leq(I: SetPartition, J: SetPartition) -> bool:
    return I.leq(J)


def apply_perm(w: Perm, I: SetPartition) -> SetPartition:
    return I.apply_perm(w)

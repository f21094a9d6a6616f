"""Permutations of {0..n-1} stored as image tuples.

``w[i]`` is the image of point i.  Composition is functional:
``compose(v, w)(i) == v[w[i]]``, so a braid word read left to right maps to
the composition of its transpositions in the same order (the rightmost letter
acts first).  Generator indices are 1-based: ``s_i`` swaps the 0-based points
i-1 and i, that is strands i and i+1.
"""

from __future__ import annotations

from functools import lru_cache

Perm = tuple

__all__ = [
    "Perm",
    "compose",
    "cycles",
    "descending_cycle",
    "extend",
    "from_cycles",
    "identity",
    "inverse",
    "is_left_ascent",
    "is_right_ascent",
    "length",
    "lmul_s",
    "reduced_word",
    "rmul_s",
    "transposition",
]


def identity(n: int) -> Perm:
    return tuple(range(n))


def transposition(i: int, n: int) -> Perm:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    w = list(range(n))
    w[i - 1], w[i] = i, i - 1
    return tuple(w)


def compose(v: Perm, w: Perm) -> Perm:
    return tuple(v[j] for j in w)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, j in enumerate(w):
        inv[j] = i
    return tuple(inv)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def lmul_s(i: int, w: Perm) -> Perm:
    """s_i o w: swap the values i-1 and i."""
    a, b = i - 1, i
    return tuple(b if x == a else a if x == b else x for x in w)


def rmul_s(w: Perm, i: int) -> Perm:
    """w o s_i: swap the entries in positions i-1 and i."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_left_ascent(i: int, w: Perm) -> bool:
    """length(s_i w) > length(w)."""
    return w.index(i - 1) < w.index(i)


def is_right_ascent(w: Perm, i: int) -> bool:
    """length(w s_i) > length(w)."""
    return w[i - 1] < w[i]


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word (i1, ..., ik) with w = s_i1 o ... o s_ik."""
    word = []
    cur = list(w)
    while True:
        for k in range(len(cur) - 1):
            if cur[k] > cur[k + 1]:
                cur[k], cur[k + 1] = cur[k + 1], cur[k]
                word.append(k + 1)
                break
        else:
            break
    return tuple(reversed(word))


def descending_cycle(n: int, i: int) -> Perm:
    """s_{n-1} o s_{n-2} o ... o s_i on n points (1-based i); the identity if i == n."""
    w = identity(n)
    for k in range(n - 1, i - 1, -1):
        w = compose(w, transposition(k, n))
    return w


def extend(w: Perm, n: int) -> Perm:
    return tuple(w) + tuple(range(len(w), n))


def cycles(w: Perm) -> list[tuple[int, ...]]:
    """Cycles of w (fixed points included), each starting at its minimum, sorted."""
    seen = set()
    out = []
    for i in range(len(w)):
        if i in seen:
            continue
        c = [i]
        seen.add(i)
        j = w[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = w[j]
        out.append(tuple(c))
    return out


def from_cycles(n: int, cyc) -> Perm:
    """Build a permutation from 1-based cycles, e.g. ``from_cycles(6, [(1, 6), (2, 3, 4, 5)])``."""
    w = list(range(n))
    for c in cyc:
        for a, b in zip(c, c[1:] + c[:1]):
            w[a - 1] = b - 1
    if sorted(w) != list(range(n)):
        raise ValueError("cycles do not define a permutation")
    return tuple(w)

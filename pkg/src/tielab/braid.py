"""Braid words, tied braid words and Markov moves.

A :class:`BraidWord` is a strand count and a tuple of nonzero integers:
``i > 0`` is sigma_i, ``i < 0`` is sigma_|i|^-1.  A :class:`TiedBraidWord`
also allows tie tokens eta_i.  Its tokens are pairs ``("s", i)`` (signed i)
and ``("e", i)``.

The tied braid monoid TB_n is the semidirect product P_n x| B_n with

    (I, a) (J, b) = (I * p(a)(J), a b)

where p : B_n -> S_n sends sigma_i to s_i.  :func:`tied_normal_form` folds
a word through that law; the closure of a tied braid is the closure of its
braid part with components tied according to :func:`closure_partition`.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from . import perm as P
from .setpartition import SetPartition, cycle_partition, mu

__all__ = [
    "BraidWord",
    "TiedBraidWord",
    "TiedNormalForm",
    "closure_partition",
    "closure_stats",
    "markov_fuzz",
    "parse",
    "perm_of",
    "tie_tokens",
    "tied_normal_form",
]


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"letter {x} out of range for n={self.n}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        n = max(self.n, other.n)
        return BraidWord(n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def with_strands(self, n: int) -> "BraidWord":
        return BraidWord(n, self.letters)

    def tied(self) -> "TiedBraidWord":
        return TiedBraidWord(self.n, tuple(("s", x) for x in self.letters))

    def __str__(self):
        body = " ".join(f"s{x}" if x > 0 else f"-s{-x}" for x in self.letters)
        return f"n={self.n}: {body}".rstrip()


@dataclass(frozen=True)
class TiedBraidWord:
    n: int
    tokens: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        toks = tuple((str(k), int(i)) for k, i in self.tokens)
        object.__setattr__(self, "tokens", toks)
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        for k, i in toks:
            if k == "s":
                if i == 0 or abs(i) > self.n - 1:
                    raise ValueError(f"letter {i} out of range for n={self.n}")
            elif k == "e":
                if not 1 <= i <= self.n - 1:
                    raise ValueError(f"tie e{i} out of range for n={self.n}")
            else:
                raise ValueError(f"unknown token kind {k!r}")

    def __len__(self):
        return len(self.tokens)

    def __mul__(self, other: "TiedBraidWord") -> "TiedBraidWord":
        return TiedBraidWord(max(self.n, other.n), self.tokens + other.tokens)

    @property
    def braid(self) -> BraidWord:
        """The braid obtained by forgetting the ties."""
        return BraidWord(self.n, tuple(i for k, i in self.tokens if k == "s"))

    def exponent_sum(self) -> int:
        return self.braid.exponent_sum()

    def with_strands(self, n: int) -> "TiedBraidWord":
        return TiedBraidWord(n, self.tokens)

    def __str__(self):
        body = " ".join(
            (f"s{i}" if i > 0 else f"-s{-i}") if k == "s" else f"e{i}" for k, i in self.tokens
        )
        return f"n={self.n}: {body}".rstrip()


@dataclass(frozen=True)
class TiedNormalForm:
    I: SetPartition
    word: BraidWord

    def __str__(self):
        return f"({self.I}, {self.word})"


def perm_of(w: BraidWord) -> P.Perm:
    """Image in S_n: sigma_i^(+-1) -> s_i, composed left to right."""
    out = P.identity(w.n)
    for x in w.letters:
        out = P.rmul_s(out, abs(x))
    return out


def closure_stats(w: BraidWord) -> tuple[int, int]:
    """(number of components of the closure, exponent sum)."""
    return len(P.cycles(perm_of(w))), w.exponent_sum()


def tied_normal_form(tw: TiedBraidWord) -> TiedNormalForm:
    I = SetPartition.singletons(tw.n)
    p = P.identity(tw.n)
    letters = []
    for k, i in tw.tokens:
        if k == "s":
            letters.append(i)
            p = P.rmul_s(p, abs(i))
        else:
            I = I * mu(tw.n, i, i + 1).apply_perm(p)
    return TiedNormalForm(I, BraidWord(tw.n, tuple(letters)))


def closure_partition(nf: TiedNormalForm | TiedBraidWord) -> SetPartition:
    """Ties between the components of the closure.

    Components are the cycles of p(word), numbered by their least strand.
    """
    if isinstance(nf, TiedBraidWord):
        nf = tied_normal_form(nf)
    p = perm_of(nf.word)
    joined = nf.I * cycle_partition(p)
    comp = [0] * nf.I.n
    for k, c in enumerate(P.cycles(p)):
        for x in c:
            comp[x] = k
    ncomp = len(P.cycles(p))
    labels = [None] * ncomp
    for x in range(nf.I.n):
        labels[comp[x]] = joined.labels[x]
    return SetPartition(labels)


def tie_tokens(i: int, j: int) -> tuple[tuple[str, int], ...]:
    """Tokens for the tie between strands i < j:
    sigma_i ... sigma_{j-2} eta_{j-1} sigma_{j-2}^-1 ... sigma_i^-1."""
    if not i < j:
        raise ValueError("need i < j")
    up = tuple(("s", k) for k in range(i, j - 1))
    down = tuple(("s", -k) for k in range(j - 2, i - 1, -1))
    return up + (("e", j - 1),) + down


# ---------------------------------------------------------------------------
# Markov moves


def _free_reduce(tokens: list) -> list:
    out: list = []
    for t in tokens:
        if out and t[0] == "s" and out[-1][0] == "s" and out[-1][1] == -t[1]:
            out.pop()
        else:
            out.append(t)
    return out


def markov_fuzz(w, steps: int, seed: int, *, max_strands: int = 5, max_length: int = 14):
    """Apply a reproducible random sequence of (t-)Markov moves.

    Moves: cyclic rotation, conjugation by a generator, positive or negative
    stabilization (n -> n+1), destabilization, and for tied words
    t-stabilization by a tie between two strands of one cycle.  The result
    closes to a link isotopic (t-isotopic) to the closure of ``w``.
    """
    rng = random.Random(seed)
    tied = isinstance(w, TiedBraidWord)
    n = w.n
    tokens = list(w.tokens) if tied else [("s", x) for x in w.letters]
    for _ in range(steps):
        moves = []
        if len(tokens) >= 2:
            moves.append("rotate")
        if n >= 2 and len(tokens) + 2 <= max_length:
            moves.append("conjugate")
        if n < max_strands and len(tokens) + 1 <= max_length:
            moves.append("stabilize")
        if n >= 2 and tokens and tokens[-1][0] == "s" and abs(tokens[-1][1]) == n - 1:
            if all(abs(i) < n - 1 for _, i in tokens[:-1]):
                moves.append("destabilize")
        if tied:
            moves.append("tie")
        if not moves:
            break
        move = rng.choice(moves)
        if move == "rotate":
            k = rng.randrange(1, len(tokens))
            tokens = tokens[k:] + tokens[:k]
        elif move == "conjugate":
            g = rng.randrange(1, n) * rng.choice((1, -1))
            tokens = _free_reduce([("s", g)] + tokens + [("s", -g)])
        elif move == "stabilize":
            tokens.append(("s", n * rng.choice((1, -1))))
            n += 1
        elif move == "destabilize":
            tokens.pop()
            n -= 1
        else:
            p = P.identity(n)
            for k, i in tokens:
                if k == "s":
                    p = P.rmul_s(p, abs(i))
            pairs = [(a + 1, b + 1) for c in P.cycles(p) for a in c for b in c if a < b]
            if not pairs:
                continue
            i, j = rng.choice(pairs)
            extra = tie_tokens(i, j)
            if len(tokens) + len(extra) > max_length + 4:
                continue
            tokens = tokens + list(extra)
    if tied:
        return TiedBraidWord(n, tuple(tokens))
    return BraidWord(n, tuple(i for _, i in tokens))


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"^(-?)(s|e)?(-?\d+)$")


def parse(text: str, tied: bool = False):
    """Parse ``["n=" INT ":"] TOKEN*`` with tokens ``3``, ``-3``, ``s3``, ``-s3``, ``e3``.

    Returns a TiedBraidWord when ``tied`` is set or a tie token occurs.
    """
    text = text.strip()
    n = None
    m = re.match(r"^n\s*=\s*(\d+)\s*:", text)
    if m:
        n = int(m.group(1))
        text = text[m.end():]
    tokens = []
    for raw in re.split(r"[\s,]+", text.strip()):
        if not raw:
            continue
        t = _TOKEN_RE.match(raw)
        if not t:
            raise ValueError(f"malformed token {raw!r}")
        neg, kind, num = t.groups()
        idx = int(num)
        if num.startswith("-") and (neg or kind):
            raise ValueError(f"malformed token {raw!r}")
        if kind is None:
            kind = "s"
        if idx == 0:
            raise ValueError(f"malformed token {raw!r} (indices start at 1)")
        if kind == "e" and neg:
            raise ValueError(f"ties are unsigned: {raw!r}")
        if neg:
            idx = -idx
        tokens.append((kind, idx))
    top = max((abs(i) for _, i in tokens), default=0)
    if n is None:
        n = top + 1
    elif top > n - 1:
        raise ValueError(f"index {top} out of range for n={n}")
    if tied or any(k == "e" for k, _ in tokens):
        return TiedBraidWord(n, tuple(tokens))
    return BraidWord(n, tuple(i for _, i in tokens))

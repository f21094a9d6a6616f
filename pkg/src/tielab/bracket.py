"""Kauffman bracket on planar diagram codes, the normalized invariant f and
the Jones polynomial.

A crossing is a record (a, b, c, d) of arc labels read counterclockwise
starting at the incoming under-arc.  For such a record the over-strand runs
b-d, the A-regions are the two regions between a, d and between b, c, and
the A-smoothing therefore joins a with b and c with d:

    <X> = A <a-b, c-d> + B <a-d, b-c>.

With B = A^-1 and z = -A^2 - A^-2 a positive kink gives -A^3, and
f(D) = (-A^3)^(-w(D)) <D>.  The Jones polynomial is f at A = t^(-1/4).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .braid import BraidWord
from .scalars import LaurentPoly, PolyRing

__all__ = [
    "BracketValue",
    "PDCode",
    "braid_to_pd",
    "bracket",
    "f_invariant",
    "jones",
    "mirror",
    "parse_pd",
    "writhe",
]

GENERIC = PolyRing("A", "B", "z")
SPECIAL = PolyRing("A")
JONES = PolyRing("t", quarter=("t",))

MAX_CROSSINGS = 24


@dataclass(frozen=True)
class PDCode:
    """Crossing records, free loops and (optionally) crossing signs."""

    crossings: tuple[tuple[int, int, int, int], ...] = ()
    free_loops: int = 0
    signs: tuple[int, ...] | None = None

    def __post_init__(self):
        xs = tuple(tuple(int(x) for x in c) for c in self.crossings)
        object.__setattr__(self, "crossings", xs)
        if self.signs is not None:
            object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        self.validate()

    def validate(self):
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        count: dict[int, int] = {}
        for c in self.crossings:
            if len(c) != 4:
                raise ValueError(f"crossing {c} does not have four slots")
            for x in c:
                count[x] = count.get(x, 0) + 1
        bad = sorted(x for x, k in count.items() if k != 2)
        if bad:
            raise ValueError(f"arc labels must occur exactly twice: {bad}")
        if self.signs is not None:
            if len(self.signs) != len(self.crossings):
                raise ValueError("one sign per crossing is required")
            if any(s not in (1, -1) for s in self.signs):
                raise ValueError("signs must be +1 or -1")
        if not self.crossings and not self.free_loops:
            raise ValueError("empty diagram")

    @property
    def oriented(self) -> bool:
        return self.signs is not None

    def labels(self) -> list[int]:
        return sorted({x for c in self.crossings for x in c})

    def with_loops(self, k: int) -> "PDCode":
        return PDCode(self.crossings, self.free_loops + k, self.signs)

    def __str__(self):
        parts = [f"X[{a},{b},{c},{d}]" for a, b, c, d in self.crossings]
        if self.free_loops:
            parts.append(f"O*{self.free_loops}")
        if self.signs is not None and self.crossings:
            parts.append("or=" + ",".join(f"{s:+d}" for s in self.signs))
        return " ".join(parts)


@dataclass(frozen=True)
class BracketValue:
    value: LaurentPoly
    mode: str
    states: int = field(default=0, compare=False)

    def __str__(self):
        return self.value.to_text(factor_order=("z", "A", "B") if self.mode == "generic" else None)


_X_RE = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_pd(text: str) -> PDCode:
    """Parse ``X[a,b,c,d] ... [O*k] [or=+1,-1,...]``."""
    crossings, loops, signs = [], 0, None
    rest = text
    for m in _X_RE.finditer(text):
        crossings.append(tuple(int(g) for g in m.groups()))
    rest = _X_RE.sub(" ", rest)
    for m in re.finditer(r"\bO(?:\s*\*\s*(\d+))?", rest):
        loops += int(m.group(1)) if m.group(1) else 1
    rest = re.sub(r"\bO(?:\s*\*\s*\d+)?", " ", rest)
    m = re.search(r"\bor\s*=\s*([-+\d,\s]+)", rest)
    if m:
        signs = tuple(int(s) for s in m.group(1).replace(" ", "").split(",") if s)
        rest = rest[: m.start()] + rest[m.end():]
    if rest.strip(" \t\n,;"):
        raise ValueError(f"cannot parse PD text near {rest.strip()[:20]!r}")
    return PDCode(tuple(crossings), loops, signs)


def braid_to_pd(w: BraidWord) -> PDCode:
    """Diagram of the closure of w with strands oriented downward.

    sigma_i: the strand at position i+1 crosses over to position i.
    """
    n = w.n
    cur = list(range(1, n + 1))
    touched = [False] * n
    nxt = n + 1
    raw, signs = [], []
    for x in w.letters:
        i = abs(x) - 1
        a_in, b_in = cur[i], cur[i + 1]
        b_out, a_out = nxt, nxt + 1
        nxt += 2
        if x > 0:
            raw.append((a_in, b_out, a_out, b_in))
        else:
            raw.append((b_in, a_in, b_out, a_out))
        signs.append(1 if x > 0 else -1)
        cur[i], cur[i + 1] = b_out, a_out
        touched[i] = touched[i + 1] = True
    rename = {cur[k]: k + 1 for k in range(n) if touched[k]}
    used = sorted({rename.get(x, x) for c in raw for x in c})
    compact = {x: k + 1 for k, x in enumerate(used)}
    xs = tuple(tuple(compact[rename.get(x, x)] for x in c) for c in raw)
    return PDCode(xs, touched.count(False), tuple(signs))


def mirror(pd: PDCode) -> PDCode:
    """Exchange over and under at every crossing, keeping orientations."""
    if pd.signs is None:
        raise ValueError("mirror needs an oriented diagram")
    xs = []
    for (a, b, c, d), s in zip(pd.crossings, pd.signs):
        xs.append((d, a, b, c) if s > 0 else (b, c, d, a))
    return PDCode(tuple(xs), pd.free_loops, tuple(-s for s in pd.signs))


def writhe(pd: PDCode) -> int:
    if pd.signs is None:
        raise ValueError("writhe needs an oriented diagram")
    return sum(pd.signs)


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _state_counts(pd: PDCode, limit: int) -> tuple[dict, int]:
    """{(number of A marks, loops): states} over all 2^c states."""
    c = len(pd.crossings)
    if c > limit:
        raise OverflowError(f"{c} crossings exceed the guard of {limit}")
    labels = pd.labels()
    index = {x: k for k, x in enumerate(labels)}
    xs = [tuple(index[x] for x in cr) for cr in pd.crossings]
    m = len(labels)
    counts: dict = {}
    states = 0

    def walk(k, parent, comps, na):
        nonlocal states
        if k == c:
            key = (na, comps + pd.free_loops)
            counts[key] = counts.get(key, 0) + 1
            states += 1
            return
        a, b, cc, d = xs[k]
        for mark, pairs in ((1, ((a, b), (cc, d))), (0, ((a, d), (b, cc)))):
            p = list(parent)
            q = comps
            for x, y in pairs:
                rx, ry = _find(p, x), _find(p, y)
                if rx != ry:
                    p[rx] = ry
                    q -= 1
            walk(k + 1, p, q, na + mark)

    walk(0, list(range(m)), m, 0)
    return counts, states


def bracket(pd: PDCode, mode: str = "specialized", limit: int = MAX_CROSSINGS) -> BracketValue:
    """State sum sum_S A^#A B^#B z^(loops - 1); specialized sets B = A^-1, z = -A^2 - A^-2."""
    counts, states = _state_counts(pd, limit)
    c = len(pd.crossings)
    if mode == "generic":
        R = GENERIC
        terms: dict = {}
        for (na, loops), k in counts.items():
            e = (na, c - na, loops - 1)
            terms[e] = terms.get(e, 0) + k
        return BracketValue(LaurentPoly(R.vars, terms), mode, states)
    if mode != "specialized":
        raise ValueError("mode must be 'generic' or 'specialized'")
    A = SPECIAL.A
    z = -A ** 2 - A ** -2
    zp = {0: SPECIAL(1)}
    total = SPECIAL(0)
    for (na, loops), k in counts.items():
        if loops - 1 not in zp:
            zp[loops - 1] = z ** (loops - 1)
        total = total + A ** (2 * na - c) * zp[loops - 1] * k
    return BracketValue(total, mode, states)


def f_invariant(pd: PDCode, limit: int = MAX_CROSSINGS) -> LaurentPoly:
    """(-A^3)^(-w) <D>, an invariant of oriented links."""
    w = writhe(pd)
    b = bracket(pd, "specialized", limit).value
    return b * (-SPECIAL.A ** 3) ** (-w) if w else b


def jones(pd: PDCode, limit: int = MAX_CROSSINGS) -> LaurentPoly:
    """f at A = t^(-1/4); exponents are stored in quarter units of t."""
    f = f_invariant(pd, limit)
    return LaurentPoly(JONES.vars, {(-e[0],): c for e, c in f.terms.items()}, JONES.quarter)

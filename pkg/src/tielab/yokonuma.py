"""The Yokonuma-Hecke algebra Y_{d,n}, the trace tr_d and the invariants Delta_m, Theta_m.

Basis elements are t^a g_w = t_1^{a_1} ... t_n^{a_n} g_w with a in (Z/d)^n and
w in S_n.  The relations used by the multiplication are

    t_j g_i = g_i t_{s_i(j)},     e_i = (1/d) sum_s t_i^s t_{i+1}^{-s},
    g_i^2 = 1 + (u - 1) e_i (1 + g_i),
    g_i^-1 = g_i + (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i.

tr_d is determined by tr(1) = 1, tr(ab) = tr(ba), tr(a g_n) = z tr(a) and
tr(a t_{n+1}^k) = x_k tr(a).  It yields link invariants only when the x_k
solve the E-system; the solutions are x_k = (1/|S|) sum_{s in S} zeta_d^{ks}
for a nonempty S in Z/d.

Delta_m uses sigma_i -> sqrt(lambda_m) g_i, lambda_m = (1 - u + z m)/(u z m).
Theta_m uses the generators f_i = g_i + (v^-1 - 1) e_i g_i (u = v^2) with
sigma_i -> sqrt(lambda'_m) f_i, lambda'_m = (z m - (v^2 - 1))/(z m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import perm as P
from ._linear import Element, add_into
from .braid import BraidWord
from .scalars import Cyclotomic, PolyRing, QuadExt, omega_power

__all__ = [
    "ESystemSolution",
    "YElement",
    "YokonumaHecke",
    "delta_theta_m",
    "e_system_residuals",
    "esystem_solution",
    "displayed_system",
    "y_mult_gen",
    "y_trace",
]


class YElement(Element):
    __slots__ = ()

    @property
    def d(self) -> int:
        return self.alg.d


def _shift(a: tuple, d: int, p: int, q: int, s: int) -> tuple:
    """a + s*(delta_p - delta_q) mod d (0-based p, q)."""
    b = list(a)
    b[p] = (b[p] + s) % d
    b[q] = (b[q] - s) % d
    return tuple(b)


class YokonumaHecke:
    """Y_{d,n} for all n over a Laurent ring.

    ``u`` defaults to the ring variable ``u``; in a ring with ``v`` and no
    ``u`` it defaults to v**2, which is what Theta_m needs.
    """

    def __init__(self, d: int, ring: PolyRing | None = None, u=None, z=None):
        if d < 1:
            raise ValueError("d must be positive")
        self.d = d
        self.ring = ring if ring is not None else PolyRing("u", "z")
        if u is None:
            u = self.ring.u if "u" in self.ring else self.ring.v ** 2
        self.u = u
        self.v = self.ring.v if "v" in self.ring else None
        self.z = z if z is not None else self.ring.z
        self.uinv = self.u ** -1
        self.inv_d = Fraction(1, d)
        self._tcache: dict = {}

    # -- elements
    def element(self, n: int, terms=None) -> YElement:
        return YElement(self, n, terms)

    def one(self, n: int) -> YElement:
        return YElement._raw(self, n, {((0,) * n, P.identity(n)): self.ring(1)})

    def basis(self, a, w) -> YElement:
        a = tuple(x % self.d for x in a)
        return YElement._raw(self, len(w), {(a, tuple(w)): self.ring(1)})

    def key_text(self, key) -> str:
        a, w = key
        return f"t{a}g{tuple(x + 1 for x in w)}"

    def embed(self, x: YElement, n: int) -> YElement:
        out = {}
        for (a, w), c in x.terms.items():
            out[(a + (0,) * (n - x.n), P.extend(w, n))] = c
        return YElement._raw(self, n, out)

    # -- generator actions on basis keys
    def _t(self, j: int, x: YElement, side: str, k: int = 1) -> YElement:
        d = self.d
        out = {}
        for (a, w), c in x.terms.items():
            pos = j - 1 if side == "left" else w[j - 1]
            b = list(a)
            b[pos] = (b[pos] + k) % d
            out[(tuple(b), w)] = c
        return YElement._raw(self, x.n, out)

    def _e(self, i: int, x: YElement, side: str) -> YElement:
        d, inv = self.d, self.inv_d
        out: dict = {}
        for (a, w), c in x.terms.items():
            p, q = (i - 1, i) if side == "left" else (w[i - 1], w[i])
            cd = c * inv
            for s in range(d):
                add_into(out, (_shift(a, d, p, q, s), w), cd)
        return YElement._raw(self, x.n, out)

    def _g(self, i: int, x: YElement, side: str) -> YElement:
        d, inv = self.d, self.inv_d
        um1 = self.u - 1
        out: dict = {}
        for (a, w), c in x.terms.items():
            if side == "left":
                b = list(a)
                b[i - 1], b[i] = b[i], b[i - 1]
                b = tuple(b)
                sw = P.lmul_s(i, w)
                if P.is_left_ascent(i, w):
                    add_into(out, (b, sw), c)
                    continue
                p, q = i - 1, i
            elif side == "right":
                b = a
                sw = P.rmul_s(w, i)
                if P.is_right_ascent(w, i):
                    add_into(out, (b, sw), c)
                    continue
                p, q = w[i - 1], w[i]
            else:
                raise ValueError("side must be 'left' or 'right'")
            add_into(out, (b, sw), c)
            cd = c * um1 * inv
            for s in range(d):
                bs = _shift(b, d, p, q, s)
                add_into(out, (bs, sw), cd)
                add_into(out, (bs, w), cd)
        return YElement._raw(self, x.n, out)

    def mult_gen(self, token, x: YElement, side: str = "left") -> YElement:
        """Multiply by a generator token.

        Tokens: ("g", i), ("ginv", i), ("t", j), ("e", i), ("f", i), ("finv", i).
        """
        kind, i = token
        n = x.n
        top = n if kind == "t" else n - 1
        if not 1 <= i <= top:
            raise ValueError(f"index {i} out of range for n={n}")
        if kind == "t":
            return self._t(i, x, side)
        if kind == "g":
            return self._g(i, x, side)
        if kind == "e":
            return self._e(i, x, side)
        c = self.uinv - 1
        if kind == "ginv":
            gx = self._g(i, x, side)
            return gx + self._e(i, x, side).scale(c) + self._e(i, gx, side).scale(c)
        if self.v is None:
            raise ValueError("f-generators need a ring containing v")
        vinv = self.v ** -1
        if kind == "f":
            gx = self._g(i, x, side)
            return gx + self._e(i, gx, side).scale(vinv - 1)
        if kind == "finv":
            fx = self.mult_gen(("f", i), x, side)
            return fx - self._e(i, x, side).scale(self.v - vinv)
        raise ValueError(f"unknown generator {kind!r}")

    def mul(self, x: YElement, y: YElement) -> YElement:
        total = YElement._raw(self, x.n, {})
        for (a, w), c in y.terms.items():
            t = x
            for j, k in enumerate(a):
                if k:
                    t = self._t(j + 1, t, "right", k)
            for i in P.reduced_word(w):
                t = self._g(i, t, "right")
            total = total + t.scale(c)
        return total

    def word_element(self, word: BraidWord, kind: str = "g") -> YElement:
        """Product of g_i^(+-1) (kind "g") or f_i^(+-1) (kind "f") along the word."""
        x = self.one(word.n)
        inv = kind + "inv"
        for a in word.letters:
            x = self.mult_gen((kind, a) if a > 0 else (inv, -a), x, "right")
        return x

    # -- trace
    def trace(self, x: YElement, xs) -> object:
        """tr_d(x) with trace parameters xs = (x_0 = 1, x_1, ..., x_{d-1}).

        ``xs`` may be an ESystemSolution, numbers, Cyclotomic values or ring
        elements (for symbolic parameters).
        """
        if isinstance(xs, ESystemSolution):
            if xs.d != self.d:
                raise ValueError("modulus mismatch")
            xs = xs.scalars()
        xs = tuple(xs)
        if len(xs) != self.d:
            raise ValueError("need d trace parameters")
        cache = self._tcache.setdefault(xs, {})
        total = self.ring(0)
        for key, c in x.terms.items():
            total = total + c * self._trace_key(key, xs, cache)
        return total

    def _trace_key(self, key, xs, cache):
        val = cache.get(key)
        if val is not None:
            return val
        a, w = key
        n = len(w)
        if n == 1:
            val = self.ring(1) * xs[a[0]]
        elif w[-1] == n - 1:
            val = self._trace_key((a[:-1], w[:-1]), xs, cache) * xs[a[-1]]
        else:
            i = w.index(n - 1) + 1
            wp = P.compose(w, P.inverse(P.descending_cycle(n, i)))
            x = self.basis(a[:-1], wp[:-1])
            if a[-1]:
                x = self._t(n - 1, x, "right", a[-1])
            for k in range(n - 2, i - 1, -1):
                x = self._g(k, x, "right")
            val = self.trace(x, xs) * self.z
        cache[key] = val
        return val


# ---------------------------------------------------------------------------
# E-system


@dataclass(frozen=True)
class ESystemSolution:
    d: int
    S: tuple[int, ...]
    x: tuple[Cyclotomic, ...]

    @property
    def m(self) -> int:
        return len(self.S)

    def scalars(self) -> tuple:
        """x as Fractions when all rational, else as Cyclotomic values."""
        if all(c.is_rational() for c in self.x):
            return tuple(c.coeffs[0] if c.coeffs else Fraction(0) for c in self.x)
        return self.x

    @property
    def E(self):
        return e_value(self.x, 0)


def e_value(x, m: int):
    """E^(m) = (1/d) sum_s x_{m+s} x_{d-s}, indices mod d."""
    d = len(x)
    total = 0
    for s in range(d):
        total = total + x[(m + s) % d] * x[(d - s) % d]
    return total * Fraction(1, d)


def e_system_residuals(x) -> list:
    """E^(k) - x_k E for k = 1..d-1; all zero exactly for a solution."""
    E = e_value(x, 0)
    return [e_value(x, k) - x[k] * E for k in range(1, len(x))]


def esystem_solution(d: int, S) -> ESystemSolution:
    """x_k = (1/|S|) sum_{s in S} zeta_d^{ks}, checked against the E-system."""
    S = tuple(sorted({s % d for s in S}))
    if not S:
        raise ValueError("S must be nonempty")
    m = len(S)
    x = tuple(
        sum((Cyclotomic.zeta(d, k * s) for s in S), Cyclotomic(d)) * Fraction(1, m) for k in range(d)
    )
    if any(r for r in e_system_residuals(x)):
        raise ArithmeticError(f"x does not solve the E-system for d={d}, S={S}")
    return ESystemSolution(d, S, x)


def displayed_system(d: int, x) -> list:
    """Residuals (lhs - rhs) of the E-system in the expanded form written out for d = 3, 4."""
    if d == 3:
        x1, x2 = x[1], x[2]
        return [x1 + x2 * x2 - 2 * x1 * x1 * x2, x1 * x1 + x2 - 2 * x1 * x2 * x2]
    if d == 4:
        x1, x2, x3 = x[1], x[2], x[3]
        return [
            x1 + 2 * x2 * x3 - (2 * x1 * x1 * x3 + x1 * x2 * x2),
            x1 * x1 + x2 + x3 * x3 - (2 * x1 * x2 * x3 + x2 * x2 * x2),
            x3 + 2 * x1 * x2 - (2 * x1 * x3 * x3 + x2 * x2 * x3),
        ]
    raise ValueError("only d = 3 and d = 4 are written out")


# ---------------------------------------------------------------------------
# invariants

_ALGEBRAS: dict = {}


def _algebra(d: int, variant: str) -> YokonumaHecke:
    key = (d, variant)
    if key not in _ALGEBRAS:
        ring = PolyRing("u", "z") if variant == "delta" else PolyRing("v", "z")
        _ALGEBRAS[key] = YokonumaHecke(d, ring)
    return _ALGEBRAS[key]


def lambda_m(alg: YokonumaHecke, m: int, variant: str):
    z = alg.z
    if variant == "delta":
        return (1 - alg.u + z * m) / (alg.u * z * m)
    v = alg.v
    return (z * m - (v * v - 1)) / (z * m)


def delta_theta_m(w: BraidWord, variant: str, d: int, S, alg: YokonumaHecke | None = None) -> QuadExt:
    """Delta_m (variant "delta") or Theta_m (variant "theta") of the closure of w."""
    variant = {"Δ": "delta", "Θ": "theta"}.get(variant, variant)
    if variant not in ("delta", "theta"):
        raise ValueError("variant must be 'delta' or 'theta'")
    sol = esystem_solution(d, S)
    alg = alg or _algebra(d, variant)
    n = w.n
    tr = alg.trace(alg.word_element(w, "g" if variant == "delta" else "f"), sol)
    k = w.exponent_sum() - (n - 1)
    pref = alg.z ** (-(n - 1))
    if variant == "theta":
        pref = pref * alg.v ** (n - 1)
    return omega_power(lambda_m(alg, sol.m, variant), k) * (tr * pref)


def y_mult_gen(g, x: YElement, side: str = "left") -> YElement:
    return x.alg.mult_gen(g, x, side)


def y_trace(x: YElement, sol) -> object:
    return x.alg.trace(x, sol)

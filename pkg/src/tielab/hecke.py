"""The Hecke algebra H_n, the Ocneanu trace and the Homflypt invariant X.

H_n has basis T_w, w in S_n, and generators h_i = T_{s_i} with

    h_i^2 = u + (u - 1) h_i,        h_i^-1 = (u^-1 - 1) + u^-1 h_i.

The Ocneanu trace tau is the unique family of linear maps with tau(1) = 1,
tau(ab) = tau(ba) and tau(a h_n b) = z tau(ab) for a, b in H_n.  We compute
it on T_w by writing w = w' (s_{n-1} ... s_i) with w' in S_{n-1}, so that

    tau(T_w) = z tau(T_{w'} T_{s_{n-2} ... s_i}).

With lambda = (1 - u + z)/(u z) and sigma_i -> sqrt(lambda) h_i,

    X(w) = (1/(sqrt(lambda) z))^(n-1) tau(pi(w))

is an invariant of the closure of w.  Since sqrt(lambda) is central we pull
it out as w**e(w) where e is the exponent sum.
"""

from __future__ import annotations

from . import perm as P
from ._linear import Element, add_into
from .braid import BraidWord
from .scalars import PolyRing, QuadExt, omega_power

__all__ = [
    "HeckeAlgebra",
    "HeckeElement",
    "h_inverse_gen",
    "h_mult_gen",
    "homflypt_X",
    "ocneanu_trace",
]


class HeckeElement(Element):
    __slots__ = ()


class HeckeAlgebra:
    """H_n for all n over a Laurent ring containing u (or u = v**2) and z."""

    def __init__(self, ring: PolyRing | None = None, u=None, z=None):
        self.ring = ring if ring is not None else PolyRing("u", "z")
        self.u = u if u is not None else self.ring.u
        self.z = z if z is not None else self.ring.z
        self.uinv = self.u ** -1
        self._tcache: dict = {}

    # -- elements
    def element(self, n: int, terms=None) -> HeckeElement:
        return HeckeElement(self, n, terms)

    def one(self, n: int) -> HeckeElement:
        return HeckeElement._raw(self, n, {P.identity(n): self.ring(1)})

    def basis(self, w) -> HeckeElement:
        return HeckeElement._raw(self, len(w), {tuple(w): self.ring(1)})

    def gen(self, i: int, n: int) -> HeckeElement:
        return self.basis(P.transposition(i, n))

    def gen_inv(self, i: int, n: int) -> HeckeElement:
        return HeckeElement(self, n, {P.identity(n): self.uinv - 1, P.transposition(i, n): self.uinv})

    def key_text(self, w) -> str:
        return "T" + str(tuple(x + 1 for x in w))

    # -- multiplication
    def mult_gen(self, i: int, x: HeckeElement, side: str = "left") -> HeckeElement:
        n = x.n
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for n={n}")
        u, um1 = self.u, self.u - 1
        out: dict = {}
        for w, c in x.terms.items():
            if side == "left":
                sw = P.lmul_s(i, w)
                ascent = P.is_left_ascent(i, w)
            elif side == "right":
                sw = P.rmul_s(w, i)
                ascent = P.is_right_ascent(w, i)
            else:
                raise ValueError("side must be 'left' or 'right'")
            if ascent:
                add_into(out, sw, c)
            else:
                add_into(out, sw, c * u)
                add_into(out, w, c * um1)
        return HeckeElement._raw(self, n, out)

    def mult_gen_inv(self, i: int, x: HeckeElement, side: str = "left") -> HeckeElement:
        return x.scale(self.uinv - 1) + self.mult_gen(i, x, side).scale(self.uinv)

    def mul(self, x: HeckeElement, y: HeckeElement) -> HeckeElement:
        total = HeckeElement._raw(self, x.n, {})
        for w, c in y.terms.items():
            t = x
            for i in P.reduced_word(w):
                t = self.mult_gen(i, t, "right")
            total = total + t.scale(c)
        return total

    def word_element(self, word: BraidWord) -> HeckeElement:
        """pi(word) with sigma_i -> h_i (no sqrt(lambda) scaling)."""
        x = self.one(word.n)
        for a in word.letters:
            x = self.mult_gen(a, x, "right") if a > 0 else self.mult_gen_inv(-a, x, "right")
        return x

    # -- trace
    def _trace_key(self, w):
        cached = self._tcache.get(w)
        if cached is not None:
            return cached
        n = len(w)
        if n == 1:
            val = self.ring(1)
        elif w[-1] == n - 1:
            val = self._trace_key(w[:-1])
        else:
            i = w.index(n - 1) + 1
            c = P.descending_cycle(n, i)
            wp = P.compose(w, P.inverse(c))
            x = self.basis(wp[:-1])
            for k in range(n - 2, i - 1, -1):
                x = self.mult_gen(k, x, "right")
            val = self.trace(x) * self.z
        self._tcache[w] = val
        return val

    def trace(self, x: HeckeElement):
        total = self.ring(0)
        for w, c in x.terms.items():
            total = total + c * self._trace_key(w)
        return total

    # -- invariant
    @property
    def lam(self):
        u, z = self.u, self.z
        return (1 - u + z) / (u * z)

    def homflypt(self, word: BraidWord) -> QuadExt:
        n = word.n
        tau = self.trace(self.word_element(word))
        k = word.exponent_sum() - (n - 1)
        return omega_power(self.lam, k) * (tau * self.z ** (-(n - 1)))


_DEFAULT = HeckeAlgebra()


def h_mult_gen(i: int, x: HeckeElement, side: str = "left") -> HeckeElement:
    return x.alg.mult_gen(i, x, side)


def h_inverse_gen(i: int, n: int, alg: HeckeAlgebra | None = None) -> HeckeElement:
    return (alg or _DEFAULT).gen_inv(i, n)


def ocneanu_trace(x: HeckeElement):
    return x.alg.trace(x)


def homflypt_X(w: BraidWord, alg: HeckeAlgebra | None = None) -> QuadExt:
    """X of the closure of w, a QuadExt over Q(u, z) with w**2 = lambda."""
    return (alg or _DEFAULT).homflypt(w)

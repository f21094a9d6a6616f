"""The algebra of braids and ties E_n, its Markov trace rho and the invariants
Delta-bar, Theta-bar and F.

E_n has basis E_I T_w with I a set partition of {1..n} and w in S_n.  We use

    E_i^2 = E_i,   T_i^2 = 1 + (u - 1) E_i + (u - 1) E_i T_i,
    T_w E_I T_w^-1 = E_{w(I)},      E_I E_J = E_{I*J},
    T_i^-1 = T_i + (u^-1 - 1) E_i + (u^-1 - 1) E_i T_i,
    V_i = T_i + (v^-1 - 1) E_i T_i,  V_i^-1 = V_i - (v - v^-1) E_i.

rho is the unique family with rho(1) = 1, rho(XY) = rho(YX),
rho(X T_n) = rho(X T_n E_n) = a rho(X) and rho(X E_n) = b rho(X) for X in E_n.
It is computed through a relative trace eps: E_{n+1} -> E_n with
rho_{n+1} = rho_n o eps, using only those rules and the relations above.

With L = (a + (1 - u) b)/(a u):
    Delta-bar(w) = (1/(a sqrt L))^(n-1) rho(pi(w)),   sigma_i -> sqrt(L) T_i.
With L' = (a - (v^2 - 1) b)/a:
    Theta-bar(w) = (v/(a sqrt L'))^(n-1) rho(pi(w)),  sigma_i -> sqrt(L') V_i.
F is Delta-bar extended to tied braids by eta_i -> E_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import perm as P
from ._linear import Element, add_into
from .braid import BraidWord, TiedBraidWord
from .scalars import PolyRing, QuadExt, RatFunc, omega_power
from .setpartition import SetPartition, mu

__all__ = [
    "BtAlgebra",
    "BtElement",
    "InvariantParams",
    "bt_mult_gen",
    "conway_triples",
    "f_tied",
    "invariant_bar",
    "invariant_params",
    "relative_trace",
    "rho",
]


class BtElement(Element):
    __slots__ = ()


@lru_cache(maxsize=None)
def _tie(n: int, i: int, j: int) -> SetPartition:
    return mu(n, i, j)


class BtAlgebra:
    """E_n for all n over a Laurent ring with u (or v, u = v**2), a and b."""

    def __init__(self, ring: PolyRing | None = None, u=None, a=None, b=None, representative: str = "min"):
        self.ring = ring if ring is not None else PolyRing("u", "a", "b")
        if u is None:
            u = self.ring.u if "u" in self.ring else self.ring.v ** 2
        self.u = u
        self.v = self.ring.v if "v" in self.ring else None
        self.a = a if a is not None else self.ring.a
        self.b = b if b is not None else self.ring.b
        self.uinv = self.u ** -1
        if representative not in ("min", "max"):
            raise ValueError("representative must be 'min' or 'max'")
        self.representative = representative
        self._eps: dict = {}
        self._rho: dict = {}

    # -- elements
    def element(self, n: int, terms=None) -> BtElement:
        return BtElement(self, n, terms)

    def one(self, n: int) -> BtElement:
        return BtElement._raw(self, n, {(SetPartition.singletons(n), P.identity(n)): self.ring(1)})

    def basis(self, I: SetPartition, w) -> BtElement:
        if I.n != len(w):
            raise ValueError("partition and permutation sizes differ")
        return BtElement._raw(self, len(w), {(I, tuple(w)): self.ring(1)})

    def key_text(self, key) -> str:
        I, w = key
        return f"E{I}T{tuple(x + 1 for x in w)}"

    def embed(self, x: BtElement, n: int) -> BtElement:
        return BtElement._raw(self, n, {(I.embed(n), P.extend(w, n)): c for (I, w), c in x.terms.items()})

    # -- generator actions
    def _E(self, i: int, x: BtElement, side: str) -> BtElement:
        n = x.n
        out: dict = {}
        for (I, w), c in x.terms.items():
            if side == "left":
                J = I * _tie(n, i, i + 1)
            else:
                J = I * _tie(n, w[i - 1] + 1, w[i] + 1)
            add_into(out, (J, w), c)
        return BtElement._raw(self, n, out)

    def _T(self, i: int, x: BtElement, side: str) -> BtElement:
        n = x.n
        um1 = self.u - 1
        out: dict = {}
        for (I, w), c in x.terms.items():
            if side == "left":
                J = I.apply_perm(P.transposition(i, n))
                sw = P.lmul_s(i, w)
                if P.is_left_ascent(i, w):
                    add_into(out, (J, sw), c)
                    continue
                K = J * _tie(n, i, i + 1)
            elif side == "right":
                J = I
                sw = P.rmul_s(w, i)
                if P.is_right_ascent(w, i):
                    add_into(out, (J, sw), c)
                    continue
                K = J * _tie(n, w[i - 1] + 1, w[i] + 1)
            else:
                raise ValueError("side must be 'left' or 'right'")
            add_into(out, (J, sw), c)
            cu = c * um1
            add_into(out, (K, sw), cu)
            add_into(out, (K, w), cu)
        return BtElement._raw(self, n, out)

    def mult_gen(self, token, x: BtElement, side: str = "left") -> BtElement:
        """Multiply by ("T", i), ("Tinv", i), ("E", i), ("V", i) or ("Vinv", i)."""
        kind, i = token
        if not 1 <= i <= x.n - 1:
            raise ValueError(f"index {i} out of range for n={x.n}")
        if kind == "T":
            return self._T(i, x, side)
        if kind == "E":
            return self._E(i, x, side)
        if kind == "Tinv":
            c = self.uinv - 1
            ex = self._E(i, x, side)
            return self._T(i, x, side) + ex.scale(c) + self._T(i, ex, side).scale(c)
        if self.v is None:
            raise ValueError("V-generators need a ring containing v")
        vinv = self.v ** -1
        if kind == "V":
            return self._T(i, x, side) + self._T(i, self._E(i, x, side), side).scale(vinv - 1)
        if kind == "Vinv":
            return self.mult_gen(("V", i), x, side) - self._E(i, x, side).scale(self.v - vinv)
        raise ValueError(f"unknown generator {kind!r}")

    def _right_partition(self, x: BtElement, I: SetPartition) -> BtElement:
        out: dict = {}
        for (J, w), c in x.terms.items():
            add_into(out, (J * I.apply_perm(w), w), c)
        return BtElement._raw(self, x.n, out)

    def _left_partition(self, I: SetPartition, x: BtElement) -> BtElement:
        out: dict = {}
        for (J, w), c in x.terms.items():
            add_into(out, (I * J, w), c)
        return BtElement._raw(self, x.n, out)

    def mul(self, x: BtElement, y: BtElement) -> BtElement:
        total = BtElement._raw(self, x.n, {})
        for (I, w), c in y.terms.items():
            t = x if I.is_singletons() else self._right_partition(x, I)
            for i in P.reduced_word(w):
                t = self._T(i, t, "right")
            total = total + t.scale(c)
        return total

    def word_element(self, word, kind: str = "T") -> BtElement:
        """Product along a (tied) braid word: sigma -> T or V (by ``kind``), eta -> E."""
        if isinstance(word, BraidWord):
            tokens = [("s", x) for x in word.letters]
        else:
            tokens = word.tokens
        x = self.one(word.n)
        for k, i in tokens:
            if k == "e":
                x = self._E(i, x, "right")
            elif i > 0:
                x = self.mult_gen((kind, i), x, "right")
            else:
                x = self.mult_gen((kind + "inv", -i), x, "right")
        return x

    # -- trace
    def _eps_key(self, key) -> dict:
        cached = self._eps.get(key)
        if cached is not None:
            return cached
        I, w = key
        N = len(w)
        m = N - 1
        block = I.block_of(N)
        if w[-1] == N - 1:
            if len(block) == 1:
                out = {(I.drop_last(), w[:-1]): self.ring(1)}
            else:
                rest = [k for k in block if k != N]
                j = min(rest) if self.representative == "min" else max(rest)
                Ip = I.isolate(N).drop_last()
                wp = w[:-1]
                z = self.basis(Ip.apply_perm(wp), wp)
                for k in range(j, m):
                    z = self.mult_gen(("Tinv", k), z, "left")
                for k in range(j, m):
                    z = self._T(k, z, "right")
                out = z.scale(self.b).terms
        else:
            i = w.index(N - 1) + 1
            wp = P.compose(w, P.inverse(P.descending_cycle(N, i)))[:-1]
            v = P.descending_cycle(m, i) if i < m else P.identity(m)
            J = I.apply_perm(P.extend(v, N))
            y = self.basis(SetPartition.singletons(m), wp)
            for k in reversed(P.reduced_word(v)):
                y = self._T(k, y, "left")
            bj = J.block_of(N)
            if len(bj) == 1:
                out = self._left_partition(J.drop_last(), y).scale(self.a).terms
            else:
                k = min(x for x in bj if x != N)
                Jp = J.isolate(N).drop_last()
                acc: dict = {}
                for (K, x), c in y.terms.items():
                    kp = x.index(k - 1) + 1
                    add_into(acc, (Jp * K * _tie(m, kp, m), x), c * self.a)
                out = acc
        self._eps[key] = out
        return out

    def relative_trace(self, x: BtElement) -> BtElement:
        """eps(x) in E_{n-1} with rho(x) = rho(eps(x))."""
        if x.n < 2:
            raise ValueError("relative trace needs at least two strands")
        out: dict = {}
        for key, c in x.terms.items():
            for k2, c2 in self._eps_key(key).items():
                add_into(out, k2, c * c2)
        return BtElement._raw(self, x.n - 1, out)

    def _rho_key(self, key):
        cached = self._rho.get(key)
        if cached is not None:
            return cached
        if len(key[1]) == 1:
            val = self.ring(1)
        else:
            val = self.ring(0)
            for k2, c2 in self._eps_key(key).items():
                val = val + c2 * self._rho_key(k2)
        self._rho[key] = val
        return val

    def rho(self, x: BtElement):
        total = self.ring(0)
        for key, c in x.terms.items():
            total = total + c * self._rho_key(key)
        return total

    # -- radicands
    @property
    def L(self):
        a, b, u = self.a, self.b, self.u
        return RatFunc(a + (1 - u) * b, a * u)

    @property
    def Lprime(self):
        a, b, v = self.a, self.b, self.v
        return RatFunc(a - (v * v - 1) * b, a)


@dataclass(frozen=True)
class InvariantParams:
    variant: str
    radicand: object


def invariant_params(variant: str, alg: BtAlgebra) -> InvariantParams:
    variant = {"Δ̄": "delta", "Θ̄": "theta", "Δ": "delta", "Θ": "theta"}.get(variant, variant)
    if variant in ("delta", "F"):
        return InvariantParams(variant, alg.L)
    if variant == "theta":
        return InvariantParams(variant, alg.Lprime)
    raise ValueError(f"unknown variant {variant!r}")


_ALGEBRAS: dict = {}


def default_algebra(variant: str) -> BtAlgebra:
    key = "theta" if variant == "theta" else "delta"
    if key not in _ALGEBRAS:
        ring = PolyRing("v", "a", "b") if key == "theta" else PolyRing("u", "a", "b")
        _ALGEBRAS[key] = BtAlgebra(ring)
    return _ALGEBRAS[key]


def _normalized(alg: BtAlgebra, word, kind: str, radicand, pref_num) -> QuadExt:
    n = word.n
    r = alg.rho(alg.word_element(word, kind))
    k = word.exponent_sum() - (n - 1)
    pref = alg.a ** (-(n - 1))
    if pref_num is not None:
        pref = pref * pref_num ** (n - 1)
    return omega_power(radicand, k) * (r * pref)


def invariant_bar(w: BraidWord, params="delta", alg: BtAlgebra | None = None) -> QuadExt:
    """Delta-bar (variant "delta") or Theta-bar (variant "theta") of the closure of w."""
    variant = params.variant if isinstance(params, InvariantParams) else params
    variant = {"Δ̄": "delta", "Θ̄": "theta"}.get(variant, variant)
    alg = alg or default_algebra(variant)
    p = invariant_params(variant, alg)
    if variant == "theta":
        return _normalized(alg, w, "V", p.radicand, alg.v)
    if variant == "delta":
        return _normalized(alg, w, "T", p.radicand, None)
    raise ValueError("invariant_bar handles the delta and theta variants")


def f_tied(tw, alg: BtAlgebra | None = None) -> QuadExt:
    """F of the closure of a tied braid; eta_i -> E_i, sigma_i -> sqrt(L) T_i."""
    if isinstance(tw, BraidWord):
        tw = tw.tied()
    alg = alg or default_algebra("delta")
    return _normalized(alg, tw, "T", alg.L, None)


def conway_triples(w, i: int):
    """(w s_i, w s_i^-1, w, w e_i s_i, w e_i s_i^-1, w e_i) as tied words."""
    if isinstance(w, BraidWord):
        w = w.tied()
    if not 1 <= i <= w.n - 1:
        raise ValueError("index out of range")
    t = w.tokens
    mk = lambda extra: TiedBraidWord(w.n, t + extra)  # noqa: E731
    s, si, e = ("s", i), ("s", -i), ("e", i)
    return (mk((s,)), mk((si,)), mk(()), mk((e, s)), mk((e, si)), mk((e,)))


def bt_mult_gen(g, x: BtElement, side: str = "left") -> BtElement:
    return x.alg.mult_gen(g, x, side)


def relative_trace(x: BtElement) -> BtElement:
    return x.alg.relative_trace(x)


def rho(x: BtElement):
    return x.alg.rho(x)

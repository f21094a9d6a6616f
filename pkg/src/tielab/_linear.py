"""Finitely supported linear combinations over a basis, shared by the algebras."""

from __future__ import annotations


class Element:
    """sum(coeff * basis[key]) in an algebra on n strands.

    Subclasses only fix the algebra; all products go through ``alg.mul``.
    """

    __slots__ = ("alg", "n", "terms")

    def __init__(self, alg, n: int, terms=None):
        self.alg = alg
        self.n = n
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, alg, n, terms):
        e = object.__new__(cls)
        e.alg = alg
        e.n = n
        e.terms = terms
        return e

    def _check(self, other):
        if not isinstance(other, Element) or other.alg is not self.alg:
            raise TypeError("elements of different algebras")
        if other.n != self.n:
            raise ValueError(f"strand counts differ: {self.n} and {other.n}")

    def __add__(self, other):
        if not isinstance(other, Element):
            other = self.alg.one(self.n) * other
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return type(self)._raw(self.alg, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.alg, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return type(self)._raw(self.alg, self.n, {})
        out = {}
        for k, v in self.terms.items():
            x = v * c
            if x:
                out[k] = x
        return type(self)._raw(self.alg, self.n, out)

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.alg is other.alg and self.n == other.n and self.terms == other.terms
        if not other:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def __repr__(self):
        body = " + ".join(f"({c})*{self.alg.key_text(k)}" for k, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0])))
        return f"<{type(self).__name__} n={self.n}: {body or '0'}>"


def add_into(out: dict, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)

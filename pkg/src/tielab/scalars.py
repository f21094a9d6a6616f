"""Exact scalars shared by every algebra in the package.

The tower is

    Fraction  ->  LaurentPoly  ->  RatFunc  ->  QuadExt

with :class:`Cyclotomic` numbers allowed as coefficients of a LaurentPoly.
A LaurentPoly lives in a fixed ordered list of variables; one or more of
them may be flagged as carrying quarter-integer exponents, which are
stored as integers in units of 1/4 (so ``t^(-3/4)`` is stored as -3).

Rational functions are never reduced by a gcd.  Equality is decided by
cross-multiplication.  Cheap cancellations (monomial denominators, exact
division, a denominator dividing the other one) keep sizes small.

A :class:`QuadExt` is ``p + q*w`` with ``w**2 == radicand``; it is how the
package represents square roots such as sqrt(lambda) or sqrt(L).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from operator import add

__all__ = [
    "Cyclotomic",
    "LaurentPoly",
    "PolyRing",
    "QuadExt",
    "RatFunc",
    "cyclotomic_phi",
    "format_scalar",
    "omega_power",
    "parse_poly",
    "ratfunc_eq",
    "scalar_from_json",
    "scalar_to_json",
    "specialize",
]

_NUMBER = (int, Fraction)


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _plain(c):
    """Rational cyclotomic numbers print and serialize as plain fractions."""
    if isinstance(c, Cyclotomic) and c.is_rational():
        return c.coeffs[0] if c.coeffs else Fraction(0)
    return c


def _coeff_text(c) -> str:
    c = _plain(c)
    if isinstance(c, Cyclotomic):
        return str(c)
    c = _frac(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# cyclotomic numbers


def _poly_divexact(num: list, den: tuple) -> list:
    """Exact division of integer polynomials (constant term first), den monic."""
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_phi(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, constant term first.

    Computed as (x^d - 1) divided by the product of Phi_e over the proper
    divisors e of d.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_divexact(poly, cyclotomic_phi(e))
    return tuple(poly)


class Cyclotomic:
    """Element of Q(zeta_d), stored as a vector reduced modulo Phi_d."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs=()):
        phi = cyclotomic_phi(d)
        deg = len(phi) - 1
        c = [_frac(x) for x in coeffs]
        if len(c) > d:
            # zeta^d = 1, fold first so the Phi_d reduction stays short
            folded = [Fraction(0)] * d
            for k, x in enumerate(c):
                folded[k % d] += x
            c = folded
        for k in range(len(c) - 1, deg - 1, -1):
            t = c[k]
            if t:
                for j in range(deg + 1):
                    c[k - deg + j] -= t * phi[j]
        c += [Fraction(0)] * (deg - len(c))
        self.d = d
        self.coeffs = tuple(c[:deg])

    @classmethod
    def zeta(cls, d: int, k: int = 1) -> "Cyclotomic":
        v = [0] * d
        v[k % d] = 1
        return cls(d, v)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.d != self.d:
                raise ValueError(f"mismatched cyclotomic orders {self.d} and {other.d}")
            return other
        if isinstance(other, _NUMBER):
            return Cyclotomic(self.d, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.d, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.d, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _NUMBER):
            return Cyclotomic(self.d, [a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.d, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Solve self * y = 1 by Gauss-Jordan on the multiplication matrix."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        deg = len(self.coeffs)
        cols = []
        for j in range(deg):
            basis = [0] * deg
            basis[j] = 1
            cols.append((self * Cyclotomic(self.d, basis)).coeffs)
        m = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        for c in range(deg):
            p = next(r for r in range(c, deg) if m[r][c])
            m[c], m[p] = m[p], m[c]
            piv = m[c][c]
            m[c] = [x / piv for x in m[c]]
            for r in range(deg):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return Cyclotomic(self.d, [m[i][deg] for i in range(deg)])

    def __truediv__(self, other):
        if isinstance(other, _NUMBER):
            return Cyclotomic(self.d, [a / other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic(self.d, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.d == other.d and self.coeffs == other.coeffs
        if isinstance(other, _NUMBER):
            return self.is_rational() and (self.coeffs[0] if self.coeffs else 0) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.d, self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(_coeff_text(c))
            else:
                z = f"zeta{self.d}" + (f"^{k}" if k > 1 else "")
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{_coeff_text(c)}*{z}")
        if not parts:
            return "0"
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    __repr__ = __str__


_COEFF = (int, Fraction, Cyclotomic)


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Multivariate Laurent polynomial with exact coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients (int, Fraction or
    Cyclotomic).  Variables listed in ``quarter`` have exponents in units of
    1/4.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "quarter", "terms")

    def __init__(self, vars, terms=None, quarter=()):
        self.vars = tuple(vars)
        self.quarter = frozenset(quarter)
        nv = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nv:
                raise ValueError("exponent vector length does not match variable list")
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, vars, quarter, terms) -> "LaurentPoly":
        p = object.__new__(cls)
        p.vars = vars
        p.quarter = quarter
        p.terms = terms
        return p

    # -- construction helpers
    def _const(self, c) -> "LaurentPoly":
        terms = {(0,) * len(self.vars): c} if c else {}
        return LaurentPoly._raw(self.vars, self.quarter, terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars or other.quarter != self.quarter:
                raise ValueError(f"mismatched variable lists {self.vars} and {other.vars}")
            return other
        if isinstance(other, _COEFF):
            return self._const(other)
        return None

    # -- predicates
    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        """Coefficient of the zero exponent."""
        return self.terms.get((0,) * len(self.vars), 0)

    # -- arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            big, small = o.terms, self.terms
        else:
            big, small = self.terms, o.terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.vars, self.quarter, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, self.quarter, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _COEFF):
            if not other:
                return LaurentPoly._raw(self.vars, self.quarter, {})
            return LaurentPoly._raw(self.vars, self.quarter, {e: c * other for e, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(map(add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.vars, self.quarter, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def monomial_inverse(self) -> "LaurentPoly":
        if len(self.terms) != 1:
            raise ArithmeticError("only monomials are invertible in a Laurent ring")
        (e, c), = self.terms.items()
        inv = Fraction(1) / c if isinstance(c, _NUMBER) else c.inverse()
        return LaurentPoly._raw(self.vars, self.quarter, {tuple(-x for x in e): inv})

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                return RatFunc(self) ** k
            return self.monomial_inverse() ** (-k)
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.vars, self.quarter, {tuple(x * k for x in e): c ** k})
        out = self._const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __truediv__(self, other):
        if isinstance(other, _NUMBER):
            return self * (Fraction(1) / other)
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        if isinstance(other, LaurentPoly):
            o = self._coerce(other)
            if o.is_monomial():
                return self * o.monomial_inverse()
            return RatFunc(self, o)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _COEFF):
            if self.is_monomial():
                return self.monomial_inverse() * other
            return RatFunc(self._const(other), self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.vars == other.vars and self.quarter == other.quarter and self.terms == other.terms
        if isinstance(other, _COEFF):
            if not other:
                return not self.terms
            return len(self.terms) == 1 and self.terms.get((0,) * len(self.vars)) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- structure
    def leading_term(self):
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self) -> tuple[int, ...]:
        return tuple(min(col) for col in zip(*self.terms)) if self.terms else (0,) * len(self.vars)

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max(col) for col in zip(*self.terms)) if self.terms else (0,) * len(self.vars)

    def shift(self, e) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector e."""
        return LaurentPoly._raw(self.vars, self.quarter, {tuple(map(add, k, e)): c for k, c in self.terms.items()})

    def divexact(self, other: "LaurentPoly"):
        """Return q with self == q*other, or None when other does not divide self.

        Lex-leading-term division; quotient exponents are confined to the box
        forced by the Newton polytopes, which guarantees termination.
        """
        o = self._coerce(other)
        if not o.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        if len(o.terms) == 1:
            return self * o.monomial_inverse()
        lo = tuple(a - b for a, b in zip(self.min_exponents(), o.min_exponents()))
        hi = tuple(a - b for a, b in zip(self.max_exponents(), o.max_exponents()))
        if any(a > b for a, b in zip(lo, hi)):
            return None
        le, lc = o.leading_term()
        rational = isinstance(lc, _NUMBER)
        inv_lc = (Fraction(1) / lc) if rational else lc.inverse()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            qe = tuple(a - b for a, b in zip(e, le))
            if any(x < a or x > b for x, a, b in zip(qe, lo, hi)):
                return None
            qc = rem[e] * inv_lc
            if rational and isinstance(qc, Fraction) and qc.denominator == 1:
                qc = qc.numerator
            quot[qe] = qc
            for oe, oc in o.terms.items():
                k = tuple(map(add, qe, oe))
                v = rem.get(k, 0) - qc * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(self.vars, self.quarter, quot)

    def map_coeffs(self, f) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: f(c) for e, c in self.terms.items()}, self.quarter)

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    # -- text
    def _monomial_text(self, e, order) -> str:
        parts = []
        for i in order:
            x = e[i]
            if not x:
                continue
            name = self.vars[i]
            if name in self.quarter:
                f = Fraction(x, 4)
                if f == 1:
                    parts.append(name)
                elif f.denominator == 1:
                    parts.append(f"{name}^{f.numerator}")
                else:
                    parts.append(f"{name}^({f.numerator}/{f.denominator})")
            else:
                parts.append(name if x == 1 else f"{name}^{x}")
        return "*".join(parts)

    def to_text(self, factor_order=None) -> str:
        """Canonical text: terms in descending lex order of exponent vectors."""
        if not self.terms:
            return "0"
        if factor_order is None:
            order = range(len(self.vars))
        else:
            order = [self.vars.index(v) for v in factor_order]
        out = []
        for e, c in self.sorted_terms():
            c = _plain(c)
            mono = self._monomial_text(e, order)
            if isinstance(c, Cyclotomic):
                body = str(c) if not mono else f"{c}*{mono}"
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                a = abs(c)
                if not mono:
                    body = _coeff_text(a)
                elif a == 1:
                    body = mono
                else:
                    body = f"{_coeff_text(a)}*{mono}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            c = _plain(c)
            factors = []
            for name, x in zip(self.vars, e):
                if not x:
                    continue
                f = Fraction(x, 4) if name in self.quarter else Fraction(x)
                ex = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
                factors.append(name if f == 1 else f"{name}^{{{ex}}}")
            mono = " ".join(factors)
            if isinstance(c, Cyclotomic):
                out.append(("+", f"{c} {mono}".strip()))
                continue
            c = _frac(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if a.denominator == 1:
                cs = "" if (a == 1 and mono) else str(a.numerator)
            else:
                cs = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            out.append((sign, f"{cs} {mono}".strip()))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r}, vars={self.vars})"

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            c = _plain(c)
            if isinstance(c, Cyclotomic):
                coeff = {"zeta": c.d, "coeffs": [_coeff_text(x) for x in c.coeffs]}
            else:
                coeff = _coeff_text(c)
            terms.append({"coeff": coeff, "exp": list(e)})
        out = {"vars": list(self.vars), "terms": terms}
        if self.quarter:
            out["quarter"] = sorted(self.quarter)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        terms = {}
        for t in obj["terms"]:
            c = t["coeff"]
            if isinstance(c, dict):
                c = Cyclotomic(c["zeta"], [Fraction(x) for x in c["coeffs"]])
            else:
                c = Fraction(c)
                if c.denominator == 1:
                    c = c.numerator
            terms[tuple(t["exp"])] = c
        return cls(obj["vars"], terms, obj.get("quarter", ()))


class PolyRing:
    """Factory for LaurentPoly values over a fixed variable list.

    >>> R = PolyRing("u", "z")
    >>> (R.u + 1) * (R.u - 1) == R.u**2 - 1
    True
    """

    def __init__(self, *names: str, quarter=()):
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.vars = tuple(names)
        self.quarter = frozenset(quarter)
        self._gens = {}
        for i, name in enumerate(names):
            e = [0] * len(names)
            e[i] = 1
            self._gens[name] = LaurentPoly._raw(self.vars, self.quarter, {tuple(e): 1})

    def __call__(self, c=0) -> LaurentPoly:
        if isinstance(c, LaurentPoly):
            return c
        terms = {(0,) * len(self.vars): c} if c else {}
        return LaurentPoly._raw(self.vars, self.quarter, terms)

    def gen(self, name: str) -> LaurentPoly:
        return self._gens[name]

    def __getattr__(self, name):
        gens = self.__dict__.get("_gens", {})
        if name in gens:
            return gens[name]
        raise AttributeError(name)

    @property
    def gens(self) -> tuple[LaurentPoly, ...]:
        return tuple(self._gens[v] for v in self.vars)

    def __contains__(self, name):
        return name in self._gens

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.vars == other.vars and self.quarter == other.quarter

    def __hash__(self):
        return hash((self.vars, self.quarter))

    def __repr__(self):
        return f"PolyRing{self.vars}"

    def parse(self, text: str) -> LaurentPoly:
        return parse_poly(text, self.vars, self.quarter)


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Quotient num/den of Laurent polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("RatFunc numerator cannot itself be a RatFunc")
            self.num, self.den = num.num, num.den
            return
        if den is None:
            if not isinstance(num, LaurentPoly):
                raise TypeError("a bare number needs a LaurentPoly denominator to fix the ring")
            den = num._const(1)
        if not isinstance(num, LaurentPoly):
            num = den._const(num)
        if not isinstance(den, LaurentPoly):
            den = num._const(den)
        if num.vars != den.vars or num.quarter != den.quarter:
            raise ValueError("mismatched variable lists")
        if not den.terms:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @property
    def vars(self):
        return self.num.vars

    def is_poly(self) -> bool:
        return self.den == 1

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.num.vars != self.num.vars or other.num.quarter != self.num.quarter:
                raise ValueError("mismatched variable lists")
            return other
        if isinstance(other, LaurentPoly):
            self.num._coerce(other)
            return RatFunc._raw(other, self.num._const(1))
        if isinstance(other, _COEFF):
            return RatFunc._raw(self.num._const(other), self.num._const(1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self.den, o.den
        if d1 == d2:
            return RatFunc(self.num + o.num, d1)
        if d1 == 1:
            return RatFunc(self.num * d2 + o.num, d2)
        if d2 == 1:
            return RatFunc(self.num + o.num * d1, d1)
        k = d2.divexact(d1)
        if k is not None:
            return RatFunc(self.num * k + o.num, d2)
        k = d1.divexact(d2)
        if k is not None:
            return RatFunc(self.num + o.num * k, d1)
        return RatFunc(self.num * d2 + o.num * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _COEFF):
            return RatFunc._raw(self.num * other, self.den) if other else RatFunc._raw(self.num * 0, self.num._const(1))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if d2 != 1 and n1.terms:
            q = n1.divexact(d2)
            if q is not None:
                n1, d2 = q, d2._const(1)
        if d1 != 1 and n2.terms:
            q = n2.divexact(d1)
            if q is not None:
                n2, d1 = q, d1._const(1)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, _NUMBER):
            return self * (Fraction(1) / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        if isinstance(other, (RatFunc, LaurentPoly) + _COEFF):
            o = self._coerce(other)
            return ratfunc_eq(self, o)
        return NotImplemented

    __hash__ = None

    def to_text(self, factor_order=None) -> str:
        n = self.num.to_text(factor_order)
        if self.den == 1:
            return n
        return f"({n})/({self.den.to_text(factor_order)})"

    def to_latex(self) -> str:
        if self.den == 1:
            return self.num.to_latex()
        return f"\\frac{{{self.num.to_latex()}}}{{{self.den.to_latex()}}}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RatFunc({self.to_text()!r})"


def _normalize(num: LaurentPoly, den: LaurentPoly):
    one = den._const(1)
    if not num.terms:
        return num, one
    if len(den.terms) == 1:
        return num * den.monomial_inverse(), one
    q = num.divexact(den)
    if q is not None:
        return q, one
    # monomials are units: strip the monomial content of den
    m = den.min_exponents()
    if any(m):
        neg = tuple(-x for x in m)
        den = den.shift(neg)
        num = num.shift(neg)
    _, lc = den.leading_term()
    if isinstance(lc, _NUMBER) and lc != 1:
        inv = Fraction(1) / lc
        den = den * inv
        num = num * inv
    return num, den


def ratfunc_eq(x: RatFunc, y: RatFunc) -> bool:
    """True iff x.num*y.den == y.num*x.den."""
    if x.num.vars != y.num.vars:
        raise ValueError("mismatched variable lists")
    if x.den == y.den:
        return x.num == y.num
    return x.num * y.den == y.num * x.den


# ---------------------------------------------------------------------------
# quadratic extension


def _to_ratfunc(x, like=None) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, x._const(1))
    if like is None:
        raise TypeError("cannot place a bare number without a reference ring")
    base = like.num if isinstance(like, RatFunc) else like
    return RatFunc._raw(base._const(x), base._const(1))


class QuadExt:
    """p + q*w with w**2 == radicand; p, q, radicand are RatFunc values."""

    __slots__ = ("p", "q", "radicand")

    def __init__(self, p, q, radicand):
        r = _to_ratfunc(radicand)
        self.radicand = r
        self.p = _to_ratfunc(p, r)
        self.q = _to_ratfunc(q, r)

    @classmethod
    def root(cls, radicand) -> "QuadExt":
        r = _to_ratfunc(radicand)
        return cls(0, 1, r)

    def _same(self, r: RatFunc) -> bool:
        return r is self.radicand or ratfunc_eq(r, self.radicand)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if not self._same(other.radicand):
                raise ValueError("mismatched radicands")
            return other
        if isinstance(other, (RatFunc, LaurentPoly) + _COEFF):
            return QuadExt(_to_ratfunc(other, self.radicand), 0, self.radicand)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.p + o.p, self.q + o.q, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.radicand)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _COEFF):
            return QuadExt(self.p * other, self.q * other, self.radicand)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p * o.p
        if self.q and o.q:
            p = p + self.q * o.q * self.radicand
        q = self.p * o.q + self.q * o.p
        return QuadExt(p, q, self.radicand)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.p, -self.q, self.radicand)

    def norm(self) -> RatFunc:
        return self.p * self.p - self.q * self.q * self.radicand

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("norm is zero")
        ninv = n.inverse()
        return QuadExt(self.p * ninv, -self.q * ninv, self.radicand)

    def __truediv__(self, other):
        if isinstance(other, _NUMBER):
            return self * (Fraction(1) / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1, 0, self.radicand)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __eq__(self, other):
        if isinstance(other, (QuadExt, RatFunc, LaurentPoly) + _COEFF):
            o = self._coerce(other)
            return self.p == o.p and self.q == o.q
        return NotImplemented

    __hash__ = None

    def is_base(self) -> bool:
        """True when the w-component vanishes."""
        return not self.q

    def rebase(self, factor, new_radicand) -> "QuadExt":
        """Rewrite in terms of w' with w = factor*w' and w'**2 = new_radicand."""
        f = _to_ratfunc(factor, self.radicand)
        nr = _to_ratfunc(new_radicand)
        if not ratfunc_eq(f * f * nr, self.radicand):
            raise ValueError("factor**2 * new_radicand differs from the radicand")
        return QuadExt(self.p, self.q * f, nr)

    def to_text(self, factor_order=None) -> str:
        if not self.q:
            return self.p.to_text(factor_order)
        r = f"sqrt({self.radicand.to_text(factor_order)})"
        qt = f"({self.q.to_text(factor_order)})*{r}"
        if not self.p:
            return qt
        return f"{self.p.to_text(factor_order)} + {qt}"

    def to_latex(self) -> str:
        if not self.q:
            return self.p.to_latex()
        r = f"\\sqrt{{{self.radicand.to_latex()}}}"
        qt = f"\\left({self.q.to_latex()}\\right){r}"
        if not self.p:
            return qt
        return f"{self.p.to_latex()} + {qt}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"QuadExt({self.to_text()!r})"


def omega_power(radicand, k: int) -> QuadExt:
    """w**k as a QuadExt, using w**2 = radicand to keep the w-degree below 2."""
    r = _to_ratfunc(radicand)
    half = r ** (k // 2) if k >= 0 else r ** -((-k + 1) // 2)
    if k % 2 == 0:
        return QuadExt(half, 0, r)
    return QuadExt(0, half, r)


# ---------------------------------------------------------------------------
# specialization


def _target_base(bindings, ring):
    if ring is not None:
        if isinstance(ring, PolyRing):
            return ring(1)
        return ring._const(1)
    for v in bindings.values():
        if isinstance(v, LaurentPoly):
            return v._const(1)
        if isinstance(v, RatFunc):
            return v.num._const(1)
    return None


def _quarter_root(val, name):
    """val**(1/4) for a monomial with exponents divisible by 4."""
    if isinstance(val, LaurentPoly) and val.is_monomial():
        (e, c), = val.terms.items()
        if c == 1 and all(x % 4 == 0 for x in e):
            return LaurentPoly._raw(val.vars, val.quarter, {tuple(x // 4 for x in e): 1})
    raise ValueError(f"cannot take the quarter power needed for variable {name}")


def _specialize_poly(x: LaurentPoly, bindings: dict, ring=None):
    for name in bindings:
        if name not in x.vars:
            raise ValueError(f"variable {name} is not in {x.vars}")
    base = _target_base(bindings, ring)
    if base is None:
        keep = [v for v in x.vars if v not in bindings]
        base = LaurentPoly._raw(tuple(keep), frozenset(q for q in x.quarter if q in keep), {(0,) * len(keep): 1})
    values = []
    for name in x.vars:
        if name in bindings:
            val = bindings[name]
            if name in x.quarter:
                val = _quarter_root(val, name)
        else:
            if name not in base.vars:
                raise ValueError(f"unbound variable {name} missing from the target ring")
            if (name in x.quarter) != (name in base.quarter):
                raise ValueError(f"quarter flag of {name} differs in the target ring")
            e = [0] * len(base.vars)
            e[base.vars.index(name)] = 1
            val = LaurentPoly._raw(base.vars, base.quarter, {tuple(e): 1})
        if isinstance(val, LaurentPoly) and (val.vars != base.vars or val.quarter != base.quarter):
            raise ValueError("binding values do not share a common ring")
        values.append(val)
    cache: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            v = values[i]
            if k < 0 and isinstance(v, LaurentPoly) and not v.is_monomial():
                v = RatFunc(v)
            if k < 0 and isinstance(v, _NUMBER):
                v = Fraction(v)
            cache[key] = v ** k
        return cache[key]

    total = base * 0
    for e, c in x.terms.items():
        term = c
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        if isinstance(term, _COEFF):
            term = base * term
        total = total + term
    return total


def specialize(x, bindings: dict, ring=None, root=None):
    """Ring homomorphism substituting variables by scalars.

    ``ring`` fixes the target ring when it cannot be inferred from the bound
    values.  For a QuadExt, ``root`` (if given) is the image of w; its
    square must equal the specialized radicand.
    """
    if isinstance(x, _COEFF):
        return x
    if isinstance(x, LaurentPoly):
        return _specialize_poly(x, bindings, ring)
    if isinstance(x, RatFunc):
        n = _specialize_poly(x.num, bindings, ring)
        d = _specialize_poly(x.den, bindings, ring)
        if not d:
            raise ZeroDivisionError("specialization sends the denominator to zero")
        return _as_ratfunc(n) / _as_ratfunc(d)
    if isinstance(x, QuadExt):
        p = specialize(x.p, bindings, ring)
        q = specialize(x.q, bindings, ring)
        r = specialize(x.radicand, bindings, ring)
        if root is None:
            return QuadExt(p, q, r)
        if not (root * root == r):
            raise ValueError("root**2 differs from the specialized radicand")
        return p + q * root
    raise TypeError(f"cannot specialize {type(x).__name__}")


def _as_ratfunc(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc._raw(x, x._const(1))


# ---------------------------------------------------------------------------
# text and json


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def parse_poly(text: str, vars, quarter=()) -> LaurentPoly:
    """Parse the canonical text form, e.g. ``"z*A^2 + 2*A*B - 1/2*t^(-3/4)"``."""
    vars = tuple(vars)
    quarter = frozenset(quarter)
    toks = []
    for num, name, op in _TOKEN.findall(text):
        if num:
            toks.append(("num", int(num)))
        elif name:
            toks.append(("name", name))
        elif op.strip():
            toks.append(("op", op))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, val=None):
        nonlocal pos
        t = peek()
        if t[0] is None or (kind and t[0] != kind) or (val and t[1] != val):
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos += 1
        return t[1]

    def rational():
        a = Fraction(take("num"))
        if peek() == ("op", "/"):
            take()
            a /= take("num")
        return a

    def exponent():
        if peek() == ("op", "("):
            take()
            s = -1 if peek() == ("op", "-") else 1
            if s < 0:
                take()
            r = s * rational()
            take("op", ")")
            return r
        s = -1 if peek() == ("op", "-") else 1
        if s < 0:
            take()
        return Fraction(s * take("num"))

    zero = (0,) * len(vars)
    terms: dict = {}
    sign = 1
    if peek() == ("op", "-"):
        take()
        sign = -1
    elif peek() == ("op", "+"):
        take()
    while True:
        coeff = Fraction(sign)
        e = list(zero)
        if peek()[0] == "num":
            coeff *= rational()
            if peek() == ("op", "*"):
                take()
            else:
                kind = peek()
                if kind[0] == "name":
                    raise ValueError(f"missing '*' in {text!r}")
        while peek()[0] == "name":
            name = take()
            if name not in vars:
                raise ValueError(f"unknown variable {name!r}")
            k = Fraction(1)
            if peek() == ("op", "^"):
                take()
                k = exponent()
            i = vars.index(name)
            units = k * 4 if name in quarter else k
            if units.denominator != 1:
                raise ValueError(f"fractional exponent on {name!r}")
            e[i] += int(units)
            if peek() == ("op", "*"):
                take()
            else:
                break
        key = tuple(e)
        v = terms.get(key, 0) + coeff
        terms[key] = v.numerator if v.denominator == 1 else v
        t = peek()
        if t[0] is None:
            break
        if t == ("op", "+"):
            sign = 1
        elif t == ("op", "-"):
            sign = -1
        else:
            raise ValueError(f"unexpected token {t[1]!r} in {text!r}")
        take()
    return LaurentPoly(vars, terms, quarter)


def scalar_to_json(x) -> dict:
    if isinstance(x, LaurentPoly):
        return {"type": "poly", **x.to_json()}
    if isinstance(x, RatFunc):
        return {"type": "ratfunc", "num": x.num.to_json(), "den": x.den.to_json()}
    if isinstance(x, QuadExt):
        return {
            "type": "quadext",
            "p": scalar_to_json(x.p),
            "q": scalar_to_json(x.q),
            "radicand": scalar_to_json(x.radicand),
        }
    if isinstance(x, _NUMBER):
        return {"type": "rational", "value": _coeff_text(x)}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def scalar_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj.get("type", "poly")
    if kind == "poly":
        return LaurentPoly.from_json(obj)
    if kind == "ratfunc":
        return RatFunc._raw(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))
    if kind == "quadext":
        r = scalar_from_json(obj["radicand"])
        return QuadExt(scalar_from_json(obj["p"]), scalar_from_json(obj["q"]), r)
    if kind == "rational":
        return Fraction(obj["value"])
    raise ValueError(f"unknown scalar type {kind!r}")


def format_scalar(x, fmt: str = "plain", factor_order=None) -> str:
    if fmt == "json":
        return json.dumps(scalar_to_json(x), sort_keys=True)
    if fmt == "latex":
        if isinstance(x, _NUMBER):
            return _coeff_text(x)
        return x.to_latex()
    if isinstance(x, _NUMBER):
        return _coeff_text(x)
    return x.to_text(factor_order)

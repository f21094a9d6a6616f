"""Brute-force Markov-trace oracle for the tests.

A Markov trace on a tower of algebras is pinned down by linear conditions:
normalization, tr(gx) = tr(xg) for every generator g and basis element x,
compatibility with the inclusions, and the Markov rules.  This module sets
up those conditions with one sympy unknown per basis element and solves
them.  It shares nothing with the recursive trace code except the algebra
multiplication, which is tested on its own.
"""

from fractions import Fraction

import sympy

from tielab.scalars import LaurentPoly, QuadExt, RatFunc


def sym(c):
    """A tielab scalar as a sympy expression."""
    if isinstance(c, (int, Fraction)):
        return sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
    if isinstance(c, QuadExt):
        return sym(c.p) + sym(c.q) * sympy.sqrt(sym(c.radicand))
    if isinstance(c, RatFunc):
        return sym(c.num) / sym(c.den)
    if isinstance(c, LaurentPoly):
        return sympy.sympify(c.to_text().replace("^", "**")) if c else sympy.Integer(0)
    raise TypeError(f"no sympy form for {type(c).__name__}")


class TraceOracle:
    def __init__(self):
        self.unknowns: dict = {}
        self.eqs: list = []

    def _u(self, n, key):
        s = self.unknowns.get((n, key))
        if s is None:
            s = self.unknowns[(n, key)] = sympy.Symbol(f"r{len(self.unknowns)}")
        return s

    def val(self, x):
        return sum((sym(c) * self._u(x.n, k) for k, c in x.terms.items()), sympy.Integer(0))

    def equal(self, x, y, factor=1):
        """tr(x) = factor * tr(y)."""
        self.eqs.append(self.val(x) - factor * self.val(y))

    def fix(self, x, value):
        self.eqs.append(self.val(x) - value)

    def solve(self) -> dict:
        syms = list(self.unknowns.values())
        eqs = [e for e in (sympy.expand(e) for e in self.eqs) if e != 0]
        A, b = sympy.linear_eq_to_matrix(eqs, syms)
        from sympy.polys.matrices import DomainMatrix

        M = DomainMatrix.from_Matrix(A.row_join(b))
        M = M.convert_to(M.domain.get_field())
        R, pivots = M.rref()
        if len(pivots) != len(syms) or len(syms) in pivots:
            raise AssertionError("trace conditions do not determine a unique solution")
        R = R.to_Matrix()
        return {key: sympy.factor(R[pivots.index(i), len(syms)]) for key, i in
                ((k, syms.index(s)) for k, s in self.unknowns.items())}


def agree(expected, got) -> bool:
    return sympy.simplify(sym(got) - expected) == 0

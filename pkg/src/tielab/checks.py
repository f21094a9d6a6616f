"""Seeded property suites behind ``tielab verify``.

Every suite returns a list of records

    {"suite", "property", "ok", "cases", "failures": [...], "expected": "pass"|"fail"}

where each failure carries enough data (seed, words) to reproduce it.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from . import perm as P
from .bracket import braid_to_pd, f_invariant, jones
from .braid import BraidWord, TiedBraidWord, markov_fuzz
from .btalgebra import BtAlgebra, conway_triples, f_tied, invariant_bar
from .hecke import HeckeAlgebra
from .scalars import PolyRing, QuadExt, specialize
from .setpartition import enumerate_partitions
from .yokonuma import (
    YokonumaHecke,
    delta_theta_m,
    displayed_system,
    e_system_residuals,
    esystem_solution,
)

SUITES = ("trace-rules", "skein-x", "skein-f", "markov", "cross-route", "esystem", "dims")


# ---------------------------------------------------------------------------
# random inputs


def random_braid(rng: random.Random, max_n: int = 4, max_len: int = 8, min_n: int = 2) -> BraidWord:
    n = rng.randint(min_n, max_n)
    k = rng.randint(0, max_len)
    return BraidWord(n, tuple(rng.randrange(1, n) * rng.choice((1, -1)) for _ in range(k)))


def random_tied(rng: random.Random, max_n: int = 4, max_len: int = 8, ties: int = 2) -> TiedBraidWord:
    b = random_braid(rng, max_n, max_len)
    toks = [("s", x) for x in b.letters]
    for _ in range(rng.randint(0, ties)):
        toks.insert(rng.randint(0, len(toks)), ("e", rng.randrange(1, b.n)))
    return TiedBraidWord(b.n, tuple(toks))


def _record(suite, prop, cases, failures, expected="pass"):
    ok = not failures
    return {
        "suite": suite,
        "property": prop,
        "ok": ok,
        "cases": cases,
        "failed": len(failures),
        "failures": failures[:5],
        "expected": expected,
    }


# ---------------------------------------------------------------------------
# trace rules


def _ocneanu_rules(rng, count):
    H = HeckeAlgebra()
    f2, f3 = [], []
    for k in range(count):
        n = rng.randint(1, 3)
        gens = list(range(1, n))
        if gens:
            a = H.word_element(random_braid(rng, n, 4, n))
            b = H.word_element(random_braid(rng, n, 4, n))
        else:
            a = b = H.one(1)
        if H.trace(H.mul(a, b)) != H.trace(H.mul(b, a)):
            f2.append({"case": k})
        A, B = _hembed(H, a, n + 1), _hembed(H, b, n + 1)
        lhs = H.trace(H.mul(H.mult_gen(n, A, "right"), B))
        if lhs != H.z * H.trace(H.mul(a, b)):
            f3.append({"case": k})
    return [_record("trace-rules", "ocneanu-2", count, f2), _record("trace-rules", "ocneanu-3", count, f3)]


def _hembed(H, x, n):
    return type(x)._raw(H, n, {P.extend(w, n): c for w, c in x.terms.items()})


def _random_xs(rng, d):
    return (Fraction(1),) + tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d - 1))


def _random_y(Y, rng, n, terms=2, length=4):
    x = Y.element(n)
    for _ in range(rng.randint(1, terms)):
        y = Y.one(n)
        for _ in range(rng.randint(0, length)):
            kind = rng.choice(("g", "ginv", "t", "e")) if n > 1 else "t"
            i = rng.randint(1, n) if kind == "t" else rng.randint(1, n - 1)
            y = Y.mult_gen((kind, i), y, "right")
        x = x + y.scale(rng.choice((1, 2, -1, 3)))
    return x


def _e_m(Y, n, i, m):
    """e_i^(m) = (1/d) sum_s t_i^(m+s) t_{i+1}^(d-s) in Y_{d,n}."""
    d = Y.d
    x = Y.element(n)
    for s in range(d):
        a = [0] * n
        a[i - 1] = (m + s) % d
        a[i] = (d - s) % d
        x = x + Y.basis(tuple(a), P.identity(n))
    return x.scale(Fraction(1, d))


def _yokonuma_rules(rng, count):
    names = ("trd-2", "trd-3", "trd-4", "treng", "trasis1", "trbasis2", "tralphaen")
    fails = {k: [] for k in names}
    algs = {d: YokonumaHecke(d) for d in (1, 2, 3)}
    for k in range(count):
        d = rng.randint(1, 3)
        Y = algs[d]
        n = rng.randint(1, 3)
        xs = _random_xs(rng, d)
        tr = lambda x: Y.trace(x, xs)  # noqa: E731
        a, b = _random_y(Y, rng, n), _random_y(Y, rng, n)
        if tr(Y.mul(a, b)) != tr(Y.mul(b, a)):
            fails["trd-2"].append({"case": k, "d": d, "n": n})
        A = Y.embed(a, n + 1)
        if tr(Y.mult_gen(("g", n), A, "right")) != Y.z * tr(a):
            fails["trd-3"].append({"case": k, "d": d, "n": n})
        j = rng.randrange(d)
        if tr(_tpow(Y, A, n + 1, j)) != xs[j] * tr(a):
            fails["trd-4"].append({"case": k, "d": d, "n": n, "k": j})
        aen = Y.mult_gen(("g", n), Y.mult_gen(("e", n), A, "right"), "right")
        if tr(aen) != Y.z * tr(a):
            fails["treng"].append({"case": k, "d": d, "n": n})
        # trasis1: alpha = w t_n^k with w in Y_{n-1}
        if n >= 2:
            w = Y.embed(_random_y(Y, rng, n - 1), n)
            kk, m = rng.randrange(d), rng.randrange(d)
            alpha = _tpow(Y, w, n, kk)
            lhs = tr(Y.mul(Y.embed(alpha, n + 1), _e_m(Y, n + 1, n, m)))
            E = sum(xs[(m + kk + s) % d] * xs[(d - s) % d] for s in range(d)) * Fraction(1, d)
            if lhs != tr(w) * E:
                fails["trasis1"].append({"case": k, "d": d, "n": n, "k": kk, "m": m})
            # trbasis2: alpha = w g_{n-1} ... g_i t_i^k
            i = rng.randint(1, n - 1)
            tail = Y.one(n)
            for g in range(n - 1, i - 1, -1):
                tail = Y.mult_gen(("g", g), tail, "right")
            tail = _tpow(Y, tail, i, kk)
            alpha = Y.mul(w, tail)
            lhs = tr(Y.mult_gen(("e", n), Y.embed(alpha, n + 1), "right"))
            tail2 = Y.one(n - 1)
            for g in range(n - 2, i - 1, -1):
                tail2 = Y.mult_gen(("g", g), tail2, "right")
            tail2 = _tpow(Y, tail2, i, kk)
            w1 = _restrict_y(Y, w, n - 1)
            ap = Y.mul(tail2, w1)
            rhs = Y.z * tr(Y.mult_gen(("e", n - 1), Y.embed(ap, n), "right"))
            if lhs != rhs:
                fails["trbasis2"].append({"case": k, "d": d, "n": n, "i": i, "k": kk})
        # tralphaen with a genuine E-system solution
        S = tuple(s for s in range(d) if rng.random() < 0.6) or (0,)
        sol = esystem_solution(d, S)
        lhs = Y.trace(Y.mult_gen(("e", n), A, "right"), sol)
        rhs = Y.trace(a, sol) * sol.E
        if lhs != rhs:
            fails["tralphaen"].append({"case": k, "d": d, "S": list(S)})
    out = [_record("trace-rules", name, count, fails[name]) for name in names]
    out.append(tralphaen_witness())
    return out


def _tpow(Y, x, j, k):
    for _ in range(k):
        x = Y.mult_gen(("t", j), x, "right")
    return x


def _restrict_y(Y, x, n):
    terms = {}
    for (a, w), c in x.terms.items():
        if w[n:] != tuple(range(n, len(w))) or any(a[n:]):
            raise ValueError("element does not lie in the smaller algebra")
        terms[(a[:n], w[:n])] = c
    return Y.element(n, terms)


def tralphaen_witness() -> dict:
    """d = 2, x_1 = 2 is not an E-system solution and tr(t_1 e_1) != tr(t_1) tr(e_1)."""
    Y = YokonumaHecke(2)
    xs = (Fraction(1), Fraction(2))
    t1 = Y.mult_gen(("t", 1), Y.one(2), "right")
    lhs = Y.trace(Y.mult_gen(("e", 1), t1, "right"), xs)
    rhs = Y.trace(t1, xs) * Y.trace(Y.mult_gen(("e", 1), Y.one(2), "right"), xs)
    fails = [] if lhs != rhs else [{"lhs": str(lhs), "rhs": str(rhs)}]
    rec = _record("trace-rules", "tralphaen-nonsolution-witness", 1, fails)
    rec["witness"] = {"d": 2, "x1": 2, "alpha": "t1", "lhs": str(lhs), "rhs": str(rhs)}
    return rec


def _rho_rules(rng, count):
    A = BtAlgebra()
    fails = {k: [] for k in ("rho-1", "rho-2", "rho-2E", "rho-3")}
    for k in range(count):
        n = rng.randint(1, 3)
        x, y = _random_bt(A, rng, n), _random_bt(A, rng, n)
        if A.rho(A.mul(x, y)) != A.rho(A.mul(y, x)):
            fails["rho-1"].append({"case": k, "n": n})
        X = A.embed(x, n + 1)
        r = A.rho(x)
        XT = A.mult_gen(("T", n), X, "right")
        if A.rho(XT) != A.a * r:
            fails["rho-2"].append({"case": k, "n": n})
        if A.rho(A.mult_gen(("E", n), XT, "right")) != A.a * r:
            fails["rho-2E"].append({"case": k, "n": n})
        if A.rho(A.mult_gen(("E", n), X, "right")) != A.b * r:
            fails["rho-3"].append({"case": k, "n": n})
    return [_record("trace-rules", name, count, f) for name, f in fails.items()]


def _random_bt(A, rng, n, terms=2, length=4):
    x = A.element(n)
    for _ in range(rng.randint(1, terms)):
        y = A.one(n)
        for _ in range(rng.randint(0, length) if n > 1 else 0):
            y = A.mult_gen((rng.choice(("T", "Tinv", "E")), rng.randint(1, n - 1)), y, "right")
        x = x + y.scale(rng.choice((1, 2, -1, 3)))
    return x


def suite_trace_rules(seed: int, count: int) -> list[dict]:
    rng = random.Random(seed)
    return _ocneanu_rules(rng, count) + _yokonuma_rules(rng, count) + _rho_rules(rng, count)


# ---------------------------------------------------------------------------
# skein suites


def _classical_triple(rng):
    w = random_braid(rng, 4, 7)
    i = rng.randrange(1, w.n)
    return w, i, (BraidWord(w.n, w.letters + (i,)), BraidWord(w.n, w.letters + (-i,)), w)


def suite_skein_x(seed: int, count: int) -> list[dict]:
    rng = random.Random(seed)
    R = PolyRing("v", "z")
    H = HeckeAlgebra(R, u=R.v ** 2)
    v = R.v
    om = QuadExt.root(H.lam)
    fails = []
    for k in range(count):
        w, i, (p, m, z) = _classical_triple(rng)
        Xp, Xm, X0 = H.homflypt(p), H.homflypt(m), H.homflypt(z)
        c = om * v
        if Xp / c - c * Xm != (v - v ** -1) * X0:
            fails.append({"case": k, "word": str(w), "i": i})
    return [_record("skein-x", "skein-x", count, fails)]


def suite_skein_f(seed: int, count: int, fat_count: int | None = None) -> list[dict]:
    rng = random.Random(seed)
    A = BtAlgebra()
    u = A.u
    om = QuadExt.root(A.L)
    c = 1 - u ** -1
    names = ("rule3-plus", "rule3-minus", "others-1", "others-2", "others-3")
    fails = {k: [] for k in names}
    for k in range(count):
        w = random_tied(rng, 4, 7)
        i = rng.randrange(1, w.n)
        P_, M, Z, Pt, Mt, Zt = (f_tied(x, A) for x in conway_triples(w, i))
        lhs = P_ / om - om * M
        rep = {"case": k, "word": str(w), "i": i}
        if lhs != c * Zt + c * Pt / om:
            fails["rule3-plus"].append(rep)
        if lhs != c * Zt - c * Pt / om:
            fails["rule3-minus"].append(rep)
        if Pt / (u * om) - om * Mt != c * Zt:
            fails["others-1"].append(rep)
        if P_ / om != om * (M + (u - 1) * Mt) + (u - 1) * Zt:
            fails["others-2"].append(rep)
        if om * M != (P_ + (u ** -1 - 1) * Pt) / om + (u ** -1 - 1) * Zt:
            fails["others-3"].append(rep)
    out = []
    for name in names:
        rec = _record("skein-f", name, count, fails[name], "fail" if name == "rule3-minus" else "pass")
        out.append(rec)
    out.append(_fat_l0(rng, fat_count if fat_count is not None else max(1, count // 2)))
    return out


def _fat_l0(rng, count):
    Av = BtAlgebra(PolyRing("v", "a", "b"))
    v = Av.v
    r = QuadExt.root(Av.L) * v
    s = v - v ** -1
    fails = []
    for k in range(count):
        b = random_braid(rng, 4, 6)
        ties = tuple(("e", j) for j in range(1, b.n))
        w = TiedBraidWord(b.n, ties + tuple(("s", x) for x in b.letters))
        i = rng.randrange(1, w.n)
        _, _, _, Pt, Mt, Zt = (f_tied(x, Av) for x in conway_triples(w, i))
        if Pt / r - r * Mt != s * Zt:
            fails.append({"case": k, "word": str(w), "i": i})
    return _record("skein-f", "fat-l0", count, fails)


# ---------------------------------------------------------------------------
# Markov fuzz


def classical_invariants() -> dict:
    """name -> function of a BraidWord, all constant on Markov classes."""
    from .hecke import homflypt_X

    return {
        "homflypt": homflypt_X,
        "delta-bar": lambda w: invariant_bar(w, "delta"),
        "theta-bar": lambda w: invariant_bar(w, "theta"),
        "delta-2": lambda w: delta_theta_m(w, "delta", 2, (0, 1)),
        "theta-2": lambda w: delta_theta_m(w, "theta", 2, (0,)),
        "f-bracket": lambda w: f_invariant(braid_to_pd(w)),
    }


def suite_markov(seed: int, count: int, steps: int = 8) -> list[dict]:
    rng = random.Random(seed)
    invs = classical_invariants()
    fails = {k: [] for k in invs}
    fails["f-tied"] = []
    for k in range(count):
        w = random_braid(rng, 3, 5)
        s = rng.randrange(10 ** 6)
        w2 = markov_fuzz(w, steps, s, max_strands=4, max_length=10)
        for name, f in invs.items():
            if f(w) != f(w2):
                fails[name].append({"case": k, "word": str(w), "fuzz_seed": s, "moved": str(w2)})
        t = random_tied(rng, 3, 5)
        t2 = markov_fuzz(t, steps, s, max_strands=4, max_length=10)
        if f_tied(t) != f_tied(t2):
            fails["f-tied"].append({"case": k, "word": str(t), "fuzz_seed": s, "moved": str(t2)})
    return [_record("markov", name, count, f) for name, f in fails.items()]


# ---------------------------------------------------------------------------
# cross-route identities


def jones_vs_homflypt(w: BraidWord, root_sign: int | None = None) -> bool:
    """jones(braid_to_pd(w)) == X(w) at u = q^4, z = -1/(1+q^4), sqrt(lambda) = +-q^2."""
    from .hecke import homflypt_X

    Q = PolyRing("q")
    q = Q.q
    if root_sign is None:
        root_sign = jones_branch()
    J = specialize(jones(braid_to_pd(w)), {"t": q ** 4})
    X = specialize(homflypt_X(w), {"u": q ** 4, "z": -1 / (1 + q ** 4)}, root=root_sign * q ** 2)
    return J == X


def jones_branch() -> int:
    """Branch of sqrt(lambda) = +-q^2 fixed on the unknot (first consistent sign)."""
    for sign in (1, -1):
        if jones_vs_homflypt(BraidWord(2, (1,)), sign) and jones_vs_homflypt(BraidWord(1), sign):
            return sign
    raise ArithmeticError("no branch of sqrt(lambda) matches the unknot")


def delta_bar_vs_delta_m(w: BraidWord, m: int) -> bool:
    R = PolyRing("u", "z")
    lhs = specialize(invariant_bar(w, "delta"), {"u": R.u, "a": R.z, "b": Fraction(1, m)}, ring=R)
    return lhs == delta_theta_m(w, "delta", m, tuple(range(m)))


def delta_bar_vs_homflypt(w: BraidWord) -> bool:
    from .hecke import homflypt_X

    R = PolyRing("u", "z")
    return specialize(invariant_bar(w, "delta"), {"u": R.u, "a": R.z, "b": 1}, ring=R) == homflypt_X(w)


def delta_1_vs_homflypt(w: BraidWord) -> bool:
    from .hecke import homflypt_X

    return delta_theta_m(w, "delta", 1, (0,)) == homflypt_X(w)


_HV = None


def theta_1_vs_homflypt(w: BraidWord) -> bool:
    """Theta_1 = X once v**2 = u; sqrt(lambda') = v sqrt(lambda)."""
    global _HV
    if _HV is None:
        R = PolyRing("v", "z")
        _HV = HeckeAlgebra(R, u=R.v ** 2)
    th = delta_theta_m(w, "theta", 1, (0,))
    X = _HV.homflypt(w)
    v = _HV.ring.v
    return X.rebase(v ** -1, th.radicand) == th


def suite_cross_route(seed: int, count: int) -> list[dict]:
    rng = random.Random(seed)
    named = [BraidWord(2, (1, 1, 1)), BraidWord(3, (1, -2, 1, -2)), BraidWord(2, (1, 1))]
    checks = {
        "jones-homflypt": lambda w: jones_vs_homflypt(w),
        "delta-bar-b=1/2": lambda w: delta_bar_vs_delta_m(w.with_strands(3), 2),
        "delta-bar-b=1/3": lambda w: delta_bar_vs_delta_m(w.with_strands(3), 3),
        "delta-bar-b=1": delta_bar_vs_homflypt,
        "delta-1": delta_1_vs_homflypt,
        "theta-1": theta_1_vs_homflypt,
    }
    fails = {k: [] for k in checks}
    words = named + [random_braid(rng, 3, 6) for _ in range(count)]
    for k, w in enumerate(words):
        for name, f in checks.items():
            if not f(w):
                fails[name].append({"case": k, "word": str(w)})
    return [_record("cross-route", name, len(words), f) for name, f in fails.items()]


# ---------------------------------------------------------------------------
# E-system and dimensions


def suite_esystem(seed: int = 0, count: int = 0, max_d: int = 4) -> list[dict]:
    fails_res, fails_disp, fails_E = [], [], []
    cases = 0
    for d in range(1, max_d + 1):
        for r in range(1, d + 1):
            for S in combinations(range(d), r):
                cases += 1
                sol = esystem_solution(d, S)
                if any(e_system_residuals(sol.x)):
                    fails_res.append({"d": d, "S": list(S)})
                if d in (3, 4) and any(displayed_system(d, sol.x)):
                    fails_disp.append({"d": d, "S": list(S)})
                if sol.E != Fraction(1, len(S)):
                    fails_E.append({"d": d, "S": list(S), "E": str(sol.E)})
    return [
        _record("esystem", "residuals", cases, fails_res),
        _record("esystem", "displayed-d3-d4", cases, fails_disp),
        _record("esystem", "E=1/|S|", cases, fails_E),
    ]


def generated_keys(alg, n: int, tokens) -> set:
    """Basis keys reached from 1 by right multiplication with the given generators."""
    seen = set(alg.one(n).terms)
    frontier = list(seen)
    while frontier:
        new = []
        for key in frontier:
            x = type(alg.one(n))._raw(alg, n, {key: alg.ring(1)})
            for t in tokens:
                y = alg.mult_gen(t, x, "right")
                for k in y.terms:
                    if k not in seen:
                        seen.add(k)
                        new.append(k)
        frontier = new
    return seen


def dimension_counts() -> dict:
    H = HeckeAlgebra()
    Y = YokonumaHecke(2)
    E = BtAlgebra()
    return {
        "H3": len(generated_keys(H, 3, [1, 2])),
        "Y2,3": len(generated_keys(Y, 3, [("g", 1), ("g", 2), ("t", 1), ("t", 2), ("t", 3)])),
        "E3": len(generated_keys(E, 3, [("T", 1), ("T", 2), ("E", 1), ("E", 2)])),
    }


def suite_dims(seed: int = 0, count: int = 0) -> list[dict]:
    got = dimension_counts()
    want = {"H3": 6, "Y2,3": 48, "E3": len(enumerate_partitions(3)) * 6}
    out = []
    for k, v in want.items():
        rec = _record("dims", k, 1, [] if got[k] == v else [{"got": got[k], "want": v}])
        out.append(rec)
    return out


def run_suite(name: str, seed: int, count: int) -> list[dict]:
    table = {
        "trace-rules": suite_trace_rules,
        "skein-x": suite_skein_x,
        "skein-f": suite_skein_f,
        "markov": suite_markov,
        "cross-route": suite_cross_route,
        "esystem": suite_esystem,
        "dims": suite_dims,
    }
    if name not in table:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return table[name](seed, count)

"""Acceptance criteria 1-12, one test each.

Every test stores a line "criterion k: PASS|FAIL ..." in REPORT; conftest
prints them at the end of the run.  Criterion 3 contains a sub-check that
does not hold and is reported as FAIL and marked xfail, not hidden.
"""

import random

import pytest

from tielab import checks as C
from tielab.braid import BraidWord, TiedBraidWord
from tielab.bracket import JONES, braid_to_pd, bracket, f_invariant, jones, mirror, parse_pd
from tielab.btalgebra import BtAlgebra, f_tied, invariant_bar
from tielab.hecke import HeckeAlgebra, homflypt_X
from tielab.scalars import specialize
from tielab.yokonuma import delta_theta_m, displayed_system, esystem_solution

REPORT: dict[int, str] = {}
SEED = 20240611


def report(k, ok, detail):
    REPORT[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(REPORT[k])


def failed(records):
    return [f"{r['suite']}/{r['property']}" for r in records if r["ok"] != (r["expected"] == "pass")]


def test_criterion_01_golden_values():
    H = HeckeAlgebra()
    A = BtAlgebra()
    checks = {
        "tau(h1) = z": H.trace(H.gen(1, 2)) == H.z,
        "rho(1) = 1": A.rho(A.one(3)) == 1,
        "rho(E1) = b": A.rho(A.mult_gen(("E", 1), A.one(2))) == A.b,
        "rho(T1) = a": A.rho(A.mult_gen(("T", 1), A.one(2))) == A.a,
        "Hopf bracket": str(bracket(parse_pd("X[1,3,4,2] X[3,1,2,4]"), "generic")) == "z*A^2 + 2*A*B + z*B^2",
        "<O> = 1": bracket(parse_pd("O")).value == 1,
    }
    bad = [k for k, v in checks.items() if not v]
    report(1, not bad, f"{len(checks) - len(bad)}/{len(checks)} golden values {bad or ''}")
    assert not bad


def test_criterion_02_normalization():
    unknot = BraidWord(1)
    checks = {f"X(coxeter, n={n})": homflypt_X(BraidWord(n, tuple(range(1, n)))) == 1 for n in range(2, 6)}
    for m in (1, 2, 3):
        checks[f"Delta_{m}"] = delta_theta_m(unknot, "delta", m, tuple(range(m))) == 1
        checks[f"Theta_{m}"] = delta_theta_m(unknot, "theta", m, tuple(range(m))) == 1
    checks["Delta-bar"] = invariant_bar(unknot, "delta") == 1
    checks["Theta-bar"] = invariant_bar(unknot, "theta") == 1
    checks["F"] = f_tied(TiedBraidWord(1)) == 1
    bad = [k for k, v in checks.items() if not v]
    report(2, not bad, f"{len(checks) - len(bad)}/{len(checks)} unknot normalizations {bad or ''}")
    assert not bad


def test_criterion_03_skein():
    recs = C.suite_skein_x(SEED, 100) + C.suite_skein_f(SEED, 100, fat_count=50)
    by = {r["property"]: r for r in recs}
    holding = ["skein-x", "rule3-plus", "others-1", "others-2", "others-3", "fat-l0"]
    bad = [p for p in holding if not by[p]["ok"]]
    minus = by["rule3-minus"]
    nfail = minus["failed"]
    ok = not bad and minus["ok"]
    detail = (
        f"classical skein 100/100, others (1)-(3) 100/100, all-tied restriction law 50/50; "
        f"tied rule (3) with '-' before the F(L+,~) term fails on {nfail}/{minus['cases']} triples, "
        f"with '+' it holds on {minus['cases'] - by['rule3-plus']['failed']}/{minus['cases']}"
    )
    report(3, ok, detail)
    assert not bad
    if not minus["ok"]:
        pytest.xfail("tied skein rule (3) does not hold with the stated sign; the sign-corrected form does")


def test_criterion_04_trace_rules():
    recs = C.suite_trace_rules(SEED, 200)
    bad = failed(recs)
    wit = next(r for r in recs if r["property"] == "tralphaen-nonsolution-witness")["witness"]
    report(4, not bad, f"{len(recs)} properties on 200 random elements each; non-solution witness "
                       f"d=2, x1=2: tr(t1 e1) = {wit['lhs']} vs tr(t1) tr(e1) = {wit['rhs']} {bad or ''}")
    assert not bad


def test_criterion_05_esystem():
    n, bad = 0, []
    for d in (3, 4):
        for mask in range(1, 2 ** d):
            S = tuple(s for s in range(d) if mask >> s & 1)
            n += 1
            if any(r != 0 for r in displayed_system(d, esystem_solution(d, S).x)):
                bad.append((d, S))
    report(5, not bad, f"{n - len(bad)}/{n} subsets S with zero residuals {bad or ''}")
    assert not bad


def test_criterion_06_jones_cross_route():
    sign = C.jones_branch()
    words = {"trefoil": BraidWord(2, (1, 1, 1)), "figure-eight": BraidWord(3, (1, -2, 1, -2)), "Hopf": BraidWord(2, (1, 1))}
    bad = [k for k, w in words.items() if not C.jones_vs_homflypt(w, sign)]
    report(6, not bad, f"sqrt(lambda) = {'+' if sign > 0 else '-'}q^2 fixed on the unknot; "
                       f"{len(words) - len(bad)}/3 links agree {bad or ''}")
    assert not bad


def test_criterion_07_delta_cross_route():
    rng = random.Random(SEED)
    words = [C.random_braid(rng, 3, 6, min_n=3) for _ in range(20)]
    assert all(w.n == 3 and len(w) <= 6 for w in words)
    bad = [(m, str(w)) for m in (2, 3) for w in words if not C.delta_bar_vs_delta_m(w, m)]
    report(7, not bad, f"{40 - len(bad)}/40 (m, word) pairs with Delta-bar(b=1/m) = Delta_m {bad or ''}")
    assert not bad


def test_criterion_08_homflypt_coincidences():
    rng = random.Random(SEED + 8)
    words = [C.random_braid(rng, 4, 7) for _ in range(50)]
    routes = {
        "Delta_1": C.delta_1_vs_homflypt,
        "Theta_1": C.theta_1_vs_homflypt,
        "Delta-bar(b=1)": C.delta_bar_vs_homflypt,
    }
    bad = [(name, str(w)) for name, f in routes.items() for w in words if not f(w)]
    report(8, not bad, f"3 routes x 50 random words agree with X {bad or ''}")
    assert not bad


def test_criterion_09_markov_fuzz():
    recs = C.suite_markov(SEED, 100)
    bad = failed(recs)
    # a cyclotomic E-system solution as well
    rng = random.Random(SEED + 9)
    for k in range(20):
        w = C.random_braid(rng, 3, 4)
        w2 = C.markov_fuzz(w, 6, rng.randrange(10 ** 6), max_strands=4, max_length=8)
        if delta_theta_m(w, "delta", 3, (0, 1)) != delta_theta_m(w2, "delta", 3, (0, 1)):
            bad.append(f"delta d=3 S={{0,1}} case {k}")
    names = ", ".join(r["property"] for r in recs)
    report(9, not bad, f"100 seeded move sequences each for {names}; 20 for Delta (d=3, S={{0,1}}) {bad or ''}")
    assert not bad


def test_criterion_10_dimensions():
    dims = C.dimension_counts()
    want = {"H3": 6, "Y2,3": 48, "E3": 30}
    report(10, dims == want, f"{dims}")
    assert dims == want


def test_criterion_11_chirality():
    tref = braid_to_pd(BraidWord(2, (1, 1, 1)))
    fig8 = jones(braid_to_pd(BraidWord(3, (1, -2, 1, -2))))
    chiral = f_invariant(tref) != f_invariant(mirror(tref))
    amphi = specialize(fig8, {"t": JONES.t ** -4}, ring=JONES) == fig8
    report(11, chiral and amphi, f"trefoil f differs from its mirror: {chiral}; figure-eight Jones symmetric: {amphi}")
    assert chiral and amphi


def test_criterion_12_out_of_scope():
    REPORT[12] = "criterion 12: SKIP  the separating link pairs are given only as pictures, with no braid words"
    pytest.skip("the Homflypt-equal/Theta-distinguished and Delta-vs-Theta separating pairs are only drawn, "
                "never given as braid words, so they cannot be reproduced")


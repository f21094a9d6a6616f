"""The invariant F of tied links: a few values and a check of the tied skein
rule relating L+, L- and their tied versions.

Run:  python3 demos/tied_links.py
"""

import random

from tielab.braid import closure_partition, parse
from tielab.btalgebra import BtAlgebra, conway_triples, f_tied
from tielab.checks import random_tied
from tielab.scalars import QuadExt, format_scalar

A = BtAlgebra()
u = A.u
w = QuadExt.root(A.L)  # the skein variable, w^2 = L
c = 1 - u ** -1


def main():
    for text in ("", "n=2:", "n=2: e1", "n=2: s1 s1", "n=2: e1 s1 s1", "n=3: e1 s1 -s2 s1 -s2"):
        tw = parse(text, tied=True)
        print(f"F({tw})  ties {closure_partition(tw)}")
        print(f"    = {format_scalar(f_tied(tw, A))}")

    rng = random.Random(7)
    plus = minus = 0
    trials = 25
    for _ in range(trials):
        tw = random_tied(rng, 3, 5)
        i = rng.randrange(1, tw.n)
        Lp, Lm, L0, Lpt, Lmt, L0t = (f_tied(x, A) for x in conway_triples(tw, i))
        lhs = Lp / w - w * Lm
        plus += lhs == c * L0t + c * Lpt / w
        minus += lhs == c * L0t - c * Lpt / w
    print()
    print("(1/w)F(L+) - wF(L-) = (1 - 1/u)F(L0~) +- ((1 - 1/u)/w)F(L+~)")
    print(f"  with '+': holds on {plus}/{trials} random triples")
    print(f"  with '-': holds on {minus}/{trials} random triples")


if __name__ == "__main__":
    main()

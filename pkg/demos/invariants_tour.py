"""Compute every classical-link invariant in the package on a few small links
and check that the different routes to the same polynomial agree.

Run:  python3 demos/invariants_tour.py
"""

from tielab.braid import BraidWord, closure_stats
from tielab.bracket import braid_to_pd, bracket, jones
from tielab.btalgebra import invariant_bar
from tielab.checks import delta_bar_vs_delta_m, jones_branch, jones_vs_homflypt
from tielab.hecke import homflypt_X
from tielab.scalars import format_scalar
from tielab.yokonuma import delta_theta_m

LINKS = {
    "unknot": BraidWord(1),
    "Hopf link": BraidWord(2, (1, 1)),
    "trefoil": BraidWord(2, (1, 1, 1)),
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
}


def show(label, value):
    print(f"  {label:<22} {format_scalar(value)}")


def main():
    sign = jones_branch()
    for name, w in LINKS.items():
        comps, e = closure_stats(w)
        print(f"{name}: braid {w}, {comps} component(s), exponent sum {e}")
        pd = braid_to_pd(w)
        show("Kauffman bracket", bracket(pd).value)
        show("Jones", jones(pd))
        show("Homflypt X", homflypt_X(w))
        for m in (2, 3):
            show(f"Delta_{m}", delta_theta_m(w, "delta", m, tuple(range(m))))
        show("Delta-bar", invariant_bar(w, "delta"))
        show("Theta-bar", invariant_bar(w, "theta"))
        agree = jones_vs_homflypt(w, sign)
        bar = all(delta_bar_vs_delta_m(w, m) for m in (2, 3))
        print(f"  Jones == X(u=q^4, z=-1/(1+q^4)): {agree};  Delta-bar(b=1/m) == Delta_m: {bar}")
        print()


if __name__ == "__main__":
    main()

"""Delta_m and Theta_m are indexed by m = |S| only.  This script compares the
values for different subsets S of Z/d with the same size, which is expected
but not proved, and reports what it finds without asserting anything.

Run:  python3 demos/same_size_subsets.py
"""

from itertools import combinations

from tielab.braid import BraidWord
from tielab.yokonuma import delta_theta_m

WORDS = [
    BraidWord(2, (1, 1)),
    BraidWord(2, (1, 1, 1)),
    BraidWord(3, (1, -2, 1, -2)),
    BraidWord(3, (1, 1, 2, -1, 2)),
]


def main():
    for d in (3, 4):
        for m in range(1, d):
            subsets = list(combinations(range(d), m))
            for variant in ("delta", "theta"):
                same = 0
                for w in WORDS:
                    vals = [delta_theta_m(w, variant, d, S) for S in subsets]
                    same += all(v == vals[0] for v in vals[1:])
                print(f"d={d} m={m} {variant:<5} {len(subsets)} subsets: equal on {same}/{len(WORDS)} words")


if __name__ == "__main__":
    main()

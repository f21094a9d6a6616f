import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tielab import perm as P
from tielab.braid import (
    BraidWord,
    TiedBraidWord,
    closure_partition,
    closure_stats,
    markov_fuzz,
    parse,
    perm_of,
    tie_tokens,
    tied_normal_form,
)
from tielab.setpartition import SetPartition


@st.composite
def braids(draw, max_n=4, max_len=8):
    n = draw(st.integers(1, max_n))
    if n == 1:
        return BraidWord(1)
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def tied_braids(draw, max_n=4, max_len=8):
    n = draw(st.integers(2, max_n))
    tok = st.tuples(st.sampled_from("se"), st.integers(1, n - 1), st.booleans()).map(
        lambda t: (t[0], -t[1] if t[0] == "s" and t[2] else t[1])
    )
    return TiedBraidWord(n, tuple(draw(st.lists(tok, max_size=max_len))))


def test_golden_examples():
    assert perm_of(BraidWord(3, (1, 2))) == P.from_cycles(3, [(1, 2, 3)])
    assert closure_stats(BraidWord(2, (1, 1, 1))) == (1, 3)
    assert closure_stats(BraidWord(3)) == (3, 0)
    nf = tied_normal_form(parse("e1 s1"))
    assert (nf.I, nf.word) == (SetPartition.parse("{1,2}"), BraidWord(2, (1,)))
    nf = tied_normal_form(parse("e1 e1"))
    assert (nf.I, nf.word) == (SetPartition.parse("{1,2}"), BraidWord(2))
    assert tied_normal_form(parse("s1 e1")) == tied_normal_form(parse("e1 s1"))


def test_tie_moves_through_crossing():
    # sigma_1 eta_2 = eta_{1,3} sigma_1 in TB_3
    nf = tied_normal_form(parse("n=3: s1 e2"))
    assert nf.I == SetPartition.parse("{1,3|2}")


def test_closure_partition():
    # Hopf link with its two components tied, and a 3-strand unlink with strands 1, 3 tied
    assert closure_partition(parse("e1 s1 s1")) == SetPartition.parse("{1,2}")
    tw = TiedBraidWord(3, tie_tokens(1, 3))
    assert closure_partition(tw) == SetPartition.parse("{1,3|2}")
    # a tie inside a single component is invisible
    assert closure_partition(parse("e1 s1")) == SetPartition.singletons(1)


def test_parse():
    assert parse("1 1 1") == BraidWord(2, (1, 1, 1))
    assert parse("n=4: s2 -s3 e1") == TiedBraidWord(4, (("s", 2), ("s", -3), ("e", 1)))
    assert parse("-s2 3") == BraidWord(4, (-2, 3))
    assert parse("") == BraidWord(1)
    for bad in ("s0", "n=2: 2", "x1", "-e1", "s-1"):
        with pytest.raises(ValueError):
            parse(bad)


@settings(max_examples=80, deadline=None)
@given(braids())
def test_str_round_trip(w):
    assert parse(str(w)) == w


@settings(max_examples=80, deadline=None)
@given(tied_braids(), tied_braids())
def test_semidirect_law(a, b):
    a, b = a.with_strands(4), b.with_strands(4)
    na, nb = tied_normal_form(a), tied_normal_form(b)
    nab = tied_normal_form(a * b)
    assert nab.I == na.I * nb.I.apply_perm(perm_of(na.word))
    assert nab.word == na.word * nb.word


def test_markov_fuzz_trivial_and_deterministic():
    w = BraidWord(3, (1, -2, 1))
    assert markov_fuzz(w, steps=0, seed=3) == w
    assert markov_fuzz(w, steps=10, seed=3) == markov_fuzz(w, steps=10, seed=3)


@settings(max_examples=60, deadline=None)
@given(braids(max_n=3, max_len=6), st.integers(0, 10 ** 6))
def test_markov_fuzz_keeps_component_count(w, seed):
    v = markov_fuzz(w, steps=12, seed=seed, max_strands=5, max_length=12)
    assert v.n <= 5 and len(v) <= 12
    assert closure_stats(v)[0] == closure_stats(w)[0]


@settings(max_examples=60, deadline=None)
@given(tied_braids(max_n=3, max_len=5), st.integers(0, 10 ** 6))
def test_tied_markov_fuzz_keeps_tie_classes(tw, seed):
    v = markov_fuzz(tw, steps=10, seed=seed)
    before, after = closure_partition(tw), closure_partition(v)
    assert sorted(map(len, before.blocks)) == sorted(map(len, after.blocks))

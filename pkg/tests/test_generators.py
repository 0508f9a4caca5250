import pytest
from hypothesis import given, settings, strategies as st

from smoothwords import (
    Alphabet,
    SmoothStream,
    build_smooth_from_r,
    check_smooth_depth,
    coupled_pair_prefix,
    derive_f,
    is_r_smooth,
    kappa_prefix,
)

AB12 = Alphabet(1, 2)
AB13 = Alphabet(1, 3)
AB24 = Alphabet(2, 4)
AB25 = Alphabet(2, 5)

# 60-letter reference prefixes of the self-reading fixed points
REF_21 = "221121221221121122121121221121121221221121221211211221221121"
REF_31 = "333111333131333111333133313331113331313331113331333111333133"
REF_24 = "224422224444224422442222444422224444224422224444224422224444"
REF_25 = "225522222555552255225522555552222255555222225555522552222255"

# 67-letter reference prefixes of the coupled pair over {1,3}
REF_X = "1113111313111311131311131311131113131113111313111313111311131311131"
REF_Y = "3131113131113111313111313111311131311131113131113131113111313111313"


class TestKappa:
    def test_reference_prefixes(self):
        assert kappa_prefix(AB12, 60, start=2).render() == REF_21
        assert kappa_prefix(AB13, 60, start=3).render() == REF_31
        assert kappa_prefix(AB24, 60, start=2).render() == REF_24
        assert kappa_prefix(AB25, 60, start=2).render() == REF_25

    def test_start_with_smaller_letter_prepends_one_letter(self):
        assert kappa_prefix(AB12, 61, start=1).render() == "1" + REF_21

    def test_default_start_is_larger_letter(self):
        assert kappa_prefix(AB12, 60) == kappa_prefix(AB12, 60, start=2)

    def test_self_reading_invariant(self):
        # the exponent sequence of the stream equals the stream itself
        from itertools import groupby
        for ab, start in ((AB12, 2), (AB13, 3), (AB24, 2)):
            w = kappa_prefix(ab, 400, start=start)
            exps = [len(list(g)) for _, g in groupby(w.letters)]
            exps = exps[:-1]  # final run may be mid-growth
            assert bytes(exps) == w.letters[:len(exps)]

    def test_derivation_fixed_point(self):
        # trimming the possibly unfinished final run, the derivative is a
        # prefix of the stream itself
        w = kappa_prefix(AB12, 300, start=2)
        trimmed = w.runs.runs[:-1]
        from smoothwords.words import RunFactorization
        u = RunFactorization(trimmed).reconstruct(AB12)
        d = derive_f(u)
        assert d.is_prefix_of(w)

    def test_prefixes_are_r_smooth(self):
        stream = SmoothStream(alphabet=AB12, kind="kappa", start=2)
        assert stream.prefix_is_r_smooth(500)
        stream31 = SmoothStream(alphabet=AB13, kind="kappa", start=3)
        assert stream31.prefix_is_r_smooth(500)

    def test_no_small_period(self):
        for ab, start in ((AB12, 2), (AB12, 1), (AB24, 2), (AB24, 4)):
            s = kappa_prefix(ab, 5000, start=start).letters
            for p in range(1, 101):
                assert s[p:] != s[:-p], (ab, start, p)


class TestCoupledPair:
    def test_reference_pair(self):
        x, y = coupled_pair_prefix(AB13, 67)
        assert x.render() == REF_X
        assert y.render() == REF_Y

    def test_avoids_double_large_letter(self):
        x, y = coupled_pair_prefix(AB13, 2000)
        assert "33" not in x.render()
        assert "33" not in y.render()

    def test_mutual_reading(self):
        # x's run exponents spell y, and y's run exponents spell x
        from itertools import groupby
        x, y = coupled_pair_prefix(AB13, 3000)
        x_exps = bytes([len(list(g)) for _, g in groupby(x.letters)][:-1])
        y_exps = bytes([len(list(g)) for _, g in groupby(y.letters)][:-1])
        assert x_exps == y.letters[:len(x_exps)]
        assert y_exps == x.letters[:len(y_exps)]

    def test_requires_one_and_odd_partner(self):
        with pytest.raises(ValueError):
            coupled_pair_prefix(AB24, 10)
        with pytest.raises(ValueError):
            coupled_pair_prefix(AB12, 10)

    def test_streams(self):
        sx = SmoothStream(alphabet=AB13, kind="coupled_x")
        sy = SmoothStream(alphabet=AB13, kind="coupled_y")
        assert sx.prefix(67).render() == REF_X
        assert sy.prefix(67).render() == REF_Y


class TestGreedyStream:
    def test_matches_builder(self):
        stream = SmoothStream(alphabet=AB12, kind="greedy_r", seed=AB12.word("2"))
        w = stream.prefix(80)
        assert len(w) == 80
        assert is_r_smooth(w)
        assert w == build_smooth_from_r(AB12.word("2"), 80)


class TestDepthCheck:
    def test_alternating_word_fails_at_depth_two(self):
        alt = AB12.word("12" * 10)
        assert check_smooth_depth(alt, 1)
        assert not check_smooth_depth(alt, 2)

    def test_reference_prefix_passes_depth_four(self):
        k = kappa_prefix(AB12, 200, start=2)
        assert check_smooth_depth(k, 4)

    def test_empty_fails(self):
        assert not check_smooth_depth(AB12.empty(), 1)


@given(st.integers(min_value=1, max_value=400))
@settings(max_examples=60)
def test_kappa_prefix_consistency(n):
    # prefixes of increasing length agree letter for letter
    long = kappa_prefix(AB12, 400, start=2)
    assert kappa_prefix(AB12, n, start=2) == long[:n]

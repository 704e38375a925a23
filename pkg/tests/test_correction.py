import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from clsec.bcjr import bit_posteriors
from clsec.correction import (APPLICATION, CROSS, PHYSICAL,
                              CandidateDistribution, app_word_dists,
                              clsec_correct, combine, mlm_correct,
                              phy_word_dist, run_scheme, wl_llr_correct,
                              word_window, _context_window)
from clsec.errors import (CandidateMismatch, EmptyCandidates, IndexOutOfRange,
                          MaskCountMismatch)
from clsec.phy import CodeParams
from clsec.scorer import oracle_scorer, uniform_scorer
from clsec.vocab import Vocabulary, candidate_set

PARAMS = CodeParams()


@pytest.fixture
def vocab():
    return Vocabulary(["cat", "cot", "cut", "dog", "dig", "the", "a", "I",
                       "to", "tree", "true"])


def dist(words, probs, layer=PHYSICAL, position=1, vocab=None, length=None):
    vocab = vocab or Vocabulary(list(words))
    cs = candidate_set(vocab, position, length or len(words[0]))
    order = [cs.words.index(w) for w in words]
    aligned = np.empty(len(words))
    for idx, p in zip(order, probs):
        aligned[idx] = p
    return CandidateDistribution(cs, np.log(aligned), layer)


def test_word_window_offsets():
    llr = np.arange(56, dtype=float)
    w1 = word_window(1, (3, 4), llr, PARAMS)
    assert (w1.bit_offset, w1.bit_count) == (0, 24)
    w2 = word_window(2, (3, 4), llr, PARAMS)
    assert (w2.bit_offset, w2.bit_count) == (24, 32)
    assert np.array_equal(w2.llr_segment, llr[24:56])
    # coded window spans (K_n + memory) * rate_inv bits
    assert w2.coded_span == (48, (24 + 32 + 2) * 2)
    assert w2.coded_span[1] - w2.coded_span[0] == (32 + 2) * 2


def test_word_window_overlap_is_boundary_bits():
    # Each adjacent pair of windows shares memory*rate_inv coded bits, so an
    # interior word double-uses 2*memory*rate_inv = 8 boundary bits in total
    # (left plus right neighbour).
    llr = np.zeros(120)
    a = word_window(1, (5, 5, 5), llr, PARAMS)
    b = word_window(2, (5, 5, 5), llr, PARAMS)
    c = word_window(3, (5, 5, 5), llr, PARAMS)
    left = a.coded_span[1] - b.coded_span[0]
    right = b.coded_span[1] - c.coded_span[0]
    assert left == right == PARAMS.memory * PARAMS.rate_inv
    assert left + right == 8


def test_word_window_bounds():
    with pytest.raises(IndexOutOfRange):
        word_window(0, (3,), np.zeros(24), PARAMS)
    with pytest.raises(IndexOutOfRange):
        word_window(2, (3,), np.zeros(24), PARAMS)
    with pytest.raises(IndexOutOfRange):
        word_window(1, (3,), np.zeros(10), PARAMS)


def test_phy_dist_single_candidate(vocab):
    cs = candidate_set(Vocabulary(["tree"]), 1, 4)
    window = word_window(1, (4,), np.random.default_rng(0).normal(size=32), PARAMS)
    d = phy_word_dist(window, cs)
    assert d.probs() == pytest.approx([1.0])


def test_phy_dist_uniform_llr(vocab):
    cs = candidate_set(vocab, 1, 3)
    window = word_window(1, (3,), np.zeros(24), PARAMS)
    d = phy_word_dist(window, cs)
    assert np.allclose(d.probs(), 1.0 / len(cs))


def test_phy_dist_two_candidates_single_informative_bit():
    # candidates differing in exactly one bit with P(bit=0) = 0.9 there
    v = Vocabulary(["b", "c"])   # 0x62 vs 0x63: differ in the last bit only
    cs = candidate_set(v, 1, 1)
    llr = np.zeros(8)
    llr[7] = np.log(9.0)         # P(0) = 0.9
    window = word_window(1, (1,), llr, PARAMS)
    d = phy_word_dist(window, cs)
    assert d.probs() == pytest.approx([0.9, 0.1])


def test_phy_dist_decomposes_into_bit_posteriors(vocab):
    rng = np.random.default_rng(4)
    llr = rng.normal(0, 3, 24)
    cs = candidate_set(vocab, 1, 3)
    d = phy_word_dist(word_window(1, (3,), llr, PARAMS), cs)
    post = bit_posteriors(llr)
    expect = []
    for row in np.asarray(cs.bit_images, dtype=int):
        p = 1.0
        for k, bit in enumerate(row):
            p *= post[k, bit]
        expect.append(p)
    expect = np.array(expect) / np.sum(expect)
    assert np.max(np.abs(d.probs() - expect)) < 1e-12


def test_argmax_and_tie_rule():
    d = dist(["cat", "cot"], [0.9, 0.1])
    assert wl_llr_correct(d) == "cat"
    tied = dist(["cat", "cot"], [0.5, 0.5])
    assert wl_llr_correct(tied) == "cat"   # lowest index wins
    assert mlm_correct(dist(["cat", "cot"], [0.5, 0.5], APPLICATION)) == "cat"


def test_argmax_matches_scan_oracle():
    rng = np.random.default_rng(9)
    words = ("cat", "cot", "cut", "dig", "dog")
    v = Vocabulary(list(words))
    for _ in range(200):
        probs = rng.dirichlet(np.ones(len(words)))
        d = dist(list(words), probs, vocab=v)
        best = max(range(len(words)), key=lambda i: d.probs()[i])
        assert wl_llr_correct(d) == d.candidate_set.words[best]


def test_combine_hand_example():
    d_ph = dist(["cat", "cot"], [0.8, 0.2])
    d_ap = dist(["cat", "cot"], [0.3, 0.7], APPLICATION)
    cross = combine(d_ph, d_ap)
    assert cross.layer == CROSS
    assert cross.probs() == pytest.approx([0.24 / 0.38, 0.14 / 0.38], abs=1e-12)
    assert clsec_correct(cross) == "cat"


def test_combine_uniform_reduction():
    rng = np.random.default_rng(10)
    p = rng.dirichlet(np.ones(3))
    d_ph = dist(["cat", "cot", "cut"], p)
    d_ap = dist(["cat", "cot", "cut"], [1 / 3] * 3, APPLICATION)
    cross = combine(d_ph, d_ap)
    assert np.allclose(cross.probs(), d_ph.probs(), atol=1e-12)
    cross2 = combine(dist(["cat", "cot", "cut"], [1 / 3] * 3), d_ap)
    assert np.allclose(cross2.probs(), 1 / 3)


def test_combine_rejects_mismatch(vocab):
    d1 = dist(["cat", "cot"], [0.5, 0.5])
    d2 = dist(["dog", "dig"], [0.5, 0.5], APPLICATION)
    with pytest.raises(CandidateMismatch):
        combine(d1, d2)


@settings(max_examples=200)
@given(st.integers(2, 6), st.integers(0, 2**31))
def test_scale_invariance(n, seed):
    rng = np.random.default_rng(seed)
    words = tuple(chr(ord("b") + i) for i in range(n))
    v = Vocabulary(list(words))
    cs = candidate_set(v, 1, 1)
    w_ph = rng.random(n) + 1e-9
    w_ap = rng.random(n) + 1e-9
    base_ph = CandidateDistribution(cs, np.log(w_ph), PHYSICAL)
    base_ap = CandidateDistribution(cs, np.log(w_ap), APPLICATION)
    baseline = clsec_correct(combine(base_ph, base_ap))
    c1, c2 = rng.uniform(1e-6, 1e6, 2)
    scaled_ph = CandidateDistribution(cs, np.log(w_ph * c1), PHYSICAL)
    scaled_ap = CandidateDistribution(cs, np.log(w_ap * c2), APPLICATION)
    assert clsec_correct(combine(scaled_ph, scaled_ap)) == baseline


def test_app_word_dists_mask_mismatch(vocab):
    cs = candidate_set(vocab, 2, 3)
    with pytest.raises(MaskCountMismatch):
        app_word_dists("no masks", [cs], uniform_scorer())


def test_app_word_dists_empty_candidates(vocab):
    cs = candidate_set(vocab, 2, 9)
    with pytest.raises(EmptyCandidates):
        app_word_dists("[MASK]", [cs], uniform_scorer())


def test_app_word_dists_uniform(vocab):
    cs = candidate_set(vocab, 2, 3)
    dists = app_word_dists("the [MASK] dog", [cs], uniform_scorer())
    assert len(dists) == 1
    assert dists[0].layer == APPLICATION
    assert np.allclose(dists[0].probs(), 1 / len(cs))


def test_run_scheme_no_errors(vocab):
    words = ("the", "cat")
    llr = np.zeros(8 * 6)
    for scheme in ("bcjr", "wl_llr", "mlm", "clsec"):
        res = run_scheme(scheme, words, llr, (3, 3), vocab, uniform_scorer(), PARAMS)
        assert res.stream.words == words
        assert res.n_errors == 0
        assert res.uncorrectable == ()


def test_run_scheme_only_errors_touched(vocab):
    words = ("the", "cxt", "dog")
    lengths = (3, 3, 3)
    rng = np.random.default_rng(1)
    llr = rng.normal(0, 4, 8 * 9)
    for scheme in ("wl_llr", "mlm", "clsec"):
        res = run_scheme(scheme, words, llr, lengths, vocab,
                         oracle_scorer(["the", "cat", "dog"], 0.9), PARAMS)
        assert res.stream.words[0] == "the"
        assert res.stream.words[2] == "dog"
        assert res.stream.words[1] in vocab.candidates(3)
        assert res.n_errors == 1


def test_run_scheme_empty_candidates_kept(vocab):
    words = ("the", "zzzzzzzzz")   # no 9-letter vocab entries
    lengths = (3, 9)
    llr = np.zeros(8 * 12)
    res = run_scheme("clsec", words, llr, lengths, vocab, uniform_scorer(), PARAMS)
    assert res.stream.words == words
    assert res.uncorrectable == (2,)
    assert res.n_errors == 1


def test_run_scheme_bcjr_passthrough(vocab):
    words = ("qqq", "cat")
    res = run_scheme("bcjr", words, np.zeros(48), (3, 3), vocab, None, PARAMS)
    assert res.stream.words == words
    assert res.n_errors == 1


def test_run_scheme_reduction_uniform_scorer(vocab):
    rng = np.random.default_rng(2)
    words = ("cxt", "dxg", "the")
    lengths = (3, 3, 3)
    for _ in range(20):
        llr = rng.normal(0, 3, 72)
        wl = run_scheme("wl_llr", words, llr, lengths, vocab, None, PARAMS)
        cl = run_scheme("clsec", words, llr, lengths, vocab, uniform_scorer(), PARAMS)
        assert wl.stream.words == cl.stream.words


def test_run_scheme_reduction_zero_llr(vocab):
    rng = np.random.default_rng(3)
    words = ("cxt", "dxg", "the")
    lengths = (3, 3, 3)
    scorer = oracle_scorer(["cat", "dog", "the"], 0.85)
    zeros = np.zeros(72)
    ml = run_scheme("mlm", words, zeros, lengths, vocab, scorer, PARAMS)
    cl = run_scheme("clsec", words, zeros, lengths, vocab, scorer, PARAMS)
    assert ml.stream.words == cl.stream.words


def test_run_scheme_requires_scorer(vocab):
    with pytest.raises(ValueError):
        run_scheme("mlm", ("cxt",), np.zeros(24), (3,), vocab, None, PARAMS)


def test_context_window_truncation():
    lo, hi = _context_window(100, [50], 11)
    assert hi - lo == 11
    assert lo <= 49 < hi
    lo, hi = _context_window(10, [1, 10], 4)
    assert (lo, hi) == (0, 10)   # masks span everything; keep them all

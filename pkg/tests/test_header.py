import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from clsec import data
from clsec.errors import (CodewordTooLong, MalformedHeader, UnknownLength,
                          ZeroPayload)
from clsec.header import (build_codebook, decode_header, encode_header,
                          encode_lengths, header_stats, overhead,
                          serialize_codebook)
from clsec.selftest import optimal_huffman_cost
from clsec.textcodec import strip_message

TABLE_HIST = {3: 31, 4: 21, 2: 19, 5: 14, 6: 10, 8: 8, 7: 7, 10: 4, 1: 4, 9: 2, 12: 1}
TABLE_CODEWORDS = {3: "00", 4: "01", 2: "100", 5: "101", 6: "1100", 8: "1101",
                   7: "1110", 10: "11110", 1: "111110", 9: "1111110", 12: "1111111"}

histograms = st.dictionaries(st.integers(1, 20), st.integers(1, 60),
                             min_size=1, max_size=8)


@pytest.fixture(scope="module")
def reference_ws():
    return strip_message(data.climbers_passage_path().read_text(encoding="utf-8"))


def test_reference_codebook_matches_published_table():
    cb = build_codebook(TABLE_HIST)
    assert cb.codewords == TABLE_CODEWORDS
    assert cb.max_word_length == 12


def test_single_symbol_codebook():
    cb = build_codebook({5: 10})
    assert cb.codewords == {5: "0"}


def test_two_symbol_codebook():
    cb = build_codebook({2: 7, 9: 3})
    assert sorted(cb.codewords.values()) == ["0", "1"]


def test_encode_lengths_reference_total(reference_ws):
    cb = build_codebook(TABLE_HIST)
    bits = encode_lengths(reference_ws.lengths, cb)
    assert bits.size == 368


def test_encode_lengths_single_word():
    cb = build_codebook(TABLE_HIST)
    assert encode_lengths([3], cb).tolist() == [0, 0]


def test_encode_lengths_unknown():
    cb = build_codebook({3: 1, 4: 1})
    with pytest.raises(UnknownLength):
        encode_lengths([5], cb)


def test_serialize_reference_codebook():
    cb = build_codebook(TABLE_HIST)
    assert serialize_codebook(cb).size == 36


def test_serialize_single_symbol():
    cb = build_codebook({5: 10})
    bits = serialize_codebook(cb)
    assert bits.size == 15
    fields = bits.reshape(5, 3)
    assert [int("".join(map(str, f)), 2) for f in fields] == [0, 0, 0, 0, 1]


def test_serialize_rejects_deep_trees():
    # Fibonacci-like counts force codeword lengths beyond 7 bits.
    counts = {i: fib for i, fib in enumerate([1, 1, 2, 3, 5, 8, 13, 21, 34, 55], start=1)}
    cb = build_codebook(counts)
    with pytest.raises(CodewordTooLong):
        serialize_codebook(cb)


def test_overhead_reference():
    assert overhead(368, 36, 4256) == pytest.approx(0.0949, abs=1e-4)


def test_overhead_values():
    assert overhead(0, 0, 1000) == 0.0
    assert overhead(100, 36, 1000) == pytest.approx(0.136)
    with pytest.raises(ZeroPayload):
        overhead(1, 1, 0)


def test_header_roundtrip_reference(reference_ws):
    frame = encode_header(reference_ws.lengths)
    assert decode_header(frame.to_bits()) == list(reference_ws.lengths)
    assert frame.sum_theta == 368
    assert frame.phi == 36
    assert frame.overhead_bits == 404


def test_header_stats_reference(reference_ws):
    st_ = header_stats(reference_ws)
    assert (st_.n_words, st_.n_letters, st_.payload_bits) == (121, 532, 4256)
    assert (st_.sum_theta, st_.phi, st_.total_bits) == (368, 36, 404)
    assert st_.rho == pytest.approx(404 / 4256)


def test_decode_truncated_header():
    frame = encode_header([3, 3, 4, 5]).to_bits()
    with pytest.raises(MalformedHeader):
        decode_header(frame[:-3])
    with pytest.raises(MalformedHeader):
        decode_header(frame[:10])


def test_single_length_header():
    frame = encode_header([4] * 9)
    assert decode_header(frame.to_bits()) == [4] * 9


@given(histograms)
def test_kraft_equality_and_prefix_freeness(hist):
    cb = build_codebook(hist)
    words = list(cb.codewords.values())
    if len(hist) >= 2:
        assert sum(2.0 ** -len(w) for w in words) == pytest.approx(1.0, abs=1e-12)
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            if i != j:
                assert not b.startswith(a)


@given(histograms)
def test_huffman_cost_is_optimal(hist):
    cb = build_codebook(hist)
    if len(hist) < 2:
        return
    cost = sum(hist[s] * len(w) for s, w in cb.codewords.items())
    assert cost == optimal_huffman_cost(hist)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=150))
def test_header_roundtrip_random(lengths):
    assert decode_header(encode_header(lengths).to_bits()) == lengths


def test_corpus_mean_overhead_in_band():
    rhos = [header_stats(f.read_text(encoding="utf-8")).rho
            for f in sorted(data.corpus_dir().glob("*.txt"))]
    assert len(rhos) == 50
    mean_rho = sum(rhos) / len(rhos)
    assert 0.07 <= mean_rho <= 0.11

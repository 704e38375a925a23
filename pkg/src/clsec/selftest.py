"""Built-in oracle suites, runnable without pytest via `clsec selftest`.

Each suite checks an implementation against an independent reference:
exhaustive enumeration for the soft decoder, cost accounting for the Huffman
builder, and round-trip identities for the codecs.
"""
from __future__ import annotations

import heapq
from collections import Counter
from itertools import product

import numpy as np
from scipy.special import logsumexp

from .bcjr import LLR_CLAMP, bcjr_decode, hard_decision
from .correction import run_scheme
from .header import build_codebook, decode_header, encode_header, encode_lengths
from .phy import (CodeParams, awgn, conv_encode, crossover_from_snr,
                  deinterleave, interleave, qpsk_demod_hard, qpsk_modulate)
from .textcodec import ascii_decode, ascii_encode, strip_message
from .vocab import Vocabulary


def brute_force_llr(c_hat: np.ndarray, params: CodeParams, eps: float,
                    k: int) -> np.ndarray:
    """Exact posterior LLRs by summing over all 2^k source sequences."""
    log_e, log_1e = np.log(eps), np.log1p(-eps)
    logs0 = [[] for _ in range(k)]
    logs1 = [[] for _ in range(k)]
    for u in product((0, 1), repeat=k):
        coded = conv_encode(np.array(u, dtype=np.uint8), params)
        dist = int(np.sum(coded != c_hat))
        lp = dist * log_e + (coded.size - dist) * log_1e
        for i, bit in enumerate(u):
            (logs1 if bit else logs0)[i].append(lp)
    llr = np.array([logsumexp(logs0[i]) - logsumexp(logs1[i]) for i in range(k)])
    return np.clip(llr, -LLR_CLAMP, LLR_CLAMP)


def optimal_huffman_cost(counts: dict[int, int]) -> int:
    """Minimal total codeword cost, independent of tie handling: the sum of
    all internal node weights in any optimal merge."""
    weights = [c for c in counts.values() if c > 0]
    if len(weights) == 1:
        return weights[0]
    heapq.heapify(weights)
    cost = 0
    while len(weights) > 1:
        a, b = heapq.heappop(weights), heapq.heappop(weights)
        cost += a + b
        heapq.heappush(weights, a + b)
    return cost


def check_bcjr_enumeration(n_cases: int = 20, seed: int = 1) -> bool:
    rng = np.random.default_rng(seed)
    params = CodeParams()
    for _ in range(n_cases):
        k = int(rng.integers(1, 9))
        eps = float(rng.choice([0.05, 0.2, 0.45]))
        u = rng.integers(0, 2, k).astype(np.uint8)
        coded = conv_encode(u, params)
        c_hat = (coded ^ (rng.random(coded.size) < eps)).astype(np.uint8)
        got = bcjr_decode(c_hat, params, eps)
        want = brute_force_llr(c_hat, params, eps, k)
        if np.max(np.abs(got - want)) > 1e-9:
            return False
    return True


def check_huffman(n_cases: int = 50, seed: int = 2) -> bool:
    rng = np.random.default_rng(seed)
    for _ in range(n_cases):
        n_syms = int(rng.integers(1, 9))
        counts = {int(s): int(c) for s, c in
                  zip(rng.choice(20, size=n_syms, replace=False) + 1,
                      rng.integers(1, 50, n_syms))}
        cb = build_codebook(counts)
        lengths = cb.code_lengths
        # prefix-freeness
        words = list(cb.codewords.values())
        for i, a in enumerate(words):
            for j, b in enumerate(words):
                if i != j and b.startswith(a):
                    return False
        # Kraft equality for non-degenerate codes
        if len(counts) >= 2 and abs(sum(2.0 ** -t for t in lengths.values()) - 1.0) > 1e-12:
            return False
        # optimal cost
        cost = sum(counts[s] * t for s, t in lengths.items())
        if len(counts) >= 2 and cost != optimal_huffman_cost(counts):
            return False
    return True


def check_header_roundtrip(n_cases: int = 100, seed: int = 3) -> bool:
    rng = np.random.default_rng(seed)
    for _ in range(n_cases):
        n = int(rng.integers(1, 120))
        lengths = [int(v) for v in rng.integers(1, 13, n)]
        if decode_header(encode_header(lengths).to_bits()) != lengths:
            return False
    return True


def check_codec_roundtrip(n_cases: int = 100, seed: int = 4) -> bool:
    rng = np.random.default_rng(seed)
    for _ in range(n_cases):
        n = int(rng.integers(1, 30))
        lengths = [int(v) for v in rng.integers(1, 10, n)]
        bits = rng.integers(0, 2, 8 * sum(lengths)).astype(np.uint8)
        ws = ascii_decode(bits, lengths)
        if not np.array_equal(ascii_encode(ws), bits):
            return False
    return True


def check_noiseless_chain(seed: int = 5) -> bool:
    params = CodeParams()
    text = ("The quick brown fox jumps over the lazy dog and the slow grey "
            "goose walks home")
    ws = strip_message(text)
    u = ascii_encode(ws)
    coded = conv_encode(u, params)
    rx = qpsk_demod_hard(awgn(qpsk_modulate(interleave(coded, seed)), 0.0, seed))
    c_hat = deinterleave(rx, seed)
    llr = bcjr_decode(c_hat, params, crossover_from_snr(float("inf")))
    return ascii_decode(hard_decision(llr), ws.lengths).words == ws.words


def check_reduction_identity(seed: int = 6) -> bool:
    from .scorer import uniform_scorer

    params = CodeParams()
    vocab = Vocabulary(["cat", "cot", "cut", "dog", "dig", "the", "a", "I"])
    words = ("the", "cxt", "dog")
    lengths = (3, 3, 3)
    rng = np.random.default_rng(seed)
    llr = rng.normal(0, 4, 8 * sum(lengths))
    wl = run_scheme("wl_llr", words, llr, lengths, vocab, params=params)
    cl = run_scheme("clsec", words, llr, lengths, vocab, uniform_scorer(), params=params)
    return wl.stream.words == cl.stream.words


SUITES = (
    ("bcjr-vs-enumeration", check_bcjr_enumeration),
    ("huffman-properties", check_huffman),
    ("header-roundtrip", check_header_roundtrip),
    ("ascii-roundtrip", check_codec_roundtrip),
    ("noiseless-chain", check_noiseless_chain),
    ("uniform-reduction", check_reduction_identity),
)


def run_all(verbose: bool = False) -> int:
    failures = 0
    for name, fn in SUITES:
        ok = fn()
        if verbose:
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
        failures += not ok
    return 1 if failures else 0

"""Canonical Huffman compression of the word-length metadata (frame header).

The word lengths of a message are Huffman-coded; because the code is
canonical, the header only needs to carry one 3-bit codeword-length field per
word length (ascending word-length order, 0 marking absent lengths) for the
receiver to rebuild the codebook and decode the length sequence.

Two canonical orderings coexist here:

* ``build_codebook`` assigns codewords within equal codeword length by
  descending symbol count (then ascending word length) — the presentation
  order used for reports and demos.
* The wire format must be reconstructible from codeword lengths alone, which
  the receiver can only do in ascending word-length order. ``encode_header``
  and ``decode_header`` therefore use that ordering for the transmitted
  codewords. Codeword lengths, and hence all bit counts and the overhead
  ratio, are identical under both orderings.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import CodewordTooLong, MalformedHeader, UnknownLength, ZeroPayload
from .textcodec import BITS_PER_CHAR, WordStream, strip_message

N_FIELD_BITS = 16        # word count, big-endian
LAMBDA_FIELD_BITS = 5    # max word length
THETA_FIELD_BITS = 3     # per-length codeword-length field; 0 = absent
MAX_THETA = (1 << THETA_FIELD_BITS) - 1


@dataclass(frozen=True)
class CanonicalCodebook:
    """Word length -> canonical codeword (bit string)."""

    codewords: dict[int, str]
    max_word_length: int

    @property
    def code_lengths(self) -> dict[int, int]:
        return {sym: len(cw) for sym, cw in self.codewords.items()}

    def __contains__(self, word_length: int) -> bool:
        return word_length in self.codewords


@dataclass(frozen=True)
class FrameHeader:
    """Assembled header: codebook description plus one codeword per word."""

    word_count: int
    max_word_length: int
    codebook_bits: np.ndarray   # Phi bits: 3 per word length 1..max
    codeword_bits: np.ndarray   # sum of Theta_n bits

    @property
    def phi(self) -> int:
        return int(self.codebook_bits.size)

    @property
    def sum_theta(self) -> int:
        return int(self.codeword_bits.size)

    @property
    def overhead_bits(self) -> int:
        return self.phi + self.sum_theta

    def to_bits(self) -> np.ndarray:
        """Full frame layout: [N:16][Lambda_max:5][3-bit fields][codewords].

        The N and Lambda_max framing fields are excluded from the overhead
        accounting, which counts only sum(Theta) + Phi.
        """
        n_field = _int_to_bits(self.word_count, N_FIELD_BITS)
        lam_field = _int_to_bits(self.max_word_length, LAMBDA_FIELD_BITS)
        return np.concatenate([n_field, lam_field, self.codebook_bits, self.codeword_bits])


def _int_to_bits(value: int, width: int) -> np.ndarray:
    if not 0 <= value < (1 << width):
        raise MalformedHeader(f"value {value} does not fit in {width} bits")
    return np.array([(value >> (width - 1 - i)) & 1 for i in range(width)], dtype=np.uint8)


def _bits_to_int(bits: np.ndarray) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | int(b)
    return out


def _huffman_code_lengths(counts: Mapping[int, int]) -> dict[int, int]:
    """Codeword length per symbol via the two-queue Huffman construction.

    Leaves enter sorted by (count, word length) ascending. When front weights
    tie, the internal-node queue is dequeued before the leaf queue.
    """
    symbols = [(cnt, sym) for sym, cnt in counts.items() if cnt > 0]
    if not symbols:
        raise ValueError("histogram has no positive counts")
    if len(symbols) == 1:
        return {symbols[0][1]: 1}

    leaves = deque((cnt, [sym]) for cnt, sym in sorted(symbols))
    internal: deque[tuple[int, list[int]]] = deque()
    depth = {sym: 0 for _, sym in symbols}

    def pop_min():
        if not leaves:
            return internal.popleft()
        if not internal:
            return leaves.popleft()
        return internal.popleft() if internal[0][0] <= leaves[0][0] else leaves.popleft()

    while len(leaves) + len(internal) > 1:
        w_a, syms_a = pop_min()
        w_b, syms_b = pop_min()
        merged = syms_a + syms_b
        for sym in merged:
            depth[sym] += 1
        internal.append((w_a + w_b, merged))
    return depth


def _assign_canonical(code_lengths: Mapping[int, int], order: Sequence[int]) -> dict[int, str]:
    """Assign canonical codewords to symbols in the given order.

    ``order`` must be sorted by nondecreasing codeword length; the numeric
    code starts at 0 and left-shifts at each length increase.
    """
    codewords: dict[int, str] = {}
    code = 0
    prev_len = None
    for sym in order:
        d = code_lengths[sym]
        if prev_len is not None:
            code = (code + 1) << (d - prev_len)
        if code >= (1 << d):
            raise MalformedHeader("codeword lengths are not prefix-decodable")
        codewords[sym] = format(code, f"0{d}b")
        prev_len = d
    return codewords


def build_codebook(hist: Mapping[int, int]) -> CanonicalCodebook:
    """Huffman-optimal canonical codebook for a word-length histogram.

    Within equal codeword length, codewords are assigned by descending symbol
    count, then ascending word length (the presentation ordering).
    """
    code_lengths = _huffman_code_lengths(hist)
    order = sorted(code_lengths, key=lambda s: (code_lengths[s], -hist[s], s))
    codewords = _assign_canonical(code_lengths, order)
    return CanonicalCodebook(codewords, max(code_lengths))


def _wire_codebook(code_lengths: Mapping[int, int]) -> CanonicalCodebook:
    """Canonical codebook in the receiver-reconstructible ordering: within
    equal codeword length, ascending word length."""
    order = sorted(code_lengths, key=lambda s: (code_lengths[s], s))
    codewords = _assign_canonical(code_lengths, order)
    return CanonicalCodebook(codewords, max(code_lengths))


def encode_lengths(lengths: Sequence[int], cb: CanonicalCodebook) -> np.ndarray:
    """Concatenate the codewords of the word lengths in message order."""
    chunks = []
    for n in lengths:
        cw = cb.codewords.get(n)
        if cw is None:
            raise UnknownLength(f"word length {n} has no codeword")
        chunks.append(cw)
    stream = "".join(chunks)
    return np.array([int(b) for b in stream], dtype=np.uint8)


def serialize_codebook(cb: CanonicalCodebook) -> np.ndarray:
    """One 3-bit codeword-length field per word length 1..max, ascending;
    value 0 is reserved for absent lengths."""
    fields = []
    lengths = cb.code_lengths
    for word_length in range(1, cb.max_word_length + 1):
        theta = lengths.get(word_length, 0)
        if theta > MAX_THETA:
            raise CodewordTooLong(f"codeword length {theta} exceeds the 3-bit field")
        fields.append(_int_to_bits(theta, THETA_FIELD_BITS))
    return np.concatenate(fields)


def overhead(sum_theta: int, phi: int, payload_bits: int) -> float:
    """Header overhead ratio: (sum Theta + Phi) / payload."""
    if payload_bits <= 0:
        raise ZeroPayload("payload must be positive")
    return (sum_theta + phi) / payload_bits


def encode_header(lengths: Sequence[int]) -> FrameHeader:
    """Assemble the frame header for a message's word lengths.

    The transmitted codewords use the wire canonical ordering so the receiver
    can rebuild the codebook from the 3-bit length fields alone.
    """
    lengths = list(lengths)
    if not lengths:
        raise MalformedHeader("cannot build a header for zero words")
    hist = Counter(lengths)
    code_lengths = _huffman_code_lengths(hist)
    if max(code_lengths.values()) > MAX_THETA:
        raise CodewordTooLong("histogram requires codewords beyond the 3-bit field")
    wire = _wire_codebook(code_lengths)
    return FrameHeader(
        word_count=len(lengths),
        max_word_length=wire.max_word_length,
        codebook_bits=serialize_codebook(wire),
        codeword_bits=encode_lengths(lengths, wire),
    )


def decode_header(bits: np.ndarray) -> list[int]:
    """Parse a full frame header back into the word-length list.

    Rebuilds the canonical codebook from codeword lengths alone, then decodes
    exactly N codewords.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    cursor = 0

    def take(n: int) -> np.ndarray:
        nonlocal cursor
        if cursor + n > bits.size:
            raise MalformedHeader("truncated header")
        chunk = bits[cursor:cursor + n]
        cursor += n
        return chunk

    n_words = _bits_to_int(take(N_FIELD_BITS))
    lam_max = _bits_to_int(take(LAMBDA_FIELD_BITS))
    if n_words < 1 or lam_max < 1:
        raise MalformedHeader(f"invalid framing fields N={n_words}, max length={lam_max}")

    code_lengths: dict[int, int] = {}
    for word_length in range(1, lam_max + 1):
        theta = _bits_to_int(take(THETA_FIELD_BITS))
        if theta:
            code_lengths[word_length] = theta
    if not code_lengths:
        raise MalformedHeader("codebook field declares no word lengths")

    wire = _wire_codebook(code_lengths)
    decode_map = {cw: sym for sym, cw in wire.codewords.items()}
    max_theta = max(wire.code_lengths.values())

    lengths: list[int] = []
    prefix = ""
    while len(lengths) < n_words:
        prefix += str(int(take(1)[0]))
        if prefix in decode_map:
            lengths.append(decode_map[prefix])
            prefix = ""
        elif len(prefix) > max_theta:
            raise MalformedHeader("bit stream does not match any codeword")
    return lengths


@dataclass(frozen=True)
class HeaderStats:
    """Everything the header demo and the overhead accounting need."""

    n_words: int
    n_letters: int
    payload_bits: int
    sum_theta: int
    phi: int
    histogram: dict[int, int]
    codebook: CanonicalCodebook

    @property
    def total_bits(self) -> int:
        return self.sum_theta + self.phi

    @property
    def rho(self) -> float:
        return overhead(self.sum_theta, self.phi, self.payload_bits)


def header_stats(source: str | WordStream) -> HeaderStats:
    """Compute header statistics for a message or word stream."""
    ws = strip_message(source) if isinstance(source, str) else source
    hist = dict(Counter(ws.lengths))
    cb = build_codebook(hist)
    sum_theta = int(encode_lengths(ws.lengths, cb).size)
    phi = int(serialize_codebook(cb).size)
    return HeaderStats(
        n_words=ws.n_words,
        n_letters=ws.total_letters,
        payload_bits=ws.bit_count,
        sum_theta=sum_theta,
        phi=phi,
        histogram=hist,
        codebook=cb,
    )

"""Conversions between raw text and the punctuation-free word/bit representation.

A message is reduced to its bare words (punctuation and whitespace act as
separators and are discarded), every character travels as its 8-bit code
MSB-first, and the receiver re-segments the decoded character stream into
words using the word-length metadata carried by the frame header.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyAfterStrip, LengthMismatch, NonAsciiCharacter

BITS_PER_CHAR = 8
# The transmit path accepts plain ASCII only; decoded (possibly garbled)
# characters may be any 8-bit value.
MAX_TX_CODEPOINT = 0x7F
MAX_CHAR_CODE = 0xFF

DEFAULT_MASK_TOKEN = "[MASK]"


@dataclass(frozen=True)
class WordStream:
    """Ordered punctuation-free words; per-word letter counts are derived.

    Streams that reach the channel always hold at least one word
    (strip_message guarantees it); the zero-word stream exists only as the
    degenerate image of ascii_decode([], []).
    """

    words: tuple[str, ...]

    def __post_init__(self):
        if any(not w for w in self.words):
            raise ValueError("WordStream words must be non-empty")
        bad = [w for w in self.words if any(ord(ch) > MAX_CHAR_CODE for ch in w)]
        if bad:
            raise NonAsciiCharacter(f"word not 8-bit codeable: {bad[0]!r}")

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.words)

    @property
    def n_words(self) -> int:
        return len(self.words)

    @property
    def total_letters(self) -> int:
        return sum(self.lengths)

    @property
    def bit_count(self) -> int:
        return BITS_PER_CHAR * self.total_letters

    def text(self) -> str:
        return " ".join(self.words)


def _is_separator(ch: str) -> bool:
    return ch.isspace() or unicodedata.category(ch).startswith("P")


def strip_message(text: str) -> WordStream:
    """Reduce a message to its word sequence.

    Whitespace and Unicode punctuation (categories P*) separate words and are
    discarded; letters, digits, and any other retained character must be plain
    ASCII. Case is preserved.
    """
    words: list[str] = []
    current: list[str] = []
    for ch in text:
        if _is_separator(ch):
            if current:
                words.append("".join(current))
                current = []
            continue
        if ord(ch) > MAX_TX_CODEPOINT:
            raise NonAsciiCharacter(f"character {ch!r} is outside the codeable set")
        current.append(ch)
    if current:
        words.append("".join(current))
    if not words:
        raise EmptyAfterStrip("no codeable word remains after stripping")
    return WordStream(tuple(words))


def _char_codes(words: Iterable[str]) -> list[int]:
    codes = []
    for word in words:
        for ch in word:
            code = ord(ch)
            if code > MAX_CHAR_CODE:
                raise NonAsciiCharacter(f"character {ch!r} exceeds the 8-bit range")
            codes.append(code)
    return codes


def ascii_encode(ws: WordStream) -> np.ndarray:
    """Map a word stream to its bit sequence, 8 bits per character, MSB first.

    Accepts the full 8-bit range so decoded garbled streams can be re-encoded
    for bit-level comparison.
    """
    codes = np.asarray(_char_codes(ws.words), dtype=np.uint8)
    return np.unpackbits(codes)


def encode_words(words: Sequence[str]) -> np.ndarray:
    """ascii_encode for a bare word list (metric-side convenience)."""
    return ascii_encode(WordStream(tuple(words)))


def ascii_decode(bits: np.ndarray, lengths: Sequence[int]) -> WordStream:
    """Segment a decoded bit sequence into words using the length metadata.

    Decoded characters may be arbitrary 8-bit values; garbled words are
    allowed and expected under channel noise.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    lengths = list(lengths)
    if any(n < 1 for n in lengths):
        raise LengthMismatch("word lengths must be positive")
    expected = BITS_PER_CHAR * sum(lengths)
    if bits.size != expected:
        raise LengthMismatch(f"got {bits.size} bits for lengths summing to {sum(lengths)} letters")
    codes = np.packbits(bits)
    chars = "".join(chr(int(c)) for c in codes)
    words = []
    pos = 0
    for n in lengths:
        words.append(chars[pos:pos + n])
        pos += n
    return WordStream(tuple(words))


def insert_spaces(words: Sequence[str], mask_positions: Iterable[int] = (),
                  mask_token: str = DEFAULT_MASK_TOKEN) -> str:
    """Join words with spaces, replacing each masked position (1-based) by the
    scorer's mask token literal."""
    masks = set(mask_positions)
    if masks and not masks <= set(range(1, len(words) + 1)):
        raise ValueError(f"mask positions {sorted(masks)} outside 1..{len(words)}")
    return " ".join(mask_token if i in masks else w for i, w in enumerate(words, start=1))

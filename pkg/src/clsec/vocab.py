"""Vocabulary management, word-error detection, and candidate sets.

A decoded word is flagged as erroneous exactly when it is not a vocabulary
member (case-sensitive); its replacement candidates are all vocabulary words
of the same letter count.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyVocabulary, SourceUnavailable
from .textcodec import DEFAULT_MASK_TOKEN, MAX_CHAR_CODE, encode_words


class Vocabulary:
    """Immutable word set with a precomputed length index.

    Words inside each length bucket are ordered lexicographically so candidate
    enumeration is deterministic. Bit images of each bucket are cached for the
    word-level channel decoding.
    """

    def __init__(self, words: Iterable[str]):
        kept = set()
        for w in words:
            if not w or any(ch.isspace() for ch in w):
                continue
            if DEFAULT_MASK_TOKEN in w:
                continue
            if any(ord(ch) > MAX_CHAR_CODE for ch in w):
                continue
            kept.add(w)
        if not kept:
            raise EmptyVocabulary("no usable words in source")
        self._words = frozenset(kept)
        buckets: dict[int, list[str]] = {}
        for w in sorted(kept):
            buckets.setdefault(len(w), []).append(w)
        self._by_length = {n: tuple(ws) for n, ws in buckets.items()}
        self._bit_cache: dict[int, np.ndarray] = {}

    def __contains__(self, word: str) -> bool:
        return word in self._words

    def __len__(self) -> int:
        return len(self._words)

    @property
    def words(self) -> frozenset[str]:
        return self._words

    def candidates(self, length: int) -> tuple[str, ...]:
        """All vocabulary words with exactly `length` characters (may be empty)."""
        if length < 1:
            raise ValueError("word length must be positive")
        return self._by_length.get(length, ())

    def bit_images(self, length: int) -> np.ndarray:
        """(S_n, 8*length) matrix of the candidates' bit representations.

        Stored as float64 zeros and ones: the only consumer is the word-level
        posterior matmul, which would otherwise convert on every call.
        """
        if length not in self._bit_cache:
            cands = self.candidates(length)
            if not cands:
                self._bit_cache[length] = np.zeros((0, 8 * length))
            else:
                images = encode_words(cands).reshape(len(cands), 8 * length)
                self._bit_cache[length] = np.ascontiguousarray(images, dtype=np.float64)
        return self._bit_cache[length]


@dataclass(frozen=True, eq=False)
class CandidateSet:
    """Candidates for one message position, aligned with their bit images."""

    position: int
    words: tuple[str, ...]
    bit_images: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.words)


def candidate_set(vocab: Vocabulary, position: int, length: int) -> CandidateSet:
    return CandidateSet(position, vocab.candidates(length), vocab.bit_images(length))


def detect_errors(words: Sequence[str], vocab: Vocabulary) -> frozenset[int]:
    """1-based indices of words that are not vocabulary members."""
    return frozenset(i for i, w in enumerate(words, start=1) if w not in vocab)


def load_vocabulary(source: str | Path) -> Vocabulary:
    """Load a vocabulary from a word-list file (one word per line) or from a
    scorer service's /vocab endpoint when given an http(s) URL."""
    text = str(source)
    if text.startswith(("http://", "https://")):
        import requests

        try:
            resp = requests.get(text.rstrip("/") + "/vocab", timeout=30)
            resp.raise_for_status()
            words = resp.json()
        except Exception as exc:
            raise SourceUnavailable(f"vocabulary endpoint failed: {exc}") from exc
        if not isinstance(words, list):
            raise SourceUnavailable("vocabulary endpoint returned a non-list payload")
        return Vocabulary(str(w) for w in words)

    path = Path(source)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise SourceUnavailable(f"cannot read word list {path}: {exc}") from exc
    return Vocabulary(line.strip() for line in lines if line.strip())

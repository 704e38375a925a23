"""Packaged data: the default word list, the test corpus, and the reference
passage used by the header demo."""
from __future__ import annotations

from collections import Counter
from pathlib import Path

_HERE = Path(__file__).parent


def wordlist_path() -> Path:
    return _HERE / "wordlist.txt"


def corpus_dir() -> Path:
    return _HERE / "corpus"


def climbers_passage_path() -> Path:
    """The mountaineering passage used as the header-compression reference."""
    return _HERE / "passage_climbers.txt"


def unigram_counts() -> dict[str, int]:
    """Word counts over the packaged corpus, for the builtin unigram scorer."""
    from ..textcodec import strip_message

    counts: Counter[str] = Counter()
    for f in sorted(corpus_dir().glob("*.txt")):
        counts.update(strip_message(f.read_text(encoding="utf-8")).words)
    return dict(counts)

"""Recovery metrics: bit-error rate, word-error rate, and ROUGE-L.

BERTScore is delegated to the scoring service; there is no native
implementation here.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import LengthMismatch, ScorerUnavailable, WordCountMismatch


def ber(a: np.ndarray, b: np.ndarray) -> float:
    """Fraction of differing bit positions."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.size != b.size:
        raise LengthMismatch(f"bit sequences differ in length: {a.size} vs {b.size}")
    if a.size == 0:
        return 0.0
    return float(np.mean(a != b))


def wer(ref: Sequence[str], hyp: Sequence[str]) -> float:
    """Fraction of positions whose words differ; exact string comparison, so a
    word counts as correct only when every letter matches."""
    if len(ref) != len(hyp):
        raise WordCountMismatch(f"word counts differ: {len(ref)} vs {len(hyp)}")
    if not ref:
        return 0.0
    return sum(r != h for r, h in zip(ref, hyp)) / len(ref)


def _lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    # Rolling single-row DP over the token grid.
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for tok_a in a:
        row = [0] * (len(b) + 1)
        for j, tok_b in enumerate(b, start=1):
            if tok_a == tok_b:
                row[j] = prev[j - 1] + 1
            else:
                row[j] = max(prev[j], row[j - 1])
        prev = row
    return prev[-1]


def rouge_l(ref: str, hyp: str) -> float:
    """Token-level LCS F-measure on a 0..100 scale; tokens are
    whitespace-split words."""
    ref_tokens = ref.split()
    hyp_tokens = hyp.split()
    if not ref_tokens or not hyp_tokens:
        return 0.0
    lcs = _lcs_length(ref_tokens, hyp_tokens)
    if lcs == 0:
        return 0.0
    precision = lcs / len(hyp_tokens)
    recall = lcs / len(ref_tokens)
    return 100.0 * 2.0 * precision * recall / (precision + recall)


def bertscore(ref: str, hyp: str, endpoint: str, timeout: float = 60.0) -> float:
    """Semantic similarity score from the service's /bertscore endpoint."""
    import requests

    try:
        resp = requests.post(
            endpoint.rstrip("/") + "/bertscore",
            json={"reference": ref, "hypothesis": hyp},
            timeout=timeout,
        )
        resp.raise_for_status()
        return float(resp.json()["score"])
    except Exception as exc:
        raise ScorerUnavailable(f"bertscore endpoint failed: {exc}") from exc

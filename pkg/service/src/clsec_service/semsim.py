"""Semantic-similarity backends for the /bertscore endpoint.

Scores are reported on a 0..100 scale and labeled with the model that
produced them.
"""
from __future__ import annotations

import math
from collections import Counter


class CharNgramSimilarity:
    """Deterministic offline fallback: cosine similarity of character
    trigram bags. Identity pairs score 100; the measure is symmetric."""

    name = "char-trigram-cosine"

    @staticmethod
    def _bag(text: str) -> Counter:
        padded = f"  {text.lower()}  "
        return Counter(padded[i:i + 3] for i in range(len(padded) - 2))

    def score(self, reference: str, hypothesis: str) -> float:
        a, b = self._bag(reference), self._bag(hypothesis)
        dot = sum(v * b[k] for k, v in a.items())
        norm = math.sqrt(sum(v * v for v in a.values())) * \
            math.sqrt(sum(v * v for v in b.values()))
        if norm == 0:
            return 0.0
        return 100.0 * dot / norm


class BertScoreSimilarity:
    """Embedding-alignment similarity over a pretrained encoder: greedy
    token alignment of contextual embeddings, F-measure of the matched
    cosines (no baseline rescaling)."""

    def __init__(self, model_id: str = "roberta-large", device: str = "cpu"):
        import torch
        from transformers import AutoModel, AutoTokenizer

        self.name = f"bertscore:{model_id}"
        self._torch = torch
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        self.model = AutoModel.from_pretrained(model_id).to(device).eval()
        self.device = device

    def _embed(self, text: str):
        torch = self._torch
        enc = self.tokenizer(text, return_tensors="pt", truncation=True).to(self.device)
        with torch.no_grad():
            hidden = self.model(**enc).last_hidden_state[0]
        return hidden / hidden.norm(dim=-1, keepdim=True)

    def score(self, reference: str, hypothesis: str) -> float:
        ref = self._embed(reference)
        hyp = self._embed(hypothesis)
        sim = hyp @ ref.T
        precision = float(sim.max(dim=1).values.mean())
        recall = float(sim.max(dim=0).values.mean())
        if precision + recall == 0:
            return 0.0
        return 100.0 * 2 * precision * recall / (precision + recall)


def build_similarity(model: str = "builtin", device: str = "cpu"):
    if model == "builtin":
        return CharNgramSimilarity()
    return BertScoreSimilarity(model, device)

"""Fill-mask backends.

Every backend answers the same three questions: what is the mask token, which
whitespace-free words are single tokens of its vocabulary, and what are the
log-probabilities of given candidate words at each mask position of a text.
"""
from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path

import numpy as np

from .config import MODEL_IDS, ServiceConfig


class MultiTokenCandidate(ValueError):
    """Candidate word is not a single token of the backend's vocabulary."""


class MaskMismatch(ValueError):
    """Mask token count in the text disagrees with the mask specs."""


def _normalize(log_weights: np.ndarray) -> list[float]:
    log_weights = np.asarray(log_weights, dtype=np.float64)
    peak = log_weights.max()
    norm = peak + math.log(float(np.sum(np.exp(log_weights - peak))))
    return [float(v - norm) for v in log_weights]


class BuiltinBackend:
    """Deterministic offline backend.

    Candidates are ranked by a character-bigram language model fitted on the
    packaged word list, sharpened by a small bonus for words that already
    occur in the visible context. No weights are downloaded and identical
    requests always produce identical responses.
    """

    name = "builtin"
    mask_token = "[MASK]"
    max_context = 100_000

    def __init__(self, wordlist: str | None = None):
        path = Path(wordlist) if wordlist else Path(__file__).parent / "data" / "words.txt"
        words = [w.strip() for w in path.read_text(encoding="utf-8").splitlines() if w.strip()]
        self.words = sorted(set(words))
        if not self.words:
            raise RuntimeError(f"empty word list at {path}")
        counts: dict[tuple[str, str], int] = defaultdict(int)
        totals: dict[str, int] = defaultdict(int)
        for w in self.words:
            lw = f"^{w.lower()}$"
            for a, b in zip(lw, lw[1:]):
                counts[(a, b)] += 1
                totals[a] += 1
        self._bigram = {
            pair: math.log(c / totals[pair[0]]) for pair, c in counts.items()
        }
        self._floor = math.log(0.5 / (len(totals) + 1))
        self._vocab_set = set(self.words)

    @property
    def vocab_size(self) -> int:
        return len(self.words)

    def vocab(self) -> list[str]:
        return self.words

    def tokenize_word(self, word: str) -> list[str]:
        # whitespace-free strings are atomic for the builtin tokenizer
        return word.split()

    def _word_logprob(self, word: str) -> float:
        lw = f"^{word.lower()}$"
        return sum(self._bigram.get((a, b), self._floor) for a, b in zip(lw, lw[1:]))

    def fill_mask(self, masked_text: str, masks: list[dict]) -> list[dict]:
        found = masked_text.count(self.mask_token)
        if found != len(masks):
            raise MaskMismatch(f"text has {found} masks, request describes {len(masks)}")
        context = {
            tok.lower() for tok in masked_text.split() if tok != self.mask_token
        }
        out = []
        for spec in masks:
            candidates = spec["candidates"]
            for cand in candidates:
                if len(self.tokenize_word(cand)) != 1:
                    raise MultiTokenCandidate(cand)
            if not candidates:
                out.append({"index": spec["index"], "logprobs": []})
                continue
            scores = np.array([
                self._word_logprob(c) + (math.log(2.0) if c.lower() in context else 0.0)
                for c in candidates
            ])
            out.append({"index": spec["index"], "logprobs": _normalize(scores)})
        return out


class TransformersBackend:
    """Pretrained masked-language-model backend (BART or an encoder MLM).

    Candidate words are scored by the model's output distribution at each
    mask position, restricted and renormalized over the submitted
    candidates. Candidates must map to a single token (with the leading-
    space convention of the tokenizer), otherwise they are rejected.
    """

    def __init__(self, model_key: str, device: str = "cpu"):
        import torch
        from transformers import AutoTokenizer

        self.name = model_key
        model_id = MODEL_IDS[model_key]
        self._torch = torch
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        if model_key == "bart":
            from transformers import BartForConditionalGeneration

            self.model = BartForConditionalGeneration.from_pretrained(model_id)
        else:
            from transformers import AutoModelForMaskedLM

            self.model = AutoModelForMaskedLM.from_pretrained(model_id)
        self.model.to(device).eval()
        self.device = device
        self.mask_token = self.tokenizer.mask_token
        self.max_context = int(self.tokenizer.model_max_length)

    @property
    def vocab_size(self) -> int:
        return len(self.tokenizer)

    def vocab(self) -> list[str]:
        words = set()
        for token_id in range(len(self.tokenizer)):
            text = self.tokenizer.decode([token_id]).strip()
            if text and " " not in text and text.isalpha() and text.isascii():
                if len(self._word_ids(text)) == 1:
                    words.add(text)
        return sorted(words)

    def _word_ids(self, word: str) -> list[int]:
        # leading space: score the word as it appears after another word
        return self.tokenizer.encode(" " + word, add_special_tokens=False)

    def tokenize_word(self, word: str) -> list[int]:
        return self._word_ids(word)

    def fill_mask(self, masked_text: str, masks: list[dict]) -> list[dict]:
        found = masked_text.count(self.mask_token)
        if found != len(masks):
            raise MaskMismatch(f"text has {found} masks, request describes {len(masks)}")
        candidate_ids = []
        for spec in masks:
            ids = []
            for cand in spec["candidates"]:
                token_ids = self._word_ids(cand)
                if len(token_ids) != 1:
                    raise MultiTokenCandidate(cand)
                ids.append(token_ids[0])
            candidate_ids.append(ids)

        torch = self._torch
        enc = self.tokenizer(masked_text, return_tensors="pt", truncation=True)
        input_ids = enc["input_ids"].to(self.device)
        with torch.no_grad():
            logits = self.model(input_ids).logits[0]
        positions = (input_ids[0] == self.tokenizer.mask_token_id).nonzero(as_tuple=True)[0]
        if positions.numel() != len(masks):
            raise MaskMismatch("masks lost to tokenizer truncation")
        out = []
        for spec, ids, pos in zip(masks, candidate_ids, positions.tolist()):
            if not ids:
                out.append({"index": spec["index"], "logprobs": []})
                continue
            log_probs = torch.log_softmax(logits[pos], dim=-1)
            selected = log_probs[ids].double().cpu().numpy()
            out.append({"index": spec["index"], "logprobs": _normalize(selected)})
        return out


def build_backend(cfg: ServiceConfig):
    if cfg.model == "builtin":
        return BuiltinBackend(cfg.wordlist)
    if cfg.model in MODEL_IDS:
        return TransformersBackend(cfg.model, cfg.device)
    raise ValueError(f"unknown model {cfg.model!r}; expected builtin, bart, or mmbert")

"""Punctuation restoration backends.

The contract is strict: word tokens must survive verbatim, only punctuation
may be inserted or adjusted, and generation must be deterministic.
"""
from __future__ import annotations

import re

from .config import ServiceConfig

PROMPT = (
    "Restore the punctuation of the following text. Use contextual cues and "
    "grammatical constraints. Do not add, remove, reorder, or change any "
    "words; only insert punctuation marks and sentence spacing.\n\n"
    "Text: {text}\n\nPunctuated text:"
)


class RuleBasedPunctuator:
    """Deterministic offline fallback: inserts sentence breaks before
    capitalized words at plausible distances and a terminal period. Words are
    never altered."""

    name = "builtin"

    def punctuate(self, text: str) -> str:
        tokens = text.split()
        if not tokens:
            return text
        pieces = []
        since_break = 0
        for i, tok in enumerate(tokens):
            if (i > 0 and since_break >= 6 and tok[:1].isupper()
                    and not tokens[i - 1][:1].isupper()):
                pieces[-1] += "."
                since_break = 0
            pieces.append(tok)
            since_break += 1
        out = " ".join(pieces)
        if not out.endswith((".", "!", "?")):
            out += "."
        return out


class PromptPunctuator:
    """Instruction-tuned model driven by a fixed restoration prompt with
    sampling disabled; thinking/reasoning modes are turned off for latency."""

    def __init__(self, model_id: str, device: str = "cpu"):
        import torch
        from transformers import AutoModelForCausalLM, AutoTokenizer

        self.name = model_id
        self._torch = torch
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        self.model = AutoModelForCausalLM.from_pretrained(model_id)
        self.model.to(device).eval()
        self.device = device

    def punctuate(self, text: str) -> str:
        torch = self._torch
        prompt = PROMPT.format(text=text)
        if hasattr(self.tokenizer, "apply_chat_template") and self.tokenizer.chat_template:
            rendered = self.tokenizer.apply_chat_template(
                [{"role": "user", "content": prompt}],
                tokenize=False, add_generation_prompt=True,
                enable_thinking=False)
        else:
            rendered = prompt
        enc = self.tokenizer(rendered, return_tensors="pt").to(self.device)
        with torch.no_grad():
            out = self.model.generate(
                **enc, do_sample=False, temperature=None, top_p=None,
                max_new_tokens=2 * enc["input_ids"].shape[1] + 64)
        reply = self.tokenizer.decode(out[0, enc["input_ids"].shape[1]:],
                                      skip_special_tokens=True)
        return reply.strip().splitlines()[0] if reply.strip() else text


def tokens_preserved(original: str, restored: str) -> bool:
    strip = re.compile(r"[^\w]+", re.UNICODE)
    a = [t for t in strip.split(original) if t]
    b = [t for t in strip.split(restored) if t]
    return a == b


def build_punctuator(cfg: ServiceConfig):
    if cfg.punct_model == "builtin":
        return RuleBasedPunctuator()
    return PromptPunctuator(cfg.punct_model, cfg.device)

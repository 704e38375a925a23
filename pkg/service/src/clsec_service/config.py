"""Service configuration."""
from __future__ import annotations

import os
from dataclasses import dataclass

MODEL_IDS = {
    "bart": "facebook/bart-base",
    "mmbert": "jhu-clsp/mmBERT-base",
}


@dataclass(frozen=True)
class ServiceConfig:
    """Which models the process serves.

    `model` selects the fill-mask backend: "bart" or "mmbert" load the
    corresponding pretrained checkpoint via transformers; "builtin" is a
    deterministic self-contained backend that needs no downloaded weights
    (the default, so the service runs in offline environments).
    `punct_model` follows the same convention for punctuation restoration.
    """

    model: str = "builtin"
    punct_model: str = "builtin"
    device: str = "cpu"
    port: int = 8765
    wordlist: str | None = None   # builtin backend vocabulary override

    @classmethod
    def from_env(cls) -> "ServiceConfig":
        return cls(
            model=os.environ.get("CLSEC_SERVICE_MODEL", "builtin"),
            punct_model=os.environ.get("CLSEC_SERVICE_PUNCT_MODEL", "builtin"),
            device=os.environ.get("CLSEC_SERVICE_DEVICE", "cpu"),
            port=int(os.environ.get("CLSEC_SERVICE_PORT", "8765")),
            wordlist=os.environ.get("CLSEC_SERVICE_WORDLIST") or None,
        )

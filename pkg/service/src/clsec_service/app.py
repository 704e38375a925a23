"""FastAPI application exposing the scoring endpoints.

All endpoints are stateless and deterministic for a given process: models are
loaded once at startup, sampling is disabled everywhere, and identical
requests return identical responses.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .backends import MaskMismatch, MultiTokenCandidate, build_backend
from .config import ServiceConfig
from .punct import build_punctuator, tokens_preserved
from .semsim import build_similarity


class MaskRequestItem(BaseModel):
    index: int
    candidates: list[str]


class FillMaskRequest(BaseModel):
    masked_text: str
    masks: list[MaskRequestItem]


class MaskResponseItem(BaseModel):
    index: int
    logprobs: list[float]


class FillMaskResponse(BaseModel):
    masks: list[MaskResponseItem]


class PunctuateRequest(BaseModel):
    text: str


class PunctuateResponse(BaseModel):
    text: str
    model: str


class BertScoreRequest(BaseModel):
    reference: str
    hypothesis: str


class BertScoreResponse(BaseModel):
    score: float = Field(ge=0.0, le=100.0)
    model: str


def create_app(cfg: ServiceConfig | None = None) -> FastAPI:
    cfg = cfg or ServiceConfig.from_env()
    backend = build_backend(cfg)
    punctuator = build_punctuator(cfg)
    similarity = build_similarity()

    app = FastAPI(title="clsec scoring service", version="0.1.0")
    app.state.backend = backend

    @app.get("/capabilities")
    def capabilities():
        return {
            "model": backend.name,
            "mask_token": backend.mask_token,
            "max_context": backend.max_context,
            "vocab_size": backend.vocab_size,
        }

    @app.get("/vocab")
    def vocab():
        return backend.vocab()

    @app.post("/fill_mask", response_model=FillMaskResponse)
    def fill_mask(req: FillMaskRequest):
        try:
            masks = backend.fill_mask(
                req.masked_text,
                [{"index": m.index, "candidates": m.candidates} for m in req.masks])
        except MaskMismatch as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except MultiTokenCandidate as exc:
            raise HTTPException(
                status_code=422, detail=f"candidate is not a single token: {exc}")
        return {"masks": masks}

    @app.post("/punctuate", response_model=PunctuateResponse)
    def punctuate(req: PunctuateRequest):
        if not req.text.strip():
            raise HTTPException(status_code=400, detail="empty text")
        try:
            restored = punctuator.punctuate(req.text)
        except Exception as exc:   # model failure -> explicit 503
            raise HTTPException(status_code=503, detail=f"model unavailable: {exc}")
        if not tokens_preserved(req.text, restored):
            # never hand back an output that edited the words themselves
            restored = req.text
        return {"text": restored, "model": punctuator.name}

    @app.post("/bertscore", response_model=BertScoreResponse)
    def bertscore(req: BertScoreRequest):
        if not req.reference.strip() or not req.hypothesis.strip():
            raise HTTPException(status_code=400, detail="empty input")
        value = similarity.score(req.reference, req.hypothesis)
        return {"score": max(0.0, min(100.0, value)), "model": similarity.name}

    return app

"""Application-layer probability sources for masked word positions.

A scorer receives the masked message plus the candidate list of each mask and
returns per-mask log-probability vectors renormalized over the candidates.
The built-ins are deterministic test doubles; the remote client talks to a
masked-language-model service over HTTP.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import MalformedRequest, ProtocolError, ScorerUnavailable


@dataclass(frozen=True)
class MaskSpec:
    position: int                  # 1-based message position of the mask
    candidates: tuple[str, ...]


@dataclass(frozen=True)
class ScorerRequest:
    masked_text: str
    masks: tuple[MaskSpec, ...]


@dataclass(frozen=True)
class ScorerResponse:
    log_probs: tuple[np.ndarray, ...]   # one normalized vector per mask
    scorer_id: str


def _normalize(log_weights: np.ndarray) -> np.ndarray:
    log_weights = np.asarray(log_weights, dtype=np.float64)
    if log_weights.size == 0:
        return log_weights
    if np.any(np.isnan(log_weights)):
        raise ProtocolError("scorer produced NaN log-weights")
    peak = log_weights.max()
    return log_weights - (peak + np.log(np.sum(np.exp(log_weights - peak))))


class Scorer:
    """Capability contract: a mask token plus a score() implementation."""

    mask_token: str = "[MASK]"
    max_context: int | None = None   # advertised context budget in words
    name: str = "scorer"

    def score(self, request: ScorerRequest) -> ScorerResponse:
        raise NotImplementedError

    def _check(self, request: ScorerRequest) -> None:
        found = request.masked_text.count(self.mask_token)
        if found != len(request.masks):
            raise MalformedRequest(
                f"text holds {found} mask tokens but {len(request.masks)} mask specs given")


class UnigramScorer(Scorer):
    """Context-free scorer: candidate weight proportional to its count, with a
    floor weight for unseen words. An empty count table yields the uniform
    scorer."""

    def __init__(self, counts: Mapping[str, float] | None = None, floor: float = 1.0):
        if floor <= 0:
            raise ValueError("floor weight must be positive")
        self.counts = dict(counts or {})
        if any(v < 0 for v in self.counts.values()):
            raise ValueError("counts must be nonnegative")
        self.floor = floor
        self.name = "unigram" if self.counts else "uniform"

    def score(self, request: ScorerRequest) -> ScorerResponse:
        self._check(request)
        vectors = []
        for mask in request.masks:
            weights = np.array(
                [self.counts.get(w, 0.0) or self.floor for w in mask.candidates],
                dtype=np.float64)
            vectors.append(_normalize(np.log(weights)))
        return ScorerResponse(tuple(vectors), self.name)


def uniform_scorer() -> UnigramScorer:
    return UnigramScorer({})


def builtin_unigram(counts: Mapping[str, float], floor: float = 1.0) -> UnigramScorer:
    return UnigramScorer(counts, floor)


class OracleScorer(Scorer):
    """Harness double: gives probability p to the ground-truth word when it is
    among the candidates, splitting the remainder uniformly; uniform when the
    truth is absent."""

    name = "oracle"

    def __init__(self, ground_truth: Sequence[str], p: float = 0.9):
        if not 0.0 < p < 1.0:
            raise ValueError("oracle probability must lie in (0, 1)")
        self.ground_truth = tuple(ground_truth)
        self.p = p

    def score(self, request: ScorerRequest) -> ScorerResponse:
        self._check(request)
        vectors = []
        for mask in request.masks:
            n = len(mask.candidates)
            if n == 0:
                vectors.append(np.zeros(0))
                continue
            truth = None
            if 1 <= mask.position <= len(self.ground_truth):
                truth = self.ground_truth[mask.position - 1]
            if truth in mask.candidates and n > 1:
                rest = (1.0 - self.p) / (n - 1)
                probs = np.full(n, rest)
                probs[mask.candidates.index(truth)] = self.p
            else:
                probs = np.full(n, 1.0 / n)
            vectors.append(_normalize(np.log(probs)))
        return ScorerResponse(tuple(vectors), self.name)


def oracle_scorer(ground_truth: Sequence[str], p: float = 0.9) -> OracleScorer:
    return OracleScorer(ground_truth, p)


class RemoteScorer(Scorer):
    """HTTP client for the fill-mask service.

    Capabilities are fetched once at construction; score() retries transient
    failures before surfacing ScorerUnavailable.
    """

    name = "remote"

    def __init__(self, endpoint: str, timeout: float = 30.0, retries: int = 2):
        import requests

        self.endpoint = endpoint.rstrip("/")
        self.timeout = timeout
        self.retries = retries
        self._session = requests.Session()
        caps = self._get_json("/capabilities")
        try:
            self.mask_token = str(caps["mask_token"])
            self.model = str(caps["model"])
            self.max_context = int(caps["max_context"]) if caps.get("max_context") else None
        except (KeyError, TypeError, ValueError) as exc:
            raise ProtocolError(f"bad capability response: {caps!r}") from exc
        self.name = f"remote:{self.model}"

    def _get_json(self, path: str):
        return self._request("GET", path, None)

    def _request(self, method: str, path: str, payload):
        import requests

        last: Exception | None = None
        for attempt in range(self.retries + 1):
            try:
                resp = self._session.request(
                    method, self.endpoint + path, json=payload, timeout=self.timeout)
                if resp.status_code >= 500:
                    raise ScorerUnavailable(f"{path} -> {resp.status_code}")
                if resp.status_code >= 400:
                    raise ProtocolError(f"{path} -> {resp.status_code}: {resp.text[:200]}")
                return resp.json()
            except (requests.ConnectionError, requests.Timeout, ScorerUnavailable) as exc:
                last = exc
                if attempt < self.retries:
                    time.sleep(0.2 * (attempt + 1))
        raise ScorerUnavailable(f"scorer endpoint {self.endpoint} unreachable: {last}")

    def score(self, request: ScorerRequest) -> ScorerResponse:
        self._check(request)
        payload = {
            "masked_text": request.masked_text,
            "masks": [
                {"index": m.position, "candidates": list(m.candidates)}
                for m in request.masks
            ],
        }
        data = self._request("POST", "/fill_mask", payload)
        try:
            by_index = {int(m["index"]): m["logprobs"] for m in data["masks"]}
            vectors = []
            for m in request.masks:
                vec = np.asarray(by_index[m.position], dtype=np.float64)
                if vec.shape != (len(m.candidates),):
                    raise ProtocolError(
                        f"mask {m.position}: expected {len(m.candidates)} log-probs, got {vec.shape}")
                if not np.all(np.isfinite(vec)) and vec.size:
                    raise ProtocolError(f"mask {m.position}: non-finite log-probs")
                vectors.append(_normalize(vec))
        except (KeyError, TypeError, ValueError) as exc:
            raise ProtocolError(f"bad fill_mask response: {exc}") from exc
        return ScorerResponse(tuple(vectors), self.name)


def remote_scorer(endpoint: str, timeout: float = 30.0, retries: int = 2) -> RemoteScorer:
    return RemoteScorer(endpoint, timeout=timeout, retries=retries)

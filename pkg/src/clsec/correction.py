"""Post-FEC correction schemes: word-level physical posteriors, their
application-layer counterparts, and the cross-layer product fusion.

All distribution arithmetic happens in log space; normalization subtracts the
log-sum so products of many per-bit posteriors stay finite. Argmax ties break
toward the lowest candidate index, which the lexicographic candidate ordering
makes deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bcjr import LLR_CLAMP
from .errors import (CandidateMismatch, EmptyCandidates, IndexOutOfRange,
                     MaskCountMismatch)
from .phy import CodeParams
from .scorer import MaskSpec, Scorer, ScorerRequest
from .textcodec import BITS_PER_CHAR, WordStream, insert_spaces
from .vocab import CandidateSet, Vocabulary, candidate_set, detect_errors

PHYSICAL = "physical"
APPLICATION = "application"
CROSS = "cross"


@dataclass(frozen=True, eq=False)
class WordWindow:
    """The LLR segment of one word plus its coded-bit span.

    Adjacent words' coded spans overlap by 2*memory*rate_inv boundary bits;
    the LLR segments themselves are disjoint.
    """

    position: int                 # 1-based
    bit_offset: int               # source bits before this word
    bit_count: int                # 8 * word length
    llr_segment: np.ndarray = field(repr=False)
    coded_span: tuple[int, int]   # [start, stop) into the coded sequence


@dataclass(frozen=True, eq=False)
class CandidateDistribution:
    """A normalized distribution over one position's candidates."""

    candidate_set: CandidateSet
    log_probs: np.ndarray = field(repr=False)
    layer: str = PHYSICAL

    def probs(self) -> np.ndarray:
        return np.exp(self.log_probs)


def _logsumexp(values: np.ndarray) -> float:
    peak = values.max()
    if not np.isfinite(peak):
        return float(peak)
    return float(peak + np.log(np.sum(np.exp(values - peak))))


def _normalized(candidate_set: CandidateSet, log_weights: np.ndarray,
                layer: str) -> CandidateDistribution:
    log_weights = np.asarray(log_weights, dtype=np.float64)
    if log_weights.size == 0:
        raise EmptyCandidates(f"position {candidate_set.position} has no candidates")
    if np.any(np.isnan(log_weights)):
        raise ValueError("log-weights contain NaN")
    return CandidateDistribution(candidate_set, log_weights - _logsumexp(log_weights), layer)


def word_window(position: int, lengths: Sequence[int], llr: np.ndarray,
                params: CodeParams = CodeParams()) -> WordWindow:
    """Locate word `position` (1-based) inside the LLR vector and the coded
    sequence."""
    n_words = len(lengths)
    if not 1 <= position <= n_words:
        raise IndexOutOfRange(f"position {position} outside 1..{n_words}")
    llr = np.asarray(llr, dtype=np.float64)
    bit_lengths = [BITS_PER_CHAR * n for n in lengths]
    if llr.size != sum(bit_lengths):
        raise IndexOutOfRange(
            f"LLR vector holds {llr.size} bits but lengths demand {sum(bit_lengths)}")
    offset = sum(bit_lengths[:position - 1])
    count = bit_lengths[position - 1]
    coded_start = offset * params.rate_inv
    coded_stop = (offset + count + params.memory) * params.rate_inv
    return WordWindow(
        position=position,
        bit_offset=offset,
        bit_count=count,
        llr_segment=llr[offset:offset + count],
        coded_span=(coded_start, coded_stop),
    )


def phy_word_dist(window: WordWindow, cands: CandidateSet) -> CandidateDistribution:
    """Word-level channel decoding: each candidate's log-weight is the sum of
    its bits' posterior log-probabilities under the word's LLR segment."""
    if len(cands) == 0:
        raise EmptyCandidates(f"position {window.position} has no candidates")
    lam = np.clip(window.llr_segment, -LLR_CLAMP, LLR_CLAMP)
    # log P(bit=0) = -log(1 + e^-lam), log P(bit=1) = -log(1 + e^lam)
    logp0 = -np.logaddexp(0.0, -lam)
    logp1 = -np.logaddexp(0.0, lam)
    images = np.asarray(cands.bit_images, dtype=np.float64)
    # sum_k [bit_k log p1_k + (1-bit_k) log p0_k] as one matvec
    log_weights = images @ (logp1 - logp0) + logp0.sum()
    return _normalized(cands, log_weights, PHYSICAL)


def _argmax_word(dist: CandidateDistribution) -> str:
    if len(dist.candidate_set) == 0:
        raise EmptyCandidates(f"position {dist.candidate_set.position} has no candidates")
    return dist.candidate_set.words[int(np.argmax(dist.log_probs))]


def wl_llr_correct(dist: CandidateDistribution) -> str:
    """Most likely candidate under the physical distribution alone."""
    return _argmax_word(dist)


def mlm_correct(dist: CandidateDistribution) -> str:
    """Most likely candidate under the application distribution alone."""
    return _argmax_word(dist)


def clsec_correct(dist: CandidateDistribution) -> str:
    """Most likely candidate under the cross-layer distribution."""
    return _argmax_word(dist)


def app_word_dists(masked_text: str, cand_sets: Sequence[CandidateSet],
                   scorer: Scorer) -> list[CandidateDistribution]:
    """Score all masks of a message in one scorer call and renormalize each
    returned vector over its candidate list."""
    n_masks = masked_text.count(scorer.mask_token)
    if n_masks != len(cand_sets):
        raise MaskCountMismatch(
            f"text holds {n_masks} mask tokens but {len(cand_sets)} candidate sets given")
    for cs in cand_sets:
        if len(cs) == 0:
            raise EmptyCandidates(f"position {cs.position} has no candidates")
    request = ScorerRequest(
        masked_text=masked_text,
        masks=tuple(MaskSpec(cs.position, cs.words) for cs in cand_sets),
    )
    response = scorer.score(request)
    return [
        _normalized(cs, vec, APPLICATION)
        for cs, vec in zip(cand_sets, response.log_probs)
    ]


def combine(d_ph: CandidateDistribution, d_ap: CandidateDistribution) -> CandidateDistribution:
    """Cross-layer fusion: element-wise product of the two posteriors,
    renormalized (log-weights summed)."""
    if (d_ph.candidate_set.position != d_ap.candidate_set.position
            or d_ph.candidate_set.words != d_ap.candidate_set.words):
        raise CandidateMismatch("distributions cover different candidate sets")
    return _normalized(d_ph.candidate_set, d_ph.log_probs + d_ap.log_probs, CROSS)


SCHEMES = ("bcjr", "wl_llr", "mlm", "clsec")


@dataclass(frozen=True)
class SchemeResult:
    """Corrected word stream plus detection bookkeeping for the trial record."""

    stream: WordStream
    n_errors: int
    uncorrectable: tuple[int, ...]   # detected errors with empty candidate sets


def _context_window(n_words: int, mask_positions: Sequence[int], limit: int) -> tuple[int, int]:
    """Word range [lo, hi) containing every mask, grown symmetrically up to
    `limit` words."""
    lo = min(mask_positions) - 1
    hi = max(mask_positions)
    while hi - lo < limit and (lo > 0 or hi < n_words):
        if lo > 0:
            lo -= 1
        if hi - lo < limit and hi < n_words:
            hi += 1
    return lo, hi


def run_scheme(scheme: str, decoded_words: Sequence[str], llr: np.ndarray,
               lengths: Sequence[int], vocab: Vocabulary,
               scorer: Scorer | None = None,
               params: CodeParams = CodeParams()) -> SchemeResult:
    """Apply one correction scheme to the hard-decision words.

    Only detected errors are ever touched; detected errors with an empty
    candidate set keep the decoded word and are reported as uncorrectable.
    For the masked-scoring schemes, only correctable positions are masked so
    the final message never retains an unfillable mask token.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    words = list(decoded_words)
    errors = detect_errors(words, vocab)
    if scheme == "bcjr" or not errors:
        return SchemeResult(WordStream(tuple(words)), len(errors), ())

    cand_sets = {n: candidate_set(vocab, n, lengths[n - 1]) for n in sorted(errors)}
    uncorrectable = tuple(n for n, cs in cand_sets.items() if len(cs) == 0)
    targets = [n for n, cs in cand_sets.items() if len(cs) > 0]
    if not targets:
        return SchemeResult(WordStream(tuple(words)), len(errors), uncorrectable)

    phy_dists: dict[int, CandidateDistribution] = {}
    if scheme in ("wl_llr", "clsec"):
        for n in targets:
            window = word_window(n, lengths, llr, params)
            phy_dists[n] = phy_word_dist(window, cand_sets[n])

    app_dists: dict[int, CandidateDistribution] = {}
    if scheme in ("mlm", "clsec"):
        if scorer is None:
            raise ValueError(f"scheme {scheme!r} requires a scorer")
        view = words
        mask_positions = targets
        if scorer.max_context is not None:
            # the advertised limit is in tokens; budget words conservatively
            budget = max(8, int(scorer.max_context * 0.6))
            if len(words) > budget:
                lo, hi = _context_window(len(words), targets, budget)
                view = words[lo:hi]
                mask_positions = [n - lo for n in targets]
        masked = insert_spaces(view, set(mask_positions), scorer.mask_token)
        ordered_sets = [cand_sets[n] for n in targets]
        for cs, dist in zip(ordered_sets, app_word_dists(masked, ordered_sets, scorer)):
            app_dists[cs.position] = dist

    for n in targets:
        if scheme == "wl_llr":
            words[n - 1] = wl_llr_correct(phy_dists[n])
        elif scheme == "mlm":
            words[n - 1] = mlm_correct(app_dists[n])
        else:
            words[n - 1] = clsec_correct(combine(phy_dists[n], app_dists[n]))
    return SchemeResult(WordStream(tuple(words)), len(errors), uncorrectable)

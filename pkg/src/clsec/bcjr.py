"""Soft-output MAP (BCJR) decoding over the hard-demodulation BSC.

The full-sequence forward-backward recursion runs in the log domain with
per-step normalization; the flush tail pins the terminal state to zero, and
the returned LLRs cover the source bits only.
"""
from __future__ import annotations

import numpy as np
from scipy.special import logsumexp

from .errors import InvalidCrossover
from .phy import CodeParams

LLR_CLAMP = 50.0


class Trellis:
    """Transition tables of a feedforward convolutional code.

    State s holds the last `memory` input bits, most recent in the high bit.
    Every state has exactly two outgoing transitions (input 0 / 1) and, for a
    feedforward register, exactly two incoming ones.
    """

    def __init__(self, params: CodeParams = CodeParams()):
        self.params = params
        nu, n_states, rate_inv = params.memory, params.n_states, params.rate_inv

        self.next_state = np.empty((n_states, 2), dtype=np.int64)
        self.outputs = np.empty((n_states, 2, rate_inv), dtype=np.uint8)
        for s in range(n_states):
            for i in (0, 1):
                window = (i << nu) | s
                self.next_state[s, i] = (i << (nu - 1)) | (s >> 1)
                for g_idx, g in enumerate(params.generators):
                    self.outputs[s, i, g_idx] = bin(window & g).count("1") & 1

        # Reverse tables: for each state, its two (predecessor, input) pairs.
        self.prev_state = np.empty((n_states, 2), dtype=np.int64)
        self.prev_input = np.empty((n_states, 2), dtype=np.int64)
        fill = np.zeros(n_states, dtype=np.int64)
        for s in range(n_states):
            for i in (0, 1):
                ns = self.next_state[s, i]
                self.prev_state[ns, fill[ns]] = s
                self.prev_input[ns, fill[ns]] = i
                fill[ns] += 1
        assert np.all(fill == 2)


_TRELLIS_CACHE: dict[CodeParams, Trellis] = {}


def _trellis(params: CodeParams) -> Trellis:
    if params not in _TRELLIS_CACHE:
        _TRELLIS_CACHE[params] = Trellis(params)
    return _TRELLIS_CACHE[params]


def bcjr_decode(c_hat: np.ndarray, params: CodeParams = CodeParams(),
                crossover: float = 0.1) -> np.ndarray:
    """A-posteriori LLRs of the source bits given hard-demodulated coded bits.

    Positive LLR means bit 0 is more likely; uniform bit priors are assumed
    and values are clamped to +/-LLR_CLAMP. Flush-step LLRs are dropped.
    """
    if not 0.0 < crossover <= 0.5:
        raise InvalidCrossover(f"crossover must lie in (0, 0.5], got {crossover}")
    c_hat = np.asarray(c_hat, dtype=np.uint8)
    nu, rate_inv = params.memory, params.rate_inv
    if c_hat.size % rate_inv:
        raise ValueError("coded length must be a multiple of the inverse rate")
    steps = c_hat.size // rate_inv
    k = steps - nu
    if k < 1:
        raise ValueError("coded sequence shorter than the flush tail")

    tr = _trellis(params)
    n_states = params.n_states
    received = c_hat.reshape(steps, rate_inv)

    # Branch metrics: log P(received step | transition) on the BSC.
    log_e, log_1e = np.log(crossover), np.log1p(-crossover)
    matches = (received[:, None, None, :] == tr.outputs[None, :, :, :]).sum(axis=-1)
    gamma = matches * log_1e + (rate_inv - matches) * log_e  # (steps, S, 2)

    # Hoist the transition gathers out of the recursions.
    gamma_prev = gamma[:, tr.prev_state, tr.prev_input]   # (steps, S, 2)
    prev0, prev1 = tr.prev_state[:, 0], tr.prev_state[:, 1]
    next_flat = tr.next_state.reshape(-1)

    neg_inf = -np.inf
    alpha = np.full((steps + 1, n_states), neg_inf)
    alpha[0, 0] = 0.0
    for t in range(steps):
        g = gamma_prev[t]
        a = np.logaddexp(alpha[t].take(prev0) + g[:, 0], alpha[t].take(prev1) + g[:, 1])
        alpha[t + 1] = a - a.max()

    beta = np.full((steps + 1, n_states), neg_inf)
    beta[steps, 0] = 0.0
    for t in range(steps - 1, -1, -1):
        outgoing = gamma[t] + beta[t + 1].take(next_flat).reshape(n_states, 2)
        b = np.logaddexp(outgoing[:, 0], outgoing[:, 1])
        beta[t] = b - b.max()

    # lam[t, s, i] = alpha_t(s) + gamma_t(s, i) + beta_{t+1}(next(s, i))
    lam0 = alpha[:steps] + gamma[:, :, 0] + beta[1:][:, tr.next_state[:, 0]]
    lam1 = alpha[:steps] + gamma[:, :, 1] + beta[1:][:, tr.next_state[:, 1]]
    llr = logsumexp(lam0, axis=1) - logsumexp(lam1, axis=1)
    return np.clip(llr[:k], -LLR_CLAMP, LLR_CLAMP)


def bit_posteriors(llr: np.ndarray) -> np.ndarray:
    """Per-bit probability pairs [P(bit=0), P(bit=1)] from LLRs."""
    llr = np.asarray(llr, dtype=np.float64)
    p0 = 1.0 / (1.0 + np.exp(-llr))
    return np.stack([p0, 1.0 - p0], axis=-1)


def hard_decision(llr: np.ndarray) -> np.ndarray:
    """Sign threshold: bit 0 whenever the LLR is nonnegative."""
    llr = np.asarray(llr)
    return (llr < 0).astype(np.uint8)

"""Physical chain: convolutional encoding, interleaving, QPSK over AWGN.

The transmit path is encode -> interleave -> modulate -> channel; the receive
path is hard demodulation -> deinterleave, after which the soft decoder sees
a binary symmetric channel whose crossover probability follows from the SNR.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc

from .errors import OddBitCount

CROSSOVER_CLAMP = 1e-12


@dataclass(frozen=True)
class CodeParams:
    """Feedforward convolutional code: memory, inverse rate, generators.

    Generators are (memory+1)-bit polynomials, MSB tapping the current input
    bit. The default is the standard (7, 5) octal pair with memory 2 at rate
    1/2.
    """

    memory: int = 2
    rate_inv: int = 2
    generators: tuple[int, ...] = (0o7, 0o5)

    def __post_init__(self):
        if self.rate_inv < 2:
            raise ValueError("inverse rate must be at least 2")
        if len(self.generators) != self.rate_inv:
            raise ValueError("need one generator per output bit")
        limit = 1 << (self.memory + 1)
        if any(not 1 <= g < limit for g in self.generators):
            raise ValueError(f"generators must be polynomials of degree <= {self.memory}")

    @property
    def n_states(self) -> int:
        return 1 << self.memory

    def coded_length(self, k: int) -> int:
        """M = (K + nu) / R."""
        return (k + self.memory) * self.rate_inv


def conv_encode(u: np.ndarray, params: CodeParams = CodeParams()) -> np.ndarray:
    """Shift-register encoding with `memory` trailing zero flush bits.

    Output is (K + nu) * rate_inv bits, the rate_inv generator outputs of each
    input bit emitted consecutively.
    """
    u = np.asarray(u, dtype=np.uint8)
    nu = params.memory
    padded = np.concatenate([u, np.zeros(nu, dtype=np.uint8)])
    steps = padded.size
    out = np.empty((steps, params.rate_inv), dtype=np.uint8)
    for g_idx, g in enumerate(params.generators):
        acc = np.zeros(steps, dtype=np.uint8)
        for delay in range(nu + 1):
            if (g >> (nu - delay)) & 1:
                if delay == 0:
                    acc ^= padded
                else:
                    acc[delay:] ^= padded[:-delay]
        out[:, g_idx] = acc
    return out.reshape(-1)


def _permutation(n: int, seed: int) -> np.ndarray:
    # NumPy PCG64 stream; the permutation algorithm is Generator.permutation's
    # Fisher-Yates, fixed by the seed alone.
    return np.random.default_rng(seed).permutation(n)


def interleave(c: np.ndarray, seed: int) -> np.ndarray:
    """Apply the seeded pseudo-random frame permutation."""
    c = np.asarray(c)
    return c[_permutation(c.size, seed)]


def deinterleave(b: np.ndarray, seed: int) -> np.ndarray:
    """Invert the permutation produced by `interleave` with the same seed."""
    b = np.asarray(b)
    out = np.empty_like(b)
    out[_permutation(b.size, seed)] = b
    return out


def qpsk_modulate(bits: np.ndarray, amplitude: float = 1.0) -> np.ndarray:
    """Gray-mapped QPSK: (b_i, b_{i+1}) -> (A/sqrt2)((1-2 b_i) + j(1-2 b_{i+1}))."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size % 2:
        raise OddBitCount(f"{bits.size} bits cannot form QPSK symbols")
    scale = amplitude / math.sqrt(2.0)
    i = 1.0 - 2.0 * bits[0::2]
    q = 1.0 - 2.0 * bits[1::2]
    return scale * (i + 1j * q)


def awgn(x: np.ndarray, noise_power: float, seed: int) -> np.ndarray:
    """Add circularly symmetric complex Gaussian noise of total power sigma^2
    (sigma^2 / 2 per real dimension)."""
    if noise_power < 0:
        raise ValueError("noise power must be nonnegative")
    x = np.asarray(x, dtype=np.complex128)
    if noise_power == 0:
        return x.copy()
    rng = np.random.default_rng(seed)
    scale = math.sqrt(noise_power / 2.0)
    n = rng.standard_normal((2, x.size))
    return x + scale * (n[0] + 1j * n[1])


def qpsk_demod_hard(y: np.ndarray) -> np.ndarray:
    """Per-dimension sign threshold; a part equal to exactly zero decodes to 0."""
    y = np.asarray(y)
    bits = np.empty(2 * y.size, dtype=np.uint8)
    bits[0::2] = y.real < 0
    bits[1::2] = y.imag < 0
    return bits


def q_function(x: float) -> float:
    """Gaussian tail probability Q(x)."""
    return 0.5 * erfc(x / math.sqrt(2.0))


def crossover_from_snr(snr_db: float) -> float:
    """BSC crossover induced by hard Gray-QPSK demodulation: Q(sqrt(SNR)),
    clamped away from 0 and 0.5."""
    if math.isinf(snr_db) and snr_db > 0:
        return CROSSOVER_CLAMP
    snr = 10.0 ** (snr_db / 10.0)
    eps = q_function(math.sqrt(snr))
    return float(np.clip(eps, CROSSOVER_CLAMP, 0.5 - CROSSOVER_CLAMP))


@dataclass(frozen=True)
class ChannelConfig:
    """SNR point with its derived noise power and hard-demod crossover."""

    snr_db: float
    amplitude: float = 1.0

    @property
    def snr_linear(self) -> float:
        return 10.0 ** (self.snr_db / 10.0)

    @property
    def noise_power(self) -> float:
        if math.isinf(self.snr_db) and self.snr_db > 0:
            return 0.0
        return self.amplitude ** 2 / self.snr_linear

    @property
    def crossover(self) -> float:
        return crossover_from_snr(self.snr_db)

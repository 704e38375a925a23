"""Cross-layer semantic error correction for text transmission.

The package simulates a full encode-channel-decode chain (8-bit character
mapping, convolutional coding with zero flush, random interleaving, QPSK over
AWGN, soft-output MAP decoding) and refines the decoder output by fusing
word-level physical-layer posteriors with application-layer masked-language
-model posteriors, aiming at verbatim message recovery.
"""
from .bcjr import bcjr_decode, bit_posteriors, hard_decision
from .correction import (app_word_dists, clsec_correct, combine, mlm_correct,
                         phy_word_dist, run_scheme, wl_llr_correct, word_window)
from .header import (build_codebook, decode_header, encode_header,
                     encode_lengths, header_stats, overhead, serialize_codebook)
from .metrics import ber, bertscore, rouge_l, wer
from .phy import (ChannelConfig, CodeParams, awgn, conv_encode,
                  crossover_from_snr, deinterleave, interleave,
                  qpsk_demod_hard, qpsk_modulate)
from .scorer import (builtin_unigram, oracle_scorer, remote_scorer,
                     uniform_scorer)
from .textcodec import (WordStream, ascii_decode, ascii_encode, insert_spaces,
                        strip_message)
from .vocab import Vocabulary, candidate_set, detect_errors, load_vocabulary

__version__ = "0.1.0"

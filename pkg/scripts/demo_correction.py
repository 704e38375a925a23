#!/usr/bin/env python3
"""Walk one message through the whole chain and print what each correction
scheme makes of it.

    python scripts/demo_correction.py --snr 2 --seed 3
    python scripts/demo_correction.py --text "Glass is sand that has forgotten how to be stone" --snr 1
"""
import argparse
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

import numpy as np  # noqa: E402

from clsec import data  # noqa: E402
from clsec.bcjr import bcjr_decode, hard_decision  # noqa: E402
from clsec.correction import run_scheme  # noqa: E402
from clsec.harness import trial_seeds  # noqa: E402
from clsec.metrics import ber, wer  # noqa: E402
from clsec.phy import (CodeParams, awgn, conv_encode, crossover_from_snr,  # noqa: E402
                       deinterleave, interleave, qpsk_demod_hard, qpsk_modulate)
from clsec.scorer import builtin_unigram, oracle_scorer, uniform_scorer  # noqa: E402
from clsec.textcodec import ascii_decode, ascii_encode, strip_message  # noqa: E402
from clsec.vocab import detect_errors, load_vocabulary  # noqa: E402

DEFAULT_TEXT = ("The early climbers were looking for the easiest way to the top, "
                "because the summit was the prize they sought.")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--text", default=DEFAULT_TEXT)
    parser.add_argument("--snr", type=float, default=2.0)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--scorer", choices=["uniform", "unigram", "oracle"],
                        default="oracle")
    parser.add_argument("--oracle-p", type=float, default=0.9)
    args = parser.parse_args()

    params = CodeParams()
    vocab = load_vocabulary(data.wordlist_path())
    ws = strip_message(args.text)
    bits = ascii_encode(ws)
    print(f"message: {args.text}")
    print(f"words: {ws.n_words}, letters: {ws.total_letters}, payload bits: {bits.size}")

    il_seed, noise_seed = trial_seeds(args.seed, "demo", 0)
    coded = conv_encode(bits, params)
    rx = awgn(qpsk_modulate(interleave(coded, il_seed)), 10 ** (-args.snr / 10), noise_seed)
    c_hat = deinterleave(qpsk_demod_hard(rx), il_seed)
    print(f"channel: QPSK over AWGN at {args.snr:g} dB, "
          f"{int(np.sum(c_hat != coded))}/{coded.size} coded bits flipped")

    llr = bcjr_decode(c_hat, params, crossover_from_snr(args.snr))
    hd_words = ascii_decode(hard_decision(llr), ws.lengths).words
    errors = detect_errors(hd_words, vocab)
    print(f"post-decoder words ({len(errors)} flagged):")
    print("  " + " ".join(f"*{w}*" if i in errors else w
                          for i, w in enumerate(hd_words, start=1)))

    if args.scorer == "uniform":
        scorer = uniform_scorer()
    elif args.scorer == "unigram":
        scorer = builtin_unigram(data.unigram_counts())
    else:
        scorer = oracle_scorer(ws.words, args.oracle_p)

    print(f"\n{'scheme':<8} {'ber':>8} {'wer':>8}  recovered")
    for scheme in ("bcjr", "wl_llr", "mlm", "clsec"):
        res = run_scheme(scheme, hd_words, llr, ws.lengths, vocab, scorer, params)
        b = ber(bits, ascii_encode(res.stream))
        w = wer(ws.words, res.stream.words)
        print(f"{scheme:<8} {b:>8.4f} {w:>8.4f}  {res.stream.text()}")


if __name__ == "__main__":
    main()

"""Command-line interface: Monte-Carlo sweeps, the header demo, and the
built-in self-test suite."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import data, selftest
from .harness import ALL_SCHEMES, RunConfig, sweep
from .header import header_stats
from .phy import CodeParams


def _parse_snr(spec: str) -> tuple[float, ...]:
    """Accept 'start:stop:step' (inclusive stop) or a comma list."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError("SNR range must be start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise argparse.ArgumentTypeError("SNR step must be positive")
        grid = []
        value = start
        while value <= stop + 1e-9:
            grid.append(round(value, 9))
            value += step
        return tuple(grid)
    return tuple(float(p) for p in spec.split(",") if p.strip())


def _cmd_run(args: argparse.Namespace) -> int:
    raw = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)

    # Precedence: explicit CLI flag > config file > built-in default.
    if args.corpus is not None:
        raw["corpus"] = args.corpus
    raw.setdefault("corpus", str(data.corpus_dir()))
    if args.snr is not None:
        raw.setdefault("channel", {})["snr_db"] = list(_parse_snr(args.snr))
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.schemes is not None:
        raw["schemes"] = [s.strip() for s in args.schemes.split(",") if s.strip()]
    for key in ("trials", "scorer", "endpoint", "oracle_p", "workers", "out"):
        value = getattr(args, key)
        if value is not None:
            raw[key] = value
    if args.vocab is not None:
        raw["vocab_path"] = args.vocab
    if args.bertscore:
        raw["with_bertscore"] = True
    env_endpoint = os.environ.get("CLSEC_SCORER_ENDPOINT")
    if env_endpoint:
        raw["endpoint"] = env_endpoint

    cfg = RunConfig.from_dict(raw)
    result = sweep(cfg)
    print(f"wrote {result.paths['raw']}, {result.paths['summary']}, {result.paths['json']}")
    print(f"{'scheme':<10} {'snr_db':>7} {'ber':>10} {'wer':>10} {'rouge_l':>9}")
    for row in result.summary:
        ber = "-" if row["ber"] is None else f"{row['ber']:.5f}"
        wer = "-" if row["wer"] is None else f"{row['wer']:.5f}"
        rl = "-" if row["rouge_l"] is None else f"{row['rouge_l']:.2f}"
        print(f"{row['scheme']:<10} {row['snr_db']:>7.2f} {ber:>10} {wer:>10} {rl:>9}")
    return 0


def _cmd_header_demo(args: argparse.Namespace) -> int:
    path = args.passage or data.climbers_passage_path()
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    st = header_stats(text)
    print(f"passage: {path}")
    print(f"words N = {st.n_words}, letters L = {st.n_letters}, payload = {st.payload_bits} bits")
    print(f"{'word length':>12} {'count':>6} {'codeword':>10} {'bits':>5}")
    canonical = sorted(st.histogram,
                       key=lambda s: (len(st.codebook.codewords[s]), -st.histogram[s], s))
    for sym in canonical:
        cw = st.codebook.codewords[sym]
        print(f"{sym:>12} {st.histogram[sym]:>6} {cw:>10} {len(cw):>5}")
    print(f"codeword bits = {st.sum_theta}, codebook fields = {st.phi}, "
          f"total = {st.total_bits} bits")
    print(f"header overhead = {100.0 * st.rho:.2f}%")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    return selftest.run_all(verbose=True)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="clsec",
        description="Cross-layer semantic error correction simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a Monte-Carlo sweep over SNR and trials")
    run.add_argument("--corpus", default=None,
                     help="directory of .txt passages or a JSONL file (default: packaged corpus)")
    run.add_argument("--snr", default=None,
                     help="start:stop:step or comma list, in dB (default 0:6:1)")
    run.add_argument("--trials", type=int, default=None, help="trials per passage (default 10)")
    run.add_argument("--schemes", default=None,
                     help=f"comma list from {','.join(ALL_SCHEMES)} (default first four)")
    run.add_argument("--scorer", default=None,
                     choices=["builtin", "unigram", "oracle", "remote"])
    run.add_argument("--endpoint", default=None,
                     help="scorer service URL (env CLSEC_SCORER_ENDPOINT overrides)")
    run.add_argument("--oracle-p", dest="oracle_p", type=float, default=None)
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--vocab", default=None, help="word-list file (default: packaged list)")
    run.add_argument("--out", default=None, help="output path base (default: results)")
    run.add_argument("--workers", type=int, default=None)
    run.add_argument("--bertscore", action="store_true",
                     help="also query the service's /bertscore per trial")
    run.add_argument("--config", default=None, help="JSON config file (dotted keys)")
    run.set_defaults(func=_cmd_run)

    demo = sub.add_parser("header-demo", help="print the codebook and overhead of a passage")
    demo.add_argument("--passage", default=None, help="text file (default: packaged reference)")
    demo.set_defaults(func=_cmd_header_demo)

    st = sub.add_parser("selftest", help="run the built-in oracle suites")
    st.set_defaults(func=_cmd_selftest)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

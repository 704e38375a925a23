"""Monte-Carlo harness: configuration, trial execution, SNR sweeps, and
result emission.

Every trial is deterministic given (base seed, passage id, trial index): the
interleaver permutation and the noise realization derive from those three
values alone, so identical configurations produce byte-identical raw CSVs no
matter how trials are scheduled.
"""
from __future__ import annotations

import csv
import json
import math
import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import data as _data
from .bcjr import bcjr_decode, hard_decision
from .correction import SCHEMES, run_scheme
from .errors import ClsecError, ScorerUnavailable
from .header import decode_header, encode_header
from .metrics import ber, bertscore, rouge_l, wer
from .phy import (CodeParams, awgn, conv_encode, crossover_from_snr,
                  deinterleave, interleave, qpsk_demod_hard, qpsk_modulate)
from .scorer import Scorer, builtin_unigram, oracle_scorer, remote_scorer, uniform_scorer
from .textcodec import ascii_encode, ascii_decode, strip_message
from .vocab import Vocabulary, detect_errors, load_vocabulary

ALL_SCHEMES = SCHEMES + ("clsec_pr",)

CSV_COLUMNS = ("passage", "snr_db", "trial", "scheme", "ber", "wer", "rouge_l",
               "bertscore", "n_words", "n_errors", "n_uncorrectable", "status")

STATUS_OK = "ok"
STATUS_SCORER_ERROR = "scorer_error"
STATUS_PR_FALLBACK = "pr_fallback"


@dataclass(frozen=True)
class RunConfig:
    corpus: str
    snr_db: tuple[float, ...] = (0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0)
    trials: int = 10
    base_seed: int = 0
    schemes: tuple[str, ...] = SCHEMES
    scorer: str = "builtin"          # builtin | unigram | oracle | remote
    endpoint: str | None = None
    oracle_p: float = 0.9
    code: CodeParams = field(default_factory=CodeParams)
    amplitude: float = 1.0
    vocab_path: str | None = None    # None -> packaged word list
    out: str = "results"
    workers: int = 1
    with_bertscore: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.snr_db:
            raise ValueError("snr list must be non-empty")
        unknown = set(self.schemes) - set(ALL_SCHEMES)
        if unknown:
            raise ValueError(f"unknown schemes: {sorted(unknown)}")

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        """Build a config from a nested mapping with the documented keys:
        code.nu, code.rate_inv, code.generators_octal, mod.scheme,
        channel.snr_db, seed, plus the flat CLI fields."""
        code_raw = raw.get("code", {})
        code = CodeParams(
            memory=int(code_raw.get("nu", 2)),
            rate_inv=int(code_raw.get("rate_inv", 2)),
            generators=tuple(int(str(g), 8) for g in code_raw.get("generators_octal", ["7", "5"])),
        )
        mod_scheme = raw.get("mod", {}).get("scheme", "qpsk")
        if mod_scheme != "qpsk":
            raise ValueError(f"unsupported modulation {mod_scheme!r}")
        channel = raw.get("channel", {})
        snr = channel.get("snr_db", list(cls.snr_db))
        if isinstance(snr, (int, float)):
            snr = [snr]
        kwargs = dict(
            corpus=raw.get("corpus", ""),
            snr_db=tuple(float(s) for s in snr),
            code=code,
            base_seed=int(raw.get("seed", 0)),
        )
        for key in ("trials", "scorer", "endpoint", "oracle_p", "amplitude",
                    "vocab_path", "out", "workers", "with_bertscore"):
            if key in raw:
                kwargs[key] = raw[key]
        if "schemes" in raw:
            kwargs["schemes"] = tuple(raw["schemes"])
        return cls(**kwargs)


@dataclass
class TrialRecord:
    passage: str
    snr_db: float
    trial: int
    scheme: str
    ber: float | None
    wer: float | None
    rouge_l: float | None
    bertscore: float | None
    n_words: int
    n_errors: int
    n_uncorrectable: int
    status: str = STATUS_OK
    elapsed_s: float = 0.0   # not part of the CSV schema

    def csv_row(self) -> list[str]:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, float):
                return repr(v)
            return str(v)
        return [fmt(getattr(self, col)) for col in CSV_COLUMNS]


def write_csv(records: Sequence[TrialRecord], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(rec.csv_row())


def read_csv(path: str | Path) -> list[TrialRecord]:
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            records.append(TrialRecord(
                passage=row["passage"],
                snr_db=float(row["snr_db"]),
                trial=int(row["trial"]),
                scheme=row["scheme"],
                ber=float(row["ber"]) if row["ber"] else None,
                wer=float(row["wer"]) if row["wer"] else None,
                rouge_l=float(row["rouge_l"]) if row["rouge_l"] else None,
                bertscore=float(row["bertscore"]) if row["bertscore"] else None,
                n_words=int(row["n_words"]),
                n_errors=int(row["n_errors"]),
                n_uncorrectable=int(row["n_uncorrectable"]),
                status=row["status"],
            ))
    return records


def load_corpus(source: str | Path) -> list[tuple[str, str]]:
    """Load (passage id, text) pairs from a directory of .txt files or a
    JSONL file with a "text" field."""
    path = Path(source)
    if path.is_dir():
        passages = []
        for f in sorted(path.glob("*.txt")):
            text = f.read_text(encoding="utf-8").strip()
            if text:
                passages.append((f.stem, text))
        if not passages:
            raise FileNotFoundError(f"no .txt passages under {path}")
        return passages
    if path.suffix == ".jsonl":
        passages = []
        for i, line in enumerate(path.read_text(encoding="utf-8").splitlines()):
            if not line.strip():
                continue
            obj = json.loads(line)
            passages.append((str(obj.get("id", i)), obj["text"]))
        if not passages:
            raise FileNotFoundError(f"no passages in {path}")
        return passages
    text = path.read_text(encoding="utf-8").strip()
    return [(path.stem, text)]


def trial_seeds(base_seed: int, passage_id: str, trial: int) -> tuple[int, int]:
    """Derive the (interleaver, noise) seeds for one trial.

    The passage id enters through its CRC-32 so the stream does not depend on
    corpus ordering; the same pair is used at every SNR point, which makes
    noise realizations common random numbers across the sweep axis.
    """
    pid = zlib.crc32(passage_id.encode("utf-8"))
    ss = np.random.SeedSequence(entropy=[int(base_seed), pid, int(trial)])
    il_seed, noise_seed = (int(s) for s in ss.generate_state(2, dtype=np.uint64))
    return il_seed, noise_seed


def make_scorer(cfg: RunConfig, ground_truth: Sequence[str],
                shared: Scorer | None = None) -> Scorer:
    """Scorer instance for one passage; remote/builtin scorers are shared,
    the oracle needs the passage's ground truth."""
    if cfg.scorer == "oracle":
        return oracle_scorer(ground_truth, cfg.oracle_p)
    if shared is not None:
        return shared
    return build_shared_scorer(cfg)


def build_shared_scorer(cfg: RunConfig) -> Scorer | None:
    if cfg.scorer == "builtin":
        return uniform_scorer()
    if cfg.scorer == "unigram":
        counts = _data.unigram_counts()
        return builtin_unigram(counts)
    if cfg.scorer == "remote":
        if not cfg.endpoint:
            raise ValueError("remote scorer requires an endpoint")
        return remote_scorer(cfg.endpoint)
    if cfg.scorer == "oracle":
        return None   # constructed per passage
    raise ValueError(f"unknown scorer {cfg.scorer!r}")


def restore_punctuation(text: str, endpoint: str | None,
                        timeout: float = 60.0) -> tuple[str, bool]:
    """Punctuate a recovered message via the service's /punctuate endpoint.

    The word tokens must survive verbatim (only punctuation and the casing of
    sentence joins may change); any violation, or an unreachable service,
    falls back to the input. Returns (text, restored_flag).
    """
    if not endpoint:
        return text, False
    import requests

    try:
        resp = requests.post(endpoint.rstrip("/") + "/punctuate",
                             json={"text": text}, timeout=timeout)
        resp.raise_for_status()
        restored = str(resp.json()["text"])
    except Exception:
        return text, False
    if _tokens_preserved(text, restored):
        return restored, True
    return text, False


def _strip_word_tokens(text: str) -> list[str]:
    import unicodedata
    out, cur = [], []
    for ch in text:
        if ch.isspace() or unicodedata.category(ch).startswith("P"):
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def _tokens_preserved(original: str, restored: str) -> bool:
    a = _strip_word_tokens(original)
    b = _strip_word_tokens(restored)
    if len(a) != len(b):
        return False
    for x, y in zip(a, b):
        if x == y:
            continue
        # Sentence joins may re-case the first letter only.
        if x[1:] == y[1:] and x[0].lower() == y[0].lower():
            continue
        return False
    return True


def run_trial(passage_id: str, text: str, snr_db: float, trial: int,
              cfg: RunConfig, vocab: Vocabulary,
              shared_scorer: Scorer | None = None) -> list[TrialRecord]:
    """Execute the full chain for one (passage, SNR, trial) cell and score
    every configured scheme."""
    ws = strip_message(text)
    truth_bits = ascii_encode(ws)
    ref_plain = ws.text()

    # The header travels error-free; round it through the codec anyway.
    rx_lengths = decode_header(encode_header(ws.lengths).to_bits())

    il_seed, noise_seed = trial_seeds(cfg.base_seed, passage_id, trial)
    coded = conv_encode(truth_bits, cfg.code)
    tx = qpsk_modulate(interleave(coded, il_seed), cfg.amplitude)
    noise_power = 0.0 if math.isinf(snr_db) else cfg.amplitude ** 2 / (10.0 ** (snr_db / 10.0))
    rx = awgn(tx, noise_power, noise_seed)
    coded_hat = deinterleave(qpsk_demod_hard(rx), il_seed)

    eps = crossover_from_snr(snr_db)
    llr = bcjr_decode(coded_hat, cfg.code, eps)
    hd_words = ascii_decode(hard_decision(llr), rx_lengths).words

    scorer = make_scorer(cfg, ws.words, shared_scorer)
    records: list[TrialRecord] = []
    core_cache: dict[str, object] = {}

    for scheme in cfg.schemes:
        t0 = time.perf_counter()
        core = "clsec" if scheme == "clsec_pr" else scheme
        try:
            if core in core_cache:
                result = core_cache[core]
            else:
                result = run_scheme(core, hd_words, llr, rx_lengths, vocab,
                                    scorer, params=cfg.code)
                core_cache[core] = result
        except ScorerUnavailable:
            records.append(TrialRecord(
                passage=passage_id, snr_db=snr_db, trial=trial, scheme=scheme,
                ber=None, wer=None, rouge_l=None, bertscore=None,
                n_words=ws.n_words, n_errors=-1, n_uncorrectable=-1,
                status=STATUS_SCORER_ERROR, elapsed_s=time.perf_counter() - t0))
            continue

        hyp_text = result.stream.text()
        status = STATUS_OK
        if scheme == "clsec_pr":
            hyp_text, restored = restore_punctuation(hyp_text, cfg.endpoint)
            if not restored:
                status = STATUS_PR_FALLBACK
            reference = text
        else:
            reference = ref_plain

        bs = None
        if cfg.with_bertscore and cfg.endpoint:
            try:
                bs = bertscore(reference, hyp_text, cfg.endpoint)
            except ScorerUnavailable:
                bs = None

        records.append(TrialRecord(
            passage=passage_id, snr_db=snr_db, trial=trial, scheme=scheme,
            ber=ber(truth_bits, ascii_encode(result.stream)),
            wer=wer(ws.words, result.stream.words),
            rouge_l=rouge_l(reference, hyp_text),
            bertscore=bs,
            n_words=ws.n_words,
            n_errors=result.n_errors,
            n_uncorrectable=len(result.uncorrectable),
            status=status,
            elapsed_s=time.perf_counter() - t0,
        ))
    return records


def default_vocabulary(cfg: RunConfig) -> Vocabulary:
    if cfg.vocab_path:
        return load_vocabulary(cfg.vocab_path)
    if cfg.scorer == "remote" and cfg.endpoint:
        return load_vocabulary(cfg.endpoint)
    return load_vocabulary(_data.wordlist_path())


def check_corpus(passages: Iterable[tuple[str, str]], vocab: Vocabulary) -> None:
    """Enforce the corpus precondition: every ground-truth word must be a
    vocabulary member, otherwise detection statistics are meaningless."""
    for pid, text in passages:
        ws = strip_message(text)
        missing = detect_errors(ws.words, vocab)
        if missing:
            words = sorted({ws.words[i - 1] for i in missing})
            raise ValueError(
                f"passage {pid!r} holds out-of-vocabulary words: {words[:5]}")


_WORKER_STATE: dict = {}


def _worker_init(cfg: RunConfig):
    _WORKER_STATE["cfg"] = cfg
    _WORKER_STATE["vocab"] = default_vocabulary(cfg)
    _WORKER_STATE["scorer"] = build_shared_scorer(cfg)


def _worker_run(args: tuple[str, str, float, int]) -> list[TrialRecord]:
    pid, text, snr_db, trial = args
    return run_trial(pid, text, snr_db, trial, _WORKER_STATE["cfg"],
                     _WORKER_STATE["vocab"], _WORKER_STATE["scorer"])


@dataclass(frozen=True)
class SweepResult:
    records: list[TrialRecord]
    summary: list[dict]
    paths: dict[str, str]


def aggregate(records: Sequence[TrialRecord]) -> list[dict]:
    """Mean metrics per (scheme, snr) over records with usable metrics."""
    cells: dict[tuple[str, float], list[TrialRecord]] = {}
    for rec in records:
        cells.setdefault((rec.scheme, rec.snr_db), []).append(rec)
    summary = []
    for (scheme, snr_db), recs in sorted(cells.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        ok = [r for r in recs if r.ber is not None]
        def mean(values):
            vals = [v for v in values if v is not None]
            return float(np.mean(vals)) if vals else None
        summary.append({
            "scheme": scheme,
            "snr_db": snr_db,
            "n_trials": len(recs),
            "n_failed": len(recs) - len(ok),
            "ber": mean([r.ber for r in ok]),
            "wer": mean([r.wer for r in ok]),
            "rouge_l": mean([r.rouge_l for r in ok]),
            "bertscore": mean([r.bertscore for r in ok]),
        })
    return summary


def sweep(cfg: RunConfig) -> SweepResult:
    """Run the configured Monte-Carlo grid and write raw plus aggregated
    results.

    Output files: <out>.csv (raw rows, schema above), <out>_summary.csv
    (plot-ready means per scheme and SNR), <out>.json (config, summary, and
    failure counts)."""
    passages = load_corpus(cfg.corpus)
    vocab = default_vocabulary(cfg)
    check_corpus(passages, vocab)

    cells = [(pid, text, snr, trial)
             for snr in cfg.snr_db
             for pid, text in passages
             for trial in range(cfg.trials)]

    results: dict[tuple[str, float, int], list[TrialRecord]] = {}
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers, initializer=_worker_init,
                                 initargs=(cfg,)) as pool:
            for args, recs in zip(cells, pool.map(_worker_run, cells, chunksize=4)):
                results[(args[0], args[2], args[3])] = recs
    else:
        shared = build_shared_scorer(cfg)
        for pid, text, snr, trial in cells:
            results[(pid, snr, trial)] = run_trial(pid, text, snr, trial, cfg, vocab, shared)

    # Ordered sink: fixed (snr, passage, trial, scheme) order regardless of
    # completion order.
    scheme_rank = {s: i for i, s in enumerate(cfg.schemes)}
    records = [rec for key in sorted(results, key=lambda k: (k[1], k[0], k[2]))
               for rec in sorted(results[key], key=lambda r: scheme_rank[r.scheme])]

    summary = aggregate(records)

    base = str(cfg.out)
    if base.endswith(".csv"):
        base = base[:-4]
    raw_path = base + ".csv"
    summary_path = base + "_summary.csv"
    json_path = base + ".json"
    Path(raw_path).parent.mkdir(parents=True, exist_ok=True)

    write_csv(records, raw_path)
    with open(summary_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        cols = ("scheme", "snr_db", "n_trials", "n_failed", "ber", "wer", "rouge_l", "bertscore")
        writer.writerow(cols)
        for row in summary:
            writer.writerow(["" if row[c] is None else row[c] for c in cols])
    cfg_dict = asdict(cfg)
    cfg_dict["code"] = {"nu": cfg.code.memory, "rate_inv": cfg.code.rate_inv,
                        "generators_octal": [oct(g) for g in cfg.code.generators]}
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump({"config": cfg_dict, "summary": summary}, fh, indent=2, default=str)

    return SweepResult(records, summary,
                       {"raw": raw_path, "summary": summary_path, "json": json_path})

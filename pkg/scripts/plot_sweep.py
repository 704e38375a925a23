#!/usr/bin/env python3
"""Plot BER / WER / ROUGE-L versus SNR from a sweep summary CSV.

    python scripts/plot_sweep.py results_summary.csv -o curves.png
"""
import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

METRICS = (("ber", "BER", "log"), ("wer", "WER", "log"), ("rouge_l", "ROUGE-L", "linear"))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("summary", help="<out>_summary.csv from `clsec run`")
    parser.add_argument("-o", "--output", default="sweep.png")
    args = parser.parse_args()

    curves: dict[str, dict[str, list]] = defaultdict(lambda: defaultdict(list))
    with open(args.summary, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            for metric, _, _ in METRICS:
                if row[metric]:
                    curves[row["scheme"]]["snr_" + metric].append(float(row["snr_db"]))
                    curves[row["scheme"]][metric].append(float(row[metric]))

    fig, axes = plt.subplots(1, len(METRICS), figsize=(5 * len(METRICS), 4))
    for ax, (metric, label, scale) in zip(axes, METRICS):
        for scheme in sorted(curves):
            xs = curves[scheme]["snr_" + metric]
            ys = curves[scheme][metric]
            if xs:
                ax.plot(xs, ys, marker="o", label=scheme)
        ax.set_xlabel("SNR (dB)")
        ax.set_ylabel(label)
        ax.set_yscale(scale)
        ax.grid(True, which="both", alpha=0.3)
        ax.legend()
    fig.tight_layout()
    fig.savefig(args.output, dpi=140)
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Dev utility: bar-plot relative performance from an experiment CSV.

Not part of the supported interface; expects the column layout written by
`extrasum experiment --format csv`.

Usage: python scripts/plot_results.py results.csv [out.png]
"""

import csv
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__)
        return 2
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "relative_performance.png"

    grouped = defaultdict(list)
    with open(path, newline="", encoding="utf-8") as handle:
        rows = (line for line in handle if not line.startswith("#"))
        for row in csv.DictReader(rows):
            if row["algorithm"] == "original" or not row["relative_r1"]:
                continue
            grouped[(row["algorithm"], row["input_kind"])].append(
                (float(row["relative_r1"]), float(row["relative_r2"]), float(row["relative_rsu4"]))
            )

    labels, r1, r2, rsu4 = [], [], [], []
    for (algorithm, kind), values in sorted(grouped.items()):
        labels.append(f"{algorithm}\n{kind}")
        r1.append(sum(v[0] for v in values) / len(values))
        r2.append(sum(v[1] for v in values) / len(values))
        rsu4.append(sum(v[2] for v in values) / len(values))

    x = range(len(labels))
    width = 0.27
    fig, ax = plt.subplots(figsize=(max(6, 1.1 * len(labels)), 4))
    ax.bar([i - width for i in x], r1, width, label="rel R-1")
    ax.bar(list(x), r2, width, label="rel R-2")
    ax.bar([i + width for i in x], rsu4, width, label="rel R-SU4")
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels, fontsize=7)
    ax.set_ylabel("summary score / full-document score")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
# Copyright 2026 The nmteleport authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Renders fidelity-curve CSV files (one panel per Bell outcome)."""

import csv
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main() -> int:
    if len(sys.argv) != 3:
        print(f"usage: {sys.argv[0]} curves.csv out.png", file=sys.stderr)
        return 2
    curves = defaultdict(list)
    with open(sys.argv[1], newline="") as f:
        for row in csv.DictReader(f):
            bar = row["error_bar"]
            curves[(row["outcome"], row["input"])].append(
                (float(row["x_units_808nm"]), float(row["fidelity"]),
                 float(bar) if bar else None))

    outcomes = sorted({key[0] for key in curves})
    fig, axes = plt.subplots(2, 2, figsize=(9, 7), sharex=True, sharey=True)
    for ax, outcome in zip(axes.flat, outcomes):
        for (o, label), pts in sorted(curves.items()):
            if o != outcome:
                continue
            pts.sort()
            xs = [p[0] for p in pts]
            ys = [p[1] for p in pts]
            bars = [p[2] for p in pts]
            if all(b is not None for b in bars):
                ax.errorbar(xs, ys, yerr=bars, fmt="o-", ms=3, label=label)
            else:
                ax.plot(xs, ys, "o-", ms=3, label=label)
        ax.axhline(2.0 / 3.0, color="k", lw=0.8)
        ax.set_title(outcome)
        ax.set_ylim(0.0, 1.05)
        ax.legend(fontsize=8)
    for ax in axes[-1]:
        ax.set_xlabel("optical path difference (808 nm units)")
    for ax in axes[:, 0]:
        ax.set_ylabel("fidelity")
    fig.tight_layout()
    fig.savefig(sys.argv[2], dpi=160)
    return 0


if __name__ == "__main__":
    sys.exit(main())

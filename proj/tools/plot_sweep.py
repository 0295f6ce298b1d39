#!/usr/bin/env python3
"""Plot mean cost and mean chain delay with 95% intervals from a sweep summary CSV.

usage: plot_sweep.py SUMMARY.csv OUT.png [--xlabel LABEL]
"""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("summary")
    ap.add_argument("out")
    ap.add_argument("--xlabel", default="axis value")
    args = ap.parse_args()

    df = pd.read_csv(args.summary).dropna(subset=["mean_cost"])
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.5))
    left.errorbar(df.axis_value, df.mean_cost, yerr=df.ci95_cost, marker="o", capsize=3)
    left.set_ylabel("mean cost")
    right.errorbar(df.axis_value, df.mean_delay_ms, yerr=df.ci95_delay_ms, marker="s", capsize=3, color="C1")
    right.set_ylabel("mean chain delay (ms)")
    for ax in (left, right):
        ax.set_xlabel(args.xlabel)
        ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)


if __name__ == "__main__":
    main()

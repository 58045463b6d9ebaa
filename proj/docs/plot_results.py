"""Plot the CSV outputs of the ccorr commands.

usage: python3 docs/plot_results.py KIND RUN_DIR [OUT.png]

KIND is one of theory, simulate, region, blocks, budget; RUN_DIR is the
--out directory of that command.
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def plot_theory(d, ax):
    for a, g in d.groupby("a"):
        ax.plot(g["tau"], g["lim_var_CN"], label=f"compressed a={a}")
        ax.plot(g["tau"], g["lim_var_cM"], "--", label=f"first M a={a}")
    ax.set_xlabel("lag")
    ax.set_ylabel("N-scaled variance")


def plot_simulate(d, ax):
    for (a, est), g in d.groupby(["a", "estimator"]):
        ax.errorbar(g["tau"], g["var"], yerr=g["se_var"], capsize=2, label=f"{est} a={a}")
        if g["var_theory"].notna().any():
            ax.plot(g["tau"], g["var_theory"], "k:", lw=0.8)
    ax.set_yscale("log")
    ax.set_xlabel("lag")
    ax.set_ylabel("variance")


def plot_region(d, ax):
    for (alpha, c4), g in d.groupby(["alpha", "c4"]):
        ax.plot(g["a"], g["delta_asymptotic"], label=f"alpha={alpha} c4={c4}")
        if g["delta_mc"].notna().any():
            ax.errorbar(g["a"], g["delta_mc"], yerr=g["delta_mc_se"], fmt="o", ms=3)
    ax.axhline(0.0, color="k", lw=0.8)
    ax.set_xlabel("AR(1) coefficient a")
    ax.set_ylabel("N (Var compressed - Var first M)")


def plot_blocks(d, ax):
    d = d.set_index("alpha")
    d.plot(ax=ax, marker="o")
    ax.set_ylabel("integrated RMSE")


def plot_budget(d, ax):
    for f, g in d.groupby("f"):
        ax.plot(g["tau"], g["ratio"], marker="o", label=f"f={f}")
    ax.set_yscale("log")
    ax.set_xlabel("lag")
    ax.set_ylabel("Var full precision / Var one-bit")


PLOTS = {
    "theory": ("theory.csv", plot_theory),
    "simulate": ("simulate.csv", plot_simulate),
    "region": ("region_points.csv", plot_region),
    "blocks": ("rmse.csv", plot_blocks),
    "budget": ("budget.csv", plot_budget),
}


def main(argv):
    if len(argv) not in (3, 4) or argv[1] not in PLOTS:
        sys.exit(__doc__)
    kind, run_dir = argv[1], Path(argv[2])
    out = Path(argv[3]) if len(argv) == 4 else run_dir / f"{kind}.png"
    csv, plot = PLOTS[kind]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    plot(pd.read_csv(run_dir / csv), ax)
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(out)


if __name__ == "__main__":
    main(sys.argv)

# %% [markdown]
# # Reproducing the blockade maps
#
# Runs every figure preset, writes CSV and JSON files next to this script
# and, if matplotlib is available, renders log10 g2(0) maps with the
# optimal-condition curves on top.  Takes a few minutes on one core.

# %%
import sys
from pathlib import Path

import numpy as np

from photonblockade.output import write_csv, write_json
from photonblockade.sweep import FIGURES, figure_preset, find_minima, overlay_curves, run_grid

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)
jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 1

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

# %%
for fig in FIGURES:
    preset = figure_preset(fig)
    names, grids = [], []
    for name, spec in preset.panels:
        grids.append(run_grid(spec, jobs=jobs))
        names.append(name)
    with open(OUT / f"{fig}.csv", "w", newline="") as fh:
        write_csv(grids, fh)
    with open(OUT / f"{fig}.json", "w") as fh:
        write_json(grids, fh, panels=names)
    for name, grid in zip(names, grids):
        mins = find_minima(grid)[:3]
        print(fig, name, [(tuple(round(x, 3) for x in m.location), f"{m.value:.3g}") for m in mins])

    if plt is None:
        continue
    fig_, axes = plt.subplots(1, len(grids), figsize=(4.5 * len(grids), 4), squeeze=False)
    for ax, name, grid in zip(axes[0], names, grids):
        if len(grid.shape) == 1:
            ax.semilogy(grid.axis_values()[0], grid.g2_numeric)
            ax.axhline(1, color="k", lw=0.5)
            ax.set_xlabel("delta0")
        else:
            x, y = grid.axis_values()
            im = ax.pcolormesh(x, y, grid.log10_g2_numeric.T, shading="auto", cmap="viridis")
            fig_.colorbar(im, ax=ax, label="log10 g2(0)")
            ax.set_xlabel(grid.spec.axis1.name)
            ax.set_ylabel(grid.spec.axis2.name)
            if grid.spec.axis2.name == "delta_a":
                g = grid.spec.fixed.g
                curves = overlay_curves(((x[0], x[-1]), (y[0], y[-1])), g)
                for pts in curves["cpb"]:
                    ax.plot(*pts.T, "w--", lw=0.8)
                for pts in curves["ucpb_real"] + curves["ucpb_imag"]:
                    ax.plot(*pts.T, "r:", lw=0.8)
                if len(curves["ucpb_points"]):
                    ax.plot(*curves["ucpb_points"].T, "r*")
        ax.set_title(f"{fig} {name}")
    fig_.tight_layout()
    fig_.savefig(OUT / f"{fig}.png", dpi=120)
    plt.close(fig_)

print("wrote", OUT)

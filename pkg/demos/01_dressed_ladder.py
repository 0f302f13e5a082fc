# %% [markdown]
# # Blockade from the dressed-state ladder
#
# A two-level atom in a cavity splits each excitation manifold into two
# dressed levels.  When the drive is resonant with |1,-> but the next rung
# |2,-> is detuned, a second photon cannot enter: the cavity emits photons
# one at a time.

# %%
import numpy as np

from photonblockade import (SystemParams, cpb_optimal_delta0, dressed_energies, dressed_state,
                            run_point, two_photon_detuning)
from photonblockade.sweep import figure_preset, find_minima, run_grid

# %% [markdown]
# Pick a cavity detuning and put the lower dressed level on resonance with
# the drive (rotating-frame energy zero).

# %%
g, delta_a = 10.0, 20.0
delta0 = cpb_optimal_delta0(g, delta_a)
p = SystemParams(delta0=delta0, delta_a=delta_a, g=g)
print(f"delta0 = g^2/delta_a = {delta0}")
for n in (1, 2):
    e_plus, e_minus = dressed_energies(p, n)
    print(f"n={n}: E+ = {e_plus:8.4f}   E- = {e_minus:8.4f}")

# %%
# second rung is off by this much; blockade needs it well above kappa, gamma
print("two-photon detuning:", two_photon_detuning(p, "-"))
lvl = dressed_state(p, 1, "-")
print(f"|1,-> = {lvl.amp_g:+.3f}|1,g> {lvl.amp_e:+.3f}|0,e>")

# %% [markdown]
# Both engines at the resonance point: the weak-drive formula and the full
# master-equation steady state.

# %%
r = run_point(p, "both")
print(f"analytic g2 = {r.g2_analytic:.4f}, numeric g2 = {r.g2_numeric:.4f}, <n> = {r.mean_n:.2e}")

# %% [markdown]
# Sweep the atomic detuning at several cavity detunings.  Below
# delta_a = 2g the red side shows no antibunching at all; above it, an
# interference dip appears next to the resonance dip.

# %%
for name, spec in figure_preset("fig2b").panels:
    grid = run_grid(spec)
    mins = find_minima(grid)
    red = min((m for m in mins if m.location[0] < 0), key=lambda m: m.value, default=None)
    blue = min((m for m in mins if m.location[0] > 0), key=lambda m: m.value, default=None)
    x = grid.axis_values()[0]
    print(name,
          f"red: {red.value:.4f} at {red.location[0]:.2f}" if red else
          f"red: none (min g2 {np.nanmin(grid.g2_numeric[x < 0]):.3f})",
          f"| blue: {blue.value:.4f} at {blue.location[0]:.2f}" if blue else "")

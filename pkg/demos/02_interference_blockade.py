# %% [markdown]
# # Blockade by interference at weak coupling
#
# With g comparable to the decay rates there is no resolvable ladder, yet
# g2(0) can still vanish: two excitation paths into |2,g> cancel.  The
# cancellation needs a specific pair of detunings.

# %%
import numpy as np

from photonblockade import (SystemParams, analytic_g2, g2_zero, make_space,
                            minimal_ucpb_coupling, steady_state_for, ucpb_condition_residual,
                            ucpb_optimal_pairs, weak_drive_amplitudes)

# %%
g_min = minimal_ucpb_coupling()
print(f"exact cancellation needs g >= {g_min:.4f}")
for g in (0.5, g_min, 1.0, 2.0):
    pairs = ucpb_optimal_pairs(g)
    print(f"g={g:.4f}:", [(round(q.delta0, 4), round(q.delta_a, 4)) for q in pairs])

# %% [markdown]
# At an optimal pair the two-photon amplitude vanishes identically in the
# weak-drive expansion.

# %%
q = ucpb_optimal_pairs(1.0)[0]
p = SystemParams(delta0=q.delta0, delta_a=q.delta_a, g=1.0)
amps = weak_drive_amplitudes(p)
print("residual:", ucpb_condition_residual(p))
print(f"|C1g| = {abs(amps.c1g):.3e}, |C2g| = {abs(amps.c2g):.3e}")

# %% [markdown]
# The full solution keeps a small floor that scales with the drive
# strength squared, so the depth of the dip depends on epsilon.

# %%
space = make_space(5)
for eps in (0.03, 0.01, 0.003, 0.001):
    num = g2_zero(steady_state_for(p.replace(epsilon=eps), space))
    print(f"epsilon={eps:<6} numeric g2 = {num:.3e}   g2/eps^2 = {num / eps**2:.2f}")

# %% [markdown]
# Away from the zero the two engines agree to O(epsilon^2).

# %%
rng = np.random.default_rng(0)
for _ in range(5):
    p = SystemParams(delta0=rng.uniform(-3, 3), delta_a=rng.uniform(-3, 3), g=rng.uniform(0, 2))
    a, n = analytic_g2(p), g2_zero(steady_state_for(p, space))
    print(f"({p.delta0:+.2f}, {p.delta_a:+.2f}, g={p.g:.2f}): analytic {a:.4f}  numeric {n:.4f}")

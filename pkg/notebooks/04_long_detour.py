"""
Detours of excess at least k
============================

The band check handles paths whose excess is close to k; colour-coding on
the layered graph handles the rest.  This script builds an instance where
only the second stage can succeed.
"""

# %%
from planar_detours import Mode, exact_band_check, long_detour, universal_family
from planar_detours.generate import plane_graph_from_points
from planar_detours.oracle import oracle_detour, verify_universal

# %% [markdown]
# A direct arc 0->1 plus a long way round of length 8.  Excess 7 is at
# least 3k for k = 2, so the band search for excess in [k, 3k - 1] finds
# nothing and colour-coding has to produce the witness.

# %%
length = 8
pts = [(0.0, 0.0), (float(length), 0.0)] + [(float(i), 1.0) for i in range(1, length)]
route = [0] + list(range(2, length + 1)) + [1]
g = plane_graph_from_points(pts, [(0, 1)] + list(zip(route, route[1:])))
print("band check:", exact_band_check(g, 0, 1, 2))
for mode in (Mode.UNIVERSAL, Mode.MONTE_CARLO):
    w = long_detour(g, 0, 1, 2, mode, seed=1)
    print(mode.value, "->", w.path, "method:", w.method)
print("oracle:", oracle_detour(g, 0, 1, 2).vertices)

# %% [markdown]
# The deterministic mode draws its colourings from a family in which every
# set of 2k vertices sees every colouring pattern.

# %%
for n, width in ((8, 2), (10, 4), (12, 4)):
    fam = universal_family(n, width)
    print(f"n={n} width={width}: {len(fam)} colourings, universal={verify_universal(fam, n, width)}")

"""
Running time on grids
=====================

Median wall time of the detour test on no-instances (right-down grids),
where every candidate must be tried, and a log-log slope fit.
"""

# %%
import time

import numpy as np

from planar_detours import GeneratorSpec, directed_detour, generate_instance

# %%
sides = [6, 9, 12, 16]
sizes, times = [], []
for side in sides:
    inst = generate_instance(GeneratorSpec("grid", side, side, "right-down"))
    runs = []
    for _ in range(3):
        start = time.perf_counter()
        assert directed_detour(inst.graph, inst.s, inst.t) is None
        runs.append(time.perf_counter() - start)
    sizes.append(inst.graph.vertex_count)
    times.append(float(np.median(runs)))
    print(f"n={sizes[-1]:4d}  median {times[-1] * 1000:8.1f} ms")

# %% [markdown]
# On no-instances every candidate is tried, each in linear time, so the
# slope stays at or below 2.  Yes-instances usually stop at an early candidate.

# %%
slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
print(f"fitted exponent: {slope:.2f}")

"""
Is there an s-t path longer than the shortest one?
==================================================

The polynomial detour test on small examples, checked against brute force.
"""

# %%
import numpy as np

from planar_detours import GeneratorSpec, TUnreachable, delaunay_instance, directed_detour, generate_instance
from planar_detours.oracle import oracle_detour

# %% [markdown]
# A right-down grid has no detour: every s-t path has the same length.
# Its bidirected version has many.

# %%
for orient in ("right-down", "bidirected"):
    inst = generate_instance(GeneratorSpec("grid", 4, 4, orient))
    w = directed_detour(inst.graph, inst.s, inst.t)
    print(orient, "->", None if w is None else (w.path, w.length, w.baseline))

# %% [markdown]
# Random thinned triangulations, compared with path enumeration.

# %%
rng = np.random.default_rng(7)
agree = yes = 0
for _ in range(60):
    inst = delaunay_instance(9, "random", keep=0.8, seed=int(rng.integers(1 << 30)))
    try:
        fast = directed_detour(inst.graph, inst.s, inst.t)
        slow = oracle_detour(inst.graph, inst.s, inst.t, 1)
    except TUnreachable:
        # the target may be unreachable in a random orientation
        continue
    assert (fast is None) == (slow is None)
    agree += 1
    yes += fast is not None
print(f"agreement on {agree} instances, {yes} with a detour")

"""Two-colorings for color coding: random samples and universal families.

A family of subsets of ``range(n)`` is (n, w)-universal when every w-subset
``A`` sees all ``2**w`` traces ``A & U``.  Small ground sets get a greedy
set cover over the whole power set; larger ones get a seeded random family
sized by the union bound and then repaired against an exhaustive check when
that check is affordable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import WidthTooLarge

Coloring = frozenset  # the green vertices; everything else is blue

GREEDY_LIMIT = 1 << 22  # 2**n * C(n, w) cells in the greedy table
REPAIR_LIMIT = 4 * 10**7  # C(n, w) * 2**w constraints checked exhaustively
SIZE_CONSTANT = 1.0  # size <= SIZE_CONSTANT * 2**w * w * ceil(log2 n) on greedy-built families
FAILURE_BITS = 30  # unrepaired random families fail with probability <= 2**-30


class Mode(enum.Enum):
    MONTE_CARLO = "mc"
    UNIVERSAL = "det"


@dataclass(frozen=True)
class ColoringFamily:
    mode: Mode
    colorings: tuple[Coloring, ...]
    n: int
    width: int
    seed: int | None = None
    delta: float | None = None
    verified: bool = field(default=False)

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self):
        return iter(self.colorings)


def size_bound(n: int, width: int, constant: float = SIZE_CONSTANT) -> float:
    return constant * (1 << width) * width * max(1, math.ceil(math.log2(n)))


def _trace_table(n: int, subsets: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """``table[i, j]``: trace of the bitmask ``rows[i]`` on subset ``j`` as a w-bit code."""
    table = np.zeros((len(rows), len(subsets)), dtype=np.int64)
    for j in range(subsets.shape[1]):
        table |= ((rows[:, None] >> subsets[None, :, j]) & 1) << j
    return table


def _greedy(n: int, width: int) -> list[int]:
    subsets = np.array(list(combinations(range(n), width)), dtype=np.int64)
    candidates = np.arange(1 << n, dtype=np.int64)
    table = _trace_table(n, subsets, candidates)
    covered = np.zeros((len(subsets), 1 << width), dtype=bool)
    cols = np.arange(len(subsets))
    chosen: list[int] = []
    while not covered.all():
        gain = (~covered[cols[None, :], table]).sum(axis=1)
        best = int(np.argmax(gain))
        chosen.append(best)
        covered[cols, table[best]] = True
    return chosen


def _random_repaired(n: int, width: int, seed: int) -> tuple[list[int], bool]:
    rng = np.random.default_rng(seed)
    log_constraints = math.log(math.comb(n, width)) + width * math.log(2)
    size = math.ceil((1 << width) * (log_constraints + FAILURE_BITS * math.log(2)))
    bits = rng.random((size, n)) < 0.5
    masks = [int(sum(1 << i for i in np.flatnonzero(row))) for row in bits]
    if math.comb(n, width) << width > REPAIR_LIMIT:
        return masks, False
    subsets = np.array(list(combinations(range(n), width)), dtype=np.int64)
    chunk = max(1, 2_000_000 // max(1, len(masks)))
    for lo in range(0, len(subsets), chunk):
        block = subsets[lo : lo + chunk]
        table = _trace_table(n, block, np.array(masks, dtype=np.int64))
        seen = np.zeros((len(block), 1 << width), dtype=bool)
        seen[np.arange(len(block))[None, :], table] = True
        for r, code in zip(*np.nonzero(~seen)):
            # the missing trace itself, padded with random outside choices
            mask = int(sum(1 << i for i in np.flatnonzero(rng.random(n) < 0.5)))
            for j, v in enumerate(block[r]):
                mask = (mask | (1 << int(v))) if (code >> j) & 1 else (mask & ~(1 << int(v)))
            masks.append(mask)
    return masks, True


@lru_cache(maxsize=64)
def _universal_masks(n: int, width: int, seed: int) -> tuple[tuple[int, ...], bool]:
    if width == n:
        return tuple(range(1 << n)), True
    if (1 << n) * math.comb(n, width) <= GREEDY_LIMIT:
        return tuple(_greedy(n, width)), True
    masks, verified = _random_repaired(n, width, seed)
    return tuple(masks), verified


def universal_family(n: int, width: int, seed: int = 0) -> ColoringFamily:
    """An (n, width)-universal family of colorings of ``range(n)``.

    ``verified`` is False only for ground sets too large to check
    exhaustively, where the family is universal except with probability at
    most ``2**-FAILURE_BITS`` over the seed.

    Raises:
        WidthTooLarge: ``width > n``.
    """
    if width < 1:
        raise ValueError("width must be positive")
    if width > n:
        raise WidthTooLarge(f"width {width} exceeds the ground set size {n}")
    masks, verified = _universal_masks(n, width, seed)
    colorings = tuple(Coloring(i for i in range(n) if (m >> i) & 1) for m in masks)
    return ColoringFamily(Mode.UNIVERSAL, colorings, n, width, seed=seed, verified=verified)


def monte_carlo_rounds(k: int, delta: float) -> int:
    """``ceil(4**k * ln(1/delta))``, capped at ``4**k * ceil(ln 1000)``."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    rounds = math.ceil(4**k * math.log(1 / delta))
    return min(rounds, 4**k * math.ceil(math.log(1000)))


def random_family(
    vertices: list[int], k: int, delta: float, rng: np.random.Generator
) -> ColoringFamily:
    """Independent fair colorings, enough to catch a fixed 2k-pattern w.p. >= 1 - delta."""
    rounds = monte_carlo_rounds(k, delta)
    vs = np.asarray(vertices)
    draws = rng.random((rounds, len(vertices))) < 0.5
    colorings = tuple(Coloring(int(v) for v in vs[row]) for row in draws)
    return ColoringFamily(Mode.MONTE_CARLO, colorings, len(vertices), 2 * k, delta=delta)

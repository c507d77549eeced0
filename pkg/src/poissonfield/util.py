"""Shared plumbing: seeded random streams and Monte Carlo estimates."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def spawn_streams(seed: int, n: int) -> list[np.random.Generator]:
    """Create ``n`` independent generators from a root seed.

    Streams are derived with ``SeedSequence.spawn`` so results are
    reproducible for a fixed (seed, n) and safe to advance concurrently.
    """
    if n < 1:
        raise ValueError("need at least one stream")
    return [np.random.Generator(np.random.PCG64(s))
            for s in np.random.SeedSequence(seed).spawn(n)]


def split_count(total: int, workers: int) -> list[int]:
    """Split ``total`` trials across workers, remainder on the first few."""
    base, rem = divmod(total, workers)
    return [base + (1 if i < rem else 0) for i in range(workers)]


@dataclass(frozen=True)
class McEstimate:
    """A Monte Carlo estimate with its uncertainty and provenance.

    ``std_err`` is zero for estimates that collapse to a deterministic
    computation (e.g. no interferers).
    """

    value: float
    std_err: float
    n: int
    seed: int

    def __post_init__(self):
        if self.std_err < 0:
            raise ValueError("std_err must be >= 0")
        if self.n < 1:
            raise ValueError("sample count must be >= 1")

    def wilson_interval(self, z: float = 1.96) -> tuple[float, float]:
        """Wilson score interval, meaningful when value is a proportion."""
        p, n = self.value, self.n
        denom = 1.0 + z * z / n
        center = (p + z * z / (2 * n)) / denom
        half = (z / denom) * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n))
        return (max(0.0, center - half), min(1.0, center + half))


def merge_proportions(counts, ns, seed: int) -> McEstimate:
    """Combine per-stream success counts into one binomial estimate."""
    n = int(sum(ns))
    k = int(sum(counts))
    p = k / n
    se = math.sqrt(p * (1.0 - p) / n)
    return McEstimate(value=p, std_err=se, n=n, seed=seed)


def merge_means(sums, sumsqs, ns, seed: int) -> McEstimate:
    """Combine per-stream (sum, sum of squares, count) into a mean estimate."""
    n = int(sum(ns))
    s = float(sum(sums))
    ss = float(sum(sumsqs))
    mean = s / n
    var = max(0.0, ss / n - mean * mean)
    se = math.sqrt(var / n)
    return McEstimate(value=mean, std_err=se, n=n, seed=seed)

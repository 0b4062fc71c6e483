"""Seeded random instances for the verification suites."""
from __future__ import annotations

import numpy as np

from .hilbert import SparseVector
from .modules import Window


def points_where(predicate, w: Window, dim: int) -> list:
    return [y for y in w.points(dim) if predicate(y)]


def random_vector(rng: np.random.Generator, candidates, max_support: int = 4, scale: float = 1.0) -> SparseVector:
    k = int(rng.integers(1, min(max_support, len(candidates)) + 1))
    idx = rng.choice(len(candidates), size=k, replace=False)
    coeffs = scale * (rng.standard_normal(k) + 1j * rng.standard_normal(k)) / np.sqrt(2)
    return SparseVector({candidates[i]: c for i, c in zip(idx, coeffs)})


def random_point(rng: np.random.Generator, candidates):
    return candidates[int(rng.integers(len(candidates)))]

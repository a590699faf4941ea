"""Seeded error/erasure channel and Monte Carlo decoding statistics.

The transmission model keeps a random (k - erasures)-dimensional
subspace H of the sent codeword and adjoins an independent random
subspace of ``errors`` extra dimensions, so the received space sits at
subspace distance errors + erasures from the codeword.  The distance is
enforced by verify-and-retry: a fresh sample is drawn until the target
distance holds exactly (budget 100 draws per sample).

Randomness is numpy based and splittable.  Trial t of cell (e, eps)
under master seed s draws from ``SeedSequence(s, spawn_key=(e, eps, t))``,
so any single trial can be reproduced in isolation and trials may run
in any order or in parallel without changing the statistics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decoder import ReceivedSpace, decode
from .gf import OpCount
from .linalg import Matrix, vstack
from .spread import Codeword, SpreadCode, Subspace, subspace_distance

RETRY_BUDGET = 100


@dataclass(frozen=True)
class ChannelSpec:
    """One channel cell: dimensions dropped, dimensions adjoined, seed."""
    erasures: int
    errors: int
    seed: int = 0

    @property
    def target_distance(self) -> int:
        return self.errors + self.erasures


def trial_rng(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for one labeled trial of a master seed."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def _random_matrix(rng, field, nrows: int, ncols: int) -> Matrix:
    vals = rng.integers(0, field.q, size=(nrows, ncols))
    return Matrix(field, [[int(v) for v in row] for row in vals])


def random_codeword(code: SpreadCode, rng) -> Codeword:
    """Uniformly random codeword, via a uniform nonzero projective point."""
    while True:
        coords = [tuple(int(x) for x in rng.integers(0, code.q, size=code.k))
                  for _ in range(code.r)]
        if any(v != code.ext.zero for v in map(code.ext.element, coords)):
            return code.encode(coords)


def corrupt(cw: Codeword, spec: ChannelSpec, code: SpreadCode,
            rng=None) -> ReceivedSpace:
    """Received space at distance exactly errors + erasures from cw."""
    eps, e = spec.erasures, spec.errors
    if not 0 <= eps <= code.k:
        raise ValueError(f"erasures must lie in 0..{code.k}")
    if not 0 <= e <= code.n - code.k:
        raise ValueError(f"errors must lie in 0..{code.n - code.k}")
    if code.k - eps + e < 1:
        raise ValueError("the received space would be empty")
    if rng is None:
        rng = trial_rng(spec.seed)
    keep = code.k - eps
    for _ in range(RETRY_BUDGET):
        parts = []
        if keep:
            H = _random_matrix(rng, code.base, keep, code.k)
            parts.append(H @ cw.subspace.basis)
        if e:
            parts.append(_random_matrix(rng, code.base, e, code.n))
        R = Subspace.from_generators(vstack(*parts))
        if (R.dim == keep + e
                and subspace_distance(R, cw.subspace) == spec.target_distance):
            return ReceivedSpace(R, code.k)
    raise RuntimeError("channel sampling failed to hit the target distance "
                       f"within {RETRY_BUDGET} draws")


@dataclass(frozen=True)
class SimRecord:
    """Decoding statistics for one (errors, erasures) cell."""
    errors: int
    erasures: int
    trials: int
    successes: int
    failures: int
    mean_ops: float
    max_ops: int

    def line(self) -> str:
        return (f"{self.errors} {self.erasures} {self.trials} "
                f"{self.successes} {self.failures} "
                f"{self.mean_ops:.2f} {self.max_ops}")


def simulate(code: SpreadCode, trials: int, cells, seed: int = 0) -> list[SimRecord]:
    """Monte Carlo decoding over a grid of (errors, erasures) cells.

    A success is a decode that returns exactly the transmitted codeword.
    Operation counts are the decoder's extension-field multiplications
    plus inversions per call.  Deterministic for a fixed seed; records
    come back sorted by cell.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    records = []
    for e, eps in sorted(set((int(e), int(eps)) for e, eps in cells)):
        spec = ChannelSpec(erasures=eps, errors=e, seed=seed)
        successes = 0
        ops = []
        for t in range(trials):
            rng = trial_rng(seed, e, eps, t)
            cw = random_codeword(code, rng)
            received = corrupt(cw, spec, code, rng)
            with OpCount() as counter:
                result = decode(received, code)
            ops.append(counter.ext_total)
            if result.ok and result.codeword == cw:
                successes += 1
        records.append(SimRecord(e, eps, trials, successes,
                                 trials - successes,
                                 sum(ops) / len(ops), max(ops)))
    return records

"""Sweep orchestration: grids of (model, gamma) points computed in parallel.

A sweep builds one amplitude matrix per requested point, derives every
downstream quantity from that single matrix (Schmidt spectrum, metrics,
marginals, optionally the joint probability grid), and assembles results
in request order regardless of completion order, so output is
deterministic for a given request.  Failed points are recorded and the
remaining points still complete.

Worker count resolution: explicit ``threads`` argument, else the
``RELBOOST_THREADS`` environment variable, else ``os.cpu_count()``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .amplitudes import BoostModel, build_matrix
from .entanglement import (
    SchmidtSpectrum,
    EntanglementMetrics,
    joint_probability,
    marginals,
    metrics,
    normalize,
    schmidt,
)
from .quadrature import QuadratureSpec

__all__ = [
    "InvalidRequest",
    "SweepRequest",
    "SweepPoint",
    "SweepResult",
    "run_sweep",
    "default_gamma_grid",
    "resolve_threads",
]

ENV_THREADS = "RELBOOST_THREADS"


class InvalidRequest(Exception):
    """The sweep request is structurally unusable (empty/ill-ordered)."""


@dataclass(frozen=True)
class SweepRequest:
    models: tuple
    gamma_grid: tuple
    lmax: int = 20
    spec: QuadratureSpec = QuadratureSpec()
    keep_joint: bool = False

    def __post_init__(self):
        if not self.models:
            raise InvalidRequest("no models requested")
        if any(not isinstance(m, BoostModel) for m in self.models):
            raise InvalidRequest("models must be BoostModel members")
        grid = tuple(float(g) for g in self.gamma_grid)
        if not grid:
            raise InvalidRequest("gamma grid is empty")
        if any(g < 1.0 for g in grid):
            raise InvalidRequest("gamma values must be >= 1")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise InvalidRequest("gamma grid must be strictly ascending")
        object.__setattr__(self, "gamma_grid", grid)
        object.__setattr__(self, "models", tuple(self.models))
        if self.lmax < 0:
            raise InvalidRequest("lmax must be >= 0")

    @property
    def points(self):
        """(model, gamma) pairs in deterministic request order."""
        return [(m, g) for m in self.models for g in self.gamma_grid]


@dataclass
class SweepPoint:
    model: BoostModel
    gamma: float
    metrics: EntanglementMetrics
    spectrum: SchmidtSpectrum
    marginal_k: np.ndarray
    marginal_m: np.ndarray
    joint: np.ndarray | None = None


@dataclass
class SweepResult:
    points: list = field(default_factory=list)
    failures: list = field(default_factory=list)  # (model, gamma, message)

    def point(self, model, gamma):
        for p in self.points:
            if p.model is model and p.gamma == gamma:
                return p
        raise KeyError(f"no sweep point ({model}, {gamma})")


def compute_point(model, gamma, lmax, spec, keep_joint=False):
    """Single (model, gamma) record; module-level so worker processes can pickle it."""
    matrix = build_matrix(model, gamma, lmax, spec)
    psi = normalize(matrix.entries)
    joint = joint_probability(matrix.entries)
    pk, pm = marginals(joint)
    return SweepPoint(
        model=model,
        gamma=float(gamma),
        metrics=metrics(psi),
        spectrum=schmidt(psi),
        marginal_k=pk,
        marginal_m=pm,
        joint=joint if keep_joint else None,
    )


def _compute_indexed(args):
    idx, model, gamma, lmax, spec, keep_joint = args
    try:
        return idx, compute_point(model, gamma, lmax, spec, keep_joint), None
    except Exception as exc:  # per-point capture: a sweep is a batch product
        return idx, None, f"{type(exc).__name__}: {exc}"


def resolve_threads(threads=None):
    """Worker count: argument > RELBOOST_THREADS > cpu count, floored at 1."""
    if threads is None:
        env = os.environ.get(ENV_THREADS, "").strip()
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise InvalidRequest(f"{ENV_THREADS} must be an integer, got {env!r}")
        else:
            threads = os.cpu_count() or 1
    return max(1, int(threads))


def run_sweep(request, progress=None, threads=None):
    """Compute all requested (model, gamma) points.

    Parameters
    ----------
    request : SweepRequest
    progress : callable, optional
        Called as progress(done, total) after each completed point.
    threads : int, optional
        Worker process count; 1 runs inline (no pool).

    Returns
    -------
    SweepResult
        points in request order; failures as (model, gamma, message).
    """
    pts = request.points
    jobs = [
        (i, m, g, request.lmax, request.spec, request.keep_joint)
        for i, (m, g) in enumerate(pts)
    ]
    nworkers = min(resolve_threads(threads), len(jobs))
    slots = [None] * len(jobs)
    done = 0
    if nworkers <= 1:
        results = map(_compute_indexed, jobs)
        for idx, point, err in results:
            slots[idx] = (point, err)
            done += 1
            if progress is not None:
                progress(done, len(jobs))
    else:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            for idx, point, err in pool.map(_compute_indexed, jobs):
                slots[idx] = (point, err)
                done += 1
                if progress is not None:
                    progress(done, len(jobs))
    result = SweepResult()
    for (model, gamma), slot in zip(pts, slots):
        point, err = slot
        if err is None:
            result.points.append(point)
        else:
            result.failures.append((model, float(gamma), err))
    return result


def default_gamma_grid(n):
    """n log-spaced Lorentz factors from 1 to 1e4, endpoints included."""
    if n < 2:
        raise InvalidRequest("grid needs at least 2 points")
    return np.geomspace(1.0, 1e4, n)

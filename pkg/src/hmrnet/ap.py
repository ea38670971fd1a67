"""Baseline affinity propagation on a single homogeneous layer.

This is the biclique-free special case of the joint engine: with all
broadcast messages identically zero, the responsibility and availability
updates reduce term-for-term to classic AP, so the two solvers share the
update code in hmrnet.mp.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import mp
from .graph import check_labeling, is_valid_labeling


@dataclass
class APConfig:
    damping: float = 0.5
    max_iterations: int = 1000
    stable_window: int = 10

    def __post_init__(self):
        if not (0 <= self.damping < 1):
            raise ValueError("damping must lie in [0, 1)")
        if self.stable_window < 1:
            raise ValueError("stable_window must be >= 1")
        if self.max_iterations < self.stable_window:
            raise ValueError("max_iterations must be >= stable_window")


def ap_run(s: np.ndarray, cfg: APConfig, rng_seed: int = 0) -> np.ndarray:
    """Run AP on a fully populated similarity matrix; returns a valid labeling.

    The schedule is deterministic (lowest-index tie breaking); rng_seed is
    accepted for interface symmetry with the generators and echoed into run
    reports, but the message dynamics do not consume randomness.
    """
    labels, _ = run_single_layer(s, cfg)
    return labels


def run_single_layer(
    s, cfg: APConfig, trace: list | None = None
) -> tuple[np.ndarray, mp.LayerState]:
    """AP iteration loop; returns the labeling and the final message state.

    When `trace` is a list, copies of (rho, alpha) are appended per iteration.
    """
    s = np.asarray(s, dtype=float)
    if not np.all(np.isfinite(s)):
        raise ValueError("similarity matrix contains non-finite entries")
    state = mp.LayerState(s, {})
    recorded: list[np.ndarray] = []
    for _ in range(cfg.max_iterations):
        mp.update_responsibilities(state, cfg.damping)
        mp.update_availabilities(state, cfg.damping)
        if trace is not None:
            trace.append({"rho": state.rho.copy(), "alpha": state.alpha.copy()})
        p = state.beliefs()
        if not (p > 0).any():
            continue
        recorded.append(np.argmax(p, axis=1))
        w = cfg.stable_window
        if len(recorded) >= w and all(
            np.array_equal(recorded[-1], v) for v in recorded[-w:]
        ):
            break
    return mp.map_labels(state), state


def objective_value(labeling, s: np.ndarray) -> float | None:
    """Sum of chosen similarities, or None for a constraint-violating labeling."""
    if not is_valid_labeling(labeling):
        return None
    lab = check_labeling(labeling)
    return float(np.sum(np.asarray(s, dtype=float)[np.arange(lab.size), lab]))

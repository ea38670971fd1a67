"""Joint max-sum inference over both layers coupled by biclique factors.

Four message families per layer: responsibilities (node -> self-exemplar
constraint), availabilities (constraint -> node), hub-collecting (node ->
biclique factor) and hub-broadcasting (biclique factor -> node). The
biclique-free special case is exactly baseline affinity propagation and
shares this code path (see hmrnet.ap).

The broadcast update marginalizes the biclique factor exactly: either all
members on each side agree on one exemplar (no penalty) or each member takes
its own best choice at cost M. Broadcast vectors are shifted to maximum 0
after damping, which keeps all messages bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .biclique import Biclique
from .graph import HMRNet, check_labeling


@dataclass
class MPConfig:
    m_penalty: float = 1.3
    damping: float = 0.5
    max_iterations: int = 1000
    stable_window: int = 10

    def __post_init__(self):
        if self.m_penalty < 0:
            raise ValueError("m_penalty must be >= 0")
        if not (0 <= self.damping < 1):
            raise ValueError("damping must lie in [0, 1)")
        if self.stable_window < 1:
            raise ValueError("stable_window must be >= 1")
        if self.max_iterations < self.stable_window:
            raise ValueError("max_iterations must be >= stable_window")


@dataclass
class MPDiagnostics:
    iterations_run: int = 0
    converged: bool = False
    objective_trace: list = field(default_factory=list)
    label_change_counts: list = field(default_factory=list)


class LayerState:
    """Message matrices for one homogeneous layer.

    rho/alpha are dense n x n. gamma/mu are keyed by (biclique id, member
    index) and hold length-n vectors; mu_sum caches the per-node sum of all
    incoming broadcast vectors, used by the rho and gamma updates.
    """

    def __init__(self, s: np.ndarray, incidence: dict[int, list[int]]):
        self.s = np.asarray(s, dtype=float)
        self.n = self.s.shape[0]
        self.rho = np.zeros((self.n, self.n))
        self.alpha = np.zeros((self.n, self.n))
        self.gamma: dict[tuple[int, int], np.ndarray] = {}
        self.mu: dict[tuple[int, int], np.ndarray] = {}
        self.mu_sum = np.zeros((self.n, self.n))
        for i, bids in incidence.items():
            for j in bids:
                self.gamma[(j, i)] = np.zeros(self.n)
                self.mu[(j, i)] = np.zeros(self.n)

    def refresh_mu_sum(self):
        self.mu_sum[:] = 0.0
        for (_, i), vec in self.mu.items():
            self.mu_sum[i] += vec

    def beliefs(self) -> np.ndarray:
        return self.rho + self.alpha


def _damp(old: np.ndarray, raw: np.ndarray, damping: float) -> np.ndarray:
    return damping * old + (1.0 - damping) * raw


def update_responsibilities(state: LayerState, damping: float):
    """rho(i,k) = (s+mu)(i,k) - max_{k'!=k} (s+mu+alpha)(i,k'), damped."""
    n = state.n
    if n == 1:
        return
    base = state.s + state.mu_sum
    comp = base + state.alpha
    idx = np.argmax(comp, axis=1)
    rows = np.arange(n)
    best = comp[rows, idx]
    tmp = comp.copy()
    tmp[rows, idx] = -np.inf
    second = tmp.max(axis=1)
    excl = np.broadcast_to(best[:, None], (n, n)).copy()
    excl[rows, idx] = second
    state.rho = _damp(state.rho, base - excl, damping)


def update_availabilities(state: LayerState, damping: float):
    """Self column accumulates positive support; others are capped at 0."""
    n = state.n
    if n == 1:
        return
    rho = state.rho
    rp = np.maximum(rho, 0.0)
    np.fill_diagonal(rp, 0.0)
    colsum = rp.sum(axis=0)  # sum over i' != k of max(0, rho(i', k))
    raw = np.minimum(0.0, rho.diagonal()[None, :] + colsum[None, :] - rp)
    np.fill_diagonal(raw, colsum)
    state.alpha = _damp(state.alpha, raw, damping)


def update_hub_collecting(state: LayerState, damping: float):
    """gamma to one biclique: similarity + availability + other bicliques' mu."""
    base = state.s + state.alpha
    for (j, i), g in state.gamma.items():
        raw = base[i] + (state.mu_sum[i] - state.mu[(j, i)])
        state.gamma[(j, i)] = _damp(g, raw, damping)


def _broadcast_side(state, other_totals, j, members, m_penalty, damping):
    """Update mu vectors for one side of biclique j.

    other_totals = (consistent_best, free_sum) of the opposite side, where
    consistent_best = max_k of the summed gamma vectors and free_sum is the
    sum of per-member unconstrained maxima.
    """
    other_best, other_free = other_totals
    gam = [state.gamma[(j, i)] for i in members]
    gmax = [g.max() for g in gam]
    total = np.sum(gam, axis=0)
    total_max = float(np.sum(gmax))
    for pos, i in enumerate(members):
        branch_consistent = (total - gam[pos]) + other_best
        branch_penalised = (total_max - gmax[pos]) + other_free - m_penalty
        raw = np.maximum(branch_consistent, branch_penalised)
        raw -= raw.max()
        new = _damp(state.mu[(j, i)], raw, damping)
        new -= new.max()
        state.mu[(j, i)] = new


def _side_totals(state, j, members):
    gam = [state.gamma[(j, i)] for i in members]
    total = np.sum(gam, axis=0)
    return float(total.max()), float(np.sum([g.max() for g in gam]))


def update_hub_broadcasting(
    state_x: LayerState,
    state_y: LayerState,
    bicliques: list[Biclique],
    m_penalty: float,
    damping: float,
):
    for j, bc in enumerate(bicliques):
        x_totals = _side_totals(state_x, j, bc.x_members)
        y_totals = _side_totals(state_y, j, bc.y_members)
        _broadcast_side(state_x, y_totals, j, bc.x_members, m_penalty, damping)
        _broadcast_side(state_y, x_totals, j, bc.y_members, m_penalty, damping)
    state_x.refresh_mu_sum()
    state_y.refresh_mu_sum()


def map_labels(state: LayerState) -> np.ndarray:
    """Exemplar per node by argmax of rho+alpha, with self-exemplar repair.

    The exemplar set is {k : argmax of row k is k}; nodes pointing outside
    it are reassigned to the most similar identified exemplar. Ties break
    to the lowest index throughout.
    """
    p = state.beliefs()
    n = state.n
    idx = np.argmax(p, axis=1)
    exemplars = np.flatnonzero(idx == np.arange(n))
    if exemplars.size == 0:
        exemplars = np.array([int(np.argmax(p.diagonal()))])
    ex_set = set(exemplars.tolist())
    labels = np.empty(n, dtype=int)
    for i in range(n):
        k = int(idx[i])
        if k in ex_set:
            labels[i] = k
        else:
            labels[i] = int(exemplars[np.argmax(state.s[i, exemplars])])
    labels[exemplars] = exemplars
    return labels


def _incidence(bicliques, side: str) -> dict[int, list[int]]:
    inc: dict[int, list[int]] = {}
    for j, bc in enumerate(bicliques):
        members = bc.x_members if side == "x" else bc.y_members
        for i in members:
            inc.setdefault(i, []).append(j)
    return inc


def joint_objective(l_x, l_y, s_x, s_y, bicliques, m_penalty: float) -> float:
    """Overall score of a joint configuration: similarities plus biclique terms.

    A biclique contributes 0 when each of its sides is internally consistent
    (all members share one exemplar), else -M.
    """
    lx = check_labeling(l_x)
    ly = check_labeling(l_y)
    val = float(np.sum(s_x[np.arange(lx.size), lx]))
    val += float(np.sum(s_y[np.arange(ly.size), ly]))
    for bc in bicliques:
        x_ok = len({int(lx[i]) for i in bc.x_members}) == 1
        y_ok = len({int(ly[i]) for i in bc.y_members}) == 1
        if not (x_ok and y_ok):
            val -= m_penalty
    return val


def _check_finite(s: np.ndarray, name: str):
    if not np.all(np.isfinite(s)):
        raise ValueError(f"{name} contains non-finite entries")


def mp_run(
    net: HMRNet,
    s_x: np.ndarray,
    s_y: np.ndarray,
    bicliques: list[Biclique],
    cfg: MPConfig,
    trace: list | None = None,
) -> tuple[np.ndarray, np.ndarray, MPDiagnostics]:
    """Run joint message passing; returns (labels_x, labels_y, diagnostics).

    Messages start at zero. Each iteration updates rho, alpha, gamma, mu in
    that order for both layers, then reads the label vectors from the
    beliefs. Iterations where either layer has no positive belief are not
    recorded for the stop criterion. The run stops once both layers' recorded
    label vectors are unchanged over `stable_window` consecutive recordings.

    When `trace` is a list, a snapshot dict with copies of both layers' rho
    and alpha matrices is appended after every iteration.
    """
    s_x = np.asarray(s_x, dtype=float)
    s_y = np.asarray(s_y, dtype=float)
    _check_finite(s_x, "s_x")
    _check_finite(s_y, "s_y")
    if s_x.shape != (net.layer_x.node_count,) * 2:
        raise ValueError("s_x does not match layer X size")
    if s_y.shape != (net.layer_y.node_count,) * 2:
        raise ValueError("s_y does not match layer Y size")

    state_x = LayerState(s_x, _incidence(bicliques, "x"))
    state_y = LayerState(s_y, _incidence(bicliques, "y"))
    diag = MPDiagnostics()
    recorded_x: list[np.ndarray] = []
    recorded_y: list[np.ndarray] = []
    prev_labels = None

    for _ in range(cfg.max_iterations):
        update_responsibilities(state_x, cfg.damping)
        update_responsibilities(state_y, cfg.damping)
        update_availabilities(state_x, cfg.damping)
        update_availabilities(state_y, cfg.damping)
        if bicliques:
            update_hub_collecting(state_x, cfg.damping)
            update_hub_collecting(state_y, cfg.damping)
            update_hub_broadcasting(
                state_x, state_y, bicliques, cfg.m_penalty, cfg.damping
            )
        diag.iterations_run += 1
        if trace is not None:
            trace.append(
                {
                    "rho_x": state_x.rho.copy(),
                    "alpha_x": state_x.alpha.copy(),
                    "rho_y": state_y.rho.copy(),
                    "alpha_y": state_y.alpha.copy(),
                }
            )

        cur_x = map_labels(state_x)
        cur_y = map_labels(state_y)
        diag.objective_trace.append(
            joint_objective(cur_x, cur_y, s_x, s_y, bicliques, cfg.m_penalty)
        )
        cur = np.concatenate([cur_x, cur_y])
        diag.label_change_counts.append(
            int(cur.size if prev_labels is None else np.sum(cur != prev_labels))
        )
        prev_labels = cur

        px, py = state_x.beliefs(), state_y.beliefs()
        if not ((px > 0).any() and (py > 0).any()):
            continue
        recorded_x.append(np.argmax(px, axis=1))
        recorded_y.append(np.argmax(py, axis=1))
        w = cfg.stable_window
        if len(recorded_x) >= w:
            stable_x = all(np.array_equal(recorded_x[-1], v) for v in recorded_x[-w:])
            stable_y = all(np.array_equal(recorded_y[-1], v) for v in recorded_y[-w:])
            if stable_x and stable_y:
                diag.converged = True
                break

    return map_labels(state_x), map_labels(state_y), diag

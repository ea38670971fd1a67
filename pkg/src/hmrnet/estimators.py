"""Scikit-learn style estimator wrappers around the solvers.

APCommunities clusters a single homogeneous layer from its adjacency
matrix (or a HomogeneousLayer). MPCommunities fits on a whole HMRNet and
exposes per-layer labels. Both follow the fit / fit_predict / get_params
conventions so they compose with sklearn tooling.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .ap import APConfig, ap_run
from .biclique import enumerate_maximal_bicliques
from .graph import HMRNet, HomogeneousLayer, build_layer, partition_from_labeling
from .mp import MPConfig, mp_run
from .similarity import set_preferences, shortest_path_similarity


def _as_layer(X) -> HomogeneousLayer:
    if isinstance(X, HomogeneousLayer):
        return X
    a = np.asarray(X)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square adjacency matrix or a HomogeneousLayer")
    iu, ju = np.nonzero(np.triu(a, k=1))
    return build_layer(a.shape[0], list(zip(iu.tolist(), ju.tolist())))


class APCommunities(ClusterMixin, BaseEstimator):
    """Affinity-propagation community detection on one homogeneous layer."""

    def __init__(self, damping=0.5, max_iterations=1000, stable_window=10,
                 preference="median"):
        self.damping = damping
        self.max_iterations = max_iterations
        self.stable_window = stable_window
        self.preference = preference

    def fit(self, X, y=None):
        layer = _as_layer(X)
        s = set_preferences(shortest_path_similarity(layer), self.preference)
        cfg = APConfig(self.damping, self.max_iterations, self.stable_window)
        self.exemplars_ = ap_run(s, cfg)
        self.labels_ = partition_from_labeling(self.exemplars_)
        self.n_communities_ = int(self.labels_.max()) + 1
        return self


class MPCommunities(ClusterMixin, BaseEstimator):
    """Joint two-layer community detection; fit takes an HMRNet.

    labels_ concatenates the X-layer and Y-layer community ids, with Y ids
    offset by the number of X communities; labels_x_ / labels_y_ hold the
    per-layer partitions.
    """

    def __init__(self, m_penalty=1.3, damping=0.5, max_iterations=1000,
                 stable_window=10, preference="median", min_x=2, min_y=2,
                 cap=100_000):
        self.m_penalty = m_penalty
        self.damping = damping
        self.max_iterations = max_iterations
        self.stable_window = stable_window
        self.preference = preference
        self.min_x = min_x
        self.min_y = min_y
        self.cap = cap

    def fit(self, X, y=None):
        if not isinstance(X, HMRNet):
            raise ValueError("MPCommunities.fit expects an HMRNet")
        net = X
        s_x = set_preferences(shortest_path_similarity(net.layer_x), self.preference)
        s_y = set_preferences(shortest_path_similarity(net.layer_y), self.preference)
        bicliques = enumerate_maximal_bicliques(
            net.hetero, self.min_x, self.min_y, self.cap
        )
        cfg = MPConfig(self.m_penalty, self.damping, self.max_iterations,
                       self.stable_window)
        ex_x, ex_y, diag = mp_run(net, s_x, s_y, bicliques, cfg)
        self.exemplars_x_ = ex_x
        self.exemplars_y_ = ex_y
        self.labels_x_ = partition_from_labeling(ex_x)
        self.labels_y_ = partition_from_labeling(ex_y)
        offset = int(self.labels_x_.max()) + 1
        self.labels_ = np.concatenate([self.labels_x_, self.labels_y_ + offset])
        self.diagnostics_ = diag
        self.n_bicliques_ = len(bicliques)
        return self

"""Per-layer similarity matrices from shortest-path hop counts.

Similarity between distinct nodes is the negated unweighted shortest-path
distance. Disconnected pairs get the sentinel -(n+1), strictly worse than
any realizable distance, so downstream message arithmetic stays finite.
The diagonal carries the exemplar preference and is set separately.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .graph import HomogeneousLayer


def disconnected_sentinel(n: int) -> float:
    return -float(n + 1)


def shortest_path_similarity(layer: HomogeneousLayer) -> np.ndarray:
    """Dense n x n matrix with s[i, k] = -hops(i, k); diagonal left at 0."""
    n = layer.node_count
    if layer.edge_count == 0:
        s = np.full((n, n), disconnected_sentinel(n))
        np.fill_diagonal(s, 0.0)
        return s
    rows = [u for u, v in layer.edges] + [v for u, v in layer.edges]
    cols = [v for u, v in layer.edges] + [u for u, v in layer.edges]
    adj = csr_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(n, n)
    )
    dist = shortest_path(adj, method="D", unweighted=True, directed=False)
    s = -dist
    s[np.isinf(dist)] = disconnected_sentinel(n)
    np.fill_diagonal(s, 0.0)
    return s


def set_preferences(s: np.ndarray, preference="median") -> np.ndarray:
    """Return a copy of s with the diagonal set to the exemplar preference.

    preference is "median" (median of realizable off-diagonal similarities,
    the classic moderate-cluster-count choice), "max" (their maximum, i.e.
    the one-hop similarity, favouring fine-grained exemplar sets), or a
    numeric constant. Sentinel entries for disconnected pairs are excluded
    from both data-driven strategies.
    """
    s = np.array(s, dtype=float)
    n = s.shape[0]
    if preference in ("median", "max"):
        off = ~np.eye(n, dtype=bool)
        vals = s[off]
        vals = vals[vals > disconnected_sentinel(n)]
        if vals.size == 0:
            raise ValueError("no finite off-diagonal similarities to set a preference")
        value = float(np.median(vals)) if preference == "median" else float(vals.max())
        np.fill_diagonal(s, value)
    else:
        np.fill_diagonal(s, float(preference))
    return s

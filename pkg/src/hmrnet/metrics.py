"""Evaluation measures for detected community structures.

Ground-truth measures: accuracy after optimal label alignment, normalized
mutual information and variation of information. Structure-only measures:
modularity plus per-community conductance, triangle participation ratio and
cut ratio (aggregated by unweighted mean). TPR is reported as a true ratio
in [0, 1]; the raw internal-triangle counts are reported alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graph import HomogeneousLayer, community_members


@dataclass
class CommunityStats:
    size: int
    conductance: float
    tpr: float
    cut_ratio: float
    internal_triangles: int


@dataclass
class MetricsReport:
    community_count: int
    modularity: float
    mean_conductance: float
    mean_tpr: float
    mean_cut_ratio: float
    internal_triangles: int
    per_community: list[CommunityStats] = field(default_factory=list)
    accuracy_percent: float | None = None
    nmi: float | None = None
    vi: float | None = None


def _as_partition(p) -> np.ndarray:
    return np.asarray(p, dtype=int)


def _contingency(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ka, kb = int(a.max()) + 1, int(b.max()) + 1
    table = np.zeros((ka, kb), dtype=np.int64)
    np.add.at(table, (a, b), 1)
    return table


def align_labels(pred, truth) -> np.ndarray:
    """Relabel pred to maximize per-node agreement with truth (optimal assignment).

    Predicted communities left unmatched keep fresh ids beyond truth's range.
    """
    pred, truth = _as_partition(pred), _as_partition(truth)
    if pred.size != truth.size:
        raise ValueError("partitions cover different node counts")
    table = _contingency(pred, truth)
    rows, cols = linear_sum_assignment(table, maximize=True)
    mapping = dict(zip(rows.tolist(), cols.tolist()))
    fresh = table.shape[1]
    out = np.empty_like(pred)
    for c in range(table.shape[0]):
        if c not in mapping:
            mapping[c] = fresh
            fresh += 1
    for i, c in enumerate(pred):
        out[i] = mapping[int(c)]
    return out


def accuracy(pred, truth) -> float:
    """Percent of nodes matching the truth after optimal alignment."""
    aligned = align_labels(pred, truth)
    truth = _as_partition(truth)
    return 100.0 * float(np.mean(aligned == truth))


def _entropy(counts: np.ndarray, n: int) -> float:
    p = counts[counts > 0] / n
    return float(-np.sum(p * np.log(p)))


def _mutual_information(a: np.ndarray, b: np.ndarray) -> tuple[float, float, float]:
    n = a.size
    table = _contingency(a, b)
    ha = _entropy(table.sum(axis=1), n)
    hb = _entropy(table.sum(axis=0), n)
    hab = _entropy(table.ravel(), n)
    return ha, hb, ha + hb - hab


def nmi(a, b) -> float:
    """Normalized mutual information, 2I / (H(a) + H(b)), natural log.

    Two single-block partitions are identical structures (1.0); one
    degenerate side with zero mutual information scores 0.0.
    """
    a, b = _as_partition(a), _as_partition(b)
    if a.size != b.size:
        raise ValueError("partitions cover different node counts")
    ha, hb, mi = _mutual_information(a, b)
    if ha == 0.0 and hb == 0.0:
        return 1.0
    if ha + hb == 0.0 or mi <= 0.0:
        return 0.0
    return max(0.0, min(1.0, 2.0 * mi / (ha + hb)))


def vi(a, b) -> float:
    """Variation of information, H(a) + H(b) - 2I, natural log."""
    a, b = _as_partition(a), _as_partition(b)
    if a.size != b.size:
        raise ValueError("partitions cover different node counts")
    ha, hb, mi = _mutual_information(a, b)
    return max(0.0, ha + hb - 2.0 * mi)


def _edge_counts(partition: np.ndarray, layer: HomogeneousLayer):
    """(internal edges, outgoing edges) per community id."""
    k = int(partition.max()) + 1
    internal = np.zeros(k, dtype=np.int64)
    outgoing = np.zeros(k, dtype=np.int64)
    for u, v in layer.edges:
        cu, cv = partition[u], partition[v]
        if cu == cv:
            internal[cu] += 1
        else:
            outgoing[cu] += 1
            outgoing[cv] += 1
    return internal, outgoing


def modularity(partition, layer: HomogeneousLayer) -> float:
    """Intra-community edge concentration versus the random expectation."""
    part = _as_partition(partition)
    m = layer.edge_count
    if m == 0:
        raise ValueError("modularity undefined on an edgeless graph")
    internal, outgoing = _edge_counts(part, layer)
    frac = internal / m
    vol = (2 * internal + outgoing) / (2 * m)
    return float(np.sum(frac - vol**2))


def conductance(partition, layer: HomogeneousLayer) -> tuple[list[float], float]:
    """Per-community boundary fraction |out| / (2|in| + |out|), plus the mean.

    Communities with no incident edges contribute 0.
    """
    part = _as_partition(partition)
    internal, outgoing = _edge_counts(part, layer)
    vals = []
    for e_in, e_out in zip(internal, outgoing):
        denom = 2 * e_in + e_out
        vals.append(float(e_out / denom) if denom else 0.0)
    return vals, float(np.mean(vals))


def cut_ratio(partition, layer: HomogeneousLayer) -> tuple[list[float], float]:
    """Outgoing edges over all possible external pairs; whole-graph community -> 0."""
    part = _as_partition(partition)
    _, outgoing = _edge_counts(part, layer)
    n = layer.node_count
    sizes = np.bincount(part, minlength=outgoing.size)
    vals = []
    for sz, e_out in zip(sizes, outgoing):
        denom = sz * (n - sz)
        vals.append(float(e_out / denom) if denom else 0.0)
    return vals, float(np.mean(vals))


def _internal_triangle_stats(members: np.ndarray, adj: list[set[int]]):
    """(nodes in >=1 internal triangle, internal triangle count) for one community."""
    mem = set(members.tolist())
    in_triangle: set[int] = set()
    count = 0
    ordered = sorted(mem)
    for u in ordered:
        nb_u = adj[u] & mem
        for v in sorted(nb_u):
            if v <= u:
                continue
            common = nb_u & adj[v]
            for w in common:
                if w > v:
                    count += 1
                    in_triangle.update((u, v, w))
    return in_triangle, count


def tpr(partition, layer: HomogeneousLayer) -> tuple[list[float], float]:
    """Fraction of each community's nodes lying in an internal triangle."""
    part = _as_partition(partition)
    adj = layer.adjacency_sets()
    vals = []
    for members in community_members(part):
        nodes, _ = _internal_triangle_stats(members, adj)
        vals.append(len(nodes) / members.size if members.size else 0.0)
    return vals, float(np.mean(vals))


def evaluate(partition, layer: HomogeneousLayer, truth=None) -> MetricsReport:
    """Full report for one layer; ground-truth metrics only when truth given."""
    part = _as_partition(partition)
    adj = layer.adjacency_sets()
    cond_vals, cond_mean = conductance(part, layer)
    cr_vals, cr_mean = cut_ratio(part, layer)
    per = []
    tri_total = 0
    tpr_vals = []
    for c, members in enumerate(community_members(part)):
        nodes, tris = _internal_triangle_stats(members, adj)
        ratio = len(nodes) / members.size if members.size else 0.0
        tpr_vals.append(ratio)
        tri_total += tris
        per.append(
            CommunityStats(
                size=int(members.size),
                conductance=cond_vals[c],
                tpr=ratio,
                cut_ratio=cr_vals[c],
                internal_triangles=tris,
            )
        )
    report = MetricsReport(
        community_count=int(part.max()) + 1 if part.size else 0,
        modularity=modularity(part, layer) if layer.edge_count else 0.0,
        mean_conductance=cond_mean,
        mean_tpr=float(np.mean(tpr_vals)) if tpr_vals else 0.0,
        mean_cut_ratio=cr_mean,
        internal_triangles=tri_total,
        per_community=per,
    )
    if truth is not None:
        report.accuracy_percent = accuracy(part, truth)
        report.nmi = nmi(part, truth)
        report.vi = vi(part, truth)
    return report

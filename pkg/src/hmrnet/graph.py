"""Immutable containers for two-layer heterogeneous multi-relational networks.

A network holds two homogeneous layers (undirected simple graphs) and a
bipartite set of cross-layer links. Community structure is expressed as an
exemplar labeling: every node names an exemplar, and an exemplar must name
itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GraphStructureError(ValueError):
    """An edge list violates the structural rules of its container."""


class DeltaConstraintError(ValueError):
    """A labeling breaks the self-exemplar (delta) constraint."""


@dataclass(frozen=True)
class HomogeneousLayer:
    """Undirected simple graph on nodes 0..node_count-1.

    Edges are stored canonically as sorted (min, max) pairs, deduplicated
    and ordered, so equal layers compare and hash equal.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency_lists(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.node_count, self.node_count), dtype=np.int8)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        return a


@dataclass(frozen=True)
class HeteroLinkSet:
    """Bipartite links between the X layer and the Y layer."""

    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class HMRNet:
    """Two homogeneous layers coupled by heterogeneous links."""

    layer_x: HomogeneousLayer
    layer_y: HomogeneousLayer
    hetero: HeteroLinkSet

    def __post_init__(self):
        nx, ny = self.layer_x.node_count, self.layer_y.node_count
        for x, y in self.hetero.edges:
            if not (0 <= x < nx and 0 <= y < ny):
                raise GraphStructureError(
                    f"hetero edge ({x}, {y}) out of range for layers of size {nx}/{ny}"
                )


def build_layer(node_count: int, edges) -> HomogeneousLayer:
    """Build a homogeneous layer, deduplicating and canonicalizing edges.

    Rejects self-loops and out-of-range endpoints.
    """
    if node_count < 1:
        raise GraphStructureError("node_count must be >= 1")
    canon: set[tuple[int, int]] = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise GraphStructureError(f"self-loop on node {u}")
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise GraphStructureError(
                f"edge ({u}, {v}) out of range for {node_count} nodes"
            )
        canon.add((u, v) if u < v else (v, u))
    return HomogeneousLayer(node_count, tuple(sorted(canon)))


def build_hetero(edges) -> HeteroLinkSet:
    """Build a heterogeneous link set, deduplicating pairs.

    Endpoint ranges are checked when the set is combined into an HMRNet.
    """
    canon = {(int(x), int(y)) for x, y in edges}
    return HeteroLinkSet(tuple(sorted(canon)))


def check_labeling(exemplar) -> np.ndarray:
    """Validate the self-exemplar constraint; return the labeling as an array.

    Every chosen exemplar must choose itself: exemplar[exemplar[i]] == exemplar[i].
    """
    lab = np.asarray(exemplar, dtype=int)
    n = lab.size
    if n and (lab.min() < 0 or lab.max() >= n):
        raise DeltaConstraintError("exemplar index out of range")
    bad = np.flatnonzero(lab[lab] != lab)
    if bad.size:
        i = int(bad[0])
        raise DeltaConstraintError(
            f"node {i} chose exemplar {lab[i]}, but exemplar[{lab[i]}] = {lab[lab[i]]}"
        )
    return lab


def is_valid_labeling(exemplar) -> bool:
    try:
        check_labeling(exemplar)
    except DeltaConstraintError:
        return False
    return True


def partition_from_labeling(exemplar) -> np.ndarray:
    """Group nodes sharing an exemplar; ids dense in order of first appearance."""
    lab = check_labeling(exemplar)
    ids: dict[int, int] = {}
    out = np.empty(lab.size, dtype=int)
    for i, e in enumerate(lab):
        out[i] = ids.setdefault(int(e), len(ids))
    return out


def community_members(partition) -> list[np.ndarray]:
    """Member index arrays per community id, for a dense partition vector."""
    part = np.asarray(partition, dtype=int)
    k = int(part.max()) + 1 if part.size else 0
    return [np.flatnonzero(part == c) for c in range(k)]

"""Reproducible planted-partition generators with ground truth and bicliques.

Benchmark I: two 100-node layers, ten communities of ten, an 0.85/0.15
intra/inter link mix, ten planted cross-layer bicliques with two to ten
nodes per side. Benchmark II: community sizes drawn from a symmetric
Dirichlet (alpha=1) scaled to 100 nodes, with configurable link mix.

The benchmark constructors read the intra/inter numbers as the target split
of *links* between intra- and inter-community pairs: the per-pair intra
probability is the stated intra value, and the per-pair inter probability is
scaled down by the pair-count imbalance so inter links get the stated share
of expected edges (inter_pair_probability). A literal per-pair inter
probability of 0.15 would bury the planted communities (90x more cross pairs
than intra pairs), leaving nothing for any detector to recover.
generate_planted_layer itself stays a pure per-pair planted-partition
sampler.

One seed drives everything; it is split into independent sub-streams for
layer X, layer Y and the bicliques, so layer X is unchanged when only the
biclique settings vary.
"""

from __future__ import annotations

import numpy as np

from .biclique import Biclique
from .graph import HMRNet, HomogeneousLayer, HeteroLinkSet, build_hetero, build_layer


def sizes_to_truth(sizes) -> np.ndarray:
    return np.repeat(np.arange(len(sizes)), sizes)


def generate_planted_layer(
    sizes, p_intra: float, p_inter: float, rng: np.random.Generator
) -> tuple[HomogeneousLayer, np.ndarray]:
    """Planted-partition graph: independent edges at p_intra / p_inter."""
    if not (0 <= p_intra <= 1 and 0 <= p_inter <= 1):
        raise ValueError("edge probabilities must lie in [0, 1]")
    truth = sizes_to_truth(sizes)
    n = truth.size
    draws = rng.random((n, n))
    same = truth[:, None] == truth[None, :]
    prob = np.where(same, p_intra, p_inter)
    iu, ju = np.triu_indices(n, k=1)
    keep = draws[iu, ju] < prob[iu, ju]
    edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    return build_layer(n, edges), truth


def inter_pair_probability(sizes, p_intra: float, inter_fraction: float) -> float:
    """Per-pair cross-community probability hitting a target inter-link share.

    Chooses p so that E[inter edges] / E[total edges] = inter_fraction when
    intra pairs connect with probability p_intra. For Benchmark I
    (sizes 10x10, 0.85/0.15 mix) this gives 0.015.
    """
    if not 0 <= inter_fraction < 1:
        raise ValueError("inter_fraction must lie in [0, 1)")
    sizes = np.asarray(sizes)
    n = int(sizes.sum())
    intra_pairs = int((sizes * (sizes - 1) // 2).sum())
    inter_pairs = n * (n - 1) // 2 - intra_pairs
    if inter_pairs == 0 or inter_fraction == 0:
        return 0.0
    p = inter_fraction / (1 - inter_fraction) * p_intra * intra_pairs / inter_pairs
    return min(1.0, float(p))


def generate_planted_bicliques(
    truth_x,
    truth_y,
    count: int,
    side_range: tuple[int, int],
    rng: np.random.Generator,
) -> tuple[HeteroLinkSet, list[Biclique]]:
    """Plant `count` bicliques, each side sampled inside one community.

    Side sizes are uniform in side_range, capped at the chosen community's
    size; the range minimum must not exceed the smallest community on either
    layer.
    """
    truth_x, truth_y = np.asarray(truth_x), np.asarray(truth_y)
    lo, hi = side_range
    if lo < 1 or hi < lo:
        raise ValueError("side_range must satisfy 1 <= min <= max")
    for name, truth in (("x", truth_x), ("y", truth_y)):
        smallest = int(np.bincount(truth).min())
        if lo > smallest:
            raise ValueError(
                f"side_range minimum {lo} exceeds smallest {name}-layer "
                f"community size {smallest}"
            )
    edges: set[tuple[int, int]] = set()
    planted = []
    for _ in range(count):
        cx = int(rng.integers(truth_x.max() + 1))
        cy = int(rng.integers(truth_y.max() + 1))
        mem_x = np.flatnonzero(truth_x == cx)
        mem_y = np.flatnonzero(truth_y == cy)
        size_x = int(rng.integers(lo, min(hi, mem_x.size) + 1))
        size_y = int(rng.integers(lo, min(hi, mem_y.size) + 1))
        side_x = np.sort(rng.choice(mem_x, size=size_x, replace=False))
        side_y = np.sort(rng.choice(mem_y, size=size_y, replace=False))
        planted.append(Biclique(tuple(side_x.tolist()), tuple(side_y.tolist())))
        edges.update((int(x), int(y)) for x in side_x for y in side_y)
    return build_hetero(edges), planted


def _streams(seed: int, k: int = 3):
    children = np.random.SeedSequence(seed).spawn(k)
    return [np.random.default_rng(c) for c in children]


SYNTH1_SIZES = [10] * 10
SYNTH1_P_INTRA = 0.85
SYNTH1_INTER_FRACTION = 0.15
SYNTH1_BICLIQUES = 10
SYNTH1_SIDE_RANGE = (2, 10)


def generate_synthetic_I(seed: int):
    """Benchmark I instance: (net, truth_x, truth_y, planted bicliques)."""
    rng_x, rng_y, rng_h = _streams(seed)
    p_inter = inter_pair_probability(
        SYNTH1_SIZES, SYNTH1_P_INTRA, SYNTH1_INTER_FRACTION
    )
    layer_x, truth_x = generate_planted_layer(
        SYNTH1_SIZES, SYNTH1_P_INTRA, p_inter, rng_x
    )
    layer_y, truth_y = generate_planted_layer(
        SYNTH1_SIZES, SYNTH1_P_INTRA, p_inter, rng_y
    )
    hetero, planted = generate_planted_bicliques(
        truth_x, truth_y, SYNTH1_BICLIQUES, SYNTH1_SIDE_RANGE, rng_h
    )
    return HMRNet(layer_x, layer_y, hetero), truth_x, truth_y, planted


def dirichlet_sizes(k: int, total: int, rng: np.random.Generator) -> list[int]:
    """Symmetric Dirichlet(1) sizes, largest-remainder rounded to sum `total`.

    Redraws whenever rounding would produce an empty community.
    """
    while True:
        target = rng.dirichlet(np.ones(k)) * total
        floors = np.floor(target).astype(int)
        remainder = total - int(floors.sum())
        order = np.argsort(-(target - floors), kind="stable")
        sizes = floors.copy()
        sizes[order[:remainder]] += 1
        if sizes.min() >= 1:
            return sizes.tolist()


def generate_synthetic_II(
    k: int,
    p_intra: float,
    p_inter: float,
    seed: int,
    nodes_per_layer: int = 100,
    biclique_count: int = SYNTH1_BICLIQUES,
    side_range: tuple[int, int] = SYNTH1_SIDE_RANGE,
):
    """Benchmark II instance with Dirichlet community sizes per layer.

    p_intra is the per-pair intra probability; p_inter is the target inter
    share of expected links (see inter_pair_probability), so the 0.1/0.9
    ... 0.9/0.1 grid spans clean to noise-dominated structure.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    rng_x, rng_y, rng_h = _streams(seed)
    sizes_x = dirichlet_sizes(k, nodes_per_layer, rng_x)
    sizes_y = dirichlet_sizes(k, nodes_per_layer, rng_y)
    layer_x, truth_x = generate_planted_layer(
        sizes_x, p_intra, inter_pair_probability(sizes_x, p_intra, p_inter), rng_x
    )
    layer_y, truth_y = generate_planted_layer(
        sizes_y, p_intra, inter_pair_probability(sizes_y, p_intra, p_inter), rng_y
    )
    lo, hi = side_range
    smallest = min(int(np.bincount(truth_x).min()), int(np.bincount(truth_y).min()))
    lo = min(lo, smallest)
    hetero, planted = generate_planted_bicliques(
        truth_x, truth_y, biclique_count, (lo, hi), rng_h
    )
    return HMRNet(layer_x, layer_y, hetero), truth_x, truth_y, planted

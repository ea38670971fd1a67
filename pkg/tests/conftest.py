"""Shared brute-force oracles for the test suite.

Everything here is deliberately naive and independent of the library's
implementations: plain loops over contingency tables, exhaustive subset /
labeling enumeration, permutation-search alignment. The real code is judged
against these.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


# ---------------------------------------------------------------------------
# Exemplar labelings


def delta_valid_labelings(n: int):
    """Every labeling where each chosen exemplar chooses itself."""
    for mask in range(1, 1 << n):
        exemplars = [i for i in range(n) if mask >> i & 1]
        others = [i for i in range(n) if not mask >> i & 1]
        for choice in itertools.product(exemplars, repeat=len(others)):
            lab = [0] * n
            for e in exemplars:
                lab[e] = e
            for node, e in zip(others, choice):
                lab[node] = e
            yield lab


def brute_best_single(s: np.ndarray) -> float:
    """Exhaustive optimum of the single-layer objective sum_i s[i][lab[i]]."""
    n = s.shape[0]
    return max(
        sum(s[i][lab[i]] for i in range(n)) for lab in delta_valid_labelings(n)
    )


def brute_best_joint(s_x, s_y, bicliques, m_penalty) -> float:
    """Exhaustive optimum of the joint objective over delta-valid pairs."""
    best = -math.inf
    labs_y = list(delta_valid_labelings(s_y.shape[0]))
    vals_y = [sum(s_y[i][lab[i]] for i in range(len(lab))) for lab in labs_y]
    for lx in delta_valid_labelings(s_x.shape[0]):
        vx = sum(s_x[i][lx[i]] for i in range(len(lx)))
        for ly, vy in zip(labs_y, vals_y):
            val = vx + vy
            for bc in bicliques:
                x_ok = len({lx[i] for i in bc.x_members}) == 1
                y_ok = len({ly[i] for i in bc.y_members}) == 1
                if not (x_ok and y_ok):
                    val -= m_penalty
            if val > best:
                best = val
    return best


# ---------------------------------------------------------------------------
# Naive partition-comparison metrics


def naive_contingency(a, b):
    ka, kb = max(a) + 1, max(b) + 1
    table = [[0] * kb for _ in range(ka)]
    for x, y in zip(a, b):
        table[x][y] += 1
    return table


def _naive_entropy(counts, n):
    h = 0.0
    for c in counts:
        if c > 0:
            p = c / n
            h -= p * math.log(p)
    return h


def naive_info(a, b):
    n = len(a)
    table = naive_contingency(a, b)
    ha = _naive_entropy([sum(row) for row in table], n)
    hb = _naive_entropy([sum(col) for col in zip(*table)], n)
    hab = _naive_entropy([c for row in table for c in row], n)
    return ha, hb, ha + hb - hab


def naive_nmi(a, b):
    ha, hb, mi = naive_info(a, b)
    if ha == 0.0 and hb == 0.0:
        return 1.0
    if ha + hb == 0.0 or mi <= 0.0:
        return 0.0
    return max(0.0, min(1.0, 2.0 * mi / (ha + hb)))


def naive_vi(a, b):
    ha, hb, mi = naive_info(a, b)
    return max(0.0, ha + hb - 2.0 * mi)


def naive_accuracy(pred, truth):
    """Best total agreement over all one-to-one community matchings (permutation search)."""
    table = naive_contingency(pred, truth)
    k = max(len(table), len(table[0]))
    padded = [[0] * k for _ in range(k)]
    for i, row in enumerate(table):
        for j, c in enumerate(row):
            padded[i][j] = c
    best = max(
        sum(padded[i][perm[i]] for i in range(k))
        for perm in itertools.permutations(range(k))
    )
    return 100.0 * best / len(pred)


# ---------------------------------------------------------------------------
# Naive structural metrics (direct edge / triangle counting)


def _community_edge_counts(partition, edges, community):
    internal = external = 0
    for u, v in edges:
        inu, inv = partition[u] == community, partition[v] == community
        if inu and inv:
            internal += 1
        elif inu or inv:
            external += 1
    return internal, external


def naive_modularity(partition, n, edges):
    m = len(edges)
    q = 0.0
    for c in sorted(set(partition)):
        e_in, e_out = _community_edge_counts(partition, edges, c)
        q += e_in / m - ((2 * e_in + e_out) / (2 * m)) ** 2
    return q


def naive_conductance(partition, n, edges):
    vals = []
    for c in sorted(set(partition)):
        e_in, e_out = _community_edge_counts(partition, edges, c)
        denom = 2 * e_in + e_out
        vals.append(e_out / denom if denom else 0.0)
    return vals, sum(vals) / len(vals)


def naive_cut_ratio(partition, n, edges):
    vals = []
    for c in sorted(set(partition)):
        size = sum(1 for p in partition if p == c)
        _, e_out = _community_edge_counts(partition, edges, c)
        denom = size * (n - size)
        vals.append(e_out / denom if denom else 0.0)
    return vals, sum(vals) / len(vals)


def naive_tpr(partition, n, edges):
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}

    def linked(u, v):
        return (min(u, v), max(u, v)) in edge_set

    vals = []
    for c in sorted(set(partition)):
        members = [i for i in range(n) if partition[i] == c]
        in_triangle = set()
        for u, v, w in itertools.combinations(members, 3):
            if linked(u, v) and linked(v, w) and linked(u, w):
                in_triangle.update((u, v, w))
        vals.append(len(in_triangle) / len(members))
    return vals, sum(vals) / len(vals)


# ---------------------------------------------------------------------------
# Naive maximal biclique enumeration (bitmask subset pairs)


def naive_maximal_bicliques(nx, ny, edges, min_x=1, min_y=1):
    """All maximal fully connected subset pairs, by exhaustive search."""
    adj = [0] * nx  # adj[x] = bitmask of y neighbours
    for x, y in edges:
        adj[x] |= 1 << y
    results = set()
    for ymask in range(1, 1 << ny):
        xs = [x for x in range(nx) if adj[x] & ymask == ymask]
        if not xs:
            continue
        closed = adj[xs[0]]
        for x in xs[1:]:
            closed &= adj[x]
        if closed != ymask:
            continue  # extendable on the Y side
        ys = [y for y in range(ny) if ymask >> y & 1]
        if len(xs) >= min_x and len(ys) >= min_y:
            results.add((tuple(xs), tuple(ys)))
    return sorted(results)


def random_partition(rng: np.random.Generator, n: int):
    k = int(rng.integers(1, n + 1))
    labels = rng.integers(0, k, size=n)
    # densify in order of first appearance
    ids = {}
    return [ids.setdefault(int(c), len(ids)) for c in labels]

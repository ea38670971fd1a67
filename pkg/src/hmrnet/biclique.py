"""Maximal biclique enumeration over the heterogeneous link set.

Uses consensus-style closure: the Y-side of every maximal biclique is an
intersection of neighbourhood stars, and the family of stars closed under
pairwise intersection contains all such intersections. Each closed Y-side
determines its X-side as the set of X nodes adjacent to all of it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import HeteroLinkSet


class BicliqueOverflowError(RuntimeError):
    """Enumeration exceeded the configured cap; raise the cap or size minima."""


@dataclass(frozen=True)
class Biclique:
    """A fully connected cross-layer node-subset pair."""

    x_members: tuple[int, ...]
    y_members: tuple[int, ...]


DEFAULT_MIN_SIDE = 2
DEFAULT_CAP = 100_000


def enumerate_maximal_bicliques(
    hetero: HeteroLinkSet,
    min_x: int = DEFAULT_MIN_SIDE,
    min_y: int = DEFAULT_MIN_SIDE,
    cap: int = DEFAULT_CAP,
) -> list[Biclique]:
    """All maximal bicliques meeting the size minima, lexicographically sorted.

    Raises BicliqueOverflowError once more than `cap` results (or candidate
    Y-sides during closure) are produced.
    """
    if min_x < 1 or min_y < 1 or cap < 1:
        raise ValueError("min_x, min_y and cap must all be >= 1")
    if not hetero.edges:
        return []

    star: dict[int, set[int]] = {}
    for x, y in hetero.edges:
        star.setdefault(x, set()).add(y)

    # Closure of the stars under pairwise intersection.
    candidates: set[frozenset[int]] = {frozenset(s) for s in star.values()}
    work = list(candidates)
    while work:
        cur = work.pop()
        fresh = []
        for other in candidates:
            inter = cur & other
            if inter and inter not in candidates:
                fresh.append(inter)
        for f in fresh:
            candidates.add(f)
            work.append(f)
            if len(candidates) > cap:
                raise BicliqueOverflowError(
                    f"more than {cap} candidate bicliques during closure"
                )

    out = []
    for ys in candidates:
        xs = [x for x, nb in star.items() if ys <= nb]
        closed = frozenset.intersection(*(frozenset(star[x]) for x in xs))
        if closed != ys:
            continue  # extendable on the Y side; a larger candidate covers it
        if len(xs) >= min_x and len(ys) >= min_y:
            out.append(Biclique(tuple(sorted(xs)), tuple(sorted(ys))))
            if len(out) > cap:
                raise BicliqueOverflowError(f"more than {cap} maximal bicliques")
    out.sort(key=lambda b: (b.x_members, b.y_members))
    return out


def validate_biclique(bc: Biclique, hetero: HeteroLinkSet) -> bool:
    """True iff every cross pair of the biclique is a heterogeneous edge."""
    edges = set(hetero.edges)
    return all((x, y) in edges for x in bc.x_members for y in bc.y_members)

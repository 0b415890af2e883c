"""Independent brute-force oracles for the metric and search tests.

Everything here works from a plain (actors, ties) pair using exhaustive
simple-path enumeration and direct scans, deliberately sharing no code
with the package so that agreement is meaningful evidence.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from vbereq.values import UNDEFINED, UNREACHABLE

Ties = frozenset


def brute_distance(
    actors: tuple[str, ...],
    ties: frozenset[tuple[str, str]],
    start: str,
    goal: str,
    undirected: bool = False,
) -> int | None:
    """Minimum hop count over every simple path, None when there is none."""
    if start == goal:
        return 0
    if undirected:
        ties = ties | {(b, a) for a, b in ties}
    best: int | None = None
    stack = [(start, {start})]
    while stack:
        node, seen = stack.pop()
        for a, b in ties:
            if a != node or b in seen:
                continue
            hops = len(seen)
            if best is not None and hops >= best:
                continue
            if b == goal:
                best = hops
            else:
                stack.append((b, seen | {b}))
    return best


def brute_out_degree(ties, actor: str) -> int:
    return sum(1 for a, b in ties if a == actor)


def brute_in_degree(ties, actor: str) -> int:
    return sum(1 for a, b in ties if b == actor)


def brute_neighborhood(ties, actor: str) -> set[str]:
    return {b for a, b in ties if a == actor} | {a for a, b in ties if b == actor}


def brute_recip_partners(ties, actor: str) -> set[str]:
    return {b for a, b in ties if a == actor and (b, a) in ties}


def brute_mutual_pairs(actors, ties) -> int:
    return sum(
        1
        for x, y in itertools.combinations(actors, 2)
        if (x, y) in ties and (y, x) in ties
    )


def brute_density(actors, ties):
    n = len(actors)
    if n < 2:
        return UNDEFINED
    return Fraction(len(ties), n * (n - 1))


def brute_recip_ratio(actors, ties):
    if not ties:
        return UNDEFINED
    return Fraction(2 * brute_mutual_pairs(actors, ties), len(ties))


def brute_eccentricity(actors, ties, actor, undirected, lenient):
    others = [a for a in actors if a != actor]
    if not others:
        return 0
    hops = [brute_distance(actors, ties, actor, o, undirected) for o in others]
    if not lenient:
        if any(h is None for h in hops):
            return UNREACHABLE
        return max(hops)
    reachable = [h for h in hops if h is not None]
    return max(reachable) if reachable else UNDEFINED


def brute_closeness(actors, ties, actor, undirected, lenient):
    others = [a for a in actors if a != actor]
    if not others:
        return UNDEFINED
    hops = [brute_distance(actors, ties, actor, o, undirected) for o in others]
    if not lenient:
        if any(h is None for h in hops):
            return UNDEFINED
        return Fraction(1, sum(hops))
    reachable = [h for h in hops if h is not None]
    if not reachable:
        return UNDEFINED
    return Fraction(1, sum(reachable))


def brute_avg_path_length(actors, ties, undirected, lenient):
    if len(actors) < 2:
        return UNDEFINED
    hops = [
        brute_distance(actors, ties, a, b, undirected)
        for a in actors
        for b in actors
        if a != b
    ]
    if not lenient:
        if any(h is None for h in hops):
            return UNDEFINED
        return Fraction(sum(hops), len(hops))
    reachable = [h for h in hops if h is not None]
    if not reachable:
        return UNDEFINED
    return Fraction(sum(reachable), len(reachable))

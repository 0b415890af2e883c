"""Social-network metrics with exact rational arithmetic.

Network-scoped metrics: size, density, average path length, reciprocated
tie ratio. Actor-scoped metrics: in/out/total degree, in/out density,
neighborhood size, reciprocated partner count, reciprocated density,
closeness, eccentricity, and pairwise shortest path length.

Path-based metrics follow outgoing ties by default. Pass
``view="undirected"`` to compute them on the symmetrized graph instead;
the non-path metrics ignore the view because their definitions already fix
a direction. Unreachability handling is selected by ``mode``:

* ``"strict"`` (default): a metric that touches an unreachable pair comes
  back ``UNREACHABLE`` (eccentricity, shortest path) or ``UNDEFINED``
  (closeness, average path length).
* ``"lenient"``: path aggregates are restricted to the reachable pairs,
  and :func:`reachable_fraction` reports how much of the network that is.

Ratios are reduced by ``Fraction``, so alongside each value the observe
helpers keep the natural unreduced counts (51 ties over 90 ordered pairs
stays ``51/90`` in reports, not ``17/30``).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .network import SocialNetwork
from .values import UNDEFINED, UNREACHABLE, MetricResult


class MetricId(enum.Enum):
    """Metric names as they appear in requirement text and reports."""

    SIZE = "size"
    DENSITY = "density"
    AVG_PATH_LENGTH = "avg_path_length"
    RECIPROCATED_TIE_RATIO = "recip_ratio"
    IN_DEGREE = "in_degree"
    OUT_DEGREE = "out_degree"
    TOTAL_DEGREE = "total_degree"
    IN_DENSITY = "in_density"
    OUT_DENSITY = "out_density"
    NEIGHBORHOOD_SIZE = "neighborhood_size"
    RECIPROCATED_PARTNER_COUNT = "recip_count"
    RECIPROCATED_DENSITY = "recip_density"
    CLOSENESS = "closeness"
    ECCENTRICITY = "eccentricity"


NETWORK_METRICS = frozenset(
    {
        MetricId.SIZE,
        MetricId.DENSITY,
        MetricId.AVG_PATH_LENGTH,
        MetricId.RECIPROCATED_TIE_RATIO,
    }
)
ACTOR_METRICS = frozenset(MetricId) - NETWORK_METRICS

# Metrics whose range is [0, 1]; these render with a percent form and their
# requirement thresholds are validated against that range.
UNIT_INTERVAL_METRICS = frozenset(
    {
        MetricId.DENSITY,
        MetricId.RECIPROCATED_TIE_RATIO,
        MetricId.IN_DENSITY,
        MetricId.OUT_DENSITY,
        MetricId.RECIPROCATED_DENSITY,
    }
)

VIEWS = ("directed", "undirected")
MODES = ("strict", "lenient")


def _check_view(view: str) -> None:
    if view not in VIEWS:
        raise ValueError(f"view must be one of {VIEWS}, got {view!r}")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


# -- plain structure ------------------------------------------------------


def size(net: SocialNetwork) -> int:
    return net.size


def density(net: SocialNetwork) -> MetricResult:
    """Ties over ordered actor pairs; UNDEFINED below two actors."""
    n = net.size
    if n < 2:
        return UNDEFINED
    return Fraction(net.tie_count, n * (n - 1))


def out_degree(net: SocialNetwork, actor: str) -> int:
    return len(net.out_neighbors(actor))


def in_degree(net: SocialNetwork, actor: str) -> int:
    return len(net.in_neighbors(actor))


def total_degree(net: SocialNetwork, actor: str) -> int:
    return out_degree(net, actor) + in_degree(net, actor)


def out_density(net: SocialNetwork, actor: str) -> MetricResult:
    """Out-degree over the other actors; UNDEFINED below two actors."""
    deg = out_degree(net, actor)
    if net.size < 2:
        return UNDEFINED
    return Fraction(deg, net.size - 1)


def in_density(net: SocialNetwork, actor: str) -> MetricResult:
    """In-degree over the other actors; UNDEFINED below two actors."""
    deg = in_degree(net, actor)
    if net.size < 2:
        return UNDEFINED
    return Fraction(deg, net.size - 1)


def neighborhood_size(net: SocialNetwork, actor: str) -> int:
    """Number of actors tied with ``actor`` in either direction."""
    return len(net.neighbors(actor))


def reciprocated_partner_count(net: SocialNetwork, actor: str) -> int:
    """Partners tied with ``actor`` in both directions."""
    return len(net.out_neighbors(actor) & net.in_neighbors(actor))


def reciprocated_density(net: SocialNetwork, actor: str) -> MetricResult:
    """Reciprocated partners over neighborhood size; UNDEFINED for isolates."""
    nbhd = neighborhood_size(net, actor)
    if nbhd == 0:
        return UNDEFINED
    return Fraction(reciprocated_partner_count(net, actor), nbhd)


def mutual_pair_count(net: SocialNetwork) -> int:
    """Unordered actor pairs tied in both directions."""
    return sum(1 for a, b in net.ties if a < b and (b, a) in net.ties)


def reciprocated_tie_ratio(net: SocialNetwork) -> MetricResult:
    """Share of ties that are part of a mutual pair; UNDEFINED with no ties."""
    if net.tie_count == 0:
        return UNDEFINED
    return Fraction(2 * mutual_pair_count(net), net.tie_count)


# -- paths ----------------------------------------------------------------


@lru_cache(maxsize=1024)
def _distance_table(net: SocialNetwork, undirected: bool) -> dict[str, dict[str, int]]:
    """All-pairs BFS hop counts; absent target means unreachable."""
    source = net.symmetrized() if undirected else net
    table: dict[str, dict[str, int]] = {}
    for start in source.actors:
        dist = {start: 0}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in source.out_neighbors(node):
                if nxt not in dist:
                    dist[nxt] = dist[node] + 1
                    queue.append(nxt)
        table[start] = dist
    return table


def shortest_path_length(
    net: SocialNetwork, sender: str, receiver: str, *, view: str = "directed"
) -> MetricResult:
    """Hops on the shortest path, 0 to self; UNREACHABLE when there is none."""
    _check_view(view)
    net.require_actor(sender)
    net.require_actor(receiver)
    found = _distance_table(net, view == "undirected")[sender].get(receiver)
    return UNREACHABLE if found is None else found


def eccentricity(
    net: SocialNetwork, actor: str, *, view: str = "directed", mode: str = "strict"
) -> MetricResult:
    """Greatest shortest-path distance from ``actor`` to any other actor.

    A single-actor network has eccentricity 0. Strict mode returns
    UNREACHABLE when any other actor cannot be reached; lenient mode maxes
    over the reachable ones and is UNDEFINED only when there are none.
    """
    _check_view(view)
    _check_mode(mode)
    net.require_actor(actor)
    others = [a for a in net.actors if a != actor]
    if not others:
        return 0
    dist = _distance_table(net, view == "undirected")[actor]
    hops = [dist.get(o) for o in others]
    if mode == "strict":
        if any(h is None for h in hops):
            return UNREACHABLE
        return max(hops)
    reachable = [h for h in hops if h is not None]
    return max(reachable) if reachable else UNDEFINED


def closeness(
    net: SocialNetwork, actor: str, *, view: str = "directed", mode: str = "strict"
) -> MetricResult:
    """Reciprocal of the summed distances from ``actor`` to the others.

    UNDEFINED for a single-actor network, in strict mode when anyone is
    unreachable, and in lenient mode when everyone is.
    """
    _check_view(view)
    _check_mode(mode)
    net.require_actor(actor)
    others = [a for a in net.actors if a != actor]
    if not others:
        return UNDEFINED
    dist = _distance_table(net, view == "undirected")[actor]
    hops = [dist.get(o) for o in others]
    if mode == "strict":
        if any(h is None for h in hops):
            return UNDEFINED
        return Fraction(1, sum(hops))
    reachable = [h for h in hops if h is not None]
    if not reachable:
        return UNDEFINED
    return Fraction(1, sum(reachable))


def _path_sums(
    net: SocialNetwork, undirected: bool
) -> tuple[int, int, int]:
    """(sum over reachable ordered pairs, reachable pair count, pair count)."""
    table = _distance_table(net, undirected)
    total = 0
    reachable = 0
    pairs = 0
    for a in net.actors:
        dist = table[a]
        for b in net.actors:
            if a == b:
                continue
            pairs += 1
            hops = dist.get(b)
            if hops is not None:
                total += hops
                reachable += 1
    return total, reachable, pairs


def avg_path_length(
    net: SocialNetwork, *, view: str = "directed", mode: str = "strict"
) -> MetricResult:
    """Mean shortest-path distance over ordered actor pairs.

    UNDEFINED below two actors, in strict mode when any pair is
    unreachable, and in lenient mode when every pair is.
    """
    _check_view(view)
    _check_mode(mode)
    if net.size < 2:
        return UNDEFINED
    total, reachable, pairs = _path_sums(net, view == "undirected")
    if mode == "strict":
        if reachable < pairs:
            return UNDEFINED
        return Fraction(total, pairs)
    if reachable == 0:
        return UNDEFINED
    return Fraction(total, reachable)


def reachable_fraction(
    net: SocialNetwork, *, view: str = "directed"
) -> MetricResult:
    """Share of ordered pairs connected by a path; UNDEFINED below two actors."""
    _check_view(view)
    if net.size < 2:
        return UNDEFINED
    _, reachable, pairs = _path_sums(net, view == "undirected")
    return Fraction(reachable, pairs)


# -- dispatch and observations ---------------------------------------------


def network_metric(
    net: SocialNetwork,
    metric: MetricId,
    *,
    view: str = "directed",
    mode: str = "strict",
) -> MetricResult:
    """Compute a network-scoped metric by id."""
    if metric is MetricId.SIZE:
        return size(net)
    if metric is MetricId.DENSITY:
        return density(net)
    if metric is MetricId.AVG_PATH_LENGTH:
        return avg_path_length(net, view=view, mode=mode)
    if metric is MetricId.RECIPROCATED_TIE_RATIO:
        return reciprocated_tie_ratio(net)
    raise ValueError(f"{metric.value} is actor-scoped, not network-scoped")


def actor_metric(
    net: SocialNetwork,
    metric: MetricId,
    actor: str,
    *,
    view: str = "directed",
    mode: str = "strict",
) -> MetricResult:
    """Compute an actor-scoped metric by id."""
    if metric is MetricId.IN_DEGREE:
        return in_degree(net, actor)
    if metric is MetricId.OUT_DEGREE:
        return out_degree(net, actor)
    if metric is MetricId.TOTAL_DEGREE:
        return total_degree(net, actor)
    if metric is MetricId.IN_DENSITY:
        return in_density(net, actor)
    if metric is MetricId.OUT_DENSITY:
        return out_density(net, actor)
    if metric is MetricId.NEIGHBORHOOD_SIZE:
        return neighborhood_size(net, actor)
    if metric is MetricId.RECIPROCATED_PARTNER_COUNT:
        return reciprocated_partner_count(net, actor)
    if metric is MetricId.RECIPROCATED_DENSITY:
        return reciprocated_density(net, actor)
    if metric is MetricId.CLOSENESS:
        return closeness(net, actor, view=view, mode=mode)
    if metric is MetricId.ECCENTRICITY:
        return eccentricity(net, actor, view=view, mode=mode)
    raise ValueError(f"{metric.value} is network-scoped, not actor-scoped")


@dataclass(frozen=True)
class MetricValue:
    """A computed metric together with its scope and display ratio.

    ``actor`` is None for network-scoped values. ``ratio`` is the natural
    unreduced numerator/denominator behind a fractional value, kept so that
    reports can show figures auditable against raw counts.
    """

    metric: MetricId
    actor: str | None
    value: MetricResult
    ratio: tuple[int, int] | None = None


def observe_network_metric(
    net: SocialNetwork,
    metric: MetricId,
    *,
    view: str = "directed",
    mode: str = "strict",
) -> MetricValue:
    """Like :func:`network_metric`, but keeping the natural display ratio."""
    value = network_metric(net, metric, view=view, mode=mode)
    ratio: tuple[int, int] | None = None
    n = net.size
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        if metric is MetricId.DENSITY:
            ratio = (net.tie_count, n * (n - 1))
        elif metric is MetricId.RECIPROCATED_TIE_RATIO:
            ratio = (2 * mutual_pair_count(net), net.tie_count)
        elif metric is MetricId.AVG_PATH_LENGTH:
            total, reachable, pairs = _path_sums(net, view == "undirected")
            ratio = (total, pairs if mode == "strict" else reachable)
    return MetricValue(metric, None, value, ratio)


def observe_actor_metric(
    net: SocialNetwork,
    metric: MetricId,
    actor: str,
    *,
    view: str = "directed",
    mode: str = "strict",
) -> MetricValue:
    """Like :func:`actor_metric`, but keeping the natural display ratio."""
    value = actor_metric(net, metric, actor, view=view, mode=mode)
    ratio: tuple[int, int] | None = None
    if isinstance(value, (int, Fraction)):
        if metric is MetricId.IN_DENSITY:
            ratio = (in_degree(net, actor), net.size - 1)
        elif metric is MetricId.OUT_DENSITY:
            ratio = (out_degree(net, actor), net.size - 1)
        elif metric is MetricId.RECIPROCATED_DENSITY:
            ratio = (reciprocated_partner_count(net, actor), neighborhood_size(net, actor))
    return MetricValue(metric, actor, value, ratio)

"""Induced-subnetwork search: exhaustive enumeration and greedy peeling.

Exhaustive mode enumerates every actor subset inside the size window (for
anchored requirement sets, only subsets containing the anchor), evaluates
each induced subnetwork, and returns all satisfying subsets. Density can
rise or fall as actors are removed, so no pruning beyond the size window
is applied; completeness over the window is the point. A size guard and an
enumeration cap keep accidental blowups from running away.

Greedy peel starts from the whole network and repeatedly removes the actor
with the most violated per-actor atoms (ties broken by lowest total
degree, then actor order; the anchor is never removed), re-evaluating
after each removal. It is sound but not complete: a returned solution
always satisfies the requirements, but failure to find one proves
nothing. When nothing points at a specific actor (say a too-low network
density), the peel still removes the current lowest-degree actor.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction

from .evaluator import EvaluationReport, evaluate
from .metrics import density, total_degree
from .network import SocialNetwork
from .requirements import RequirementSet

EXHAUSTIVE_SIZE_GUARD = 20
DEFAULT_ENUMERATION_CAP = 1_000_000

_MODES = {
    "exhaustive": "exhaustive",
    "greedy-peel": "greedy-peel",
    "peel": "greedy-peel",
}
_OBJECTIVES = {
    "size": "size",
    "maximize-size": "size",
    "density": "density",
    "maximize-density": "density",
    "first": "first",
    "first-found": "first",
}


class SearchError(ValueError):
    """Invalid search configuration or an exceeded safety bound."""


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters; mode and objective accept their long spellings."""

    min_size: int
    max_size: int
    mode: str = "exhaustive"
    objective: str = "size"
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self) -> None:
        if self.mode not in _MODES:
            raise SearchError(f"unknown search mode {self.mode!r}")
        object.__setattr__(self, "mode", _MODES[self.mode])
        if self.objective not in _OBJECTIVES:
            raise SearchError(f"unknown objective {self.objective!r}")
        object.__setattr__(self, "objective", _OBJECTIVES[self.objective])
        if not 1 <= self.min_size <= self.max_size:
            raise SearchError(
                "size bounds invalid: need 1 <= min_size <= max_size"
            )
        if self.enumeration_cap < 1:
            raise SearchError("enumeration cap must be at least 1")


@dataclass(frozen=True)
class SubnetworkSolution:
    """A satisfying actor subset (in parent actor order) with its report."""

    actors: tuple[str, ...]
    report: EvaluationReport
    objective_value: int | Fraction


def _check_bounds(net: SocialNetwork, cfg: SearchConfig) -> None:
    if cfg.max_size > net.size:
        raise SearchError(
            f"size bounds invalid: max_size {cfg.max_size} exceeds "
            f"network size {net.size}"
        )


def _resolve_anchor(
    net: SocialNetwork, reqs: RequirementSet, anchor: str | None
) -> str | None:
    if not reqs.needs_anchor:
        return None
    effective = anchor if anchor is not None else reqs.anchor
    if effective is None:
        raise SearchError(
            f"requirement set {reqs.name!r} designates an anchor; supply one"
        )
    if effective not in net:
        raise SearchError(f"anchor {effective!r} is not an actor of the network")
    return effective


def _objective_value(cfg: SearchConfig, sub: SocialNetwork) -> int | Fraction:
    if cfg.objective == "density":
        value = density(sub)
        return value if isinstance(value, (int, Fraction)) else Fraction(0)
    return sub.size


def _subnet_name(network_name: str, actors: tuple[str, ...]) -> str:
    return f"{network_name}[{','.join(actors)}]"


def search_exhaustive(
    net: SocialNetwork,
    reqs: RequirementSet,
    cfg: SearchConfig,
    anchor: str | None = None,
    *,
    network_name: str = "network",
    view: str = "directed",
    mode: str = "strict",
    size_guard: int = EXHAUSTIVE_SIZE_GUARD,
) -> list[SubnetworkSolution]:
    """All satisfying subsets in the size window, best objective first.

    Subsets are enumerated largest-size first, lexicographically by actor
    order within a size; with objective "first" the first hit is returned
    alone. Results are sorted by descending objective value, then by actor
    order. Raises SearchError if the network exceeds ``size_guard`` actors
    or the enumeration cap is hit before the window is exhausted.
    """
    if cfg.mode != "exhaustive":
        raise SearchError(f"config mode is {cfg.mode!r}, not 'exhaustive'")
    if net.size > size_guard:
        raise SearchError(
            f"refusing exhaustive enumeration over {net.size} actors "
            f"(guard is {size_guard})"
        )
    _check_bounds(net, cfg)
    effective = _resolve_anchor(net, reqs, anchor)
    index = {a: i for i, a in enumerate(net.actors)}
    anchor_arg = effective if reqs.needs_anchor else None

    examined = 0
    solutions: list[SubnetworkSolution] = []
    for k in range(cfg.max_size, cfg.min_size - 1, -1):
        if effective is not None:
            others = [a for a in net.actors if a != effective]
            if k - 1 > len(others):
                continue
            combos = (
                tuple(sorted((effective, *rest), key=index.__getitem__))
                for rest in itertools.combinations(others, k - 1)
            )
        else:
            combos = itertools.combinations(net.actors, k)
        for combo in combos:
            examined += 1
            if examined > cfg.enumeration_cap:
                raise SearchError(
                    f"enumeration cap exceeded after {cfg.enumeration_cap} subsets"
                )
            sub = net.induced(combo)
            report = evaluate(
                sub,
                reqs,
                anchor_arg,
                parent=net,
                network_name=_subnet_name(network_name, combo),
                view=view,
                mode=mode,
            )
            if report.overall:
                solution = SubnetworkSolution(
                    combo, report, _objective_value(cfg, sub)
                )
                if cfg.objective == "first":
                    return [solution]
                solutions.append(solution)
    solutions.sort(
        key=lambda s: (
            -Fraction(s.objective_value),
            tuple(index[a] for a in s.actors),
        )
    )
    return solutions


def search_greedy_peel(
    net: SocialNetwork,
    reqs: RequirementSet,
    cfg: SearchConfig,
    anchor: str | None = None,
    *,
    network_name: str = "network",
    view: str = "directed",
    mode: str = "strict",
) -> SubnetworkSolution | None:
    """Peel worst-violating actors until the rest satisfies the set.

    Returns the first satisfying network whose size also fits the window,
    with the removal trace recorded in the report; None once peeling
    would cross min_size without success.
    """
    if cfg.mode != "greedy-peel":
        raise SearchError(f"config mode is {cfg.mode!r}, not 'greedy-peel'")
    _check_bounds(net, cfg)
    effective = _resolve_anchor(net, reqs, anchor)
    anchor_arg = effective if reqs.needs_anchor else None

    current = net
    trace: list[str] = []
    while True:
        report = evaluate(
            current,
            reqs,
            anchor_arg,
            parent=net,
            network_name=_subnet_name(network_name, current.actors),
            view=view,
            mode=mode,
        )
        if report.overall and current.size <= cfg.max_size:
            report = replace(report, peel_trace=tuple(trace))
            sub = current
            return SubnetworkSolution(
                current.actors, report, _objective_value(cfg, sub)
            )
        if current.size - 1 < cfg.min_size:
            return None
        scores = Counter(
            actor
            for verdict in report.verdicts
            if not verdict.satisfied
            for actor, _ in verdict.violators
        )
        candidates = [a for a in current.actors if a != effective]
        if not candidates:
            return None
        victim = max(
            candidates,
            key=lambda a: (
                scores.get(a, 0),
                -total_degree(current, a),
                -current.actors.index(a),
            ),
        )
        trace.append(victim)
        current = current.induced(a for a in current.actors if a != victim)

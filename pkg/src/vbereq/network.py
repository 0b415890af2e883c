"""Directed binary social networks over named actors.

A network is a set of actors plus a set of ordered ties; a tie ``(a, b)``
reads "a sends information to b". There are no tie weights, no self-ties,
and no parallel ties. Networks are immutable: operations that look like
mutation return a new network, which makes instances safe to hash and to
use as cache keys for derived tables.

Actor order is the insertion order and every derived network preserves it,
so reports over the same data render identically from run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class NetworkError(ValueError):
    """A network invariant or operation precondition was violated."""


def validate_actor_id(actor_id: str) -> str:
    """Check that an actor id is usable in every serialization format."""
    if not isinstance(actor_id, str) or not actor_id:
        raise NetworkError("actor id must be a non-empty string")
    if "," in actor_id or ":" in actor_id:
        raise NetworkError(f"actor id {actor_id!r} must not contain ',' or ':'")
    if actor_id != actor_id.strip():
        raise NetworkError(
            f"actor id {actor_id!r} must not have leading or trailing whitespace"
        )
    if actor_id.startswith("#"):
        raise NetworkError(f"actor id {actor_id!r} must not start with '#'")
    if any(ord(ch) < 32 for ch in actor_id):
        raise NetworkError(f"actor id {actor_id!r} must not contain control characters")
    return actor_id


@dataclass(frozen=True)
class SocialNetwork:
    """An immutable directed binary graph.

    ``actors`` keeps insertion order; ``ties`` is an unordered set of
    ``(sender, receiver)`` pairs over those actors.
    """

    actors: tuple[str, ...]
    ties: frozenset[tuple[str, str]] = frozenset()
    _out: dict[str, frozenset[str]] = field(init=False, repr=False, compare=False)
    _in: dict[str, frozenset[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        actors = tuple(self.actors)
        if not actors:
            raise NetworkError("a network needs at least one actor")
        seen: set[str] = set()
        for actor in actors:
            validate_actor_id(actor)
            if actor in seen:
                raise NetworkError(f"duplicate actor id {actor!r}")
            seen.add(actor)
        ties = frozenset((a, b) for a, b in self.ties)
        out: dict[str, set[str]] = {a: set() for a in actors}
        inc: dict[str, set[str]] = {a: set() for a in actors}
        for a, b in ties:
            if a not in seen or b not in seen:
                raise NetworkError(f"tie {a!r} -> {b!r} references an unknown actor")
            if a == b:
                raise NetworkError(f"self-tie on {a!r} is not allowed")
            out[a].add(b)
            inc[b].add(a)
        object.__setattr__(self, "actors", actors)
        object.__setattr__(self, "ties", ties)
        object.__setattr__(self, "_out", {a: frozenset(out[a]) for a in actors})
        object.__setattr__(self, "_in", {a: frozenset(inc[a]) for a in actors})

    # -- queries ---------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.actors)

    @property
    def tie_count(self) -> int:
        return len(self.ties)

    def __contains__(self, actor_id: object) -> bool:
        return actor_id in self._out

    def __iter__(self) -> Iterator[str]:
        return iter(self.actors)

    def require_actor(self, actor_id: str) -> str:
        if actor_id not in self._out:
            raise NetworkError(f"unknown actor {actor_id!r}")
        return actor_id

    def has_tie(self, sender: str, receiver: str) -> bool:
        return (sender, receiver) in self.ties

    def out_neighbors(self, actor_id: str) -> frozenset[str]:
        """Actors that ``actor_id`` sends to."""
        return self._out[self.require_actor(actor_id)]

    def in_neighbors(self, actor_id: str) -> frozenset[str]:
        """Actors that send to ``actor_id``."""
        return self._in[self.require_actor(actor_id)]

    def neighbors(self, actor_id: str) -> frozenset[str]:
        """Actors tied with ``actor_id`` in either direction."""
        self.require_actor(actor_id)
        return self._out[actor_id] | self._in[actor_id]

    # -- derivations -----------------------------------------------------

    def add_tie(self, sender: str, receiver: str) -> "SocialNetwork":
        """Return a network with the tie present; a no-op returns self."""
        self.require_actor(sender)
        self.require_actor(receiver)
        if sender == receiver:
            raise NetworkError(f"self-tie on {sender!r} is not allowed")
        if (sender, receiver) in self.ties:
            return self
        return SocialNetwork(self.actors, self.ties | {(sender, receiver)})

    def add_ties(self, pairs: Iterable[tuple[str, str]]) -> "SocialNetwork":
        net = self
        for sender, receiver in pairs:
            net = net.add_tie(sender, receiver)
        return net

    def induced(self, subset: Iterable[str]) -> "SocialNetwork":
        """The subnetwork on ``subset``, keeping only internal ties.

        Actor order follows this network, not the order of ``subset``.
        """
        wanted = set(subset)
        for actor in wanted:
            self.require_actor(actor)
        if not wanted:
            raise NetworkError("an induced subnetwork needs at least one actor")
        actors = tuple(a for a in self.actors if a in wanted)
        ties = frozenset((a, b) for a, b in self.ties if a in wanted and b in wanted)
        return SocialNetwork(actors, ties)

    def symmetrized(self) -> "SocialNetwork":
        """The undirected view: every tie is made mutual."""
        mirrored = self.ties | {(b, a) for a, b in self.ties}
        if mirrored == self.ties:
            return self
        return SocialNetwork(self.actors, mirrored)

"""Bundled example networks and requirement sets.

Two small datasets ship with the package so the command line and the test
suite have something real to chew on:

* steel10 -- a directed advice network among ten steel-sector firms,
  stored as an adjacency matrix.
* wholesale -- an undirected acquaintance circle around a wholesaler,
  stored as a symmetric edge list.

The matching requirement sets (steel_vbe.req, wholesaler.req) are the
canonical serializations of the templates in the requirements module.
"""

from __future__ import annotations

from importlib import resources

from ..network import SocialNetwork
from ..requirements import RequirementSet


def _read(name: str) -> str:
    return resources.files(__package__).joinpath(name).read_text()


def load_steel10() -> SocialNetwork:
    """The ten-firm steel advice network (directed, 51 ties)."""
    from ..netio import parse_matrix_csv

    return parse_matrix_csv(_read("steel10.csv"))


def load_wholesale() -> SocialNetwork:
    """The wholesaler's acquaintance circle (symmetric, 10 actors)."""
    from ..netio import parse_edge_list

    return parse_edge_list(_read("wholesale.edges"), symmetric=True)


def load_steel_vbe_requirements() -> RequirementSet:
    from ..reqtext import parse_requirements

    return parse_requirements(_read("steel_vbe.req"))


def load_wholesaler_requirements() -> RequirementSet:
    from ..reqtext import parse_requirements

    return parse_requirements(_read("wholesaler.req"))

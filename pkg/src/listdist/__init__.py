"""Exact distinguishing numbers, list distinguishing numbers and their
proper-colouring analogues for small graphs."""

from listdist.errors import CapExceededError, GraphParseError, GroupTruncatedError, ListDistError
from listdist.graphs import (
    AutomorphismGroup,
    Graph,
    automorphisms,
    encode_graph6,
    generate_family,
    parse_edge_list,
    parse_graph6,
)
from listdist.labeling import Predicate, enumerate_labelings, min_labels, satisfies
from listdist.listnum import (
    ListAssignment,
    characterization_holds_at,
    hunt,
    list_number_characterization,
    list_number_direct,
    select_satisfying,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismGroup", "CapExceededError", "Graph", "GraphParseError", "GroupTruncatedError",
    "ListAssignment", "ListDistError", "Predicate", "automorphisms", "characterization_holds_at",
    "encode_graph6", "enumerate_labelings", "generate_family", "hunt", "list_number_characterization",
    "list_number_direct", "min_labels", "parse_edge_list", "parse_graph6", "satisfies", "select_satisfying",
]

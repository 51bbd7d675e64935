"""Plane graphs, their link projections, and the smoothing order on links."""

from .planegraph import PlaneGraph, canonical_code, contract_edge, delete_edge, dual, format_graph, parse_graph
from .medial import LinkProjection, SmoothingWitness, apply_witness, medial, smooth, tait
from .minors import MinorWitness, find_witness, has_minor
from .linkid import fingerprint, identify, link_table
from .smorder import LinkSpec, OrderResult, hasse, smajor
from .enumeration import EnumSpec, enumerate_blocks

__all__ = [
    "PlaneGraph",
    "canonical_code",
    "contract_edge",
    "delete_edge",
    "dual",
    "format_graph",
    "parse_graph",
    "LinkProjection",
    "SmoothingWitness",
    "apply_witness",
    "medial",
    "smooth",
    "tait",
    "MinorWitness",
    "find_witness",
    "has_minor",
    "fingerprint",
    "identify",
    "link_table",
    "LinkSpec",
    "OrderResult",
    "hasse",
    "smajor",
    "EnumSpec",
    "enumerate_blocks",
]

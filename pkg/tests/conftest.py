from functools import lru_cache

import pytest
from hypothesis import strategies as st

from smoothorder.enumeration import EnumSpec, enumerate_blocks
from smoothorder.planegraph import canonical_code

from .oracles import minor_graphs


@lru_cache(maxsize=None)
def blocks_up_to(n: int):
    return tuple(enumerate_blocks(EnumSpec(max_edges=n)))


@lru_cache(maxsize=None)
def connected_up_to(n: int):
    """Connected plane graphs with at most n edges that are minors of a block:
    loops, bridges and cut vertices included."""
    seen = {}
    for b in blocks_up_to(n):
        for g in minor_graphs(b):
            seen.setdefault(canonical_code(g), g)
    return tuple(seen[c] for c in sorted(seen))


@pytest.fixture(scope="session")
def small_blocks():
    return blocks_up_to(6)


def block_strategy(max_edges: int = 6):
    return st.sampled_from(blocks_up_to(max_edges))

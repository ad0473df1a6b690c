"""
Isomorphism testing between Cayley-table groups.
"""
import logging
from collections import Counter
from typing import Optional

import numpy as np

from src.group_core.table import GroupTable
from src.group_core.generation import min_generators
from src.aut_engine.search import HomomorphismSearch, element_keys

logger = logging.getLogger(__name__)


def find_isomorphism(G: GroupTable, H: GroupTable) -> Optional[np.ndarray]:
    """
    An isomorphism G -> H as an index map, or None.

    Element-key multisets are compared first; the generator-image search
    decides the remaining cases.
    """
    if G.order != H.order:
        return None
    g_keys = element_keys(G)
    h_keys = element_keys(H)
    if Counter(g_keys) != Counter(h_keys):
        logger.debug(f"{G.name} vs {H.name}: element keys differ")
        return None
    _, generators = min_generators(G)
    search = HomomorphismSearch(G, H, generators, source_keys=g_keys, target_keys=h_keys)
    result = search.first()
    logger.debug(f"{G.name} vs {H.name}: {'isomorphic' if result is not None else 'not isomorphic'} "
                 f"after {search.nodes} nodes")
    return result


def are_isomorphic(G: GroupTable, H: GroupTable) -> bool:
    return find_isomorphism(G, H) is not None

"""
Smallest generating tuples.
"""
import logging
from typing import Dict, List, Tuple

import numpy as np
from sympy.ntheory import factorint

from src import config
from src.errors import ResourceLimitError
from src.group_core.table import GroupTable
from src.group_core.subgroups import commutator_subgroup, generate, quotient
from src.group_core.structure import power_subgroup

logger = logging.getLogger(__name__)


def frattini_rank_bounds(G: GroupTable) -> Dict[int, Tuple[GroupTable, np.ndarray, int]]:
    """
    For each prime p dividing |G/G'|, the elementary abelian quotient G/(G'G^p).

    Returns:
        Mapping p -> (quotient table, projection, rank); any generating tuple of
        G needs at least rank elements.
    """
    derived_index = G.order // commutator_subgroup(G).order
    bounds = {}
    for p in factorint(derived_index):
        Q, projection = quotient(G, power_subgroup(G, p))
        rank = 0
        size = Q.order
        while size > 1:
            size //= p
            rank += 1
        bounds[p] = (Q, projection, rank)
    return bounds


def generator_lower_bound(G: GroupTable) -> int:
    """max_p rank of G/(G'G^p), and 1 for a nontrivial perfect group."""
    if G.order == 1:
        return 0
    ranks = [rank for _, _, rank in frattini_rank_bounds(G).values()]
    return max(ranks + [1])


def min_generators(G: GroupTable, cap: int = config.MAX_GROUP_ORDER) -> Tuple[int, Tuple[int, ...]]:
    """
    Smallest d with a d-element generating tuple, and the first such tuple.

    Tuples are strictly increasing index sequences searched in lexicographic
    order for d = lower bound, lower bound + 1, ... Branches are cut when an
    entry lies in the span of the earlier ones or when some elementary
    abelian quotient G/(G'G^p) can no longer be spanned by the remaining slots.

    Raises:
        ResourceLimitError: If |G| exceeds cap.
    """
    if G.order > cap:
        raise ResourceLimitError(f"min_generators is limited to order {cap}", limit=cap, requested=G.order)
    if G.order == 1:
        return 0, ()
    bounds = frattini_rank_bounds(G)
    d = generator_lower_bound(G)
    logger.debug(f"{G.name}: generator lower bound {d}")
    while True:
        found = _search(G, d, bounds)
        if found is not None:
            logger.info(f"{G.name}: d = {d}, witness {found}")
            return d, found
        logger.debug(f"{G.name}: no generating {d}-tuple")
        d += 1


def _search(G: GroupTable, d: int, bounds) -> Tuple[int, ...]:
    quotient_data = [(Q, projection, rank, p) for p, (Q, projection, rank) in bounds.items()]

    def spanned_rank(Q: GroupTable, images: List[int], p: int) -> int:
        size = generate(Q, images).order
        rank = 0
        while size > 1:
            size //= p
            rank += 1
        return rank

    def extend(prefix: List[int], start: int):
        depth = len(prefix)
        span = generate(G, prefix)
        if depth == d:
            return tuple(prefix) if span.order == G.order else None
        mask = span.mask
        remaining = d - depth - 1
        for g in range(start, G.order):
            if mask[g]:
                continue
            candidate = prefix + [g]
            feasible = True
            for Q, projection, rank, p in quotient_data:
                images = [int(projection[x]) for x in candidate]
                if rank - spanned_rank(Q, images, p) > remaining:
                    feasible = False
                    break
            if not feasible:
                continue
            found = extend(candidate, g + 1)
            if found is not None:
                return found
        return None

    return extend([], 1)

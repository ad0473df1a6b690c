"""
Automorphism groups held as a stabiliser chain on a generating tuple.
"""
import logging
from math import prod
from typing import Dict, Iterator, List, Optional, Sequence

import numpy as np

from src import config
from src.errors import AutomorphismError, ResourceLimitError
from src.group_core.table import GroupTable
from src.group_core.generation import min_generators
from src.aut_engine.automorphism import Automorphism, is_automorphism
from src.aut_engine.search import HomomorphismSearch

logger = logging.getLogger(__name__)


def orbit_of(points: Sequence[int], generators: Sequence[np.ndarray], size: int) -> np.ndarray:
    """Sorted orbit of a set of points under permutations given as arrays."""
    mask = np.zeros(size, dtype=bool)
    frontier = np.unique(np.asarray(points, dtype=np.int64))
    mask[frontier] = True
    while frontier.size and generators:
        reached = np.unique(np.concatenate([perm[frontier] for perm in generators]))
        frontier = reached[~mask[reached]]
        mask[frontier] = True
    return np.flatnonzero(mask)


class BasicLevel:
    """Orbit of one base element under the stabiliser of the earlier ones, with transversal."""

    def __init__(self, base_point: int, transversal: Dict[int, np.ndarray]):
        self.base_point = base_point
        self.transversal = transversal

    @property
    def orbit(self) -> List[int]:
        return sorted(self.transversal)

    def __len__(self) -> int:
        return len(self.transversal)


class AutomorphismGroup:
    """
    Aut(G) as a stabiliser chain.

    The base is a generating tuple (g_1, ..., g_d) of G, so an automorphism
    is determined by the images of the base. Level i stores the orbit of
    g_(i+1) under the automorphisms fixing g_1, ..., g_i together with one
    automorphism per orbit point; |Aut(G)| is the product of the orbit
    lengths.
    """

    def __init__(self, group: GroupTable, base: Sequence[int], levels: List[BasicLevel],
                 strong_generators: List[Automorphism]):
        self.group = group
        self.base = list(base)
        self.levels = levels
        self.strong_generators = strong_generators

    @property
    def order(self) -> int:
        return prod(len(level) for level in self.levels)

    @property
    def generators(self) -> List[Automorphism]:
        return self.strong_generators

    def __repr__(self) -> str:
        return f"AutomorphismGroup(group={self.group.name!r}, order={self.order})"

    def contains(self, perm: np.ndarray) -> bool:
        """Membership by sifting through the chain."""
        current = np.asarray(perm, dtype=np.int64)
        if current.shape != (self.group.order,):
            return False
        for level in self.levels:
            image = int(current[level.base_point])
            t = level.transversal.get(image)
            if t is None:
                return False
            inverse = np.empty_like(t)
            inverse[t] = np.arange(t.size, dtype=t.dtype)
            current = inverse[current]
        return bool(np.array_equal(current, np.arange(self.group.order)))

    def elements(self, cap: int = config.AUT_ELEMENT_LIST_CAP) -> Iterator[Automorphism]:
        """
        Every automorphism, as products t_0 o t_1 o ... of transversal elements.

        Raises:
            ResourceLimitError: If |Aut(G)| exceeds cap.
        """
        if self.order > cap:
            raise ResourceLimitError(f"|Aut| = {self.order} is above the listing cap {cap}",
                                     limit=cap, requested=self.order)

        def expand(i: int, suffix: np.ndarray) -> Iterator[np.ndarray]:
            if i < 0:
                yield suffix
                return
            for point in self.levels[i].orbit:
                yield from expand(i - 1, self.levels[i].transversal[point][suffix])

        identity = np.arange(self.group.order, dtype=np.int32)
        for perm in expand(len(self.levels) - 1, identity):
            yield Automorphism(perm)

    def as_list(self, cap: int = config.AUT_ELEMENT_LIST_CAP) -> List[Automorphism]:
        return list(self.elements(cap))

    def to_dict(self) -> Dict:
        return {
            "order": self.order,
            "base": self.base,
            "basic_orbit_lengths": [len(level) for level in self.levels],
            "generators": [a.perm.tolist() for a in self.strong_generators],
        }


def _level_transversal(base_point: int, generators: List[np.ndarray], size: int) -> Dict[int, np.ndarray]:
    identity = np.arange(size, dtype=np.int32)
    transversal = {base_point: identity}
    queue = [base_point]
    while queue:
        x = queue.pop(0)
        tx = transversal[x]
        for perm in generators:
            y = int(perm[x])
            if y not in transversal:
                transversal[y] = perm[tx]
                queue.append(y)
    return transversal


def automorphism_group(G: GroupTable, generators: Optional[Sequence[int]] = None,
                       cap: int = config.AUT_ORDER_LIMIT, verify: bool = True) -> AutomorphismGroup:
    """
    Compute Aut(G) by backtracking over images of a generating tuple.

    Levels are processed deepest first. At level i the images of
    g_1, ..., g_i are held fixed, and each candidate image c of g_(i+1)
    that is not yet in the known orbit is tested by a first-found search
    over the remaining levels. A success adds a strong generator; a failure
    rules out the whole known orbit of c.

    Args:
        G: The group.
        generators: Generating tuple used as base (defaults to min_generators).
        cap: Largest group order accepted.
        verify: Check every strong generator with is_automorphism.

    Raises:
        ResourceLimitError: If |G| exceeds cap.
        AutomorphismError: If the tuple does not generate G or a found map is not an automorphism.
    """
    if G.order > cap:
        raise ResourceLimitError(f"automorphism groups are limited to order {cap}", limit=cap, requested=G.order)
    base = list(generators) if generators is not None else list(min_generators(G)[1])
    search = HomomorphismSearch(G, G, base)
    if not search.assign_prefix(base) or len(search.assigned) != G.order:
        raise AutomorphismError(f"{base} does not generate {G.name}")

    size = G.order
    depth = len(base)
    found: List[tuple] = []
    levels: List[Optional[BasicLevel]] = [None] * depth
    for i in range(depth - 1, -1, -1):
        if not search.assign_prefix(base[:i]):
            raise AutomorphismError("identity prefix rejected")
        stabiliser = [perm for level, perm in found if level >= i]
        orbit = set(orbit_of([base[i]], stabiliser, size).tolist())
        bad = set()
        for c in search.level_candidates(i):
            if c in orbit or c in bad:
                continue
            perm = search.try_candidate(i, c)
            if perm is None:
                bad.update(orbit_of([c], stabiliser, size).tolist())
                continue
            if verify and not is_automorphism(G, perm):
                raise AutomorphismError(f"search produced a non-automorphism at level {i}")
            found.append((i, perm))
            stabiliser.append(perm)
            orbit = set(orbit_of([base[i]], stabiliser, size).tolist())
        levels[i] = BasicLevel(base[i], _level_transversal(base[i], stabiliser, size))
        logger.debug(f"{G.name}: level {i} orbit length {len(levels[i])}")

    strong = [Automorphism(perm) for _, perm in found]
    result = AutomorphismGroup(G, base, levels, strong)
    logger.info(f"{G.name}: |Aut| = {result.order} ({search.nodes} search nodes)")
    return result

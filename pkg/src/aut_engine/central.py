"""
Central automorphisms g -> g f(g) for homomorphisms f: G -> Z(G).
"""
import logging
from itertools import product as cartesian
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src import config
from src.errors import AutomorphismError, ResourceLimitError
from src.group_core.table import GroupTable
from src.group_core.subgroups import center, commutator_subgroup, quotient
from src.group_core.abelian import abelian_basis, basis_coordinates
from src.aut_engine.automorphism import Automorphism
from src.aut_engine.group import AutomorphismGroup, automorphism_group

logger = logging.getLogger(__name__)


class CentralHomomorphisms:
    """
    Homomorphisms f: G -> Z(G), enumerated through G/G'.

    G/G' is written as a direct sum of cyclic groups <q_i> of order m_i, and
    f is fixed by images z_i in Z(G) with z_i^m_i = 1.
    """

    def __init__(self, G: GroupTable):
        self.group = G
        self.zeta = center(G)
        Q, projection = quotient(G, commutator_subgroup(G))
        basis = abelian_basis(Q)
        self.moduli = [order for _, order in basis]
        self.coordinates = basis_coordinates(Q, basis)[projection]
        zeta_orders = G.element_orders[self.zeta.members]
        self.choices = [[int(z) for z, o in zip(self.zeta.members, zeta_orders) if m % o == 0]
                        for m in self.moduli]
        zeta_index = np.full(G.order, -1, dtype=np.int64)
        zeta_index[self.zeta.members] = np.arange(self.zeta.order)
        self._zeta_index = zeta_index
        # powers z^k for every central z, 0 <= k < exponent of the quotient
        top = max(self.moduli, default=1)
        self._powers = np.zeros((self.zeta.order, top), dtype=np.int64)
        for idx, z in enumerate(self.zeta.members.tolist()):
            x = 0
            for k in range(top):
                self._powers[idx, k] = x
                x = G.rows[x][z]

    @property
    def count(self) -> int:
        total = 1
        for options in self.choices:
            total *= len(options)
        return total

    def images(self) -> Iterator[Tuple[int, ...]]:
        return cartesian(*self.choices)

    def values(self, images: Tuple[int, ...], elements: Optional[np.ndarray] = None) -> np.ndarray:
        """f(g) for every g (or for the given elements), where f sends q_i to images[i]."""
        G = self.group
        coordinates = self.coordinates if elements is None else self.coordinates[elements]
        result = np.zeros(coordinates.shape[0], dtype=np.int64)
        for i, z in enumerate(images):
            zi = self._zeta_index[z]
            factor = self._powers[zi, coordinates[:, i]]
            result = G.mul[result, factor]
        return result

    def is_injective(self, images: Tuple[int, ...]) -> bool:
        """Only the identity of Z(G) may be sent to its own inverse."""
        G = self.group
        members = self.zeta.members[1:]
        return not np.any(G.mul[members, self.values(images, members)] == 0)

    def automorphism(self, images: Tuple[int, ...]) -> Automorphism:
        G = self.group
        return Automorphism(G.mul[np.arange(G.order), self.values(images)])


def central_automorphism_count(G: GroupTable, limit: int = config.CENTRAL_COUNT_LIMIT) -> int:
    """|Aut_cent(G)|, counting homomorphisms that pass the kernel criterion."""
    homs = CentralHomomorphisms(G)
    if homs.count > limit:
        raise ResourceLimitError(f"{homs.count} central homomorphisms exceed {limit}",
                                 limit=limit, requested=homs.count)
    return sum(1 for images in homs.images() if homs.is_injective(images))


def central_automorphisms(G: GroupTable, limit: int = config.CENTRAL_HOM_LIMIT,
                          aut: Optional[AutomorphismGroup] = None) -> List[Automorphism]:
    """
    Aut_cent(G) as a list.

    For abelian G every automorphism is central, so the list is Aut(G).

    Raises:
        ResourceLimitError: If there are more than limit homomorphisms to try.
    """
    if G.is_abelian:
        aut = aut or automorphism_group(G)
        return aut.as_list()
    homs = CentralHomomorphisms(G)
    if homs.count > limit:
        raise ResourceLimitError(f"{homs.count} central homomorphisms exceed {limit}",
                                 limit=limit, requested=homs.count)
    result = [homs.automorphism(images) for images in homs.images() if homs.is_injective(images)]
    logger.info(f"{G.name}: {len(result)} central automorphisms out of {homs.count} homomorphisms")
    return result


def aut_index_central(G: GroupTable, aut: Optional[AutomorphismGroup] = None) -> int:
    """
    |Aut(G) : Aut_cent(G)|.

    Raises:
        AutomorphismError: If the division is not exact.
    """
    aut = aut or automorphism_group(G)
    central = aut.order if G.is_abelian else central_automorphism_count(G)
    if central == 0 or aut.order % central:
        raise AutomorphismError(f"|Aut_cent| = {central} does not divide |Aut| = {aut.order}")
    return aut.order // central

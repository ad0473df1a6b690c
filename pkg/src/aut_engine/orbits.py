"""
Orbits of Aut(G) on elements and on tuples; maol and related invariants.
"""
import logging
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from src.group_core.table import GroupTable
from src.group_core.subgroups import Subgroup
from src.aut_engine.group import AutomorphismGroup, automorphism_group, orbit_of

logger = logging.getLogger(__name__)


class OrbitPartition:
    """Aut(G)-orbits on G, sorted by their smallest element."""

    def __init__(self, orbits: List[List[int]]):
        self.orbits = sorted((sorted(o) for o in orbits), key=lambda o: o[0])

    @property
    def lengths(self) -> List[int]:
        return [len(o) for o in self.orbits]

    @property
    def maol(self) -> int:
        return max(self.lengths)

    def orbit_of(self, g: int) -> List[int]:
        return next(o for o in self.orbits if g in o)

    def __len__(self) -> int:
        return len(self.orbits)

    def __repr__(self) -> str:
        return f"OrbitPartition(lengths={self.lengths})"

    def to_dict(self) -> Dict[str, Any]:
        return {"orbits": self.orbits, "maol": self.maol}


def aut_orbits(G: GroupTable, aut: Optional[AutomorphismGroup] = None) -> OrbitPartition:
    """Orbit closure of every element under the generators of Aut(G)."""
    aut = aut or automorphism_group(G)
    perms = [a.perm for a in aut.generators]
    seen = np.zeros(G.order, dtype=bool)
    orbits = []
    for g in range(G.order):
        if seen[g]:
            continue
        orbit = orbit_of([g], perms, G.order)
        seen[orbit] = True
        orbits.append(orbit.tolist())
    partition = OrbitPartition(orbits)
    logger.debug(f"{G.name}: orbit lengths {partition.lengths}")
    return partition


def maol(G: GroupTable, aut: Optional[AutomorphismGroup] = None) -> int:
    """Maximum length of an Aut(G)-orbit on G."""
    return aut_orbits(G, aut).maol


def orbit_count(G: GroupTable, aut: Optional[AutomorphismGroup] = None) -> int:
    return len(aut_orbits(G, aut))


def is_miller_group(G: GroupTable, aut: Optional[AutomorphismGroup] = None) -> bool:
    """Nonabelian with an abelian automorphism group."""
    if G.is_abelian:
        return False
    aut = aut or automorphism_group(G)
    gens = aut.generators
    return all(a.after(b) == b.after(a) for i, a in enumerate(gens) for b in gens[i + 1:])


def is_characteristic(S: Subgroup, aut: AutomorphismGroup) -> bool:
    """Whether every automorphism maps S onto itself."""
    mask = S.mask
    return all(bool(np.all(mask[a.perm[S.members]])) for a in aut.generators)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def diagonal_orbits(tuples: Sequence[Tuple[int, ...]], aut: AutomorphismGroup) -> List[List[int]]:
    """
    Orbits of Aut(G) acting componentwise on an invariant set of tuples.

    Returns:
        Lists of positions into tuples, one list per orbit, ordered by first position.

    Raises:
        ValueError: If an automorphism maps a tuple outside the set.
    """
    position: Dict[Hashable, int] = {tuple(t): i for i, t in enumerate(tuples)}
    uf = _UnionFind(len(tuples))
    for a in aut.generators:
        perm = a.perm
        for i, t in enumerate(tuples):
            image = tuple(int(perm[x]) for x in t)
            j = position.get(image)
            if j is None:
                raise ValueError(f"tuple {tuple(t)} is mapped outside the given set")
            uf.union(i, j)
    groups: Dict[int, List[int]] = {}
    for i in range(len(tuples)):
        groups.setdefault(uf.find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])

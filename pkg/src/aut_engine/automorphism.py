"""
Automorphisms as permutations of element indices.
"""
import logging
from typing import Any, Dict, Iterable, List

import numpy as np

from src import config
from src.group_core.table import GroupTable
from src.group_core.subgroups import center

logger = logging.getLogger(__name__)


class Automorphism:
    """
    A bijection on element indices that respects multiplication.

    perm[g] is the image of g. Composition follows function notation:
    (a.after(b))[g] = a[b[g]].
    """

    def __init__(self, perm: Iterable[int]):
        self.perm = np.asarray(list(perm) if not isinstance(perm, np.ndarray) else perm, dtype=np.int32)
        self.perm.flags.writeable = False

    @classmethod
    def identity(cls, order: int) -> "Automorphism":
        return cls(np.arange(order, dtype=np.int32))

    def __call__(self, g: int) -> int:
        return int(self.perm[g])

    def __len__(self) -> int:
        return int(self.perm.size)

    def after(self, other: "Automorphism") -> "Automorphism":
        """self o other: apply other first."""
        return Automorphism(self.perm[other.perm])

    def inverse(self) -> "Automorphism":
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(self.perm.size, dtype=np.int32)
        return Automorphism(inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.perm, np.arange(self.perm.size)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return np.array_equal(self.perm, other.perm)

    def __hash__(self) -> int:
        return hash(self.perm.tobytes())

    def __repr__(self) -> str:
        moved = int(np.count_nonzero(self.perm != np.arange(self.perm.size)))
        return f"Automorphism(degree={self.perm.size}, moved={moved})"

    def to_dict(self) -> Dict[str, Any]:
        return {"perm": self.perm.tolist()}


def is_automorphism(G: GroupTable, perm: np.ndarray,
                    exhaustive_limit: int = config.AUT_FULL_LIST_LIMIT,
                    samples: int = config.RANDOM_PAIR_SAMPLES,
                    seed: int = config.RANDOM_SEED) -> bool:
    """
    Whether perm is a bijective homomorphism G -> G.

    All pairs are compared when |G| <= exhaustive_limit; above it every
    pair (g, h) with h running over the whole group is compared column by
    column for a sampled set of columns plus random pairs.
    """
    perm = np.asarray(perm)
    if perm.shape != (G.order,) or perm[0] != 0:
        return False
    if not np.array_equal(np.sort(perm), np.arange(G.order)):
        return False
    if G.order <= exhaustive_limit:
        return bool(np.array_equal(perm[G.mul], G.mul[perm[:, None], perm[None, :]]))
    rng = np.random.default_rng(seed)
    a, b = rng.integers(0, G.order, size=(2, samples))
    if not np.array_equal(perm[G.mul[a, b]], G.mul[perm[a], perm[b]]):
        return False
    columns = rng.integers(0, G.order, size=min(G.order, 64))
    for h in columns:
        if not np.array_equal(perm[G.mul[:, h]], G.mul[perm, perm[h]]):
            return False
    return True


def conjugation(G: GroupTable, g: int) -> Automorphism:
    """The inner automorphism x -> g^-1 x g."""
    arange = np.arange(G.order)
    return Automorphism(G.mul[G.mul[G.inv[g], arange], g])


def inner_automorphisms(G: GroupTable) -> List[Automorphism]:
    """
    All inner automorphisms, one per coset of the centre.

    The list has |G : Z(G)| entries, ordered by smallest coset representative.
    """
    zeta = center(G)
    seen = np.zeros(G.order, dtype=bool)
    result = []
    for g in range(G.order):
        if seen[g]:
            continue
        seen[G.mul[g, zeta.members]] = True
        result.append(conjugation(G, g))
    return result

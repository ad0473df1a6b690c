"""
Subgroups, conjugacy classes and quotients of Cayley-table groups.
"""
import logging
from typing import Dict, Iterable, List, Sequence, Tuple, Any

import numpy as np

from src.group_core.table import GroupTable

logger = logging.getLogger(__name__)

# Rows of the commutator matrix handled per vectorised step
_COMMUTATOR_CHUNK = 256


class Subgroup:
    """A subgroup of a GroupTable, stored as the sorted array of its member indices."""

    def __init__(self, parent: GroupTable, members: Iterable[int]):
        """
        Initialize a subgroup.

        Args:
            parent: The ambient group.
            members: Element indices; duplicates are removed. Closure is the
                caller's responsibility (generate() guarantees it).
        """
        self.parent = parent
        self.members = np.unique(np.fromiter(members, dtype=np.int64)).astype(np.int32)
        self.members.flags.writeable = False

    @classmethod
    def from_mask(cls, parent: GroupTable, mask: np.ndarray) -> "Subgroup":
        return cls(parent, np.flatnonzero(mask))

    @property
    def order(self) -> int:
        return int(self.members.size)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[self.members] = True
        return mask

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return bool(np.all(other.mask[self.members]))

    def is_normal(self) -> bool:
        """True when every conjugate g^-1 s g of a member is again a member."""
        G = self.parent
        mask = self.mask
        conj = G.mul[G.mul[G.inv[:, None], self.members[None, :]], np.arange(G.order)[:, None]]
        return bool(np.all(mask[conj]))

    def is_abelian(self) -> bool:
        block = self.parent.mul[np.ix_(self.members, self.members)]
        return bool(np.array_equal(block, block.T))

    def __contains__(self, g: int) -> bool:
        return bool(self.mask[g])

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.members.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash(self.members.tobytes())

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, parent={self.parent.name!r})"

    def to_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "members": self.members.tolist()}


class ConjClassSet:
    """Conjugacy classes of a group with the element-to-class lookup."""

    def __init__(self, classes: List[np.ndarray], class_of: np.ndarray):
        self.classes = classes
        self.class_of = class_of

    @property
    def sizes(self) -> List[int]:
        return [int(c.size) for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)

    def __repr__(self) -> str:
        return f"ConjClassSet(count={len(self.classes)}, sizes={self.sizes})"

    def to_dict(self) -> Dict[str, Any]:
        return {"classes": [c.tolist() for c in self.classes]}


def generate(G: GroupTable, elements: Iterable[int]) -> Subgroup:
    """
    Subgroup generated by the given elements.

    Closure under right multiplication by the generators starting from the
    identity; in a finite group this is the generated subgroup.
    """
    gens = np.unique(np.fromiter(elements, dtype=np.int64)).astype(np.int32)
    gens = gens[gens != 0]
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    frontier = np.zeros(1, dtype=np.int32)
    while frontier.size and gens.size:
        reached = np.unique(G.mul[np.ix_(frontier, gens)])
        frontier = reached[~mask[reached]]
        mask[frontier] = True
    return Subgroup.from_mask(G, mask)


def set_product(G: GroupTable, A: Subgroup, B: Subgroup) -> Subgroup:
    """A*B for subgroups whose product is a subgroup (one of them normal, or G abelian)."""
    return Subgroup(G, np.unique(G.mul[np.ix_(A.members, B.members)]))


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, [0])


def whole_group(G: GroupTable) -> Subgroup:
    return Subgroup(G, range(G.order))


def center(G: GroupTable) -> Subgroup:
    """Elements commuting with every element."""
    return Subgroup.from_mask(G, (G.mul == G.mul.T).all(axis=1))


def centralizer(G: GroupTable, g: int) -> Subgroup:
    return Subgroup.from_mask(G, G.mul[g, :] == G.mul[:, g])


def normalizer(G: GroupTable, S: Subgroup) -> Subgroup:
    """Elements g with g^-1 S g = S."""
    mask = S.mask
    conj = G.mul[G.mul[G.inv[:, None], S.members[None, :]], np.arange(G.order)[:, None]]
    return Subgroup.from_mask(G, mask[conj].all(axis=1))


def commutator_values(G: GroupTable, left: Sequence[int], right: Sequence[int]) -> np.ndarray:
    """Distinct commutators [a, b] with a in left and b in right."""
    left = np.asarray(left, dtype=np.int32)
    right = np.asarray(right, dtype=np.int32)
    found = np.zeros(G.order, dtype=bool)
    inv_right = G.inv[right]
    for start in range(0, left.size, _COMMUTATOR_CHUNK):
        a = left[start:start + _COMMUTATOR_CHUNK]
        step = G.mul[G.inv[a][:, None], inv_right[None, :]]
        step = G.mul[step, a[:, None]]
        step = G.mul[step, right[None, :]]
        found[step.ravel()] = True
    return np.flatnonzero(found)


def commutator_subgroup_of(G: GroupTable, A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B]: the subgroup generated by all [a, b]."""
    return generate(G, commutator_values(G, A.members, B.members))


def commutator_subgroup(G: GroupTable) -> Subgroup:
    """G' = [G, G]."""
    everything = np.arange(G.order)
    return generate(G, commutator_values(G, everything, everything))


def conjugacy_classes(G: GroupTable) -> ConjClassSet:
    """
    Partition G into conjugacy classes.

    Classes are listed by their smallest element, so the identity class comes first.
    """
    class_of = np.full(G.order, -1, dtype=np.int64)
    classes: List[np.ndarray] = []
    arange = np.arange(G.order)
    for x in range(G.order):
        if class_of[x] >= 0:
            continue
        members = np.unique(G.mul[G.mul[G.inv, x], arange])
        class_of[members] = len(classes)
        classes.append(members.astype(np.int32))
    logger.debug(f"{G.name}: {len(classes)} conjugacy classes")
    return ConjClassSet(classes, class_of)


def mccl(G: GroupTable) -> int:
    """Maximum conjugacy class length."""
    return max(conjugacy_classes(G).sizes)


def normal_closure(G: GroupTable, elements: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup containing the elements."""
    arange = np.arange(G.order)
    conjugates = [np.unique(G.mul[G.mul[G.inv, x], arange]) for x in elements]
    if not conjugates:
        return trivial_subgroup(G)
    return generate(G, np.concatenate(conjugates))


def quotient(G: GroupTable, N: Subgroup) -> Tuple[GroupTable, np.ndarray]:
    """
    Quotient by a normal subgroup.

    Cosets are ordered by their minimal representative, so the coset N itself
    is index 0.

    Returns:
        The quotient table and the projection array (element index -> coset index).

    Raises:
        ValueError: If N is not normal.
    """
    if not N.is_normal():
        raise ValueError(f"subgroup of order {N.order} is not normal in {G.name}")
    coset_min = G.mul[:, N.members].min(axis=1)
    reps = np.unique(coset_min)
    projection = np.searchsorted(reps, coset_min).astype(np.int32)
    table = projection[G.mul[np.ix_(reps, reps)]]
    Q = GroupTable(table, name=f"{G.name}/N{N.order}")
    projection.flags.writeable = False
    return Q, projection


def subgroup_table(S: Subgroup) -> GroupTable:
    """
    A subgroup as a standalone group.

    Local index i stands for the parent element S.members[i]; the identity
    stays at index 0.
    """
    G = S.parent
    position = np.full(G.order, -1, dtype=np.int32)
    position[S.members] = np.arange(S.order, dtype=np.int32)
    table = position[G.mul[np.ix_(S.members, S.members)]]
    labels = [G.label(int(g)) for g in S.members] if G.labels is not None else None
    return GroupTable(table, labels=labels, name=f"{G.name}[{S.order}]")

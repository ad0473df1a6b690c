"""
Concrete finite groups as Cayley tables.
"""
import logging
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Any

import numpy as np

from src import config
from src.errors import GroupAxiomError, ResourceLimitError

logger = logging.getLogger(__name__)


class GroupTable:
    """
    A finite group given by its full multiplication table on element indices.

    Index 0 is always the identity. Instances are immutable: the numpy arrays
    are marked read-only and every derived quantity is cached on first use.
    """

    def __init__(self, mul: np.ndarray, labels: Optional[Sequence[str]] = None,
                 name: str = "G", cap: int = config.MAX_GROUP_ORDER):
        """
        Initialize a group table.

        Args:
            mul: Square array with mul[g, h] the index of g*h.
            labels: Optional human-readable element names.
            name: Short description used in logs and reports.
            cap: Largest order accepted.

        Raises:
            ResourceLimitError: If the table is larger than cap.
            GroupAxiomError: If index 0 is not a two-sided identity or some
                element has no inverse.
        """
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise GroupAxiomError(f"multiplication table must be a nonempty square array, got shape {mul.shape}")
        order = mul.shape[0]
        if order > cap:
            raise ResourceLimitError(f"group order {order} exceeds the cap {cap}", limit=cap, requested=order)
        if mul.min() < 0 or mul.max() >= order:
            raise GroupAxiomError("multiplication table contains out-of-range indices")

        arange = np.arange(order, dtype=np.int32)
        if not (np.array_equal(mul[0], arange) and np.array_equal(mul[:, 0], arange)):
            raise GroupAxiomError("index 0 is not a two-sided identity")

        is_identity = mul == 0
        if not np.all(is_identity.any(axis=1)):
            raise GroupAxiomError("some element has no right inverse")
        inv = np.argmax(is_identity, axis=1).astype(np.int32)
        if not np.all(mul[inv, arange] == 0):
            raise GroupAxiomError("right inverses are not left inverses")

        mul.flags.writeable = False
        inv.flags.writeable = False
        self.mul = mul
        self.inv = inv
        self.order = order
        self.name = name
        if labels is not None and len(labels) != order:
            raise ValueError(f"expected {order} labels, got {len(labels)}")
        self.labels: Optional[List[str]] = list(labels) if labels is not None else None

    identity = 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable(name={self.name!r}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupTable):
            return NotImplemented
        return np.array_equal(self.mul, other.mul)

    def __hash__(self) -> int:
        return hash((self.order, self.mul.tobytes()))

    @cached_property
    def rows(self) -> List[List[int]]:
        """The table as nested Python lists; the search code indexes this in tight loops."""
        return self.mul.tolist()

    @cached_property
    def inverses(self) -> List[int]:
        return self.inv.tolist()

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Order of every element, computed by stepping all powers at once."""
        orders = np.zeros(self.order, dtype=np.int64)
        arange = np.arange(self.order)
        power = arange.copy()
        k = 1
        while True:
            newly = (power == 0) & (orders == 0)
            orders[newly] = k
            if np.all(orders > 0):
                break
            power = self.mul[power, arange]
            k += 1
        orders.flags.writeable = False
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def product(self, g: int, h: int) -> int:
        return int(self.mul[g, h])

    def multiply(self, elements: Iterable[int]) -> int:
        """Product of a sequence of elements, left to right."""
        result = 0
        rows = self.rows
        for g in elements:
            result = rows[result][g]
        return result

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = int(self.inv[g]), -k
        result = 0
        base = g
        rows = self.rows
        while k:
            if k & 1:
                result = rows[result][base]
            base = rows[base][base]
            k >>= 1
        return result

    def conjugate(self, g: int, h: int) -> int:
        """g^h = h^-1 g h."""
        rows = self.rows
        return rows[rows[self.inverses[h]][g]][h]

    def commutator(self, g: int, h: int) -> int:
        """[g, h] = g^-1 h^-1 g h."""
        rows = self.rows
        inv = self.inverses
        return rows[rows[rows[inv[g]][inv[h]]][g]][h]

    def label(self, g: int) -> str:
        if self.labels is not None:
            return self.labels[g]
        return str(g)

    def check_axioms(self, generators: Optional[Sequence[int]] = None,
                     exhaustive_limit: int = config.EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
                     samples: int = config.RANDOM_TRIPLE_SAMPLES,
                     seed: int = config.RANDOM_SEED) -> None:
        """
        Verify the Latin-square property and associativity.

        Associativity is checked on every triple when the order is at most
        exhaustive_limit. Above it, every triple (a, b, c) with c in the given
        generators is checked, plus randomly sampled triples. Checking all
        (a, b, c) with c running over a generating set is already complete.

        Args:
            generators: Elements known to generate the group (used above the limit).
            exhaustive_limit: Largest order checked on all triples.
            samples: Number of random triples checked above the limit.
            seed: Seed of the sampling generator.

        Raises:
            GroupAxiomError: On the first violated axiom.
        """
        arange = np.arange(self.order, dtype=np.int32)
        if not np.all(np.sort(self.mul, axis=1) == arange):
            raise GroupAxiomError(f"{self.name}: some row is not a permutation")
        if not np.all(np.sort(self.mul, axis=0) == arange[:, None]):
            raise GroupAxiomError(f"{self.name}: some column is not a permutation")

        if self.order <= exhaustive_limit:
            columns: Iterable[int] = range(self.order)
        else:
            columns = list(generators) if generators is not None else []
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, self.order, size=(3, samples))
            if not np.array_equal(self.mul[self.mul[a, b], c], self.mul[a, self.mul[b, c]]):
                raise GroupAxiomError(f"{self.name}: associativity fails on a sampled triple")
            logger.debug(f"{self.name}: {samples} sampled triples associative")

        for c in columns:
            bc = self.mul[:, c]
            if not np.array_equal(bc[self.mul], self.mul[:, bc]):
                raise GroupAxiomError(f"{self.name}: associativity fails with right factor {c}")
        logger.debug(f"{self.name}: axioms verified (order {self.order})")

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready representation: order, row-major table and labels."""
        return {
            "name": self.name,
            "order": self.order,
            "mul": self.mul.ravel().tolist(),
            "labels": self.labels,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], cap: int = config.MAX_GROUP_ORDER) -> "GroupTable":
        order = int(data["order"])
        mul = np.asarray(data["mul"], dtype=np.int32)
        if mul.size != order * order:
            raise GroupAxiomError(f"expected {order * order} table entries, got {mul.size}")
        return cls(mul.reshape(order, order), labels=data.get("labels"),
                   name=data.get("name", "G"), cap=cap)


def table_from_right_action(order: int, right_action: Sequence[np.ndarray],
                            spanning_tree: Sequence[Tuple[int, int, int]]) -> np.ndarray:
    """
    Build a Cayley table from the right-regular action of generators.

    Args:
        order: Number of elements.
        right_action: For each generator s, an array with right_action[s][x] = x*s.
        spanning_tree: Triples (element, parent, generator) with
            element = parent * generator, listed so that every parent appears
            before its children; the identity (index 0) is omitted.

    Returns:
        The multiplication table; column h is the right action of h, obtained
        by composing generator actions along the tree.
    """
    mul = np.empty((order, order), dtype=np.int32)
    mul[:, 0] = np.arange(order, dtype=np.int32)
    for element, parent, generator in spanning_tree:
        mul[:, element] = right_action[generator][mul[:, parent]]
    return mul

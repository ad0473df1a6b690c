"""
Primary decomposition of finite abelian groups.
"""
import logging
from itertools import product as cartesian
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy.ntheory import factorint, isprime

from src.errors import NotAbelianError
from src.group_core.table import GroupTable
from src.group_core.subgroups import Subgroup, commutator_subgroup, quotient

logger = logging.getLogger(__name__)


class AbelianType:
    """
    Isomorphism type Z/p^e_1 x ... x Z/p^e_n of an abelian p-group.

    Exponents are kept sorted in nondecreasing order.
    """

    def __init__(self, prime: int, exponents: Sequence[int]):
        if not isprime(prime):
            raise ValueError(f"{prime} is not a prime")
        if any(e < 1 for e in exponents):
            raise ValueError(f"exponents must be positive, got {list(exponents)}")
        self.prime = prime
        self.exponents = sorted(int(e) for e in exponents)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def order(self) -> int:
        return self.prime ** sum(self.exponents)

    @property
    def cyclic_orders(self) -> List[int]:
        return [self.prime ** e for e in self.exponents]

    def is_trivial(self) -> bool:
        return not self.exponents

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianType):
            return NotImplemented
        return self.prime == other.prime and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash((self.prime, tuple(self.exponents)))

    def __repr__(self) -> str:
        return f"AbelianType(prime={self.prime}, exponents={self.exponents})"

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return " x ".join(f"Z/{q}" for q in self.cyclic_orders)

    def to_dict(self) -> Dict[str, Any]:
        return {"prime": self.prime, "exponents": list(self.exponents)}


def primary_part(G: GroupTable, p: int) -> Subgroup:
    """Elements of p-power order (a subgroup when G is abelian)."""
    reduced = G.element_orders.copy()
    while np.any(reduced % p == 0):
        reduced = np.where(reduced % p == 0, reduced // p, reduced)
    return Subgroup.from_mask(G, reduced == 1)


def abelian_invariants(G: GroupTable) -> List[AbelianType]:
    """
    Primary invariants of an abelian group, one AbelianType per prime divisor.

    The number of cyclic factors of order at least p^k equals
    log_p of |Omega_k| / |Omega_(k-1)|, where Omega_k collects the elements
    of order dividing p^k.

    Raises:
        NotAbelianError: If G is not abelian.
    """
    if not G.is_abelian:
        raise NotAbelianError(f"{G.name} is not abelian")
    orders = G.element_orders
    result = []
    for p, top in sorted(factorint(G.order).items()):
        counts = [int(np.count_nonzero(np.isin(orders, [p ** j for j in range(k + 1)])))
                  for k in range(top + 1)]
        at_least = []
        for k in range(1, top + 1):
            ratio = counts[k] // counts[k - 1]
            rank = 0
            while ratio > 1:
                ratio //= p
                rank += 1
            at_least.append(rank)
        exponents: List[int] = []
        for k in range(1, top + 1):
            exactly = at_least[k - 1] - (at_least[k] if k < top else 0)
            exponents.extend([k] * exactly)
        result.append(AbelianType(p, exponents))
    return result


def abelianization_invariants(G: GroupTable) -> List[AbelianType]:
    """Primary invariants of G/G'."""
    if G.is_abelian:
        return abelian_invariants(G)
    Q, _ = quotient(G, commutator_subgroup(G))
    return abelian_invariants(Q)


def abelian_rank(G: GroupTable) -> int:
    """d(H) for abelian H: the largest number of cyclic factors at one prime."""
    return max((t.rank for t in abelian_invariants(G)), default=0)


def independent_tuples(H: GroupTable, target_orders: Sequence[int],
                       candidates: Optional[Sequence[int]] = None) -> Iterator[Tuple[int, ...]]:
    """
    Enumerate tuples (h_1, ..., h_n) of an abelian group with ord(h_i) = target_orders[i]
    whose generated subgroups intersect trivially step by step.

    Tuples come in lexicographic order of element indices.

    Args:
        H: An abelian group.
        target_orders: Required element orders.
        candidates: Elements to draw from (defaults to all of H).
    """
    orders = H.element_orders
    pool = np.arange(H.order) if candidates is None else np.asarray(candidates)
    by_order = {q: [int(x) for x in pool if orders[x] == q] for q in set(target_orders)}
    mul = H.mul

    def cyclic(x: int) -> np.ndarray:
        powers = [0]
        y = x
        while y != 0:
            powers.append(y)
            y = int(mul[y, x])
        return np.asarray(powers)

    def extend(prefix: Tuple[int, ...], span: np.ndarray, mask: np.ndarray) -> Iterator[Tuple[int, ...]]:
        depth = len(prefix)
        if depth == len(target_orders):
            yield prefix
            return
        for x in by_order[target_orders[depth]]:
            powers = cyclic(x)
            if np.any(mask[powers[1:]]):
                continue
            new_span = np.unique(mul[np.ix_(span, powers)])
            new_mask = np.zeros(H.order, dtype=bool)
            new_mask[new_span] = True
            yield from extend(prefix + (x,), new_span, new_mask)

    start_mask = np.zeros(H.order, dtype=bool)
    start_mask[0] = True
    yield from extend((), np.zeros(1, dtype=np.int64), start_mask)


def abelian_basis(H: GroupTable) -> List[Tuple[int, int]]:
    """
    Independent generators of an abelian group, one per primary cyclic factor.

    Returns:
        Pairs (element, order) in (prime, exponent) order; the product of the
        orders is |H|.

    Raises:
        NotAbelianError: If H is not abelian.
    """
    basis: List[Tuple[int, int]] = []
    for t in abelian_invariants(H):
        part = primary_part(H, t.prime)
        found = next(independent_tuples(H, t.cyclic_orders, part.members))
        basis.extend(zip(found, t.cyclic_orders))
    logger.debug(f"{H.name}: abelian basis {basis}")
    return basis


def basis_coordinates(H: GroupTable, basis: Sequence[Tuple[int, int]]) -> np.ndarray:
    """
    Coordinates of every element with respect to an abelian basis.

    Returns:
        Array of shape (|H|, len(basis)) with row g holding the exponents a_i
        such that g = prod b_i^a_i.
    """
    coords = np.full((H.order, len(basis)), -1, dtype=np.int64)
    ranges = [range(order) for _, order in basis]
    for exps in cartesian(*ranges):
        g = 0
        for (b, _), a in zip(basis, exps):
            g = int(H.mul[g, H.power(b, a)])
        coords[g] = exps
    if np.any(coords < 0):
        raise ValueError(f"{H.name}: the given elements are not a basis")
    return coords

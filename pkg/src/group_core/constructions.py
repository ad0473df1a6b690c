"""
Standard constructions: cyclic, abelian, products, dihedral and permutation groups.
"""
import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.combinatorics import Permutation
from sympy.ntheory import isprime, primitive_root

from src import config
from src.errors import NotAbelianError, ResourceLimitError
from src.group_core.abelian import AbelianType
from src.group_core.table import GroupTable, table_from_right_action

logger = logging.getLogger(__name__)

PermutationLike = Union[Sequence[int], Permutation]

# Irreducible polynomials (as bit masks) for the characteristic-two fields used by PSL(2, q)
FIELD_MODULI = {4: 0b111, 8: 0b1011}


def _check_cap(order: int, cap: int, what: str) -> None:
    if order > cap:
        raise ResourceLimitError(f"{what} would have order {order}, above the cap {cap}",
                                 limit=cap, requested=order)


def build_cyclic(m: int, cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """Z/mZ with element i standing for the residue i."""
    if m < 1:
        raise ValueError(f"cyclic group order must be positive, got {m}")
    _check_cap(m, cap, f"Z/{m}")
    r = np.arange(m)
    return GroupTable(np.add.outer(r, r) % m, labels=[str(i) for i in range(m)], name=f"Z/{m}", cap=cap)


def direct_product(G: GroupTable, H: GroupTable, cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """
    G x H with the pair (g, h) at index g*|H| + h.

    Raises:
        ResourceLimitError: If |G|*|H| exceeds cap.
    """
    order = G.order * H.order
    _check_cap(order, cap, f"{G.name} x {H.name}")
    mul = (G.mul.astype(np.int64)[:, None, :, None] * H.order
           + H.mul.astype(np.int64)[None, :, None, :]).reshape(order, order)
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.order) for h in range(H.order)]
    return GroupTable(mul, labels=labels, name=f"{G.name} x {H.name}", cap=cap)


def build_abelian(types: Sequence[AbelianType], cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """
    Direct product of primary cyclic groups in (prime, exponent) order.

    The table is named Z/q_1 x ... x Z/q_k; an empty list gives the trivial group.
    """
    order = 1
    for t in types:
        order *= t.order
    _check_cap(order, cap, "abelian group")
    cyclic_orders = [q for t in sorted(types, key=lambda t: t.prime) for q in t.cyclic_orders]
    if not cyclic_orders:
        return build_cyclic(1)
    group = build_cyclic(cyclic_orders[0])
    for q in cyclic_orders[1:]:
        group = direct_product(group, build_cyclic(q), cap=cap)
    return group


def generalized_dihedral(A: GroupTable, cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """
    Dih(A) = A x| Z/2 with the involution inverting A.

    Element (a, e) sits at index e*|A| + a and (a, e)(b, f) = (a * b^((-1)^e), e + f).

    Raises:
        NotAbelianError: If A is not abelian.
    """
    if not A.is_abelian:
        raise NotAbelianError(f"{A.name} is not abelian")
    n = A.order
    _check_cap(2 * n, cap, f"Dih({A.name})")
    mul = np.empty((2 * n, 2 * n), dtype=np.int64)
    for e in (0, 1):
        right = A.mul if e == 0 else A.mul[:, A.inv]
        for f in (0, 1):
            mul[e * n:(e + 1) * n, f * n:(f + 1) * n] = ((e + f) % 2) * n + right
    labels = [f"{A.label(a)}" if e == 0 else f"{A.label(a)}t" for e in (0, 1) for a in range(n)]
    return GroupTable(mul, labels=labels, name=f"Dih({A.name})", cap=cap)


def _as_array_form(perm: PermutationLike, degree: int) -> Tuple[int, ...]:
    if isinstance(perm, Permutation):
        images = list(perm.array_form)
        images += list(range(len(images), degree))
    else:
        images = [int(x) for x in perm]
    if sorted(images) != list(range(degree)):
        raise ValueError(f"{images} is not a permutation of 0..{degree - 1}")
    return tuple(images)


def _cycle_label(images: Tuple[int, ...]) -> str:
    cycles = Permutation(list(images)).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in cycle) + ")" for cycle in cycles)


def build_permutation_group(degree: int, generators: Sequence[PermutationLike],
                            cap: int = config.MAX_GROUP_ORDER, name: Optional[str] = None) -> GroupTable:
    """
    Cayley table of the subgroup of Sym(degree) generated by the given permutations.

    Permutations are image lists (perm[i] is the image of point i) or sympy
    Permutations; products apply the left factor first. Elements are numbered
    breadth-first from the identity, trying generators in the given order.

    Raises:
        ResourceLimitError: If the closure exceeds cap elements.
    """
    gens = [_as_array_form(g, degree) for g in generators]
    gen_arrays = [np.asarray(g, dtype=np.int64) for g in gens]
    identity = tuple(range(degree))
    index: Dict[Tuple[int, ...], int] = {identity: 0}
    elements: List[Tuple[int, ...]] = [identity]
    right_action = [[] for _ in gens]
    spanning_tree: List[Tuple[int, int, int]] = []
    queue = deque([0])
    while queue:
        current = queue.popleft()
        images = np.asarray(elements[current], dtype=np.int64)
        for s, gen in enumerate(gen_arrays):
            product = tuple(gen[images].tolist())
            target = index.get(product)
            if target is None:
                target = len(elements)
                if target >= cap:
                    raise ResourceLimitError(f"permutation group closure exceeds the cap {cap}",
                                             limit=cap, requested=target + 1)
                index[product] = target
                elements.append(product)
                spanning_tree.append((target, current, s))
                queue.append(target)
            right_action[s].append(target)
    order = len(elements)
    actions = [np.asarray(column, dtype=np.int32) for column in right_action]
    mul = table_from_right_action(order, actions, spanning_tree)
    label = name or f"<{len(gens)} perms on {degree} points>"
    logger.info(f"{label}: permutation group of order {order}")
    return GroupTable(mul, labels=[_cycle_label(e) for e in elements], name=label, cap=cap)


def symmetric_group(n: int, cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """Sym(n) on 0..n-1, generated by (0 1) and (0 1 ... n-1)."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    gens = []
    if n >= 2:
        gens = [_transposition(n, 0, 1), _cycle(n, list(range(n)))]
    return build_permutation_group(n, gens, cap=cap, name=f"Sym({n})")


def alternating_group(n: int, cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """Alt(n), generated by (0 1 2) and an even long cycle."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    gens = []
    if n >= 3:
        long_cycle = list(range(n)) if n % 2 == 1 else list(range(1, n))
        gens = [_cycle(n, [0, 1, 2]), _cycle(n, long_cycle)]
    return build_permutation_group(n, gens, cap=cap, name=f"Alt({n})")


def _transposition(n: int, a: int, b: int) -> List[int]:
    images = list(range(n))
    images[a], images[b] = b, a
    return images


def _cycle(n: int, points: Sequence[int]) -> List[int]:
    images = list(range(n))
    for i, x in enumerate(points):
        images[x] = points[(i + 1) % len(points)]
    return images


class _Field:
    """Arithmetic in F_q for q prime or q in FIELD_MODULI, elements encoded as 0..q-1."""

    def __init__(self, q: int):
        self.q = q
        self.prime = isprime(q)
        if not self.prime and q not in FIELD_MODULI:
            raise ValueError(f"PSL(2, {q}) is only built for prime q or q in {sorted(FIELD_MODULI)}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q if self.prime else a ^ b

    def neg(self, a: int) -> int:
        return (-a) % self.q if self.prime else a

    def mul(self, a: int, b: int) -> int:
        if self.prime:
            return a * b % self.q
        modulus = FIELD_MODULI[self.q]
        degree = modulus.bit_length() - 1
        result = 0
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a >> degree:
                a ^= modulus
        return result

    def inverse(self, a: int) -> int:
        return next(b for b in range(1, self.q) if self.mul(a, b) == 1)

    def primitive_element(self) -> int:
        if self.prime:
            return primitive_root(self.q) if self.q > 2 else 1
        return next(w for w in range(2, self.q)
                    if len({self._power(w, k) for k in range(1, self.q)}) == self.q - 1)

    def _power(self, a: int, k: int) -> int:
        result = 1
        for _ in range(k):
            result = self.mul(result, a)
        return result


def projective_special_linear(q: int, cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """
    PSL(2, q) acting on the q + 1 points of the projective line.

    Points 0..q-1 are field elements and q is infinity. Generated by
    z -> z + 1, z -> -1/z and z -> w^2 z for a primitive element w.
    """
    field = _Field(q)
    infinity = q
    w = field.primitive_element()
    square = field.mul(w, w)

    translate = [field.add(z, 1) for z in range(q)] + [infinity]
    invert = [infinity if z == 0 else field.neg(field.inverse(z)) for z in range(q)] + [0]
    scale = [field.mul(square, z) for z in range(q)] + [infinity]
    return build_permutation_group(q + 1, [translate, invert, scale], cap=cap, name=f"PSL(2,{q})")

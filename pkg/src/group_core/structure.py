"""
Structural invariants: orders, series, Sylow subgroups, normal structure.
"""
import logging
from math import lcm
from typing import Dict, List

import numpy as np
from sympy.ntheory import factorint

from src import config
from src.errors import ResourceLimitError
from src.group_core.table import GroupTable
from src.group_core.subgroups import (
    Subgroup,
    center,
    commutator_subgroup,
    commutator_subgroup_of,
    conjugacy_classes,
    generate,
    normal_closure,
    normalizer,
    set_product,
    trivial_subgroup,
    whole_group,
)

logger = logging.getLogger(__name__)


def element_order(G: GroupTable, g: int) -> int:
    return int(G.element_orders[g])


def exponent(G: GroupTable) -> int:
    """Least common multiple of the element orders."""
    return lcm(*(int(k) for k in np.unique(G.element_orders)))


def euler_phi(m: int, limit: int = config.EULER_PHI_LIMIT) -> int:
    """
    Euler's totient by prime factorisation.

    Raises:
        ValueError: If m < 1 or m exceeds limit.
    """
    if m < 1:
        raise ValueError(f"euler_phi needs a positive integer, got {m}")
    if m > limit:
        raise ValueError(f"euler_phi input {m} exceeds {limit}")
    result = m
    for p in factorint(m):
        result = result // p * (p - 1)
    return result


def prime_divisors(n: int) -> List[int]:
    return sorted(factorint(n))


def derived_series(G: GroupTable) -> List[Subgroup]:
    """G, G', G'', ... until the series stabilises."""
    return derived_series_of(whole_group(G))


def lower_central_series(G: GroupTable) -> List[Subgroup]:
    """G = g_1 > g_2 = [G, G] > g_3 = [G, g_2] > ... until it stabilises."""
    everything = whole_group(G)
    series = [everything]
    while True:
        nxt = commutator_subgroup_of(G, everything, series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def is_solvable(G: GroupTable) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_nilpotent(G: GroupTable) -> bool:
    return lower_central_series(G)[-1].is_trivial()


def nilpotency_class(G: GroupTable) -> int:
    """
    Length of the lower central series (0 for the trivial group).

    Raises:
        ValueError: If G is not nilpotent.
    """
    series = lower_central_series(G)
    if not series[-1].is_trivial():
        raise ValueError(f"{G.name} is not nilpotent")
    return len(series) - 1


def sylow(G: GroupTable, p: int) -> Subgroup:
    """
    A Sylow p-subgroup.

    Starts from the trivial group and repeatedly adjoins the p-part of an
    element of N_G(P) outside P; a p-subgroup that is not Sylow always has
    such an element (its normaliser contains a larger p-subgroup).
    """
    target = p ** factorint(G.order).get(p, 0)
    orders = G.element_orders
    P = trivial_subgroup(G)
    while P.order < target:
        N = normalizer(G, P)
        outside = N.members[~P.mask[N.members]]
        for x in outside.tolist():
            k = int(orders[x])
            while k % p == 0:
                k //= p
            y = G.power(x, k)
            if y not in P:
                P = generate(G, list(P.members) + [y])
                break
        else:
            raise RuntimeError(f"no p-element extends the {p}-subgroup of order {P.order}")
    return P


def is_p_group(G: GroupTable) -> bool:
    return G.order > 1 and len(factorint(G.order)) == 1


def power_subgroup(G: GroupTable, p: int) -> Subgroup:
    """G' G^p: the smallest normal subgroup with elementary abelian p-quotient."""
    arange = np.arange(G.order)
    powers = arange.copy()
    for _ in range(p - 1):
        powers = G.mul[powers, arange]
    derived = commutator_subgroup(G)
    return generate(G, np.concatenate([derived.members, np.unique(powers)]))


def is_simple(G: GroupTable) -> bool:
    """Nontrivial with no proper nontrivial normal subgroup (every class normally generates G)."""
    if G.order == 1:
        return False
    for cls in conjugacy_classes(G).classes[1:]:
        if generate(G, cls).order != G.order:
            return False
    return True


def normal_subgroups(G: GroupTable, limit: int = config.NORMAL_SUBGROUP_ORDER_LIMIT) -> List[Subgroup]:
    """
    All normal subgroups, sorted by (order, members).

    Every normal subgroup is a product of normal closures of conjugacy
    classes, so the list is the closure of those under products.

    Raises:
        ResourceLimitError: If |G| exceeds limit.
    """
    if G.order > limit:
        raise ResourceLimitError(f"normal subgroup enumeration is limited to order {limit}",
                                 limit=limit, requested=G.order)
    basic: Dict[bytes, Subgroup] = {}
    for cls in conjugacy_classes(G).classes:
        closure = generate(G, cls)
        basic.setdefault(closure.members.tobytes(), closure)

    found: Dict[bytes, Subgroup] = {}
    queue = [trivial_subgroup(G)]
    found[queue[0].members.tobytes()] = queue[0]
    while queue:
        current = queue.pop()
        for closure in basic.values():
            if closure.is_subgroup_of(current):
                continue
            joined = set_product(G, current, closure)
            key = joined.members.tobytes()
            if key not in found:
                found[key] = joined
                queue.append(joined)
    result = sorted(found.values(), key=lambda S: (S.order, S.members.tolist()))
    logger.debug(f"{G.name}: {len(result)} normal subgroups")
    return result


def minimal_normal_subgroups(G: GroupTable, limit: int = config.NORMAL_SUBGROUP_ORDER_LIMIT) -> List[Subgroup]:
    nontrivial = [N for N in normal_subgroups(G, limit) if not N.is_trivial()]
    return [N for N in nontrivial
            if not any(M.order < N.order and M.is_subgroup_of(N) for M in nontrivial)]


def solvable_radical(G: GroupTable, limit: int = config.NORMAL_SUBGROUP_ORDER_LIMIT) -> Subgroup:
    """Largest solvable normal subgroup."""
    if is_solvable(G):
        return whole_group(G)
    if is_simple(G):
        return trivial_subgroup(G)
    radical = trivial_subgroup(G)
    for N in normal_subgroups(G, limit):
        if N.order > radical.order and derived_series_of(N)[-1].is_trivial():
            radical = N
    return radical


def derived_series_of(S: Subgroup) -> List[Subgroup]:
    G = S.parent
    series = [S]
    while True:
        nxt = commutator_subgroup_of(G, series[-1], series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def socle(G: GroupTable, limit: int = config.NORMAL_SUBGROUP_ORDER_LIMIT) -> Subgroup:
    """Product of all minimal normal subgroups (trivial for the trivial group)."""
    if is_simple(G):
        return whole_group(G)
    result = trivial_subgroup(G)
    for N in minimal_normal_subgroups(G, limit):
        result = set_product(G, result, N)
    return result


def is_semisimple(G: GroupTable, limit: int = config.NORMAL_SUBGROUP_ORDER_LIMIT) -> bool:
    return solvable_radical(G, limit).is_trivial()


def is_extraspecial(G: GroupTable) -> bool:
    """p-group whose centre, derived subgroup and Frattini subgroup coincide and have order p."""
    if not is_p_group(G):
        return False
    p = prime_divisors(G.order)[0]
    zeta = center(G)
    if zeta.order != p:
        return False
    return commutator_subgroup(G) == zeta and power_subgroup(G, p) == zeta

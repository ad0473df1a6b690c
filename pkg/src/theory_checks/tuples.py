"""
Standard tuples and their power-automorphism-commutator data.
"""
import logging
from itertools import product as cartesian
from math import prod
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from src import config
from src.errors import NotAbelianError, ResourceLimitError, VerificationError
from src.group_core.table import GroupTable
from src.group_core.subgroups import Subgroup, commutator_subgroup, quotient
from src.group_core.abelian import abelian_invariants, independent_tuples, primary_part
from src.theory_checks.formulas import hillar_rhea_aut_order

logger = logging.getLogger(__name__)


def _check_limit(count: int, limit: int, what: str) -> None:
    if count > limit:
        raise ResourceLimitError(f"{count} {what} exceed the enumeration limit {limit}",
                                 limit=limit, requested=count)


def standard_generating_tuples(H: GroupTable, limit: int = config.STANDARD_TUPLE_LIMIT) -> List[Tuple[int, ...]]:
    """
    All standard generating tuples of an abelian group H.

    With n = d(H), a tuple (h_1, ..., h_n) is standard when for every prime p
    its projection to the Sylow p-subgroup, of type e_1 <= ... <= e_m, has
    entries of order p^e_1, ..., p^e_m followed by n - m identities and
    generates that subgroup.

    Raises:
        NotAbelianError: If H is not abelian.
        ResourceLimitError: If there are more than limit tuples.
    """
    if not H.is_abelian:
        raise NotAbelianError(f"{H.name} is not abelian")
    invariants = [t for t in abelian_invariants(H) if not t.is_trivial()]
    n = max((t.rank for t in invariants), default=0)
    per_prime: List[List[Tuple[int, ...]]] = []
    for t in invariants:
        targets = t.cyclic_orders + [1] * (n - t.rank)
        part = primary_part(H, t.prime)
        per_prime.append(list(independent_tuples(H, targets, part.members)))
    _check_limit(prod(len(options) for options in per_prime), limit, "standard generating tuples")

    result = []
    for combination in cartesian(*per_prime):
        entries = []
        for i in range(n):
            h = 0
            for component in combination:
                h = int(H.mul[h, component[i]])
            entries.append(h)
        result.append(tuple(entries))
    result.sort()
    logger.debug(f"{H.name}: {len(result)} standard generating tuples of length {n}")
    return result


class StandardTuple:
    """A tuple in G whose image in G/G' is a standard generating tuple."""

    def __init__(self, entries: Sequence[int]):
        self.entries: Tuple[int, ...] = tuple(int(g) for g in entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StandardTuple):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"StandardTuple({list(self.entries)})"

    def to_dict(self) -> Dict[str, Any]:
        return {"entries": list(self.entries)}


def standard_tuple_count(G: GroupTable) -> int:
    """|Aut(G/G')| * |G'|^d(G/G'), with |Aut(G/G')| from the abelian-group formula."""
    derived = commutator_subgroup(G)
    Q, _ = quotient(G, derived)
    invariants = abelian_invariants(Q)
    n = max((t.rank for t in invariants), default=0)
    return prod(hillar_rhea_aut_order(t) for t in invariants) * derived.order ** n


def standard_tuples(G: GroupTable, limit: int = config.STANDARD_TUPLE_LIMIT) -> List[StandardTuple]:
    """
    All standard tuples in G, ordered lexicographically by entries.

    Every standard generating tuple of G/G' is lifted through the cosets of
    G'; the number found is compared with |Aut(G/G')| * |G'|^d(G/G').

    Raises:
        ResourceLimitError: If there are more than limit tuples.
        VerificationError: If the count disagrees with the formula.
    """
    derived = commutator_subgroup(G)
    Q, projection = quotient(G, derived)
    lifts = standard_generating_tuples(Q, limit)
    n = len(lifts[0]) if lifts else 0
    _check_limit(len(lifts) * derived.order ** n, limit, "standard tuples")
    fibres = [np.flatnonzero(projection == q).tolist() for q in range(Q.order)]
    result = []
    for lift in lifts:
        for entries in cartesian(*[fibres[q] for q in lift]):
            result.append(StandardTuple(entries))
    result.sort(key=lambda t: t.entries)
    expected = standard_tuple_count(G)
    if len(result) != expected:
        raise VerificationError(f"{G.name}: {len(result)} standard tuples, formula gives {expected}")
    logger.info(f"{G.name}: {len(result)} standard tuples")
    return result


class PACTuple:
    """
    Powers, conjugation actions on G' and commutators of a standard tuple.

    Attributes:
        powers: pi_i = g_i^o_i, where o_i is the order of g_i modulo G'.
        auts: For each g_i, the images of the members of G' (in member order)
            under x -> g_i^-1 x g_i.
        comms: gamma_(i,j) = [g_i, g_j] for i < j, in row order.
    """

    def __init__(self, powers: Sequence[int], auts: Sequence[Tuple[int, ...]], comms: Sequence[int]):
        self.powers = tuple(int(x) for x in powers)
        self.auts = tuple(tuple(int(x) for x in a) for a in auts)
        self.comms = tuple(int(x) for x in comms)

    def key(self) -> Hashable:
        return (self.powers, self.auts, self.comms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PACTuple):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"PACTuple(powers={list(self.powers)}, comms={list(self.comms)})"

    def to_dict(self) -> Dict[str, Any]:
        return {"powers": list(self.powers), "auts": [list(a) for a in self.auts], "comms": list(self.comms)}


class _PacContext:
    """Per-group data shared by every pac_tuple call."""

    def __init__(self, G: GroupTable):
        self.group = G
        self.derived: Subgroup = commutator_subgroup(G)
        Q, projection = quotient(G, self.derived)
        self.quotient_orders = Q.element_orders[projection]
        self._conjugations: Dict[int, Tuple[int, ...]] = {}

    def conjugation_on_derived(self, g: int) -> Tuple[int, ...]:
        if g not in self._conjugations:
            G = self.group
            members = self.derived.members
            self._conjugations[g] = tuple(G.mul[G.mul[G.inv[g], members], g].tolist())
        return self._conjugations[g]


def pac_tuple(G: GroupTable, t: StandardTuple, context: Optional[_PacContext] = None) -> PACTuple:
    """The power-automorphism-commutator tuple associated with a standard tuple."""
    context = context or _PacContext(G)
    entries = t.entries
    powers = [G.power(g, int(context.quotient_orders[g])) for g in entries]
    auts = [context.conjugation_on_derived(g) for g in entries]
    comms = [G.commutator(entries[i], entries[j])
             for i in range(len(entries)) for j in range(i + 1, len(entries))]
    return PACTuple(powers, auts, comms)


def equivalence_classes(G: GroupTable, tuples: Optional[List[StandardTuple]] = None,
                        limit: int = config.STANDARD_TUPLE_LIMIT) -> List[List[int]]:
    """
    Standard tuples grouped by equal PACTuple.

    Returns:
        Lists of positions into tuples (by default standard_tuples(G)),
        ordered by first position.
    """
    tuples = tuples if tuples is not None else standard_tuples(G, limit)
    context = _PacContext(G)
    classes: Dict[Hashable, List[int]] = {}
    for position, t in enumerate(tuples):
        classes.setdefault(pac_tuple(G, t, context).key(), []).append(position)
    result = sorted(classes.values(), key=lambda c: c[0])
    logger.debug(f"{G.name}: {len(tuples)} standard tuples in {len(result)} equivalence classes")
    return result

"""
Collection to normal form and instantiation of power-commutator presentations.
"""
import logging
from itertools import product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src import config
from src.errors import CollectionBudgetError, GroupAxiomError, InconsistentPresentationError, ResourceLimitError
from src.group_core.table import GroupTable, table_from_right_action
from src.pc_presenter.models.presentation import CollectedWord, PcPresentation

logger = logging.getLogger(__name__)


class Collector:
    """
    Collection from the left for one presentation.

    The collected prefix is an exponent vector; pending generator letters
    sit on a stack. Multiplying the prefix by x_k either bumps t_k (when no
    later generator occurs in the prefix) or moves the last letter x_m of
    the prefix past x_k using x_m x_k = x_k x_m [x_m, x_k].
    """

    def __init__(self, presentation: PcPresentation, budget: int = config.COLLECTION_STEP_BUDGET):
        self.presentation = presentation
        self.budget = budget
        n = presentation.n
        self._power_letters = [w.letters() for w in presentation.power_rhs]
        # letters of [x_m, x_k] for k < m, and of x_k^-1
        self._swap_letters: Dict[Tuple[int, int], List[int]] = {}
        self._inverse_letters: List[List[int]] = [[] for _ in range(n)]
        for k in range(n - 1, -1, -1):
            for m in range(k + 1, n):
                inverse = self._invert_letters(presentation.commutator(k, m).letters())
                self._swap_letters[(m, k)] = inverse
            power_inverse = self._invert_letters(self._power_letters[k])
            word = self._collect_letters([k] * (presentation.rel_orders[k] - 1) + power_inverse)
            self._inverse_letters[k] = word.letters()
        logger.debug(f"collector ready for {n} generators")

    def _invert_letters(self, letters: Sequence[int]) -> List[int]:
        """Normal form letters of the inverse of a word over already-inverted generators."""
        spelled = [x for k in reversed(letters) for x in self._inverse_letters[k]]
        return self._collect_letters(spelled).letters()

    def _collect_letters(self, letters: Iterable[int], start: Optional[Sequence[int]] = None) -> CollectedWord:
        p = self.presentation
        orders = p.rel_orders
        n = p.n
        exps = list(start) if start is not None else [0] * n
        stack = list(reversed(list(letters)))
        steps = 0
        while stack:
            steps += 1
            if steps > self.budget:
                raise CollectionBudgetError(f"collection exceeded {self.budget} steps")
            k = stack.pop()
            last = n - 1
            while last > k and exps[last] == 0:
                last -= 1
            if last <= k:
                exps[k] += 1
                if exps[k] == orders[k]:
                    exps[k] = 0
                    stack.extend(reversed(self._power_letters[k]))
            else:
                exps[last] -= 1
                stack.extend(reversed(self._swap_letters[(last, k)]))
                stack.append(last)
                stack.append(k)
        return CollectedWord(exps)

    def collect(self, word: Sequence[Tuple[int, int]]) -> CollectedWord:
        """
        Normal form of a word given as (generator index, exponent) pairs.

        Negative exponents stand for powers of the inverse.

        Raises:
            CollectionBudgetError: If the step budget runs out
        """
        letters: List[int] = []
        for k, exp in word:
            if exp >= 0:
                letters.extend([k] * exp)
            else:
                letters.extend(self._inverse_letters[k] * (-exp))
        return self._collect_letters(letters)

    def multiply(self, left: CollectedWord, right: CollectedWord) -> CollectedWord:
        """Normal form of the product of two normal forms."""
        return self._collect_letters(right.letters(), start=left.exponents)

    def inverse(self, word: CollectedWord) -> CollectedWord:
        return self._collect_letters(self._invert_letters(word.letters()))

    def times_generator(self, word: CollectedWord, k: int) -> CollectedWord:
        return self._collect_letters([k], start=word.exponents)


def collect(word: Sequence[Tuple[int, int]], presentation: PcPresentation,
            budget: int = config.COLLECTION_STEP_BUDGET) -> CollectedWord:
    """Normal form of a word in the generators and their inverses."""
    return Collector(presentation, budget).collect(word)


def instantiate(presentation: PcPresentation, cap: int = config.PRESENTATION_ORDER_LIMIT,
                budget: int = config.COLLECTION_STEP_BUDGET, name: Optional[str] = None) -> GroupTable:
    """
    Cayley table of a presentation.

    Elements are the normal forms in lexicographic order of exponent vectors
    (identity first). Columns come from right multiplication by generators,
    composed along the tree parent * x_m where x_m is the last letter of the
    normal form. The result is checked against the group axioms, with
    associativity on all triples whose last entry is a generator. Without a
    name the table is called pc<x1,...,xn>.

    Raises:
        ResourceLimitError: If the product of relative orders exceeds cap
        InconsistentPresentationError: If the table is not a group
    """
    p = presentation
    order = p.order
    if order > cap:
        raise ResourceLimitError(f"presentation order {order} exceeds the cap {cap}", limit=cap, requested=order)
    collector = Collector(p, budget)
    strides = p.strides()

    right_action = [np.empty(order, dtype=np.int32) for _ in range(p.n)]
    spanning_tree: List[Tuple[int, int, int]] = []
    for index, exps in enumerate(cartesian(*[range(e) for e in p.rel_orders])):
        word = CollectedWord(exps)
        for k in range(p.n):
            right_action[k][index] = p.index_of(collector.times_generator(word, k))
        if index:
            m = max(i for i, t in enumerate(exps) if t)
            spanning_tree.append((index, index - strides[m], m))

    generators = [p.index_of(CollectedWord.generator(p.n, k)) for k in range(p.n)]
    labels = [CollectedWord(exps).render(p.names) for exps in cartesian(*[range(e) for e in p.rel_orders])]
    try:
        mul = table_from_right_action(order, right_action, spanning_tree)
        table = GroupTable(mul, labels=labels, name=name or f"pc<{','.join(p.names)}>", cap=cap)
        table.check_axioms(generators=generators)
    except GroupAxiomError as exc:
        raise InconsistentPresentationError(f"presentation is inconsistent: {exc}") from exc
    logger.info(f"instantiated presentation of order {order}")
    return table

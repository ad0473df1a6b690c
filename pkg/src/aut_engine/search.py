"""
Backtracking search for injective homomorphisms defined on a generating tuple.
"""
import logging
from collections import Counter, deque
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.group_core.table import GroupTable
from src.group_core.subgroups import center, commutator_subgroup, conjugacy_classes, quotient

logger = logging.getLogger(__name__)

ElementKey = Tuple[int, int, int, int, int]


def element_keys(G: GroupTable) -> List[ElementKey]:
    """
    Automorphism-invariant data of every element.

    The key of g is (order, class size, order of gG', order of gZ(G),
    number of square roots of g); isomorphisms preserve it.
    """
    arange = np.arange(G.order)
    classes = conjugacy_classes(G)
    class_size = np.asarray([classes.classes[c].size for c in classes.class_of])
    Q, projection = quotient(G, commutator_subgroup(G))
    derived_orders = Q.element_orders[projection]
    C, c_projection = quotient(G, center(G))
    central_orders = C.element_orders[c_projection]
    roots = np.bincount(G.mul[arange, arange], minlength=G.order)
    return list(zip(G.element_orders.tolist(), class_size.tolist(), derived_orders.tolist(),
                    central_orders.tolist(), roots.tolist()))


def fingerprint(G: GroupTable) -> Tuple:
    """Isomorphism invariant: order plus the multiset of element keys."""
    return (G.order, tuple(sorted(Counter(element_keys(G)).items())))


class HomomorphismSearch:
    """
    Depth-first search for injective homomorphisms source -> target.

    A map is fixed by the images h_1, ..., h_d of a generating tuple
    g_1, ..., g_d of the source. Images are chosen level by level among
    target elements with the same key; after each choice the map is spread
    over <g_1, ..., g_s> along Cayley-graph edges and every edge is checked,
    so a surviving partial map is a homomorphism on that subgroup.
    """

    def __init__(self, source: GroupTable, target: GroupTable, generators: Sequence[int],
                 source_keys: Optional[List[ElementKey]] = None,
                 target_keys: Optional[List[ElementKey]] = None):
        self.source = source
        self.target = target
        self.generators = [int(g) for g in generators]
        self.depth = len(self.generators)
        self._srows = source.rows
        self._trows = target.rows
        source_keys = source_keys if source_keys is not None else element_keys(source)
        if target_keys is None:
            target_keys = source_keys if target is source else element_keys(target)
        by_key: Dict[ElementKey, List[int]] = {}
        for h, key in enumerate(target_keys):
            by_key.setdefault(key, []).append(h)
        self.candidates = [by_key.get(source_keys[g], []) for g in self.generators]
        # products and commutators of generator pairs, for cheap pairwise pruning
        self._pair_orders = {}
        for s in range(self.depth):
            for t in range(s):
                gt, gs = self.generators[t], self.generators[s]
                self._pair_orders[(t, s)] = (
                    int(source.element_orders[self._srows[gt][gs]]),
                    int(source.element_orders[source.commutator(gt, gs)]),
                )
        self.nodes = 0
        self.reset()

    def reset(self) -> None:
        self.phi = [-1] * self.source.order
        self.used = [False] * self.target.order
        self.phi[0] = 0
        self.used[0] = True
        self.assigned = [0]
        self.images: List[int] = [0] * self.depth

    def _pairwise_ok(self, s: int, h: int) -> bool:
        trows = self._trows
        orders = self.target.element_orders
        for t in range(s):
            ht = self.images[t]
            product_order, commutator_order = self._pair_orders[(t, s)]
            if orders[trows[ht][h]] != product_order:
                return False
            if orders[self.target.commutator(ht, h)] != commutator_order:
                return False
        return True

    def extend(self, s: int, h: int) -> Optional[int]:
        """
        Send generator s to h and spread the map over <g_1, ..., g_s>.

        Returns:
            Number of newly assigned elements, or None (with the state
            restored) when some edge or injectivity check fails.
        """
        self.nodes += 1
        self.images[s] = h
        srows, trows = self._srows, self._trows
        phi, used = self.phi, self.used
        gens = self.generators
        images = self.images
        start = len(self.assigned)
        queue = deque()

        def visit(x: int, t: int) -> bool:
            y = srows[x][gens[t]]
            img = trows[phi[x]][images[t]]
            current = phi[y]
            if current == -1:
                if used[img]:
                    return False
                phi[y] = img
                used[img] = True
                self.assigned.append(y)
                queue.append(y)
                return True
            return current == img

        ok = True
        for x in self.assigned[:start]:
            if not visit(x, s):
                ok = False
                break
        while ok and queue:
            x = queue.popleft()
            for t in range(s + 1):
                if not visit(x, t):
                    ok = False
                    break
        if not ok:
            self.retract(start)
            return None
        return len(self.assigned) - start

    def retract(self, size: int) -> None:
        """Undo assignments back to the first size assigned elements."""
        while len(self.assigned) > size:
            y = self.assigned.pop()
            self.used[self.phi[y]] = False
            self.phi[y] = -1

    def level_candidates(self, s: int) -> List[int]:
        forced = self.phi[self.generators[s]]
        if forced != -1:
            return [forced]
        return self.candidates[s]

    def complete(self, s: int) -> bool:
        """Extend the current assignment of levels < s to all levels (first found)."""
        if s == self.depth:
            return len(self.assigned) == self.source.order
        for h in self.level_candidates(s):
            if not self._pairwise_ok(s, h):
                continue
            start = len(self.assigned)
            if self.extend(s, h) is None:
                continue
            if self.complete(s + 1):
                return True
            self.retract(start)
        return False

    def assign_prefix(self, images: Sequence[int]) -> bool:
        """Fix the images of the first len(images) generators; False if inconsistent."""
        self.reset()
        for s, h in enumerate(images):
            if self.extend(s, int(h)) is None:
                return False
        return True

    def current_map(self) -> np.ndarray:
        return np.asarray(self.phi, dtype=np.int32)

    def try_candidate(self, s: int, h: int) -> Optional[np.ndarray]:
        """
        With levels < s fixed, look for a full map sending generator s to h.

        The state is restored afterwards.
        """
        start = len(self.assigned)
        if not self._pairwise_ok(s, h) or self.extend(s, h) is None:
            return None
        found = self.complete(s + 1)
        result = self.current_map() if found else None
        self.retract(start)
        return result

    def first(self) -> Optional[np.ndarray]:
        """The first full injective homomorphism in candidate order, if any."""
        self.reset()
        if self.complete(0):
            return self.current_map()
        return None

"""
Power-commutator presentations and their normal-form words.
"""
from math import prod
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.errors import PresentationError


class CollectedWord:
    """
    A normal-form word x_1^t_1 ... x_n^t_n, stored as its exponent vector.
    """

    def __init__(self, exponents: Sequence[int]):
        self.exponents: Tuple[int, ...] = tuple(int(t) for t in exponents)

    @classmethod
    def identity(cls, n: int) -> "CollectedWord":
        return cls((0,) * n)

    @classmethod
    def generator(cls, n: int, i: int) -> "CollectedWord":
        exps = [0] * n
        exps[i] = 1
        return cls(exps)

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def support(self) -> List[int]:
        """Indices of generators with a nonzero exponent."""
        return [i for i, t in enumerate(self.exponents) if t]

    def letters(self) -> List[int]:
        """The word spelled out as a list of generator indices."""
        return [i for i, t in enumerate(self.exponents) for _ in range(t)]

    def render(self, names: Sequence[str]) -> str:
        factors = [names[i] if t == 1 else f"{names[i]}^{t}" for i, t in enumerate(self.exponents) if t]
        return " ".join(factors) if factors else "1"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CollectedWord):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"CollectedWord({list(self.exponents)})"

    def to_dict(self) -> Dict[str, Any]:
        return {"exponents": list(self.exponents)}


class PcPresentation:
    """
    A power-commutator presentation on generators x_1, ..., x_n.

    Every x_i^e_i and every [x_i, x_j] with i < j is given by a normal-form
    word in the generators after x_i. Missing powers default to the identity,
    as do missing commutators.
    """

    def __init__(self, names: Sequence[str], rel_orders: Sequence[int],
                 power_rhs: Optional[Mapping[int, CollectedWord]] = None,
                 comm_rhs: Optional[Mapping[Tuple[int, int], CollectedWord]] = None):
        """
        Initialize a presentation.

        Args:
            names: Generator names, in polycyclic order.
            rel_orders: Relative orders e_1, ..., e_n.
            power_rhs: Mapping i -> normal form of x_i^e_i.
            comm_rhs: Mapping (i, j), i < j -> normal form of [x_i, x_j].

        Raises:
            PresentationError: If a relation breaks the power-commutator shape.
        """
        self.names = list(names)
        self.rel_orders = [int(e) for e in rel_orders]
        n = len(self.names)
        if len(set(self.names)) != n:
            raise PresentationError(f"generator names are not distinct: {self.names}")
        if len(self.rel_orders) != n:
            raise PresentationError(f"{n} generators but {len(self.rel_orders)} relative orders")
        if any(e < 1 for e in self.rel_orders):
            raise PresentationError(f"relative orders must be positive: {self.rel_orders}")

        self.power_rhs: List[CollectedWord] = [CollectedWord.identity(n) for _ in range(n)]
        for i, word in (power_rhs or {}).items():
            self._check_tail(word, i, f"power relation of {self.names[i]}")
            self.power_rhs[i] = word
        self.comm_rhs: Dict[Tuple[int, int], CollectedWord] = {}
        for (i, j), word in (comm_rhs or {}).items():
            if not 0 <= i < j < n:
                raise PresentationError(f"commutator [{i}, {j}] must have 0 <= i < j < {n}")
            self._check_tail(word, i, f"commutator [{self.names[i]},{self.names[j]}]")
            if not word.is_identity():
                self.comm_rhs[(i, j)] = word

    def _check_tail(self, word: CollectedWord, i: int, what: str) -> None:
        if len(word.exponents) != self.n:
            raise PresentationError(f"{what}: word has {len(word.exponents)} exponents, expected {self.n}")
        for k, t in enumerate(word.exponents):
            if t and k <= i:
                raise PresentationError(f"{what}: uses {self.names[k]}, which does not come after {self.names[i]}")
            if not 0 <= t < self.rel_orders[k]:
                raise PresentationError(f"{what}: exponent {t} of {self.names[k]} outside [0, {self.rel_orders[k]})")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def order(self) -> int:
        """Product of the relative orders (the group order when consistent)."""
        return prod(self.rel_orders)

    def generator_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r}") from None

    def commutator(self, i: int, j: int) -> CollectedWord:
        """[x_i, x_j] for i < j."""
        return self.comm_rhs.get((i, j), CollectedWord.identity(self.n))

    def strides(self) -> List[int]:
        """Mixed-radix place values: the last generator varies fastest."""
        strides = [1] * self.n
        for k in range(self.n - 2, -1, -1):
            strides[k] = strides[k + 1] * self.rel_orders[k + 1]
        return strides

    def index_of(self, word: CollectedWord) -> int:
        """Position of a normal form in the lexicographic element numbering."""
        return sum(t * s for t, s in zip(word.exponents, self.strides()))

    def normal_form_of(self, index: int) -> CollectedWord:
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} outside 0..{self.order - 1}")
        exps = []
        for s, e in zip(self.strides(), self.rel_orders):
            exps.append(index // s % e)
        return CollectedWord(exps)

    def render(self) -> str:
        """DSL text listing generators, orders and every nontrivial relation."""
        lines = [f"gens {','.join(self.names)}", f"orders {','.join(str(e) for e in self.rel_orders)}"]
        for i, word in enumerate(self.power_rhs):
            if not word.is_identity():
                lines.append(f"pow {self.names[i]}^{self.rel_orders[i]} = {word.render(self.names)}")
        for (i, j) in sorted(self.comm_rhs):
            lines.append(f"comm [{self.names[i]},{self.names[j]}] = {self.comm_rhs[(i, j)].render(self.names)}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PcPresentation):
            return NotImplemented
        return (self.names == other.names and self.rel_orders == other.rel_orders
                and self.power_rhs == other.power_rhs and self.comm_rhs == other.comm_rhs)

    def __repr__(self) -> str:
        return f"PcPresentation(names={self.names}, rel_orders={self.rel_orders})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "names": list(self.names),
            "rel_orders": list(self.rel_orders),
            "power_rhs": {self.names[i]: w.render(self.names)
                          for i, w in enumerate(self.power_rhs) if not w.is_identity()},
            "comm_rhs": {f"[{self.names[i]},{self.names[j]}]": w.render(self.names)
                         for (i, j), w in sorted(self.comm_rhs.items())},
        }

"""
Parsed statements of the presentation DSL, before they are assembled.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Tuple


class Statement(ABC):
    """Abstract base class for one DSL statement."""

    def __init__(self, line: int):
        self.line = line

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """Convert the statement to a dictionary representation."""
        pass


class WordExpression:
    """A juxtaposition of factors name^exponent; empty for the literal 1."""

    def __init__(self, factors: List[Tuple[str, int]]):
        self.factors = factors

    def to_dict(self) -> Dict[str, Any]:
        return {"type": "word", "factors": [[name, exp] for name, exp in self.factors]}

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(name if exp == 1 else f"{name}^{exp}" for name, exp in self.factors)


class GensStatement(Statement):
    """gens x, y, ..."""

    def __init__(self, names: List[str], line: int = 0):
        super().__init__(line)
        self.names = names

    def to_dict(self) -> Dict[str, Any]:
        return {"type": "gens", "names": list(self.names)}


class OrdersStatement(Statement):
    """orders e_1, e_2, ..."""

    def __init__(self, orders: List[int], line: int = 0):
        super().__init__(line)
        self.orders = orders

    def to_dict(self) -> Dict[str, Any]:
        return {"type": "orders", "orders": list(self.orders)}


class PowerStatement(Statement):
    """pow x^e = word"""

    def __init__(self, name: str, exponent: int, word: WordExpression, line: int = 0):
        super().__init__(line)
        self.name = name
        self.exponent = exponent
        self.word = word

    def to_dict(self) -> Dict[str, Any]:
        return {"type": "pow", "name": self.name, "exponent": self.exponent, "word": self.word.to_dict()}


class CommutatorStatement(Statement):
    """comm [x, y] = word"""

    def __init__(self, left: str, right: str, word: WordExpression, line: int = 0):
        super().__init__(line)
        self.left = left
        self.right = right
        self.word = word

    def to_dict(self) -> Dict[str, Any]:
        return {"type": "comm", "left": self.left, "right": self.right, "word": self.word.to_dict()}

"""
Grammar building blocks for the presentation DSL.

Terminals of these grammars are token kinds (NAME, INT, keywords and
punctuation), not raw text; the parser maps leaves back to token values.
"""
from typing import Dict, List, Sequence, Set, Tuple, Union

from nltk.grammar import CFG, Nonterminal, Production

Symbol = Union[str, Nonterminal]


def token_kinds(grammar: CFG) -> Set[str]:
    """Every token kind that occurs on the right-hand side of a production."""
    return {item for production in grammar.productions() for item in production.rhs() if isinstance(item, str)}


class GrammarBuilder:
    """
    Collects productions over token kinds, grouped by left-hand side.

    Identical productions are kept once, so builders that share a
    sub-grammar (word rules, list rules) can be merged freely.
    """

    def __init__(self, start_symbol: Nonterminal):
        """
        Args:
            start_symbol: Nonterminal the built grammar starts from
        """
        self.start_symbol = start_symbol
        self.rules: Dict[Nonterminal, List[Tuple[Symbol, ...]]] = {start_symbol: []}

    def add_rule(self, lhs: Nonterminal, rhs: Sequence[Symbol]) -> "GrammarBuilder":
        """
        Add lhs -> rhs unless it is already present.

        Returns:
            Self for method chaining
        """
        expansions = self.rules.setdefault(lhs, [])
        rhs = tuple(rhs)
        if rhs not in expansions:
            expansions.append(rhs)
        return self

    def add_alternative_rules(self, lhs: Nonterminal, alternatives: Sequence[Sequence[Symbol]]) -> "GrammarBuilder":
        for rhs in alternatives:
            self.add_rule(lhs, rhs)
        return self

    def add_separated_list(self, lhs: Nonterminal, item: Symbol, separator: str) -> "GrammarBuilder":
        """One or more items joined by a separator token kind, right-recursive."""
        return self.add_alternative_rules(lhs, [[item], [item, separator, lhs]])

    def merge(self, other: "GrammarBuilder") -> "GrammarBuilder":
        """
        Add every production of another builder; the start symbol stays ours.

        Returns:
            Self for method chaining
        """
        for lhs, expansions in other.rules.items():
            self.add_alternative_rules(lhs, expansions)
        return self

    def undefined(self) -> List[Nonterminal]:
        """Nonterminals used on some right-hand side but never expanded."""
        used = {item for expansions in self.rules.values() for rhs in expansions
                for item in rhs if isinstance(item, Nonterminal)}
        return sorted((nt for nt in used if not self.rules.get(nt)), key=str)

    def build(self) -> CFG:
        """
        Raises:
            ValueError: If the start symbol or a used nonterminal has no production
        """
        missing = self.undefined()
        if not self.rules[self.start_symbol]:
            missing.insert(0, self.start_symbol)
        if missing:
            raise ValueError(f"nonterminals without productions: {', '.join(map(str, missing))}")
        productions = [Production(lhs, list(rhs)) for lhs, expansions in self.rules.items() for rhs in expansions]
        return CFG(self.start_symbol, productions)

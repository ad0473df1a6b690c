"""
Parser for the power-commutator presentation DSL.
"""
import logging
import re
from typing import Dict, List, Optional, Tuple

from nltk.grammar import CFG
from nltk.parse import EarleyChartParser
from nltk.parse.chart import TreeEdge
from nltk.tokenize import RegexpTokenizer

from src.errors import PresentationError, PresentationSyntaxError
from src.pc_presenter.grammar.core import token_kinds
from src.pc_presenter.grammar.components import (
    INT,
    KEYWORDS,
    NAME,
    build_presentation_grammar,
    build_word_grammar,
)
from src.pc_presenter.models.presentation import CollectedWord, PcPresentation
from src.pc_presenter.models.statement import (
    CommutatorStatement,
    GensStatement,
    OrdersStatement,
    PowerStatement,
    Statement,
    WordExpression,
)

logger = logging.getLogger(__name__)

TOKEN_PATTERN = r"[A-Za-z_][A-Za-z0-9_]*|-?\d+|\S"
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?\d+")


class Token:
    """A lexical token with its kind and 1-based source position."""

    def __init__(self, kind: str, value: str, line: int, column: int):
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column

    def __repr__(self) -> str:
        return f"Token({self.kind!r}, {self.value!r}, {self.line}:{self.column})"


class PresentationParser:
    """Parser for presentation text and standalone words using context-free grammars."""

    def __init__(self, custom_grammar: Optional[CFG] = None, keywords: Optional[List[str]] = None):
        """
        Initialize the parser.

        Args:
            custom_grammar: Optional replacement for the statement grammar
            keywords: Optional replacement keywords, in gens/orders/pow/comm order;
                the tokenizer treats only these words as keywords
        """
        self.keywords = list(keywords or KEYWORDS)
        self.grammar = custom_grammar or build_presentation_grammar(self.keywords)
        self.parser = EarleyChartParser(self.grammar)
        self.word_grammar = build_word_grammar()
        self.word_parser = EarleyChartParser(self.word_grammar)
        self.tokenizer = RegexpTokenizer(TOKEN_PATTERN)

    def tokenize(self, text: str, line: int = 1) -> List[Token]:
        """
        Tokenize one line of DSL text (comments already removed).

        Args:
            text: The line to tokenize
            line: Line number reported in tokens

        Returns:
            List of tokens
        """
        tokens = []
        for start, end in self.tokenizer.span_tokenize(text):
            value = text[start:end]
            if value in self.keywords:
                kind = value
            elif _NAME_RE.fullmatch(value):
                kind = NAME
            elif _INT_RE.fullmatch(value):
                kind = INT
            else:
                kind = value
            tokens.append(Token(kind, value, line, start + 1))
        return tokens

    def split_statements(self, text: str) -> List[List[Token]]:
        """Token lists of every statement; statements end at newlines and semicolons."""
        statements = []
        for line_no, raw in enumerate(text.splitlines(), start=1):
            code = raw.split("#", 1)[0]
            current: List[Token] = []
            for token in self.tokenize(code, line_no):
                if token.kind == ";":
                    if current:
                        statements.append(current)
                    current = []
                else:
                    current.append(token)
            if current:
                statements.append(current)
        return statements

    def _parse_tokens(self, tokens: List[Token], parser: EarleyChartParser, grammar: CFG):
        terminals = token_kinds(grammar)
        for token in tokens:
            if token.kind not in terminals:
                raise PresentationSyntaxError(f"unexpected {token.value!r}", token.line, token.column)
        kinds = [t.kind for t in tokens]
        trees = list(parser.parse(kinds))
        if trees:
            return trees[0]
        chart = parser.chart_parse(kinds)
        reached = max((edge.end() for edge in chart.edges() if isinstance(edge, TreeEdge)), default=0)
        if reached < len(tokens):
            bad = tokens[reached]
            raise PresentationSyntaxError(f"unexpected {bad.value!r}", bad.line, bad.column)
        last = tokens[-1]
        raise PresentationSyntaxError("statement ends too early", last.line, last.column + len(last.value))

    def parse_statements(self, text: str) -> List[Statement]:
        """
        Parse DSL text into statements without checking their meaning.

        Raises:
            PresentationSyntaxError: With the line and column of the first bad token
        """
        statements = []
        for tokens in self.split_statements(text):
            tree = self._parse_tokens(tokens, self.parser, self.grammar)
            statements.append(self._convert_tree_to_statement(tree, tokens))
        logger.debug(f"parsed {len(statements)} statements")
        return statements

    def _convert_tree_to_statement(self, tree, tokens: List[Token]) -> Statement:
        """
        Convert an NLTK parse tree of one statement to a Statement.

        Leaves of the tree are token kinds in source order, so token values
        are read positionally from the statement's token list.
        """
        node = tree[0]
        label = node.label()
        line = tokens[0].line
        if label == "GENS_STMT":
            return GensStatement([t.value for t in tokens if t.kind == NAME], line)
        if label == "ORDERS_STMT":
            return OrdersStatement([int(t.value) for t in tokens if t.kind == INT], line)
        if label == "POW_STMT":
            word = self._convert_word_tree(node[-1], tokens[5:])
            return PowerStatement(tokens[1].value, int(tokens[3].value), word, line)
        if label == "COMM_STMT":
            word = self._convert_word_tree(node[-1], tokens[7:])
            return CommutatorStatement(tokens[2].value, tokens[4].value, word, line)
        raise ValueError(f"unknown statement node {label}")

    def _convert_word_tree(self, tree, tokens: List[Token]) -> WordExpression:
        if len(tree) == 1 and isinstance(tree[0], str):
            if tokens[0].value != "1":
                raise PresentationSyntaxError("the only integer word is 1", tokens[0].line, tokens[0].column)
            return WordExpression([])
        factors = []
        cursor = 0
        for factor in tree.subtrees(filter=lambda t: t.label() == "FACTOR"):
            name = tokens[cursor].value
            if len(factor) == 3:
                factors.append((name, int(tokens[cursor + 2].value)))
                cursor += 3
            else:
                factors.append((name, 1))
                cursor += 1
        return WordExpression(factors)

    def parse(self, text: str) -> PcPresentation:
        """
        Parse DSL text into a validated presentation.

        Args:
            text: The presentation text

        Returns:
            A PcPresentation

        Raises:
            PresentationSyntaxError: If the text does not match the grammar
            PresentationError: If the statements do not describe a valid
                power-commutator presentation
        """
        statements = self.parse_statements(text)
        gens = [s for s in statements if isinstance(s, GensStatement)]
        orders = [s for s in statements if isinstance(s, OrdersStatement)]
        if len(gens) != 1 or len(orders) != 1:
            raise PresentationError("a presentation needs exactly one gens and one orders statement")
        names = gens[0].names
        rel_orders = orders[0].orders
        if len(names) != len(rel_orders):
            raise PresentationError(f"line {orders[0].line}: {len(names)} generators but {len(rel_orders)} orders")
        if len(set(names)) != len(names):
            raise PresentationError(f"line {gens[0].line}: repeated generator name")
        index = {name: i for i, name in enumerate(names)}

        power_rhs: Dict[int, CollectedWord] = {}
        comm_rhs: Dict[Tuple[int, int], CollectedWord] = {}
        for statement in statements:
            if isinstance(statement, PowerStatement):
                i = self._lookup(index, statement.name, statement.line)
                if statement.exponent != rel_orders[i]:
                    raise PresentationError(
                        f"line {statement.line}: power of {statement.name} must be its relative order {rel_orders[i]}")
                if i in power_rhs:
                    raise PresentationError(f"line {statement.line}: second power relation for {statement.name}")
                power_rhs[i] = self._normal_word(statement.word, i, index, rel_orders, statement.line)
            elif isinstance(statement, CommutatorStatement):
                i = self._lookup(index, statement.left, statement.line)
                j = self._lookup(index, statement.right, statement.line)
                if i >= j:
                    raise PresentationError(
                        f"line {statement.line}: commutator [{statement.left},{statement.right}] "
                        f"must list an earlier generator first")
                if (i, j) in comm_rhs:
                    raise PresentationError(f"line {statement.line}: second relation for "
                                            f"[{statement.left},{statement.right}]")
                comm_rhs[(i, j)] = self._normal_word(statement.word, i, index, rel_orders, statement.line)
        presentation = PcPresentation(names, rel_orders, power_rhs, comm_rhs)
        logger.info(f"parsed presentation on {presentation.n} generators, order {presentation.order}")
        return presentation

    @staticmethod
    def _lookup(index: Dict[str, int], name: str, line: int) -> int:
        if name not in index:
            raise PresentationError(f"line {line}: unknown generator {name!r}")
        return index[name]

    def _normal_word(self, word: WordExpression, i: int, index: Dict[str, int],
                     rel_orders: List[int], line: int) -> CollectedWord:
        exps = [0] * len(rel_orders)
        previous = i
        for name, exp in word.factors:
            k = self._lookup(index, name, line)
            if k <= previous:
                raise PresentationError(
                    f"line {line}: relation word {word} must use generators after position {i + 1} in increasing order")
            if not 0 <= exp < rel_orders[k]:
                raise PresentationError(f"line {line}: exponent {exp} of {name} outside [0, {rel_orders[k]})")
            exps[k] = exp
            previous = k
        return CollectedWord(exps)

    def parse_word(self, text: str, presentation: PcPresentation) -> List[Tuple[int, int]]:
        """
        Parse a word such as "x1^-1 x2 x1" over the presentation's generators.

        Returns:
            (generator index, exponent) pairs in order; [] for the word 1
        """
        tokens = self.tokenize(text.split("#", 1)[0])
        if not tokens:
            raise PresentationSyntaxError("empty word", 1, 1)
        tree = self._parse_tokens(tokens, self.word_parser, self.word_grammar)
        word = self._convert_word_tree(tree, tokens)
        return [(presentation.generator_index(name), exp) for name, exp in word.factors]


def parse_presentation(text: str) -> PcPresentation:
    """Parse presentation text with a default parser."""
    return PresentationParser().parse(text)


def render(presentation: PcPresentation) -> str:
    return presentation.render()

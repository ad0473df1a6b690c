"""
Grammar components for the power-commutator presentation DSL.
"""
from typing import List, Optional
from nltk.grammar import Nonterminal
from src.pc_presenter.grammar.core import GrammarBuilder, CFG

# Statement keywords
KEYWORDS = ["gens", "orders", "pow", "comm"]

PUNCTUATION = [",", "^", "=", "[", "]"]

# Token kinds produced by the tokenizer besides keywords and punctuation
NAME = "NAME"
INT = "INT"


def add_list_grammar(
    builder: GrammarBuilder,
    name_list: Nonterminal,
    int_list: Nonterminal
) -> GrammarBuilder:
    """
    Add comma-separated lists of generator names and integers.

    Args:
        builder: The grammar builder to add rules to
        name_list: Nonterminal for name lists
        int_list: Nonterminal for integer lists

    Returns:
        The updated grammar builder
    """
    builder.add_separated_list(name_list, NAME, ",")
    builder.add_separated_list(int_list, INT, ",")
    return builder


def add_word_grammar(
    builder: GrammarBuilder,
    word: Nonterminal,
    factors: Nonterminal,
    factor: Nonterminal
) -> GrammarBuilder:
    """
    Add words: the literal 1, or juxtaposed factors name or name^int.

    Args:
        builder: The grammar builder to add rules to
        word: Nonterminal for a whole word
        factors: Nonterminal for a nonempty factor sequence
        factor: Nonterminal for a single factor

    Returns:
        The updated grammar builder
    """
    builder.add_alternative_rules(factor, [[NAME], [NAME, "^", INT]])
    builder.add_alternative_rules(factors, [[factor], [factor, factors]])
    builder.add_alternative_rules(word, [[INT], [factors]])
    return builder


def add_statement_grammar(
    builder: GrammarBuilder,
    # Required nonterminals (dependencies)
    name_list: Nonterminal,
    int_list: Nonterminal,
    word: Nonterminal,
    # Nonterminals this function creates
    statement: Nonterminal,
    keywords: Optional[List[str]] = None
) -> GrammarBuilder:
    """
    Add the four statement forms of a presentation.

    Args:
        builder: The grammar builder to add rules to
        name_list: Nonterminal for name lists (dependency)
        int_list: Nonterminal for integer lists (dependency)
        word: Nonterminal for relation words (dependency)
        statement: Nonterminal for a single statement
        keywords: Optional replacement for the gens/orders/pow/comm keywords

    Returns:
        The updated grammar builder
    """
    keywords = keywords or KEYWORDS
    if len(keywords) != 4 or len(set(keywords)) != 4:
        raise ValueError(f"expected four distinct keywords, got {keywords}")
    gens_kw, orders_kw, pow_kw, comm_kw = keywords

    gens_stmt = Nonterminal("GENS_STMT")
    orders_stmt = Nonterminal("ORDERS_STMT")
    pow_stmt = Nonterminal("POW_STMT")
    comm_stmt = Nonterminal("COMM_STMT")

    builder.add_rule(gens_stmt, [gens_kw, name_list])
    builder.add_rule(orders_stmt, [orders_kw, int_list])
    builder.add_rule(pow_stmt, [pow_kw, NAME, "^", INT, "=", word])
    builder.add_rule(comm_stmt, [comm_kw, "[", NAME, ",", NAME, "]", "=", word])

    builder.add_alternative_rules(statement, [[gens_stmt], [orders_stmt], [pow_stmt], [comm_stmt]])
    return builder


def build_presentation_grammar(keywords: Optional[List[str]] = None) -> CFG:
    """
    Build the grammar of a single presentation statement.

    Args:
        keywords: Optional replacement keywords, in gens/orders/pow/comm order

    Returns:
        A CFG whose start symbol is STATEMENT
    """
    statement = Nonterminal("STATEMENT")
    name_list = Nonterminal("NAME_LIST")
    int_list = Nonterminal("INT_LIST")
    word = Nonterminal("WORD")
    factors = Nonterminal("FACTORS")
    factor = Nonterminal("FACTOR")

    builder = GrammarBuilder(statement)
    builder = add_list_grammar(builder, name_list, int_list)
    builder = add_word_grammar(builder, word, factors, factor)
    builder = add_statement_grammar(builder, name_list, int_list, word, statement, keywords)
    return builder.build()


def build_word_grammar() -> CFG:
    """
    Build the grammar of a standalone word (inverse powers allowed).

    Returns:
        A CFG whose start symbol is WORD
    """
    word = Nonterminal("WORD")
    builder = GrammarBuilder(word)
    builder = add_word_grammar(builder, word, Nonterminal("FACTORS"), Nonterminal("FACTOR"))
    return builder.build()

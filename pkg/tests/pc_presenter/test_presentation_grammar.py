"""
Tests for the modular presentation grammar components.
"""
import pytest
from nltk.grammar import Nonterminal
from nltk.parse import EarleyChartParser

from src.pc_presenter.grammar.core import GrammarBuilder, token_kinds
from src.pc_presenter.grammar.components import (
    INT,
    NAME,
    add_list_grammar,
    add_statement_grammar,
    add_word_grammar,
    build_presentation_grammar,
    build_word_grammar,
)


def parses(grammar, kinds):
    return len(list(EarleyChartParser(grammar).parse(kinds))) > 0


class TestGrammarComponents:

    def test_list_grammar(self):
        """Test the list grammar component."""
        name_list = Nonterminal("NAME_LIST")
        int_list = Nonterminal("INT_LIST")
        builder = GrammarBuilder(start_symbol=name_list)
        builder = add_list_grammar(builder, name_list, int_list)
        grammar = builder.build()

        assert parses(grammar, [NAME])
        assert parses(grammar, [NAME, ",", NAME, ",", NAME])
        assert not parses(grammar, [NAME, ",", ",", NAME])

    def test_word_grammar(self):
        """Test the word grammar component."""
        word = Nonterminal("WORD")
        builder = GrammarBuilder(start_symbol=word)
        builder = add_word_grammar(builder, word, Nonterminal("FACTORS"), Nonterminal("FACTOR"))
        grammar = builder.build()

        assert parses(grammar, [INT])
        assert parses(grammar, [NAME])
        assert parses(grammar, [NAME, "^", INT, NAME])
        assert not parses(grammar, [NAME, "^"])

    def test_statement_grammar(self):
        """Test the four statement forms."""
        grammar = build_presentation_grammar()

        assert parses(grammar, ["gens", NAME, ",", NAME])
        assert parses(grammar, ["orders", INT, ",", INT])
        assert parses(grammar, ["pow", NAME, "^", INT, "=", NAME, NAME])
        assert parses(grammar, ["comm", "[", NAME, ",", NAME, "]", "=", INT])
        assert not parses(grammar, ["comm", NAME, ",", NAME, "=", INT])

    def test_custom_keywords(self):
        """Test building the grammar with replacement keywords."""
        grammar = build_presentation_grammar(keywords=["generators", "relorders", "power", "commutator"])

        assert parses(grammar, ["generators", NAME])
        assert parses(grammar, ["commutator", "[", NAME, ",", NAME, "]", "=", NAME])
        with pytest.raises(ValueError):
            list(EarleyChartParser(grammar).parse(["gens", NAME]))

    def test_merge(self):
        """Test combining grammar components from separate builders."""
        word = Nonterminal("WORD")
        statement = Nonterminal("STATEMENT")
        words = add_word_grammar(GrammarBuilder(word), word, Nonterminal("FACTORS"), Nonterminal("FACTOR"))
        lists = add_list_grammar(GrammarBuilder(statement), Nonterminal("NAME_LIST"), Nonterminal("INT_LIST"))
        builder = add_statement_grammar(lists.merge(words), Nonterminal("NAME_LIST"), Nonterminal("INT_LIST"),
                                        word, statement)
        grammar = builder.build()

        assert grammar.start() == statement
        assert parses(grammar, ["pow", NAME, "^", INT, "=", INT])

    def test_standalone_word_grammar(self):
        """Test the standalone word grammar."""
        grammar = build_word_grammar()
        assert grammar.start() == Nonterminal("WORD")
        assert parses(grammar, [NAME, "^", INT, NAME, NAME, "^", INT])


class TestGrammarBuilder:

    @pytest.fixture
    def word_builder(self):
        word = Nonterminal("WORD")
        return add_word_grammar(GrammarBuilder(word), word, Nonterminal("FACTORS"), Nonterminal("FACTOR"))

    def test_merge_keeps_shared_rules_once(self, word_builder):
        """Test that merging keeps shared productions once."""
        size = len(word_builder.build().productions())
        word = Nonterminal("WORD")
        other = add_word_grammar(GrammarBuilder(word), word, Nonterminal("FACTORS"), Nonterminal("FACTOR"))
        assert len(word_builder.merge(other).build().productions()) == size

    def test_undefined_nonterminal(self):
        """Test that undefined nonterminals are reported."""
        word = Nonterminal("WORD")
        builder = GrammarBuilder(word).add_rule(word, [Nonterminal("FACTORS")])
        assert builder.undefined() == [Nonterminal("FACTORS")]
        with pytest.raises(ValueError):
            builder.build()

    def test_empty_start_symbol(self):
        """Test that an empty start symbol is rejected."""
        with pytest.raises(ValueError):
            GrammarBuilder(Nonterminal("STATEMENT")).build()

    def test_token_kinds(self, word_builder):
        """Test token kinds of built grammars."""
        assert token_kinds(word_builder.build()) == {NAME, INT, "^"}
        assert {"gens", "orders", "pow", "comm", "[", "]", "=", ","} <= token_kinds(build_presentation_grammar())

"""
Tests for the named presentations and the automorphism alpha_n of G_n.
"""
import numpy as np
import pytest

from src.aut_engine.automorphism import is_automorphism
from src.group_core.subgroups import center, quotient
from src.group_core.structure import exponent, is_extraspecial
from src.pc_presenter.collector import instantiate
from src.pc_presenter.families import (
    BUILTIN_SOURCES,
    alpha_n,
    build_Gn,
    builtin_presentation,
    gn_characteristic_subgroups,
    gn_index,
)


class TestBuiltins:

    def test_quaternion(self):
        """Test the quaternion presentation."""
        Q8 = instantiate(builtin_presentation("quaternion"))
        assert Q8.order == 8
        assert exponent(Q8) == 4
        assert int(np.count_nonzero(Q8.element_orders == 2)) == 1

    @pytest.mark.parametrize("name", sorted(BUILTIN_SOURCES))
    def test_builtins_are_extraspecial(self, name):
        """Test that every named presentation is extraspecial."""
        assert is_extraspecial(instantiate(builtin_presentation(name)))

    def test_extraspecial_exponents(self):
        """Test the exponents of the groups of order 27."""
        assert exponent(instantiate(builtin_presentation("extraspecial:27:exp3"))) == 3
        assert exponent(instantiate(builtin_presentation("extraspecial:27:exp9"))) == 9

    def test_unknown_builtin(self):
        """Test that unknown names are rejected."""
        with pytest.raises(ValueError):
            builtin_presentation("octonions")


class TestGn:

    def test_generator_names(self):
        """Test the generator names of G_2."""
        presentation = build_Gn(2)
        assert presentation.names == ["x1", "x2", "x3", "x4", "x5", "a", "b"]
        assert presentation.rel_orders == [2] * 7

    @pytest.mark.parametrize("n", [0, 4])
    def test_index_out_of_range(self, n):
        """Test that unsupported indices are rejected."""
        with pytest.raises(ValueError):
            build_Gn(n)

    def test_gn_index(self):
        """Test recovering n from a G_n presentation."""
        assert gn_index(build_Gn(1)) == 1
        assert gn_index(build_Gn(3)) == 3
        with pytest.raises(ValueError):
            gn_index(builtin_presentation("quaternion"))

    @pytest.mark.parametrize("n", [1, 2])
    def test_alpha_is_noncentral_automorphism(self, n):
        """Test that alpha_n is a noncentral automorphism whose square is central."""
        presentation = build_Gn(n)
        G = instantiate(presentation)
        alpha = alpha_n(presentation, G)
        assert is_automorphism(G, alpha.perm, exhaustive_limit=G.order)

        _, projection = quotient(G, center(G))
        assert np.any(projection[alpha.perm] != projection)
        square = alpha.after(alpha)
        assert np.all(projection[square.perm] == projection)

    def test_alpha_moves_one_generator(self):
        """Test that alpha_1 moves only x2."""
        presentation = build_Gn(1)
        G = instantiate(presentation)
        alpha = alpha_n(presentation, G)
        strides = presentation.strides()
        moved = [k for k, g in enumerate(strides) if alpha(g) != g]
        assert moved == [1]
        assert alpha(strides[1]) == G.product(strides[1], strides[2])

    def test_characteristic_subgroup_orders(self):
        """Test the two characteristic subgroups of G_1."""
        first, last = gn_characteristic_subgroups(1)
        assert first.order == 8
        assert last.order == 8
        assert first != last

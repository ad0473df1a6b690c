"""
Tests for automorphisms, the stabiliser-chain automorphism group and central automorphisms.
"""
import numpy as np
import pytest

from src.errors import AutomorphismError, ResourceLimitError
from src.group_core.constructions import build_cyclic, symmetric_group
from src.aut_engine.automorphism import Automorphism, conjugation, inner_automorphisms, is_automorphism
from src.aut_engine.central import (
    CentralHomomorphisms,
    aut_index_central,
    central_automorphism_count,
    central_automorphisms,
)
from src.aut_engine.group import automorphism_group, orbit_of
from src.theory_checks.corpus import build_group


class TestAutomorphism:

    def test_composition_applies_right_factor_first(self):
        """Test that a.after(b) applies b first and that inverses cancel."""
        a = Automorphism([0, 2, 3, 1])
        b = Automorphism([0, 1, 3, 2])
        assert a.after(b).perm.tolist() == [0, 2, 1, 3]
        assert a.after(a.inverse()).is_identity()

    def test_is_automorphism(self):
        """Test the automorphism check on bijections and non-bijections of Z/4."""
        Z4 = build_cyclic(4)
        assert is_automorphism(Z4, np.array([0, 3, 2, 1]))
        assert not is_automorphism(Z4, np.array([0, 2, 1, 3]))
        assert not is_automorphism(Z4, np.array([0, 1, 1, 3]))
        assert not is_automorphism(Z4, np.array([1, 0, 2, 3]))

    def test_conjugation(self):
        """Test that conjugation maps agree with GroupTable.conjugate."""
        G = symmetric_group(3)
        for g in range(G.order):
            c = conjugation(G, g)
            assert all(c(x) == G.conjugate(x, g) for x in range(G.order))

    def test_inner_automorphism_counts(self):
        """Test that Inn(G) has order |G/Z(G)|."""
        assert len(inner_automorphisms(symmetric_group(3))) == 6
        assert len(inner_automorphisms(build_group("quaternion"))) == 4
        assert len(inner_automorphisms(build_cyclic(5))) == 1


class TestAutomorphismGroup:

    @pytest.mark.parametrize("name, order", [
        ("cyclic:4", 2),
        ("cyclic:8", 4),
        ("abelian:2x2", 6),
        ("sym:3", 6),
        ("dih:4", 8),
        ("quaternion", 24),
        ("sym:4", 24),
        ("abelian:3x3", 48),
    ])
    def test_orders(self, name, order):
        """Test automorphism group orders of small groups."""
        assert automorphism_group(build_group(name)).order == order

    def test_alt5(self):
        """Test that Aut(A5) is S5."""
        assert automorphism_group(build_group("alt:5")).order == 120

    def test_listing(self):
        """Test listing Aut(S3) element by element."""
        G = symmetric_group(3)
        aut = automorphism_group(G)
        elements = aut.as_list()
        assert len(elements) == 6
        assert len(set(elements)) == 6
        assert all(is_automorphism(G, a.perm) for a in elements)

    def test_listing_cap(self):
        """Test that listing stops at the element cap."""
        aut = automorphism_group(build_group("quaternion"))
        with pytest.raises(ResourceLimitError):
            aut.as_list(cap=10)

    def test_membership(self):
        """Test stabiliser-chain membership for automorphisms and non-automorphisms."""
        G = build_group("quaternion")
        aut = automorphism_group(G)
        assert all(aut.contains(a.perm) for a in inner_automorphisms(G))
        swapped = np.arange(G.order)
        swapped[[1, 2]] = swapped[[2, 1]]
        assert not aut.contains(swapped)

    def test_order_cap(self):
        """Test that an automorphism group above the cap is rejected."""
        with pytest.raises(ResourceLimitError):
            automorphism_group(symmetric_group(3), cap=4)

    def test_base_must_generate(self):
        """Test that a base which does not generate G is rejected."""
        with pytest.raises(AutomorphismError):
            automorphism_group(build_cyclic(6), generators=[2])

    def test_to_dict(self):
        """Test serialising the stabiliser chain."""
        data = automorphism_group(build_group("abelian:2x2")).to_dict()
        assert data["order"] == 6
        assert len(data["base"]) == 2
        assert np.prod(data["basic_orbit_lengths"]) == 6

    def test_orbit_of(self):
        """Test orbits of points under a set of permutations."""
        swap = np.array([0, 2, 1, 3])
        assert orbit_of([1], [swap], 4).tolist() == [1, 2]
        assert orbit_of([3], [swap], 4).tolist() == [3]


class TestCentralAutomorphisms:

    def test_centreless_group(self):
        """Test that a centreless group has only the identity central automorphism."""
        G = symmetric_group(3)
        central = central_automorphisms(G)
        assert len(central) == 1
        assert central[0].is_identity()
        assert aut_index_central(G) == 6

    def test_quaternion(self):
        """Test central automorphisms of Q8."""
        G = build_group("quaternion")
        assert central_automorphism_count(G) == 4
        assert aut_index_central(G) == 6

    def test_abelian_groups_are_all_central(self):
        """Test that every automorphism of an abelian group is central."""
        assert aut_index_central(build_cyclic(4)) == 1
        assert len(central_automorphisms(build_group("abelian:2x2"))) == 6

    def test_g1_counts(self):
        """Test central homomorphism and automorphism counts for G_1."""
        G = build_group("Gn:1")
        homs = CentralHomomorphisms(G)
        assert homs.count == 64
        assert central_automorphism_count(G) == 64
        assert aut_index_central(G) == 2

    def test_central_automorphisms_preserve_centre_cosets(self):
        """Test that g^-1 a(g) lies in the centre for central automorphisms."""
        G = build_group("Gn:1")
        homs = CentralHomomorphisms(G)
        zeta = set(homs.zeta.members.tolist())
        for a in central_automorphisms(G):
            for g in range(G.order):
                assert G.product(int(G.inv[g]), a(g)) in zeta

    def test_limit(self):
        """Test the enumeration limit on central automorphisms."""
        with pytest.raises(ResourceLimitError):
            central_automorphisms(build_group("Gn:1"), limit=10)
        with pytest.raises(ResourceLimitError):
            central_automorphism_count(build_group("Gn:1"), limit=10)

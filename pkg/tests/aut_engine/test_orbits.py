"""
Tests for automorphism orbits, maol and isomorphism testing.
"""
import numpy as np
import pytest

from src.group_core.abelian import independent_tuples
from src.group_core.constructions import build_cyclic, symmetric_group
from src.group_core.subgroups import center, generate
from src.aut_engine.group import automorphism_group
from src.aut_engine.isomorphism import are_isomorphic, find_isomorphism
from src.aut_engine.orbits import (
    OrbitPartition,
    aut_orbits,
    diagonal_orbits,
    is_characteristic,
    is_miller_group,
    maol,
    orbit_count,
)
from src.aut_engine.search import fingerprint
from src.theory_checks.corpus import GOLDEN_MAOL, build_group


class TestOrbitPartition:

    def test_sorting(self):
        """Test that orbit partitions are normalised and sorted."""
        partition = OrbitPartition([[3, 1], [0], [2]])
        assert partition.orbits == [[0], [1, 3], [2]]
        assert partition.lengths == [1, 2, 1]
        assert partition.maol == 2
        assert partition.orbit_of(3) == [1, 3]
        assert partition.to_dict() == {"orbits": [[0], [1, 3], [2]], "maol": 2}

    def test_klein_group(self):
        """Test that Aut(V4) is transitive on the involutions."""
        partition = aut_orbits(build_group("abelian:2x2"))
        assert partition.lengths == [1, 3]

    def test_cyclic_six(self):
        """Test the orbits of Z/6 by element order."""
        G = build_cyclic(6)
        partition = aut_orbits(G)
        assert partition.orbits == [[0], [1, 5], [2, 4], [3]]
        assert orbit_count(G) == 4

    def test_orbits_cover_group(self):
        """Test that orbits partition S4 with the identity alone first."""
        G = symmetric_group(4)
        partition = aut_orbits(G)
        covered = sorted(g for orbit in partition.orbits for g in orbit)
        assert covered == list(range(G.order))
        assert partition.orbits[0] == [0]


@pytest.mark.parametrize("name", [name for name in GOLDEN_MAOL if name != "alt:5"])
def test_golden_maol(name):
    """Test maol against known values."""
    assert maol(build_group(name)) == GOLDEN_MAOL[name]


def test_alt5_maol():
    """Test that the 5-cycles of A5 form the largest orbit."""
    assert maol(build_group("alt:5")) == 24


def test_extraspecial_maol():
    """Test maol of the extraspecial groups of order 27."""
    assert maol(build_group("extraspecial:27:exp3")) == 24
    assert maol(build_group("extraspecial:27:exp9")) == 18


def test_gn_maol():
    """Test maol of G_1."""
    assert maol(build_group("Gn:1")) == 8


@pytest.mark.parametrize("name,aut_order", [("cyclic:6", 2), ("abelian:2x2", 6), ("sym:3", 6), ("quaternion", 24),
                                            ("dih:4", 8), ("alt:4", 24), ("sym:4", 24), ("abelian:3x3", 48)])
def test_orbit_lengths_divide_aut_order(name, aut_order):
    """Every orbit length divides |Aut(G)|."""
    G = build_group(name)
    aut = automorphism_group(G)
    assert aut.order == aut_order
    assert all(aut_order % length == 0 for length in aut_orbits(G, aut).lengths)


class TestInvariants:

    def test_miller_groups(self):
        """Test that groups with noncentral automorphisms are not Miller groups."""
        assert not is_miller_group(build_cyclic(5))
        assert not is_miller_group(symmetric_group(3))
        assert not is_miller_group(build_group("quaternion"))

    def test_characteristic_subgroups(self):
        """Test characteristic and non-characteristic subgroups of S3."""
        G = symmetric_group(3)
        aut = automorphism_group(G)
        assert is_characteristic(center(G), aut)
        transposition = G.labels.index("(0 1)")
        assert not is_characteristic(generate(G, [transposition]), aut)

    def test_diagonal_orbits_on_bases(self):
        """Test that Aut(V4) acts regularly on ordered bases."""
        H = build_group("abelian:2x2")
        aut = automorphism_group(H)
        bases = list(independent_tuples(H, [2, 2]))
        assert diagonal_orbits(bases, aut) == [list(range(6))]

    def test_diagonal_orbits_need_invariant_set(self):
        """Test that a tuple set not closed under Aut is rejected."""
        H = build_group("abelian:2x2")
        with pytest.raises(ValueError):
            diagonal_orbits([(1,)], automorphism_group(H))


class TestIsomorphism:

    def test_isomorphic_pairs(self):
        """Test isomorphic pairs built in different ways."""
        assert are_isomorphic(build_cyclic(6), build_group("abelian:2x3"))
        assert are_isomorphic(build_group("dih:3"), symmetric_group(3))
        assert are_isomorphic(build_group("dih:2x2"), build_group("abelian:2x2x2"))

    def test_non_isomorphic_pairs(self):
        """Test pairs that differ in structure or order."""
        assert not are_isomorphic(symmetric_group(3), build_cyclic(6))
        assert not are_isomorphic(build_group("dih:4"), build_group("quaternion"))
        assert not are_isomorphic(build_cyclic(4), build_cyclic(5))

    def test_map_is_homomorphism(self):
        """Test that the returned map is a bijective homomorphism."""
        G = build_group("dih:3")
        H = symmetric_group(3)
        phi = find_isomorphism(G, H)
        assert phi is not None
        assert sorted(phi.tolist()) == list(range(H.order))
        assert np.array_equal(phi[G.mul], H.mul[phi[:, None], phi[None, :]])

    def test_fingerprint(self):
        """Test that fingerprints agree on isomorphic groups and separate D8 from Q8."""
        assert fingerprint(build_cyclic(6)) == fingerprint(build_group("abelian:2x3"))
        assert fingerprint(build_group("dih:4")) != fingerprint(build_group("quaternion"))

    @pytest.mark.slow
    def test_psl27_representations(self):
        """Test that both constructions of PSL(2,7) are isomorphic."""
        assert are_isomorphic(build_group("psl:7"), build_group("psl:7:deg7"))

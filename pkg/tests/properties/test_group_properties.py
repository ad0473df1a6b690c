"""
Property-based tests over small groups and words.
"""
from functools import lru_cache

from hypothesis import given
from hypothesis import strategies as st

from src.group_core.structure import euler_phi, exponent
from src.group_core.subgroups import conjugacy_classes, mccl
from src.aut_engine.automorphism import is_automorphism
from src.aut_engine.group import automorphism_group
from src.aut_engine.orbits import aut_orbits
from src.pc_presenter.collector import Collector, instantiate
from src.pc_presenter.families import build_Gn
from src.theory_checks.corpus import build_group

SMALL_GROUPS = ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
                "abelian:2x2", "sym:3", "quaternion", "dih:4", "alt:4"]


@lru_cache(maxsize=None)
def group(name):
    return build_group(name)


@lru_cache(maxsize=None)
def aut(name):
    return automorphism_group(group(name))


@lru_cache(maxsize=None)
def g1():
    presentation = build_Gn(1)
    return presentation, instantiate(presentation), Collector(presentation)


group_names = st.sampled_from(SMALL_GROUPS)
aut_factors = st.sampled_from(["cyclic:2", "cyclic:3", "cyclic:4", "abelian:2x2", "sym:3"])


@given(group_names, group_names)
def test_products_satisfy_axioms(left, right):
    """A direct product of two groups is a group of the product order."""
    G = group(f"{left}*{right}")
    assert G.order == group(left).order * group(right).order
    G.check_axioms()


@given(group_names, group_names)
def test_mccl_of_product(left, right):
    """Classes of G x H are products of classes, so mccl multiplies."""
    assert mccl(group(f"{left}*{right}")) == mccl(group(left)) * mccl(group(right))


@given(group_names)
def test_class_sizes_divide_order(name):
    """Conjugacy classes partition G and their sizes divide |G|."""
    G = group(name)
    sizes = conjugacy_classes(G).sizes
    assert sum(sizes) == G.order
    assert all(G.order % size == 0 for size in sizes)


@given(group_names)
def test_strong_generators_are_automorphisms(name):
    """Every strong generator of Aut(G) respects the multiplication table."""
    G = group(name)
    assert all(is_automorphism(G, a.perm) for a in aut(name).generators)


@given(group_names)
def test_orbits_partition_the_group(name):
    """Aut-orbits cover G once, keep element orders and are generator-stable."""
    G = group(name)
    partition = aut_orbits(G, aut(name))
    members = sorted(g for orbit in partition.orbits for g in orbit)
    assert members == list(range(G.order))
    assert partition.orbits[0] == [0]
    for orbit in partition.orbits:
        assert len(set(G.element_orders[orbit].tolist())) == 1
        for a in aut(name).generators:
            assert set(a.perm[orbit].tolist()) == set(orbit)


@given(group_names)
def test_orbit_lengths_divide_aut_order(name):
    """Orbit-stabiliser: every Aut-orbit length divides |Aut(G)|."""
    partition = aut_orbits(group(name), aut(name))
    assert all(aut(name).order % length == 0 for length in partition.lengths)


@given(group_names)
def test_automorphism_listing_is_closed(name):
    """Composing listed automorphisms stays inside the listing."""
    elements = set(aut(name).as_list())
    for a in list(elements)[:6]:
        for b in list(elements)[:6]:
            assert a.after(b) in elements


@given(aut_factors, st.sampled_from(["cyclic:2", "cyclic:3", "cyclic:5", "sym:3"]))
def test_maol_of_product_at_least_product_of_maols(left, right):
    """maol(G x H) >= maol(G) maol(H)."""
    name = f"{left}*{right}"
    product = aut_orbits(group(name), aut(name)).maol
    assert product >= aut_orbits(group(left), aut(left)).maol * aut_orbits(group(right), aut(right)).maol


@given(st.lists(st.sampled_from([2, 3, 4, 5, 6, 8, 9]), min_size=1, max_size=2))
def test_abelian_maol_at_least_phi_of_exponent(orders):
    """An abelian group has an orbit of at least phi(exp G) elements."""
    name = "abelian:" + "x".join(str(m) for m in orders)
    assert aut_orbits(group(name), aut(name)).maol >= euler_phi(exponent(group(name)))


words = st.lists(st.tuples(st.integers(min_value=0, max_value=4), st.integers(min_value=-3, max_value=3)),
                 max_size=12)


@given(words)
def test_collection_matches_table(word):
    """Collecting a word in G_1 gives the element the table multiplies out to."""
    presentation, G, collector = g1()
    strides = presentation.strides()
    expected = G.multiply(G.power(strides[k], e) for k, e in word)
    assert presentation.index_of(collector.collect(word)) == expected


@given(st.integers(min_value=0, max_value=31))
def test_collection_is_idempotent(index):
    """A normal form collects to itself."""
    presentation, _, collector = g1()
    word = presentation.normal_form_of(index)
    assert collector.collect([(k, 1) for k in word.letters()]) == word


@given(st.integers(min_value=0, max_value=31), st.integers(min_value=0, max_value=31))
def test_inverse_in_normal_form(g, h):
    """Collector inverses and products agree with the table of G_1."""
    presentation, G, collector = g1()
    x = presentation.normal_form_of(g)
    assert presentation.index_of(collector.inverse(x)) == int(G.inv[g])
    y = presentation.normal_form_of(h)
    assert collector.multiply(x, y) == presentation.normal_form_of(G.product(g, h))

from __future__ import annotations

import pytest

from veinprune import (
    NotAChain,
    Poset,
    TooLarge,
    UnknownLabel,
    all_chains,
    bridge_edges,
    check_covering_characterization,
    irreducible_chain_family,
    is_irreducible_chain,
    is_vein,
    maximal_irreducible_chains,
    maximal_veins,
    strict_veins,
    vein_family,
)


def test_is_irreducible_chain(yp, b3):
    assert is_irreducible_chain(yp, {"a", "b"})
    assert not is_irreducible_chain(b3, {"{}", "{1}"})
    for x in b3.elements:
        assert is_irreducible_chain(b3, {x})
    with pytest.raises(NotAChain):
        is_irreducible_chain(yp, {"c", "d"})
    with pytest.raises(UnknownLabel):
        is_irreducible_chain(yp, {"zz"})


def test_subchains_of_irreducible_chains(c3, yp):
    # every nonempty subset of an irreducible chain is one too
    assert is_irreducible_chain(c3, {"a", "b", "c"})
    assert is_irreducible_chain(c3, {"a", "c"})
    assert is_irreducible_chain(yp, {"a", "b"})
    assert is_irreducible_chain(yp, {"a"})


def test_covering_characterization_fixtures(yp, b3):
    assert check_covering_characterization(yp, {"a", "b"})
    assert not check_covering_characterization(b3, {"{}", "{1}"})
    assert check_covering_characterization(b3, {"{1}"})


def test_covering_characterization_matches_direct(fx):
    for p in fx.values():
        for chain in all_chains(p):
            assert check_covering_characterization(p, chain) == \
                is_irreducible_chain(p, chain)


def test_covering_characterization_guard():
    wide = Poset.from_relations([f"x{i}" for i in range(17)], [])
    with pytest.raises(TooLarge):
        check_covering_characterization(wide, {"x0"})
    assert check_covering_characterization(wide, {"x0"}, max_maximal_chains=17)


def test_is_vein(yp, b3):
    assert is_vein(yp, {"a", "b"})
    assert not is_vein(yp, {"a", "b", "c"})   # (a, b, d) meets it without containing it
    assert is_vein(yp, {"c"})
    assert not is_vein(b3, {"{}", "{1}"})
    # non-chains and non-convex sets are simply not veins, no error
    assert not is_vein(yp, {"c", "d"})


def test_bridge_edges(yp, c3, b3, vee):
    assert bridge_edges(yp) == {("a", "b")}
    assert bridge_edges(c3) == {("a", "b"), ("b", "c")}
    assert bridge_edges(b3) == frozenset()
    assert bridge_edges(vee) == frozenset()


def test_bridge_edges_are_two_element_veins(fx):
    for p in fx.values():
        twos = {v for v in strict_veins(p) if len(v) == 2}
        assert {tuple(v) for v in twos} == set(bridge_edges(p))


def test_strict_veins_frozen(c3, yp, b3, vee):
    assert strict_veins(c3) == [("a", "b"), ("a", "b", "c"), ("b", "c")]
    assert strict_veins(yp) == [("a", "b")]
    assert strict_veins(b3) == []
    assert strict_veins(vee) == []


def test_strict_veins_modes_agree(fx):
    for p in fx.values():
        assert strict_veins(p, mode="fast") == strict_veins(p, mode="oracle")
    with pytest.raises(ValueError):
        strict_veins(fx["C3"], mode="quick")


def test_maximal_veins_frozen(c3, yp, a2, vee):
    assert maximal_veins(c3) == [("a", "b", "c")]
    assert maximal_veins(yp) == [("a", "b"), ("c",), ("d",)]
    assert maximal_veins(a2) == [("a",), ("b",)]
    assert maximal_veins(vee) == [("a",), ("b",), ("c",)]


def test_maximal_veins_partition(fx):
    for p in fx.values():
        seen = set()
        for v in maximal_veins(p):
            assert not (seen & set(v))
            seen |= set(v)
        assert seen == set(p.elements)


def test_vein_family(yp, b3):
    f = vein_family(yp)
    assert set(f.members) == {
        frozenset({"a"}), frozenset({"b"}), frozenset({"c"}), frozenset({"d"}),
        frozenset({"a", "b"}),
    }
    assert f.is_connectivity()
    assert f.is_point_connected()
    # B3 has no strict veins, so the family is just the singletons
    assert all(len(m) == 1 for m in vein_family(b3).members)


def test_all_chains(c3):
    chains = all_chains(c3)
    assert len(chains) == 7  # every nonempty subset of a 3-chain
    assert ("a", "c") in chains
    wide = Poset.from_relations([f"x{i}" for i in range(17)], [])
    with pytest.raises(TooLarge):
        all_chains(wide)
    assert len(all_chains(wide, max_elements=17)) == 17


def test_irreducible_chain_family(c3, yp):
    f = irreducible_chain_family(c3)
    assert f.is_connectivity()
    assert f.is_point_connected()
    assert frozenset({"a", "c"}) in f.members
    g = irreducible_chain_family(yp)
    assert frozenset({"a", "b"}) in g.members
    assert frozenset({"a", "b", "c"}) not in g.members


def test_maximal_irreducible_chains(c3, yp):
    assert maximal_irreducible_chains(c3) == [("a", "b", "c")]
    assert maximal_irreducible_chains(yp) == [("a", "b"), ("c",), ("d",)]


def test_components_equal_maximal_veins(fx):
    for p in fx.values():
        comps = set(vein_family(p).components())
        assert comps == {frozenset(v) for v in maximal_veins(p)}

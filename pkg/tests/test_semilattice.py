import itertools

import pytest
from hypothesis import given, strategies as st

from semiring_forge import oracles
from semiring_forge.errors import InvalidStructure
from semiring_forge.semilattice import (
    FiniteSemilattice,
    as_lattice,
    automorphisms,
    box_product,
    canonical_form,
    chain,
    diamond,
    dual,
    enumerate_semilattices,
    flat_top,
    has_star_property,
    lattice,
    remove_bottom,
    semilattice,
    semilattice_isomorphism,
    vee,
)


def all_up_to(n):
    for k in range(1, n + 1):
        yield from enumerate_semilattices(k)


def test_rejects_non_associative_table():
    # commutative and idempotent but (0v1)v2 != 0v(1v2)
    rows = [[0, 2, 2], [2, 1, 2], [2, 2, 2]]
    rows[0][1] = rows[1][0] = 0
    with pytest.raises(InvalidStructure):
        semilattice([[0, 0, 2], [0, 1, 1], [2, 1, 2]])


def test_rejects_non_commutative_and_bad_entries():
    with pytest.raises(InvalidStructure):
        semilattice([[0, 1], [0, 1]])
    with pytest.raises(InvalidStructure):
        semilattice([[0, 5], [5, 1]])


def test_chain_order_queries():
    c = chain(4)
    assert c.top == 3
    assert c.least == 0
    assert c.leq(1, 3) and not c.leq(3, 1)
    assert c.downset(2) == (0, 1, 2)
    assert c.upset(2) == (2, 3)
    assert c.coatoms == (2,)
    assert c.unique_lower_neighbor_of_top == 2
    assert all(c.is_join_irreducible(x) for x in range(4))


def test_vee_and_diamond_queries():
    v = vee()
    assert v.top == 2
    assert v.least is None
    assert v.minimal_elements == (0, 1)
    assert v.coatoms == (0, 1)
    assert v.unique_lower_neighbor_of_top is None
    assert not v.is_join_irreducible(2)

    d = diamond()
    assert d.least == 0 and d.top == 3
    assert not d.is_join_irreducible(3)
    lat = as_lattice(d)
    assert lat.meet(1, 2) == 0
    assert lat.meet(1, 3) == 1


def test_leq_rejects_out_of_range():
    with pytest.raises(IndexError):
        chain(3).leq(0, 3)


def test_top_join_irreducible_iff_unique_coatom():
    for sl in all_up_to(5):
        if sl.size == 1:
            assert sl.unique_lower_neighbor_of_top is None
            continue
        assert sl.is_join_irreducible(sl.top) == (sl.unique_lower_neighbor_of_top is not None)


def test_star_property_cases():
    ok, u = has_star_property(chain(1))
    assert ok and u == 0
    for n in range(2, 6):
        ok, u = has_star_property(chain(n))
        assert ok
        assert all(chain(n).join[u][x] != n - 1 for x in range(n - 1))
    assert has_star_property(vee()) == (False, None)
    assert has_star_property(flat_top(3)) == (False, None)


def test_star_property_from_bottom_or_irreducible_top():
    for sl in all_up_to(6):
        ok, _ = has_star_property(sl)
        if sl.least is not None:
            assert ok  # the bottom joins nothing up to the top
        if sl.size > 1 and sl.is_join_irreducible(sl.top):
            assert ok
        if not ok:
            assert sl.least is None


def test_dual_is_an_involution():
    for sl in all_up_to(5):
        if sl.least is None:
            continue
        lat = as_lattice(sl)
        dd = dual(dual(lat))
        assert dd.join == lat.join
        assert dual(lat).bottom == lat.top
        assert dual(lat).top == lat.bottom


def test_remove_bottom_of_chain():
    sl, idx = remove_bottom(as_lattice(chain(3)))
    assert sl.join == chain(2).join
    assert idx == (-1, 0, 1)


def test_box_product_size_and_top():
    for a in all_up_to(4):
        for b in all_up_to(4):
            box = box_product(a, b)
            assert box.sl.size == (a.size - 1) * (b.size - 1) + 1
            assert box.sl.top == box.sl.size - 1
            assert box.classes[a.top][0 if b.size else 0] == box.sl.size - 1


def test_box_with_two_chain_is_identity_up_to_iso():
    for sl in all_up_to(6):
        box = box_product(sl, chain(2))
        assert semilattice_isomorphism(box.sl, sl) is not None


def test_box_vee_chain3_shape():
    box = box_product(vee(), chain(3))
    sl = box.sl
    assert sl.size == 5
    glued = 4
    # two incomparable 2-chains under the glued top
    pairs = box.reps[:-1]
    legs = {}
    for i, (x, y) in enumerate(pairs):
        legs.setdefault(x, []).append((y, i))
    for x, members in legs.items():
        members.sort()
        lo, hi = members[0][1], members[1][1]
        assert sl.leq(lo, hi)
    a0 = legs[0][0][1]
    b0 = legs[1][0][1]
    assert sl.join[a0][b0] == glued
    assert not has_star_property(sl)[0]


def test_box_is_a_quotient_map_on_joins():
    for a in all_up_to(3):
        for b in all_up_to(3):
            box = box_product(a, b)
            cls = box.classes
            for x in range(a.size):
                for y in range(b.size):
                    for u in range(a.size):
                        for v in range(b.size):
                            lhs = box.sl.join[cls[x][y]][cls[u][v]]
                            rhs = cls[a.join[x][u]][b.join[y][v]]
                            assert lhs == rhs


def test_enumeration_counts_match_both_oracles():
    counts = [len(list(enumerate_semilattices(n))) for n in range(1, 6)]
    assert counts == [oracles.semilattice_count_posets(n) for n in range(1, 6)]
    assert counts[:4] == [oracles.semilattice_count_tables(n) for n in range(1, 5)]


def test_enumeration_is_deterministic_and_isomorph_free():
    first = [sl.join for sl in enumerate_semilattices(5)]
    second = [sl.join for sl in enumerate_semilattices(5)]
    assert first == second
    reps = list(enumerate_semilattices(5))
    for a, b in itertools.combinations(reps, 2):
        assert semilattice_isomorphism(a, b) is None
    for sl in reps:
        semilattice(sl.join)  # validates


def test_isomorphism_and_automorphisms():
    assert semilattice_isomorphism(chain(3), vee()) is None
    assert len(automorphisms(chain(5))) == 1
    assert len(automorphisms(vee())) == 2
    assert len(automorphisms(flat_top(3))) == 6


@given(st.data())
def test_canonical_form_is_relabeling_invariant(data):
    reps = list(all_up_to(5))
    sl = data.draw(st.sampled_from(reps))
    perm = data.draw(st.permutations(range(sl.size)))
    relabeled = [[0] * sl.size for _ in range(sl.size)]
    for i in range(sl.size):
        for j in range(sl.size):
            relabeled[perm[i]][perm[j]] = perm[sl.join[i][j]]
    other = semilattice(relabeled)
    assert canonical_form(other) == canonical_form(sl)
    iso = semilattice_isomorphism(sl, other)
    assert iso is not None
    assert all(other.join[iso[i]][iso[j]] == iso[sl.join[i][j]]
               for i in range(sl.size) for j in range(sl.size))


@given(st.data())
def test_join_is_least_upper_bound(data):
    reps = list(all_up_to(5))
    sl = data.draw(st.sampled_from(reps))
    x = data.draw(st.integers(0, sl.size - 1))
    y = data.draw(st.integers(0, sl.size - 1))
    j = sl.join[x][y]
    assert sl.leq(x, j) and sl.leq(y, j)
    for z in range(sl.size):
        if sl.leq(x, z) and sl.leq(y, z):
            assert sl.leq(j, z)


def test_lattice_requires_least():
    with pytest.raises(InvalidStructure):
        lattice(vee().join)

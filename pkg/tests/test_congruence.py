"""Membership, image enumeration, coset tables, and abelianizations."""

from random import Random

import pytest

from braidcong.congruence import (
    LimitExceeded,
    abelianization,
    artin_relators,
    conjugation_action,
    coset_table,
    decode_matrix,
    divisibility_check,
    encode_matrix,
    enumerate_image,
    image_center,
    is_member,
    letter_order,
    subgroup_coordinates,
)
from braidcong.burau import burau_matrix_mod
from braidcong.matrices import mat_mul
from braidcong.words import (
    BraidWord,
    full_twist,
    pair_count,
    permutation,
    pure_generator,
    random_pure_word,
    random_word,
)

# frozen from the reference implementation: BFS numbering of the mod-2 image
# at n=3 (letter order sigma_1, sigma_1^-1, sigma_2, sigma_2^-1)
GOLDEN_32_ELEMENTS = (
    "010000000100000001",
    "000100010000000001",
    "010000000001000100",
    "000001010000000100",
    "000100000001010000",
    "000001000100010000",
)
GOLDEN_32_ACTION = (
    (1, 1, 2, 2),
    (0, 0, 3, 3),
    (4, 4, 0, 0),
    (5, 5, 1, 1),
    (2, 2, 5, 5),
    (3, 3, 4, 4),
)
GOLDEN_32_TRANSVERSALS = ((), (1,), (2,), (1, 2), (2, 1), (1, 2, 1))


def test_membership_basics():
    assert is_member(BraidWord(3, ()), 2)
    assert is_member(BraidWord(3, (1, 1)), 2)
    assert not is_member(BraidWord(3, (1,)), 2)
    assert is_member(BraidWord(4, (2,) * 6), 3)
    assert not is_member(BraidWord(4, (2,) * 6), 4)


def test_level_two_is_purity():
    rng = Random(701)
    for _ in range(150):
        n = rng.randint(3, 6)
        w = random_word(rng, n, 30)
        assert is_member(w, 2) == permutation(w).is_identity()


def test_matrix_encoding_round_trip():
    rng = Random(702)
    for _ in range(40):
        n = rng.randint(3, 6)
        m = rng.randint(2, 300)
        a = burau_matrix_mod(random_word(rng, n, 15), m)
        assert decode_matrix(encode_matrix(a), n, m) == a


def test_letter_order():
    assert letter_order(3) == (1, -1, 2, -2)
    assert letter_order(4) == (1, -1, 2, -2, 3, -3)


def test_enumeration_golden_numbering():
    """The breadth-first numbering is part of the contract; pin it."""
    g = enumerate_image(3, 2)
    assert g.letters == (1, -1, 2, -2)
    assert tuple(e.hex() for e in g.elements) == GOLDEN_32_ELEMENTS
    assert g.edges[0] == (1, 1, 2, 2)


def test_image_orders():
    assert enumerate_image(3, 2).size == 6
    assert enumerate_image(4, 2).size == 24
    assert enumerate_image(5, 2).size == 120
    assert enumerate_image(3, 3).size == 24
    assert enumerate_image(3, 5).size == 120


def test_enumeration_respects_cap():
    with pytest.raises(LimitExceeded) as err:
        enumerate_image(3, 3, element_cap=10)
    assert err.value.partial == 10


def test_enumeration_is_closed_under_generators():
    g = enumerate_image(3, 3)
    for k, edges in enumerate(g.edges):
        for pos, target in enumerate(edges):
            expect = g.matrix(k) * g.generator_images[pos]
            assert g.matrix(target) == expect


def test_image_center():
    g = enumerate_image(3, 3)
    center = image_center(g)
    assert len(center) == 2
    assert 0 in center
    others = [k for k in center if k != 0]
    assert g.matrix(others[0]) == burau_matrix_mod(full_twist(3), 3)


def test_image_center_level_two_is_trivial():
    center = image_center(enumerate_image(3, 2))
    assert center == (0,)


def test_image_center_contains_full_twist_at_four_strands():
    g = enumerate_image(4, 3)
    assert g.size == 648
    center = image_center(g)
    assert len(center) == 3
    twist = burau_matrix_mod(full_twist(4), 3)
    assert any(g.matrix(k) == twist for k in center)


def test_coset_table_layout():
    t = coset_table(3, 2)
    assert t.size == 6
    assert t.action == GOLDEN_32_ACTION
    assert t.transversals == GOLDEN_32_TRANSVERSALS
    # public interface is 1-based with coset 1 the subgroup itself
    assert t.apply(1, 1) == 2
    assert t.apply(1, 2) == 3
    assert t.apply(2, -1) == 1


def test_coset_table_transversals_reach_their_cosets():
    for (n, m) in [(3, 2), (3, 3), (4, 2)]:
        t = coset_table(n, m)
        for coset in range(1, t.size + 1):
            assert t.trace(1, t.transversal(coset)) == coset
        rng = Random(703)
        for _ in range(30):
            w = random_word(rng, n, 20)
            coset = t.trace(1, w)
            assert 1 <= coset <= t.size
            # tracing the inverse word walks back to the subgroup
            assert t.trace(coset, w.inverse()) == 1


def test_artin_relators_are_trivial_everywhere():
    for n in (3, 4):
        t = coset_table(n, 2)
        for rel in artin_relators(n):
            for coset in range(1, t.size + 1):
                assert t.trace(coset, rel) == coset


def test_generator_powers_stabilize_the_subgroup_coset():
    t = coset_table(3, 3)
    for i in (1, 2):
        assert t.trace(1, BraidWord(3, (i,) * 3)) == 1
        assert t.trace(1, BraidWord(3, (i,))) != 1


def test_subgroup_coordinates_additive_on_members():
    t = coset_table(3, 2)
    rng = Random(704)
    for _ in range(40):
        u = random_pure_word(rng, 3, factors=2)
        v = random_pure_word(rng, 3, factors=2)
        cu = subgroup_coordinates(t, u)
        cv = subgroup_coordinates(t, v)
        cuv = subgroup_coordinates(t, u * v)
        assert cuv == tuple(a + b for a, b in zip(cu, cv))
    with pytest.raises(ValueError):
        subgroup_coordinates(t, BraidWord(3, (1,)))


def test_abelianization_level_two_matches_pure_braid_rank():
    """Independent oracle: the pure braid group abelianizes to Z^(pairs)."""
    for n in (3, 4):
        ab = abelianization(n, 2)
        assert ab.free_rank == pair_count(n)
        assert ab.invariant_factors == ()


def test_abelianization_known_ranks():
    ab = abelianization(3, 3)
    assert (ab.table.size, ab.free_rank, ab.invariant_factors) == (24, 4, ())
    ab = abelianization(3, 4)
    assert (ab.table.size, ab.free_rank, ab.invariant_factors) == (48, 6, ())


def test_abelianization_respects_coset_cap():
    with pytest.raises(LimitExceeded):
        abelianization(3, 3, coset_cap=5)


def test_class_vector_of_pure_words_matches_linking_numbers():
    # at level 2 the subgroup is the pure braid group and the free part of
    # the abelianization is spanned by the strand pair linking numbers
    ab = abelianization(3, 2)
    rng = Random(705)
    from braidcong.words import linking_vector

    unit_images = {}
    for p_idx, p in enumerate(
        [(1, 2), (1, 3), (2, 3)]
    ):
        w = pure_generator(3, *p)
        unit_images[p_idx] = ab.free_coordinates(subgroup_coordinates(ab.table, w))
    for _ in range(25):
        w = random_pure_word(rng, 3, factors=2)
        lv = linking_vector(w)
        x = ab.free_coordinates(subgroup_coordinates(ab.table, w))
        expect = tuple(
            sum(lv.coords[i] * unit_images[i][c] for i in range(3))
            for c in range(len(x))
        )
        assert x == expect


def test_conjugation_action_central_twist():
    for m in (3, 4):
        ab = abelianization(3, m)
        assert conjugation_action(ab, full_twist(3)).is_identity()


def test_conjugation_action_level_two_faithful_on_cosets():
    ab = abelianization(3, 2)
    assert conjugation_action(ab, ab.table.transversal(1)).is_identity()
    for coset in range(2, 7):
        act = conjugation_action(ab, ab.table.transversal(coset))
        assert not act.is_identity()


def test_conjugation_action_is_multiplicative():
    ab = abelianization(3, 2)
    rng = Random(706)
    for _ in range(12):
        u = random_word(rng, 3, 8)
        v = random_word(rng, 3, 8)
        lhs = conjugation_action(ab, u * v).matrix
        rhs = mat_mul(conjugation_action(ab, u).matrix, conjugation_action(ab, v).matrix)
        assert lhs == rhs


def test_conjugation_by_members_is_trivial():
    # inner automorphisms act trivially on the abelianization
    ab = abelianization(3, 2)
    rng = Random(707)
    for _ in range(10):
        w = random_pure_word(rng, 3, factors=2)
        assert conjugation_action(ab, w).is_identity()


def test_conjugation_action_depends_only_on_the_coset():
    ab = abelianization(3, 2)
    rng = Random(711)
    for _ in range(10):
        w = random_word(rng, 3, 10)
        member = random_pure_word(rng, 3, factors=2)
        assert conjugation_action(ab, w).matrix == conjugation_action(ab, w * member).matrix


def test_conjugation_action_level_two_faithful_on_four_strands():
    ab = abelianization(4, 2)
    assert ab.table.size == 24
    for coset in range(2, ab.table.size + 1):
        assert not conjugation_action(ab, ab.table.transversal(coset)).is_identity()


def test_divisibility_of_levels():
    assert divisibility_check(3, 2, 4, samples=25, seed=708)
    assert divisibility_check(3, 3, 6, samples=15, seed=709)
    assert divisibility_check(4, 2, 6, samples=15, seed=710)
    with pytest.raises(ValueError):
        divisibility_check(3, 4, 6, samples=5)

"""Acceptance gate: thirteen exact criteria, one test (and one line) each.

Every check is integer or modular equality with zero tolerance.  These tests
call the library directly and use their own seeds, independently of the
claim registry behind the verify command.

Criterion 10 contains a sub-check (plain additivity of the power-quotient
reduction off the lattice) that is genuinely false: the reduction obeys a
twisted product rule instead.  The sub-check is asserted faithfully as
stated and is expected to fail; the true rule is covered in test_cryst.py.
"""

import math
from random import Random

from braidcong.burau import (
    burau_matrix,
    burau_matrix_mod,
    check_transvection_model,
    order_mod,
)
from braidcong.congruence import (
    abelianization,
    conjugation_action,
    enumerate_image,
    image_center,
    is_member,
)
from braidcong.cryst import (
    CrystElement,
    in_power_image,
    normal_form,
    power_endomorphism,
    power_map_is_homomorphism,
    power_quotient_class,
)
from braidcong.matrices import is_identity
from braidcong.words import (
    BraidWord,
    LinkingVector,
    full_twist,
    pair_list,
    permutation,
    pure_generator,
    random_pure_word,
    random_word,
    torelli_chain,
)


def test_criterion_01_generator_powers_lie_in_the_kernel():
    for n in range(3, 9):
        for m in range(2, 8):
            for i in range(1, n):
                assert burau_matrix_mod(BraidWord(n, (i,) * m), m).is_identity()


def test_criterion_02_full_twist_orders():
    for n in (3, 5, 7):
        assert order_mod(burau_matrix_mod(full_twist(n), 2)) == 1
        for m in (3, 4, 5, 6, 7):
            assert order_mod(burau_matrix_mod(full_twist(n), m)) == 2
    for n in (4, 6):
        for m in (3, 5, 7):
            assert order_mod(burau_matrix_mod(full_twist(n), m)) == m
        for m in (4, 6):
            assert order_mod(burau_matrix_mod(full_twist(n), m)) == m // 2


def test_criterion_03_level_two_membership_is_purity():
    rng = Random(1003)
    for n in range(3, 7):
        for _ in range(500):
            w = random_word(rng, n, 40)
            assert is_member(w, 2) == permutation(w).is_identity()


def test_criterion_04_squares_of_pure_words_lie_in_level_four():
    rng = Random(1004)
    for n in (3, 4, 5):
        for _ in range(200):
            w = random_pure_word(rng, n, factors=rng.randint(1, 4))
            assert is_member(w * w, 4)


def test_criterion_05_torelli_chain_words_act_trivially():
    for (n, k) in [(3, 2), (4, 2), (5, 2), (5, 4), (6, 4), (7, 4)]:
        assert is_identity(burau_matrix(torelli_chain(n, k)))


def test_criterion_06_image_orders_match_group_order_formulas():
    def sl2_order(p):
        return p * (p - 1) * (p + 1)

    for n in (3, 4, 5):
        assert enumerate_image(n, 2).size == math.factorial(n)
    assert enumerate_image(3, 3).size == sl2_order(3)
    assert enumerate_image(3, 5).size == sl2_order(5)


def test_criterion_07_abelianizations_are_torsion_free_of_known_rank():
    for (m, rank) in [(2, 3), (3, 4), (4, 6)]:
        ab = abelianization(3, m)
        assert ab.free_rank == rank
        assert ab.invariant_factors == ()


def test_criterion_08_conjugation_action_degeneracy_and_faithfulness():
    twist = full_twist(3)
    for m in (3, 4):
        ab = abelianization(3, m)
        assert conjugation_action(ab, twist).is_identity()
    ab = abelianization(3, 2)
    assert ab.table.size == 6
    assert conjugation_action(ab, ab.table.transversal(1)).is_identity()
    for coset in range(2, 7):
        rep = ab.table.transversal(coset)
        assert not conjugation_action(ab, rep).is_identity()


def test_criterion_09_center_and_holonomy_order():
    group = enumerate_image(3, 3)
    center = image_center(group)
    assert len(center) == 2
    nontrivial = [k for k in center if k != 0]
    assert group.matrix(nontrivial[0]) == burau_matrix_mod(full_twist(3), 3)
    assert group.size // len(center) == 12


def test_criterion_10_power_map_structure():
    for (n, m) in [(3, 3), (3, 5), (4, 3), (5, 3)]:
        assert power_map_is_homomorphism(n, m)
        for p in pair_list(n):
            cls = normal_form(pure_generator(n, p.i, p.j))
            want = CrystElement.lattice(LinkingVector.unit(n, p.i, p.j).scaled(m))
            assert power_endomorphism(n, m, cls) == want
    classes = {
        power_quotient_class(3, 3, CrystElement.lattice(LinkingVector(3, (a, b, c))))
        for a in range(3)
        for b in range(3)
        for c in range(3)
    }
    assert len(classes) == 27
    # stated sub-check, asserted faithfully: plain additivity on random pairs.
    # this is genuinely false off the lattice (the reduction is twisted by
    # the pair action of the second factor), so the assertion below fails.
    rng = Random(1010)
    for _ in range(500):
        x = normal_form(random_word(rng, 3, 12))
        y = normal_form(random_word(rng, 3, 12))
        lhs = power_quotient_class(3, 3, x * y)
        rhs = tuple(
            (a + b) % 3
            for a, b in zip(
                power_quotient_class(3, 3, x), power_quotient_class(3, 3, y)
            )
        )
        assert lhs == rhs, "plain additivity fails; see the twisted rule test"


def test_criterion_11_injective_but_not_surjective_power_map():
    assert not in_power_image(3, 3, normal_form(BraidWord(3, (1,))))
    rng = Random(1011)
    for _ in range(1000):
        x = normal_form(random_word(rng, 3, 12))
        y = normal_form(random_word(rng, 3, 12))
        same = power_endomorphism(3, 3, x) == power_endomorphism(3, 3, y)
        assert same == (x == y)


def test_criterion_12_normal_form_soundness():
    rng = Random(1012)
    for _ in range(1000):
        n = rng.randint(3, 6)
        u = random_word(rng, n, 14)
        v = random_word(rng, n, 14)
        assert normal_form(u * v) == normal_form(u) * normal_form(v)
    for _ in range(200):
        n = rng.randint(3, 6)
        p = random_pure_word(rng, n, factors=2)
        q = random_pure_word(rng, n, factors=2)
        assert normal_form(p * q * p.inverse() * q.inverse()).is_identity()
    for _ in range(500):
        n = rng.randint(3, 6)
        g = random_word(rng, n, 10)
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        observed = normal_form(g * pure_generator(n, i, j) * g.inverse())
        pi = permutation(g.inverse())
        assert observed == CrystElement.lattice(LinkingVector.unit(n, pi(i), pi(j)))


def test_criterion_13_transvection_model_agreement():
    for (n, m) in [(3, 2), (3, 3), (5, 2), (5, 3)]:
        assert check_transvection_model(n, m, samples=200, seed=1013)

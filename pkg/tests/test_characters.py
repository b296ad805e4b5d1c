import itertools
from fractions import Fraction

import pytest

from modrep import (
    FormalCharacter,
    InputError,
    alternant,
    casimir_scalar,
    dimension,
    dominant_weights,
    partitions_up_to,
    shift_row,
    tensor_filtration_e,
    tensor_filtration_f,
    verify_pieri,
    verify_weyl_formula,
    weyl_character,
)

BIG = (18, 16, 15, 15, 12, 7, 7, 5, 0, -4, -8, -12, -15, -19)


def weyl_dim_formula(lam, n):
    """Independent dimension oracle: product over i<j of
    (lam_i - lam_j + j - i) / (j - i)."""
    val = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            val *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert val.denominator == 1
    return int(val)


def pad(lam, n):
    return tuple(lam) + (0,) * (n - len(lam))


def test_weyl_character_tautological():
    n = 4
    ch = weyl_character((1, 0, 0, 0), n)
    expected = {tuple(1 if j == i else 0 for j in range(n)): 1 for i in range(n)}
    assert ch.terms == expected


def test_weyl_character_determinant():
    assert weyl_character((1, 1), 2).terms == {(1, 1): 1}


def test_weyl_character_two_boxes():
    assert weyl_character((2, 0), 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_weyl_character_negative_entries():
    # dual of the tautological module for n = 2
    assert weyl_character((0, -1), 2).terms == {(0, -1): 1, (-1, 0): 1}
    # a pure determinant power
    assert weyl_character((-2, -2, -2), 3).terms == {(-2, -2, -2): 1}


def test_weyl_character_symmetry():
    for n in (2, 3):
        for lam in dominant_weights(n, -2, 2):
            ch = weyl_character(lam, n)
            for perm in itertools.permutations(range(n)):
                permuted = {tuple(w[j] for j in perm): m for w, m in ch.terms.items()}
                assert permuted == ch.terms


def test_dimension_against_product_formula():
    for n in (2, 3, 4):
        for lam in dominant_weights(n, -2, 3):
            assert dimension(weyl_character(lam, n)) == weyl_dim_formula(lam, n)


def test_alternant_two_terms():
    assert alternant((1, 0), 2).terms == {(1, 0): 1, (0, 1): -1}
    assert alternant((2, 1), 2).terms == {(2, 1): 1, (1, 2): -1}


def test_alternant_repeated_entry_vanishes():
    assert not alternant((1, 1), 2)
    assert not alternant((3, 0, 0), 3)


def test_verify_weyl_formula_examples():
    assert verify_weyl_formula((1, 0), 2)
    assert verify_weyl_formula((0, 0, 0), 3)
    assert verify_weyl_formula((2, 1, 0), 3)
    assert verify_weyl_formula((3, 1, -2), 3)


def test_dimension_examples():
    assert dimension(weyl_character((1, 0, 0), 3)) == 3
    assert dimension(weyl_character((2, 0), 2)) == 3
    assert dimension(weyl_character((1, 1, 0), 3)) == 3


def test_dimension_rejects_signed():
    with pytest.raises(InputError):
        dimension(alternant((1, 0), 2))


def test_filtration_f_examples():
    assert tensor_filtration_f((1, 0)) == [(2, 0), (1, 1)]
    assert tensor_filtration_f((1, 0, 0), alpha=1, p=3) == [(2, 0, 0)]
    rows_hit = [shift_row(BIG, i, +1) for i in (6, 9, 10, 11, 12)]
    assert tensor_filtration_f(BIG, alpha=2, p=5) == rows_hit


def test_filtration_e_examples():
    # removed-box contents lam_i - i congruent to 2 mod 5 on the big weight
    rows_hit = [shift_row(BIG, i, -1) for i in (14, 13, 8, 5, 1)]
    assert tensor_filtration_e(BIG, alpha=2, p=5) == rows_hit
    assert tensor_filtration_e((1, 1)) == [(1, 0)]


def test_filtration_residues_partition_the_whole():
    for p in (3, 5):
        for n in (2, 3, 4):
            for lam in dominant_weights(n, -3, 3):
                full = tensor_filtration_f(lam)
                pieces = [m for a in range(p) for m in tensor_filtration_f(lam, a, p)]
                assert sorted(pieces) == sorted(full)
                full_e = tensor_filtration_e(lam)
                pieces_e = [m for a in range(p) for m in tensor_filtration_e(lam, a, p)]
                assert sorted(pieces_e) == sorted(full_e)


def test_verify_pieri_examples():
    assert verify_pieri((1, 0), 2)
    assert verify_pieri((0, 0, 0), 3)
    assert verify_pieri((2, 1, 0), 3)


def test_verify_pieri_grid():
    for n in (1, 2, 3, 4):
        for lam in dominant_weights(n, 0, 4):
            assert verify_pieri(lam, n)


def test_casimir_scalar():
    for n in (1, 2, 5):
        assert casimir_scalar((1,) + (0,) * (n - 1), n) == n
        assert casimir_scalar((0,) * n, n) == 0


def test_casimir_scalar_step_identity():
    # adding one box in row i changes the scalar by n + 2 (lam_i + 1 - i)
    from modrep import addable_rows
    for n in (2, 3, 4):
        for lam in dominant_weights(n, -2, 2):
            for i in addable_rows(lam):
                mu = shift_row(lam, i, +1)
                assert (casimir_scalar(mu, n) - casimir_scalar(lam, n)
                        == n + 2 * (lam[i - 1] + 1 - i))


def test_character_json_canonical():
    ch = weyl_character((2, 0), 2)
    assert ch.to_json_obj() == [
        {"weight": [0, 2], "mult": 1},
        {"weight": [1, 1], "mult": 1},
        {"weight": [2, 0], "mult": 1},
    ]


def test_character_arithmetic_guards():
    with pytest.raises(InputError):
        weyl_character((2, 0), 2) + weyl_character((1, 0, 0), 3)
    with pytest.raises(InputError):
        FormalCharacter(2, {(1, 0, 0): 1})


def test_weyl_formula_small_partitions():
    for n in (2, 3):
        for lam in partitions_up_to(4, max_rows=n):
            assert verify_weyl_formula(pad(lam, n), n)

"""Numeric character tables and the tensor-induction identities."""

import numpy as np
import pytest

from xnx1.asai import (
    CharacterError,
    ClassFunction,
    asai_transfer,
    build_gl2_f3,
    character_table,
    chi_from_lemma,
    degree2_irreducibles,
    inner_product,
    predicted_hilbert_product,
    sign_kernel_subgroup,
    theta_std,
    verify_cor_asai,
    verify_n4_identity,
    verify_prop_asai,
)
from xnx1.groups import s5_labels_by_class, s5_sign, scalar_matrix


def test_character_table_sl2f5(group1):
    H = sign_kernel_subgroup(group1)
    assert H.n == 120  # SL_2(F_5)
    table = character_table(H)
    assert sorted(table.degrees) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    table.validate()


def test_character_table_order240(group2):
    H = sign_kernel_subgroup(group2)
    assert H.n == 240
    table = character_table(H)
    assert table.degrees.count(2) == 4
    assert sum(d * d for d in table.degrees) == 240
    # all degree-2 characters are faithful on -I (central character -1)
    F = group2.field
    minus_one = scalar_matrix(F, F.element(-1))
    for eta in degree2_irreducibles(table):
        assert abs(eta.at(minus_one) + 2) < 1e-6


def test_character_table_deterministic(group1):
    H = sign_kernel_subgroup(group1)
    t1 = character_table(H, seed=999)
    t2 = character_table(H, seed=999)
    for a, b in zip(t1.characters, t2.characters):
        assert np.allclose(a.values, b.values)


def test_inner_product_orthonormality(group1):
    H = sign_kernel_subgroup(group1)
    table = character_table(H)
    for i, a in enumerate(table.characters):
        for j, b in enumerate(table.characters):
            ip = inner_product(a, b)
            assert abs(ip - (1 if i == j else 0)) < 1e-6


def test_asai_transfer_rejects_inside_g0(group2):
    H = sign_kernel_subgroup(group2)
    table = character_table(H)
    psi = degree2_irreducibles(table)[0]
    with pytest.raises(CharacterError):
        asai_transfer(psi, group2, group2.identity)


def test_chi_from_lemma_is_det_sgn(group2):
    """With the inverse central character of a degree-2 irreducible, the
    lemma's character coincides with det*sgn on every class."""
    from xnx1.groups import character_values, center

    H = sign_kernel_subgroup(group2)
    psi = degree2_irreducibles(character_table(H))[0]
    cen = center(group2)
    alpha = {c: 1 / ((psi.at(c) / 2) ** 2) for c in cen}
    chi = chi_from_lemma(group2, alpha, lambda lab: s5_sign(lab))
    for ci, members in enumerate(group2.conjugacy_classes()):
        rep = group2.elements[members[0]]
        expected = character_values(group2, rep)["det*sgn"]
        assert abs(chi.values[ci] - expected) < 1e-6


def test_chi_from_lemma_requires_alpha_trivial_on_minus_one(group2):
    from xnx1.groups import center

    F = group2.field
    cen = center(group2)
    alpha = {c: -1.0 for c in cen}
    with pytest.raises(CharacterError):
        chi_from_lemma(group2, alpha, lambda lab: 1)


def test_theta_std_values(group2):
    theta = theta_std(group2)
    labels = s5_labels_by_class(group2)
    assert theta.degree == 4
    for v, lab in zip(theta.values, labels):
        assert v.real == {"(1)": 4, "(1,4)": 2, "(2,5)(3,4)": 0, "(1,4,5)": 1,
                          "(1,5)(2,3,4)": -1, "(1,2,5,3)": 0,
                          "(1,3,5,4,2)": -1}[lab]


@pytest.mark.parametrize("r", [1, 2])
def test_prop_asai(group1, group2, r):
    G = group1 if r == 1 else group2
    rep = verify_prop_asai(G, r)
    assert rep.ok, rep.render()


def test_cor_asai(group2):
    rep = verify_cor_asai(group2)
    assert rep.ok, rep.render()


def test_n4_identity():
    rep = verify_n4_identity()
    assert rep.ok, rep.render()


def test_gl2_f3_order():
    assert build_gl2_f3().n == 48


def test_predicted_hilbert_product_values():
    assert predicted_hilbert_product("(1)", 1) == 4
    assert predicted_hilbert_product("(1)", -1) == -4
    assert predicted_hilbert_product("(1,3,5,4,2)", 1) == -1
    assert predicted_hilbert_product("(1,4)", -1) == -2
    assert predicted_hilbert_product("(1,2,5,3)", -1) == 0
    with pytest.raises(CharacterError):
        predicted_hilbert_product("(1)", 0)

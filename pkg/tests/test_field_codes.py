"""Field code family tests with frozen reference generators."""

import pytest

from madics import poly
from madics.errors import QNotResidue
from madics.ffield import make_prime_field
from madics.field_codes import FAMILIES, all_ones_h, family_codes, splitting_field
from madics.residues import build_residue_system

F3 = make_prime_field(3)
F7 = make_prime_field(7)

# six degree-16 generators for q=7, p=19, m=6, transcribed ascending
REF_GENERATORS_Q7_P19_M6 = {
    (1, 4, 6, 6, 3, 0, 4, 5, 1, 0, 2, 2, 2, 4, 5, 3, 1),
    (1, 3, 1, 1, 5, 1, 6, 1, 5, 6, 0, 6, 3, 3, 5, 1, 1),
    (1, 0, 5, 1, 4, 3, 0, 5, 3, 4, 6, 2, 6, 2, 4, 2, 1),
    (1, 3, 5, 4, 2, 2, 2, 0, 1, 5, 4, 0, 3, 6, 6, 4, 1),
    (1, 1, 5, 3, 3, 6, 0, 6, 5, 1, 6, 1, 5, 1, 1, 3, 1),
    (1, 2, 4, 2, 6, 2, 6, 4, 3, 5, 0, 3, 4, 1, 5, 0, 1),
}


def test_even_like_generators_q7_p19_m6_frozen():
    system = build_residue_system(19, 6)
    codes = family_codes(system, F7, "even-I")
    assert {c.generator for c in codes} == REF_GENERATORS_Q7_P19_M6


def test_family_degrees():
    # deg ghat = (p-1)/m; even-I = p - that; class II off by one
    for q, p, m in ((3, 13, 4), (7, 19, 6), (3, 13, 2), (7, 19, 3)):
        system = build_residue_system(p, m)
        ctx = make_prime_field(q)
        card = (p - 1) // m
        degs = {
            "even-I": p - card,
            "odd-I": card,
            "even-II": card + 1,
            "odd-II": p - card - 1,
        }
        for fam in FAMILIES:
            for c in family_codes(system, ctx, fam):
                assert len(c.generator) - 1 == degs[fam]
                assert c.dimension == p - degs[fam]


def test_generators_divide_xp_minus_1():
    system = build_residue_system(13, 4)
    xp1 = poly.xn_minus_1(F3, 13)
    for fam in FAMILIES:
        for c in family_codes(system, F3, fam):
            assert poly.divides(F3, c.generator, xp1)


def test_class_i_complement_product():
    # g_i * ghat_i = x^p - 1
    system = build_residue_system(13, 4)
    xp1 = poly.xn_minus_1(F3, 13)
    evens = family_codes(system, F3, "even-I")
    odds = family_codes(system, F3, "odd-I")
    for e, o in zip(evens, odds):
        assert poly.mul(F3, e.generator, o.generator) == xp1


def test_class_ii_x_minus_1_relation():
    # h_i = (x-1) ghat_i and hhat_i = g_i/(x-1)
    system = build_residue_system(13, 4)
    x_minus_1 = (F3.neg(F3.one), F3.one)
    odd1 = family_codes(system, F3, "odd-I")
    even2 = family_codes(system, F3, "even-II")
    even1 = family_codes(system, F3, "even-I")
    odd2 = family_codes(system, F3, "odd-II")
    for o1, e2 in zip(odd1, even2):
        assert e2.generator == poly.mul(F3, x_minus_1, o1.generator)
    for e1, o2 in zip(even1, odd2):
        assert poly.mul(F3, x_minus_1, o2.generator) == e1.generator


def test_idempotent_properties():
    for q, p, m in ((3, 13, 4), (7, 19, 6)):
        system = build_residue_system(p, m)
        ctx = make_prime_field(q)
        xp1 = poly.xn_minus_1(ctx, p)
        for fam in FAMILIES:
            for c in family_codes(system, ctx, fam):
                assert poly.mul_mod(ctx, c.idempotent, c.idempotent, p) == \
                    c.idempotent
                assert poly.associates(
                    ctx, poly.gcd(ctx, c.idempotent, xp1), c.generator)


def test_even_like_codes_vanish_at_one():
    system = build_residue_system(13, 4)
    for fam in ("even-I", "even-II"):
        for c in family_codes(system, F3, fam):
            assert poly.eval_poly(F3, c.generator, F3.one) == F3.zero
    for fam in ("odd-I", "odd-II"):
        for c in family_codes(system, F3, fam):
            assert poly.eval_poly(F3, c.generator, F3.one) != F3.zero


def test_contains():
    system = build_residue_system(13, 4)
    code = family_codes(system, F3, "even-I")[0]
    assert code.contains(code.generator)
    shifted = (0,) + code.generator
    assert code.contains(shifted)
    assert not code.contains((1,))
    assert code.contains(())


def test_q_must_be_residue():
    system = build_residue_system(7, 3)
    with pytest.raises(QNotResidue):
        family_codes(system, make_prime_field(2), "even-I")


def test_alpha_exp_rotates_labels():
    # a different p-th root permutes the class labeling but not the set
    system = build_residue_system(13, 4)
    base = {c.generator for c in family_codes(system, F3, "even-I")}
    for u in (2, 5, 7):
        relabeled = {c.generator
                     for c in family_codes(system, F3, "even-I", u)}
        assert relabeled == base


def test_idempotents_supported_on_classes():
    # even-I idempotents are class-sum combinations plus constant
    system = build_residue_system(13, 4)
    for c in family_codes(system, F3, "even-I"):
        e = list(c.idempotent) + [0] * (13 - len(c.idempotent))
        for i, cls in enumerate(system.classes):
            vals = {e[k] for k in cls}
            assert len(vals) == 1


def test_splitting_field_root_order():
    ext, alpha = splitting_field(3, 13)
    assert ext.multiplicative_order(alpha) == 13
    ext7, alpha7 = splitting_field(7, 19)
    assert ext7.multiplicative_order(alpha7) == 19


def test_all_ones_h():
    assert all_ones_h(5) == (1, 1, 1, 1, 1)

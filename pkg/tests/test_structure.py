import random

import pytest

from superdegen.linalg import FIELD_C8, Matrix
from superdegen.structure import (AxiomError, NotInGroup, StructureConstants, axioms_ok,
                                  check_axioms, cn_structure, forget_grading, grading_split,
                                  random_group_element, transport, transport_algebra, validate,
                                  with_trivial_grading)


def test_field_itself_passes():
    # n = 1: alpha = (1), gamma = (1)
    sc = StructureConstants(1, [[[1]]], [[1]], FIELD_C8)
    assert axioms_ok(check_axioms(sc))


def test_catalog_entries_pass_axioms(catalog):
    sc = catalog.get("(10|1)")
    report = check_axioms(sc)
    assert axioms_ok(report)


def test_perturbed_constants_fail_associativity(catalog):
    sc = catalog.get("(1|0)")
    alpha = [[list(row) for row in plane] for plane in sc.alpha]
    alpha[1][1][0] = alpha[1][1][0] + 1  # perturb one product constant
    bad = StructureConstants(4, alpha, sc.gamma, FIELD_C8)
    report = check_axioms(bad)
    assert report[3], "associativity violations expected"
    with pytest.raises(AxiomError):
        validate(bad)


def test_nonunital_mode_checks_three_families(catalog):
    sc = catalog.get("(7|2)")
    report = check_axioms(sc, unital=False)
    assert set(report) == {3, 5, 6}
    assert axioms_ok(report)


def test_grading_split_examples(catalog):
    assert grading_split(catalog.get("(7|2)")).dim0 == 2
    assert grading_split(catalog.get("(9|3)")).dim0 == 1
    triv = with_trivial_grading(catalog.get("(1|0)").alpha, FIELD_C8)
    assert grading_split(triv).dim0 == 4


def test_transport_identity_and_group_guard(catalog):
    sc = catalog.get("(9|2)")
    ident = Matrix.identity(4, FIELD_C8)
    assert transport(ident, sc) == sc
    bad = Matrix.from_rows([[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], FIELD_C8)
    with pytest.raises(NotInGroup):
        transport(bad, sc)  # first column must stay e_1


def test_transport_swap_of_odd_vectors(catalog):
    # swapping the two odd basis vectors of (9|2) permutes indices 3 and 4
    sc = catalog.get("(9|2)")
    g = Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], FIELD_C8)
    moved = transport(g, sc)
    assert moved.validated
    assert moved == sc  # all radical products vanish, so the swap is invisible


def test_transport_scaling_invisible_on_square_zero(catalog):
    sc = cn_structure(4, 2)
    g = Matrix.from_rows([[1, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]], FIELD_C8)
    assert transport(g, sc) == sc


def test_variety_is_stable_under_transport(catalog):
    # 200 random basis changes spread over a handful of entries: the
    # transported constants must satisfy the defining equations every time
    rng = random.Random(77)
    labels = ("(10|1)", "(13|1)", "(7|1)", "(18;l|1)", "(11|3)", "(19|1)", "(1|2)", "(14|2)")
    for k in range(200):
        sc = catalog.get(labels[k % len(labels)])
        g = random_group_element(rng, 4, sc.field)
        moved = transport(g, sc)  # validate() inside raises on any violation
        assert moved.validated


def test_forget_and_embed_round_trip(catalog):
    sc = catalog.get("(13|1)")
    alpha = forget_grading(sc)
    back = with_trivial_grading(alpha, FIELD_C8)
    assert back.alpha == alpha
    assert grading_split(back).dim0 == 4
    assert back.gamma_matrix().determinant() == 1


def test_embed_equivariance(catalog):
    # transporting then embedding equals embedding then transporting
    rng = random.Random(5)
    alpha = catalog.get("(10|0)").alpha
    for _ in range(5):
        g = random_group_element(rng, 4)
        left = with_trivial_grading(transport_algebra(g, alpha, FIELD_C8), FIELD_C8)
        right = transport(g, with_trivial_grading(alpha, FIELD_C8))
        assert left == right


def test_forget_equivariance(catalog):
    rng = random.Random(6)
    sc = catalog.get("(16|1)")
    for _ in range(5):
        g = random_group_element(rng, 4)
        assert forget_grading(transport(g, sc)) == transport_algebra(g, sc.alpha, FIELD_C8)


def test_forget_family_member_matches_trivially_graded(catalog):
    # the alpha block of (18;l|1) equals that of (18;l|0) in the shared basis
    assert forget_grading(catalog.entry("(18;l|1)").sc) == forget_grading(catalog.entry("(18;l|0)").sc)


def test_cn_structure_examples(catalog):
    assert cn_structure(4, 1) == catalog.get("(9|3)")
    assert grading_split(cn_structure(4, 2)).dim0 == 2
    triv = with_trivial_grading(cn_structure(4, 4).alpha, FIELD_C8)
    assert cn_structure(4, 4) == triv
    with pytest.raises(ValueError):
        cn_structure(4, 5)


def test_forget_of_closed_orbit_is_square_zero(catalog):
    assert forget_grading(catalog.get("(9|3)")) == forget_grading(cn_structure(4, 4))

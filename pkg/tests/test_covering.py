import pytest

from pqsurf.covering import (
    GeneratingVector,
    fixed_point_data,
    genus,
    hurwitz_character,
    search_generating_vectors,
    validate,
)
from pqsurf.chars import ClassFunction, inner_product
from pqsurf.errors import (
    IdentityElement,
    NotGenerating,
    OrderMismatch,
    RelationFails,
    SearchSpaceTooLarge,
    TrivialMonodromy,
)
from pqsurf.groups import catalog_group
from pqsurf.perms import parse_permutation


def p4(s):
    return parse_permutation(s, 4)


def v4_example_pair():
    """The explicit K^2 = 8 pair of V4-covers of elliptic curves."""
    G = catalog_group("V4")
    gv1 = GeneratingVector(
        G, 1, ((p4("(1,3)(2,4)"), p4("()")),),
        (p4("(1,2)(3,4)"), p4("(1,2)(3,4)")), (2, 2),
    )
    gv2 = GeneratingVector(
        G, 1, ((p4("(1,2)(3,4)"), p4("()")),),
        (p4("(1,3)(2,4)"), p4("(1,3)(2,4)")), (2, 2),
    )
    return gv1, gv2


def s3_branch3():
    G = catalog_group("S3")
    rot = parse_permutation("(1,2,3)", 3)
    flip = parse_permutation("(1,2)", 3)
    # [a, b] = rot^-1 requires a noncommuting handle pair
    for a in G.elements:
        for b in G.elements:
            word = a * b * a.inverse() * b.inverse() * rot
            if word.is_identity():
                gv = GeneratingVector(G, 1, ((a, b),), (rot,), (3,))
                try:
                    validate(gv)
                    return gv
                except Exception:
                    continue
    raise AssertionError("no S3 witness found")


def test_validate_accepts_the_v4_datum():
    gv1, gv2 = v4_example_pair()
    validate(gv1)
    validate(gv2)


def test_validate_rejects_trivial_monodromy():
    G = catalog_group("V4")
    gv = GeneratingVector(
        G, 1, ((p4("(1,3)(2,4)"), p4("()")),), (p4("()"), p4("()")), (2, 2)
    )
    with pytest.raises(TrivialMonodromy):
        validate(gv)


def test_validate_rejects_non_generating():
    G = catalog_group("V4")
    t = p4("(1,3)(2,4)")
    gv = GeneratingVector(G, 1, ((t, p4("()")),), (t, t), (2, 2))
    with pytest.raises(NotGenerating):
        validate(gv)


def test_validate_rejects_wrong_order_and_relation():
    G = catalog_group("V4")
    gv = GeneratingVector(
        G, 1, ((p4("(1,3)(2,4)"), p4("()")),),
        (p4("(1,2)(3,4)"), p4("(1,2)(3,4)")), (4, 4),
    )
    with pytest.raises(OrderMismatch):
        validate(gv)
    gv2 = GeneratingVector(
        G, 1, ((p4("(1,3)(2,4)"), p4("()")),),
        (p4("(1,2)(3,4)"), p4("(1,4)(2,3)")), (2, 2),
    )
    with pytest.raises(RelationFails):
        validate(gv2)


def test_genus_examples():
    gv1, _ = v4_example_pair()
    assert genus(gv1) == 3

    # unbranched cover of an elliptic curve has genus 1
    G = catalog_group("V4")
    etale = GeneratingVector(
        G, 1, ((p4("(1,2)(3,4)"), p4("(1,3)(2,4)")),), (), ()
    )
    assert genus(etale) == 1

    assert genus(s3_branch3()) == 3


def test_hurwitz_character_examples():
    gv1, gv2 = v4_example_pair()
    assert hurwitz_character(gv1).values == (6, -2, 2, 2)
    assert hurwitz_character(gv2).values == (6, 2, -2, 2)

    G = catalog_group("V4")
    etale = GeneratingVector(
        G, 1, ((p4("(1,2)(3,4)"), p4("(1,3)(2,4)")),), (), ()
    )
    assert hurwitz_character(etale).values == (2, 2, 2, 2)  # twice the trivial character

    # S3 with one order-3 branch point: 0 on the 3-cycles, 2 on transpositions
    chi = hurwitz_character(s3_branch3())
    G3 = catalog_group("S3")
    by_order = {rep.order(): chi.values[i] for i, rep in enumerate(G3.class_reps)}
    assert by_order == {1: 6, 2: 2, 3: 0}


def test_hurwitz_identity_value_is_twice_genus():
    for name, g0, orders in [("V4", 1, (2, 2)), ("S3", 1, (3,)), ("Q8", 1, (2,))]:
        for gv in search_generating_vectors(catalog_group(name), g0, orders):
            assert hurwitz_character(gv).values[0] == 2 * genus(gv)


def test_trivial_inner_product_is_twice_base_genus():
    for name, g0, orders in [("V4", 1, (2, 2)), ("D4", 1, (2,)), ("A4", 1, (2,))]:
        G = catalog_group(name)
        triv = ClassFunction(G, (1,) * len(G.classes))
        for gv in search_generating_vectors(G, g0, orders):
            assert inner_product(triv, hurwitz_character(gv)) == 2 * g0


def test_fixed_point_data_v4():
    gv1, _ = v4_example_pair()
    t10 = p4("(1,2)(3,4)")
    t01 = p4("(1,3)(2,4)")
    pts = fixed_point_data(gv1, t10)
    assert len(pts) == 4  # two cosets above each of the two branch points
    assert all(fp.rotation_exponent == 1 for fp in pts)
    assert {fp.branch_index for fp in pts} == {1, 2}
    assert fixed_point_data(gv1, t01) == ()
    with pytest.raises(IdentityElement):
        fixed_point_data(gv1, p4("()"))


def test_fixed_point_data_s3_rotations():
    gv = s3_branch3()
    pts = fixed_point_data(gv, gv.monodromies[0])
    assert len(pts) == 2
    assert sorted(fp.rotation_exponent for fp in pts) == [1, 2]


def test_fixed_point_count_identity():
    # summing fixed points of all nontrivial g above branch j recovers the
    # number of ramification points, (m_j - 1) * |G| / m_j
    for name, g0, orders in [("S3", 1, (3,)), ("Q8", 1, (2,)), ("D4", 1, (2, 2))]:
        G = catalog_group(name)
        for gv in search_generating_vectors(G, g0, orders)[:3]:
            for j, m in enumerate(gv.orders, start=1):
                total = 0
                for g in G.elements:
                    if g.is_identity():
                        continue
                    total += sum(
                        1 for fp in fixed_point_data(gv, g) if fp.branch_index == j
                    )
                assert total == (m - 1) * (G.order // m)


def test_search_v4_contains_the_example_datum():
    G = catalog_group("V4")
    vectors = search_generating_vectors(G, 1, (2, 2))
    assert vectors
    gv1, _ = v4_example_pair()
    targets = {gv.listed_elements() for gv in vectors}
    # V4 is abelian, so conjugation is trivial and the datum appears verbatim
    assert gv1.listed_elements() in targets


def test_search_q8_forces_central_monodromy():
    G = catalog_group("Q8")
    vectors = search_generating_vectors(G, 1, (2,))
    assert vectors
    central = next(g for g in G.elements if g.order() == 2)
    assert all(gv.monodromies == (central,) for gv in vectors)


def test_search_impossible_signature_is_empty():
    G = catalog_group("S3")
    assert search_generating_vectors(G, 0, (2, 2)) == ()


def test_search_space_cap():
    with pytest.raises(SearchSpaceTooLarge):
        search_generating_vectors(catalog_group("A4"), 2, (2, 2, 2), max_space=1000)


def test_search_outputs_validate_and_are_deduplicated():
    G = catalog_group("D4")
    vectors = search_generating_vectors(G, 1, (2,))
    for gv in vectors:
        validate(gv)
    keys = {gv.listed_elements() for gv in vectors}
    assert len(keys) == len(vectors)

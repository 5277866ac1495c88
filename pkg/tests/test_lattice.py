import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqsurf.errors import Degenerate, InvalidParameter, NotEven, NotUnimodular
from pqsurf.lattice import (
    CRITERION_NOT_SATISFIED,
    GUARANTEED,
    IntegralLattice,
    determinant,
    direct_sum,
    discriminant_group,
    e8_minus,
    hyperbolic_plane,
    is_even,
    k3_embeddable,
    k3_lattice,
    lambda_d,
    make_lattice,
    nikulin_embeds,
    rank1,
    rescale,
    signature,
)


def test_hyperbolic_plane():
    u = hyperbolic_plane()
    assert u.rank == 2
    assert determinant(u) == -1
    assert signature(u) == (1, 1)
    assert is_even(u)


def test_e8_minus():
    e8 = e8_minus()
    assert e8.rank == 8
    assert determinant(e8) == 1
    assert signature(e8) == (0, 8)
    assert is_even(e8)


def test_k3_lattice_facts():
    lam = k3_lattice()
    assert lam.rank == 22
    assert abs(determinant(lam)) == 1
    assert signature(lam) == (3, 19)
    assert is_even(lam)
    assert discriminant_group(lam).ell == 0


def test_lambda_d_facts():
    for d in (1, 2, 3, 7):
        ld = lambda_d(d)
        assert ld.rank == 21
        assert signature(ld) == (2, 19)
        disc = discriminant_group(ld)
        assert disc.invariant_factors == (2 * d,)
        assert disc.ell == 1
        assert abs(determinant(ld)) == 2 * d


def test_rank1_and_rescale():
    for d in (1, 2, 5):
        l = rank1(d)
        assert determinant(l) == -2 * d
        assert signature(l) == (0, 1)
        assert is_even(l)
        assert discriminant_group(l).invariant_factors == (2 * d,)
        flipped = rescale(l, -1)
        assert signature(flipped) == (1, 0)
        assert determinant(flipped) == 2 * d
    with pytest.raises(InvalidParameter):
        rank1(0)
    with pytest.raises(InvalidParameter):
        rescale(rank1(1), 0)


def test_is_even_examples():
    assert is_even(rank1(3))
    assert not is_even(IntegralLattice(((1,),)))
    assert is_even(k3_lattice())


def test_signature_additivity():
    a = direct_sum(hyperbolic_plane(), rank1(2))
    b = direct_sum(e8_minus(), rescale(rank1(1), -1))
    sa, sb = signature(a), signature(b)
    combined = signature(direct_sum(a, b))
    assert combined == (sa[0] + sb[0], sa[1] + sb[1])


def test_degenerate_is_rejected():
    degenerate = IntegralLattice(((0, 0), (0, 2)))
    with pytest.raises(Degenerate):
        signature(degenerate)
    with pytest.raises(Degenerate):
        discriminant_group(degenerate)


def test_nikulin_examples():
    k3 = k3_lattice()
    m = direct_sum(hyperbolic_plane(), rank1(1))  # signature (1,2), ell = 1
    assert signature(m) == (1, 2)
    assert nikulin_embeds(m, k3) == GUARANTEED

    assert nikulin_embeds(lambda_d(1), k3) == CRITERION_NOT_SATISFIED  # t_- = 19
    assert nikulin_embeds(k3, k3) == CRITERION_NOT_SATISFIED

    with pytest.raises(NotEven):
        nikulin_embeds(IntegralLattice(((1,),)), k3)
    with pytest.raises(NotUnimodular):
        nikulin_embeds(rank1(1), lambda_d(1))


def test_k3_embeddable_examples():
    # any even lattice of signature (2, 8): corollary route
    m = direct_sum(hyperbolic_plane(), hyperbolic_plane(), rank1(1), rank1(2), rank1(3), rank1(1), rank1(2), rank1(3))
    assert signature(m) == (2, 8)
    assert k3_embeddable(m) == GUARANTEED

    # signature (2,12), rank 14, ell small: full-criterion route
    m2 = direct_sum(hyperbolic_plane(), hyperbolic_plane(), e8_minus(), rank1(1), rank1(5))
    assert signature(m2) == (2, 12)
    assert discriminant_group(m2).ell <= 6
    assert k3_embeddable(m2) == GUARANTEED

    assert k3_embeddable(k3_lattice()) == CRITERION_NOT_SATISFIED
    with pytest.raises(NotEven):
        k3_embeddable(IntegralLattice(((2, 0), (0, 3))))


def test_make_lattice_strings():
    assert make_lattice("U").gram == hyperbolic_plane().gram
    assert make_lattice("K3_Lambda").rank == 22
    assert make_lattice("Lambda_d(3)").gram == lambda_d(3).gram
    assert make_lattice("rank1(2)").gram == ((-4,),)
    assert make_lattice("sum(U,U,E8_minus)").rank == 12
    with pytest.raises(InvalidParameter):
        make_lattice("Leech")


@st.composite
def small_symmetric_matrices(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    entries = {}
    for i in range(n):
        for j in range(i, n):
            entries[(i, j)] = draw(st.integers(min_value=-6, max_value=6))
    gram = [[entries[(min(i, j), max(i, j))] for j in range(n)] for i in range(n)]
    return IntegralLattice(tuple(tuple(row) for row in gram))


@settings(max_examples=150, deadline=None)
@given(small_symmetric_matrices())
def test_invariant_factors_multiply_to_determinant(lat):
    det = determinant(lat)
    if det == 0:
        with pytest.raises(Degenerate):
            discriminant_group(lat)
        return
    disc = discriminant_group(lat)
    product = 1
    for d in disc.invariant_factors:
        product *= d
    assert product == abs(det)
    for a, b in zip(disc.invariant_factors, disc.invariant_factors[1:]):
        assert b % a == 0


@settings(max_examples=80, deadline=None)
@given(small_symmetric_matrices())
def test_smith_form_matches_sympy(lat):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import invariant_factors as sympy_factors

    if determinant(lat) == 0:
        return
    ours = discriminant_group(lat).invariant_factors
    theirs = tuple(
        int(abs(d)) for d in sympy_factors(sympy.Matrix(lat.gram)) if abs(d) > 1
    )
    assert ours == theirs


@settings(max_examples=60, deadline=None)
@given(small_symmetric_matrices(), st.integers(min_value=-3, max_value=3).filter(lambda c: c != 0))
def test_rescale_determinant_and_signature(lat, c):
    det = determinant(lat)
    scaled = rescale(lat, c)
    assert determinant(scaled) == det * c ** lat.rank
    if det != 0:
        a, b = signature(lat)
        expected = (a, b) if c > 0 else (b, a)
        assert signature(scaled) == expected


@settings(max_examples=100, deadline=None)
@given(small_symmetric_matrices())
def test_signature_counts_match_rank(lat):
    if determinant(lat) == 0:
        return
    plus, minus = signature(lat)
    assert plus + minus == lat.rank
    # cross-check the sign of the determinant: (-1)^minus
    det = determinant(lat)
    assert (det > 0) == (minus % 2 == 0)

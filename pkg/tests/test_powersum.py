"""Power sums and elementary symmetric functions of weight multisets."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from conftest import get_rs, y_poly
from weightcalc.errors import DomainError
from weightcalc.polyalg import BiPoly
from weightcalc.powersum import (
    elementary_from_power,
    power_sum_result,
    power_sums,
    product_power_sums,
    symbolic_power_sums,
    validate_dominant,
    weyl_dimension,
)
from weightcalc.rootsys import highest_root
from weightcalc.weylsum import FkTable, fk_evaluated, q2_poly
from test_rootsys import reflection_matrix

RANK_LE_4 = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 3), ("D", 4),
    ("G", 2),
]


# -- dimensions and validation --------------------------------------------------


@pytest.mark.parametrize(
    "kind,rank,lam,dim",
    [
        ("A", 1, (0,), 1),
        ("A", 1, (7,), 8),
        ("A", 2, (1, 0), 3),
        ("A", 2, (1, 1), 8),
        ("A", 2, (2, 2), 27),
        ("A", 3, (1, 0, 1), 15),
        ("A", 3, (0, 1, 0), 6),
        ("B", 2, (1, 0), 5),
        ("B", 2, (0, 1), 4),
        ("B", 3, (0, 1, 0), 21),
        ("B", 3, (0, 0, 1), 8),
        ("C", 3, (1, 0, 0), 6),
        ("C", 3, (0, 0, 1), 14),
        ("D", 4, (1, 0, 0, 0), 8),
        ("D", 4, (0, 1, 0, 0), 28),
        ("G", 2, (1, 0), 7),
        ("G", 2, (0, 1), 14),
    ],
)
def test_weyl_dimension_known_values(kind, rank, lam, dim):
    assert weyl_dimension(get_rs(kind, rank), lam) == dim


def test_validate_dominant_rejections(a2):
    assert validate_dominant(a2, [2, 1]) == (2, 1)
    with pytest.raises(DomainError):
        validate_dominant(a2, (1,))
    with pytest.raises(DomainError):
        validate_dominant(a2, (-1, 0))
    with pytest.raises(DomainError):
        validate_dominant(a2, (Fraction(1, 2), 0))
    with pytest.raises(DomainError):
        power_sums(a2, (1, 1), -1)


# -- structural identities -------------------------------------------------------


@pytest.mark.parametrize("kind,rank", RANK_LE_4)
def test_p0_is_dimension_and_p1_vanishes(kind, rank):
    rs = get_rs(kind, rank)
    lam = tuple(1 for _ in range(rank))
    p = power_sums(rs, lam, 1)
    assert p[0] == BiPoly.constant(rank, rank, weyl_dimension(rs, lam))
    assert p[1].is_zero()


@pytest.mark.parametrize("kind,rank", RANK_LE_4)
def test_p2_of_adjoint_equals_q2(kind, rank):
    rs = get_rs(kind, rank)
    assert power_sums(rs, highest_root(rs), 2)[2] == q2_poly(rs)


@pytest.mark.parametrize("kind,rank", [("A", 1), ("B", 2), ("C", 3), ("G", 2)])
def test_odd_power_sums_vanish_when_minus_one_in_weyl(kind, rank):
    rs = get_rs(kind, rank)
    lam = tuple(2 if i == 0 else 1 for i in range(rank))
    p = power_sums(rs, lam, 5)
    assert p[1].is_zero() and p[3].is_zero() and p[5].is_zero()


def test_explicit_sl2_multiset():
    a1 = get_rs("A", 1)
    # weights of the 3-dimensional representation: 2, 0, -2 times the generator
    p = power_sums(a1, (2,), 4)
    assert p[0] == y_poly(1, {(0,): 3})
    assert p[2] == y_poly(1, {(2,): 8})
    assert p[4] == y_poly(1, {(4,): 32})
    e = elementary_from_power(p, 4)
    assert e[1].is_zero()
    assert e[2] == y_poly(1, {(2,): -4})
    assert e[3].is_zero()
    assert e[4].is_zero()


def test_explicit_a2_standard_multiset():
    a2 = get_rs("A", 2)
    # weights of the standard representation: (1,0), (-1,1), (0,-1)
    p = power_sums(a2, (1, 0), 3)
    mus = [(1, 0), (-1, 1), (0, -1)]
    for k in range(4):
        expected = BiPoly.zero(2, 2)
        for mu in mus:
            expected = expected + BiPoly.y_linear(list(mu), na=2) ** k
        assert p[k] == expected
    e = elementary_from_power(p)
    assert e[3] == BiPoly.y_linear([1, 0], na=2) * BiPoly.y_linear([-1, 1], na=2) * BiPoly.y_linear([0, -1], na=2)


@pytest.mark.parametrize(
    "kind,rank,lam",
    [("A", 1, (3,)), ("A", 2, (1, 1)), ("B", 2, (1, 2))],
)
def test_egf_convolution_identity(kind, rank, lam):
    # F_i(lam+delta) = sum_k C(i,k) F_{i-k}(delta) P_k, truncated at N + kmax
    rs = get_rs(kind, rank)
    kmax = 4
    n = rs.num_positive
    p = power_sums(rs, lam, kmax)
    shifted = tuple(c + 1 for c in lam)
    delta = (1,) * rank
    for i in range(n + kmax + 1):
        lhs = fk_evaluated(rs, shifted, i)
        rhs = BiPoly.zero(rank, rank)
        for k in range(min(i, kmax) + 1):
            rhs = rhs + (fk_evaluated(rs, delta, i - k) * p[k]).scale(comb(i, k))
        assert lhs == rhs


def test_symbolic_specializes_to_numeric(a2):
    kmax = 4
    table = FkTable.build(a2, a2.num_positive + kmax)
    symb = symbolic_power_sums(a2, kmax, table)
    for lam in [(0, 0), (1, 2), (3, 1)]:
        numeric = power_sums(a2, lam, kmax)
        for k in range(kmax + 1):
            assert symb[k].eval_a(lam) == numeric[k]
    with pytest.raises(DomainError):
        symbolic_power_sums(a2, kmax + 1, table)


@pytest.mark.parametrize("kind,rank", [("A", 1), ("A", 2), ("B", 2)])
def test_symbolic_degree_bounds(kind, rank):
    rs = get_rs(kind, rank)
    n = rs.num_positive
    p = symbolic_power_sums(rs, 6)
    e = elementary_from_power(p, 6)
    for k in range(7):
        assert p[k].a_degree() <= n + k
        assert e[k].a_degree() <= (k // 2) * n + k
    if rs.minus_one_in_weyl:
        assert p[1].is_zero() and p[3].is_zero() and p[5].is_zero()


def test_power_sums_are_weyl_invariant_functions(a2):
    # P_k is a W-invariant polynomial on the coweight side
    p = power_sums(a2, (1, 1), 4)
    r = 2
    for i in range(r):
        m = reflection_matrix(a2, i)
        y_images = [
            BiPoly.y_linear([m[j][col] for j in range(r)], na=r) for col in range(r)
        ]
        for k in range(5):
            assert p[k].compose(y_images=y_images) == p[k]


# -- Newton conversion and products ----------------------------------------------


def test_newton_identities_round(a2):
    p = power_sums(a2, (2, 1), 5)
    e = elementary_from_power(p, 5)
    # k E_k = sum_{i=1..k} (-1)^(i-1) E_{k-i} P_i, re-checked externally
    for k in range(1, 6):
        acc = BiPoly.zero(2, 2)
        for i in range(1, k + 1):
            term = e[k - i] * p[i]
            acc = acc + term if i % 2 == 1 else acc - term
        assert acc == e[k].scale(k)
    with pytest.raises(DomainError):
        elementary_from_power(p, 9)
    with pytest.raises(DomainError):
        elementary_from_power([])


def test_product_power_sums_hand_example():
    a1 = get_rs("A", 1)
    # {y1, -y1} times {2y2, 0, -2y2}: embed the factors disjointly
    p1 = [f.embed(2, 2) for f in power_sums(a1, (1,), 2)]
    p2 = [f.embed(2, 2, a_offset=1, y_offset=1) for f in power_sums(a1, (2,), 2)]
    prod = product_power_sums(p1, p2, 2)
    assert prod[0] == BiPoly.constant(2, 2, 6)
    assert prod[1].is_zero()
    assert prod[2] == y_poly(2, {(2, 0): 6, (0, 2): 16})
    # direct check against the six explicit sums mu + nu
    pairs = [(m, n) for m in (1, -1) for n in (2, 0, -2)]
    direct = BiPoly.zero(2, 2)
    for m, n in pairs:
        direct = direct + BiPoly.y_linear([m, n], na=2) ** 2
    assert prod[2] == direct


def test_product_power_sums_rejects_shared_support():
    a1 = get_rs("A", 1)
    p = power_sums(a1, (1,), 2)
    with pytest.raises(DomainError):
        product_power_sums(p, p, 2)
    with pytest.raises(DomainError):
        product_power_sums(p, p, 5)


def test_power_sum_result_bundle(b2):
    res = power_sum_result(b2, (1, 0), 3)
    assert res.kind == "B" and res.rank == 2
    assert res.highest_weight == (1, 0)
    assert res.dimension == 5
    assert res.kmax == 3
    assert len(res.power) == 4 and len(res.elementary) == 4
    assert res.power[0] == BiPoly.constant(2, 2, 5)
    assert res.elementary[0] == BiPoly.constant(2, 2, 1)

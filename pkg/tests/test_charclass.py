"""Chern / Stiefel-Whitney classes, spinoriality, and total-class factorization."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import dominant_grid, gen_poly, get_rs
from weightcalc.charclass import (
    PiSpec,
    builtin_lattice,
    builtin_lattice_names,
    chern2_closed,
    chern_classes,
    is_spinorial,
    lattice_contains,
    lattice_orthogonality_type,
    orthogonality_type,
    swc_restrict,
    total_swc_factorization,
)
from weightcalc.errors import DomainError
from weightcalc.polyalg import Mod2Poly


# -- built-in lattices --------------------------------------------------------------


def test_builtin_names_round_trip():
    names = builtin_lattice_names()
    for expected in ("SL2", "SL7", "PGL2", "GL5", "Sp8", "SO5", "SO12", "Spin7", "G2"):
        assert expected in names
    assert "SO4" not in names and "Sp2" not in names
    for name in names:
        lat = builtin_lattice(name)
        assert lat.name == name
        assert len(lat.basis) == lat.torus_rank == len(lat.gen_names) == len(lat.v_names)


def test_unknown_group_rejected():
    for bad in ("SO4", "SL9", "E8", "PGL3", ""):
        with pytest.raises(DomainError):
            builtin_lattice(bad)


def test_lattice_membership():
    pgl2 = builtin_lattice("PGL2")
    assert lattice_contains(pgl2, (2,)) and lattice_contains(pgl2, (0,))
    assert not lattice_contains(pgl2, (3,))
    so5 = builtin_lattice("SO5")
    assert lattice_contains(so5, (1, 0)) and lattice_contains(so5, (0, 2))
    assert not lattice_contains(so5, (0, 1))  # the spin weight needs the double cover
    spin5 = builtin_lattice("Spin5")
    assert lattice_contains(spin5, (0, 1))
    sl2 = builtin_lattice("SL2")
    assert all(lattice_contains(sl2, (ell,)) for ell in range(5))


# -- Chern classes ------------------------------------------------------------------


def test_gl2_standard_chern():
    res = chern_classes(builtin_lattice("GL2"), (1, 0), 2)
    assert res.degree == 2
    assert res.c[1] == gen_poly(2, {(1, 0): 1, (0, 1): 1})
    assert res.c[2] == gen_poly(2, {(1, 1): 1})


def test_g2_adjoint_chern2():
    res = chern_classes(builtin_lattice("G2"), (0, 1), 2)
    assert res.degree == 14
    assert res.c[2] == gen_poly(2, {(2, 0): -24, (1, 1): 24, (0, 2): -8})


def test_spin5_spin_chern2():
    res = chern_classes(builtin_lattice("Spin5"), (0, 1), 2)
    assert res.degree == 4
    assert res.c[2] == gen_poly(2, {(2, 0): -1, (1, 1): 2, (0, 2): -2})


def test_sp4_standard_chern():
    res = chern_classes(builtin_lattice("Sp4"), (1, 0), 2)
    assert res.degree == 4
    assert res.c[1].is_zero()
    assert res.c[2] == gen_poly(2, {(2, 0): -1, (0, 2): -1})


def test_doubled_form_degree_and_chern():
    # std + dual of SL2: weights {e, -e, e, -e}
    res = chern_classes(builtin_lattice("SL2"), PiSpec((1,), s_wrap=True), 4)
    assert res.degree == 4
    assert res.c[0] == gen_poly(1, {(0,): 1})
    assert res.c[1].is_zero() and res.c[3].is_zero()
    assert res.c[2] == gen_poly(1, {(2,): -2})
    assert res.c[4] == gen_poly(1, {(4,): 1})


@pytest.mark.parametrize(
    "group,weight",
    [("SL3", (1, 1)), ("Sp4", (1, 0)), ("Spin7", (0, 0, 1)), ("G2", (1, 0)), ("SO5", (1, 0))],
)
def test_chern2_closed_form_matches(group, weight):
    lat = builtin_lattice(group)
    assert chern2_closed(lat, weight) == chern_classes(lat, weight, 2).c[2]


@given(
    st.sampled_from(["SL2", "SL3", "PGL2", "Sp4", "SO5", "Spin5", "G2"]),
    st.tuples(st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2)),
)
def test_chern_integrality(group, pair):
    lat = builtin_lattice(group)
    weight = pair[: lat.rank]
    if not lattice_contains(lat, weight):
        with pytest.raises(DomainError):
            chern_classes(lat, weight, 3)
        return
    res = chern_classes(lat, weight, 3)
    for f in res.c:
        assert all(
            isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
            for _, c in f.sorted_terms()
        )


def test_chern_rejects_bad_weights():
    with pytest.raises(DomainError, match="weight not in character lattice"):
        chern_classes(builtin_lattice("PGL2"), (3,))
    with pytest.raises(DomainError):
        chern_classes(builtin_lattice("SL2"), (-1,))
    with pytest.raises(DomainError, match="nonincreasing"):
        chern_classes(builtin_lattice("GL2"), (-1, 1))


# -- orthogonality type -------------------------------------------------------------


@pytest.mark.parametrize(
    "kind,rank,lam,expected",
    [
        ("C", 3, (0, 0, 1), "symplectic"),
        ("B", 2, (0, 1), "symplectic"),
        ("B", 2, (1, 0), "orthogonal"),
        ("A", 2, (1, 0), "not-self-dual"),
        ("A", 2, (1, 1), "orthogonal"),
        ("A", 1, (1,), "symplectic"),
        ("A", 1, (2,), "orthogonal"),
        ("G", 2, (1, 0), "orthogonal"),
        ("D", 3, (1, 0, 0), "orthogonal"),
        ("D", 3, (0, 1, 0), "not-self-dual"),  # a 4-dimensional half-spin weight
        ("D", 3, (0, 1, 1), "orthogonal"),
    ],
)
def test_orthogonality_type(kind, rank, lam, expected):
    assert orthogonality_type(get_rs(kind, rank), lam) == expected


def test_gl_orthogonality_type():
    gl2 = builtin_lattice("GL2")
    assert lattice_orthogonality_type(gl2, (2, -2)) == "orthogonal"
    assert lattice_orthogonality_type(gl2, (1, -1)) == "orthogonal"
    assert lattice_orthogonality_type(gl2, (1, 0)) == "not-self-dual"


# -- Stiefel-Whitney restriction ------------------------------------------------------


def test_swc_requires_orthogonal():
    with pytest.raises(DomainError, match="symplectic.*s_wrap"):
        swc_restrict(builtin_lattice("SL2"), (1,))
    with pytest.raises(DomainError, match="not-self-dual.*s_wrap"):
        swc_restrict(builtin_lattice("SL3"), (1, 0))


def test_sl2_doubled_swc():
    res = swc_restrict(builtin_lattice("SL2"), PiSpec((1,), s_wrap=True))
    assert res.w[0] == Mod2Poly(1, [(0,)])
    assert res.w[4] == Mod2Poly(1, [(4,)])
    for k in (1, 2, 3, 5, 6):
        assert res.w[k].is_zero()


def test_sl3_adjoint_swc():
    res = swc_restrict(builtin_lattice("SL3"), (1, 1))
    assert res.w[4] == Mod2Poly(2, [(4, 0), (2, 2), (0, 4)])
    assert res.w[1].is_zero() and res.w[2].is_zero() and res.w[3].is_zero()


def test_so6_vector_swc():
    res = swc_restrict(builtin_lattice("SO6"), (1, 0, 0))
    assert res.w[1].is_zero()
    assert res.w[2] == Mod2Poly(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])


# -- spinoriality --------------------------------------------------------------------


def test_pgl2_quartic_not_spinorial():
    res = is_spinorial(builtin_lattice("PGL2"), (4,))
    assert not res.spinorial and not bool(res)
    assert res.valuation == 2
    assert res.secondary_integral is False
    assert res.c2 == gen_poly(1, {(2,): -5})


@pytest.mark.parametrize(
    "group,weight,valuation",
    [("Spin7", (0, 0, 1), 2), ("G2", (1, 0), 4)],
)
def test_spinorial_representations(group, weight, valuation):
    res = is_spinorial(builtin_lattice(group), weight)
    assert res.spinorial and bool(res)
    assert res.valuation == valuation
    assert res.secondary_integral is True


def test_so5_vector_not_spinorial():
    res = is_spinorial(builtin_lattice("SO5"), (1, 0))
    assert not res.spinorial
    assert res.valuation == 2 and res.secondary_integral is False
    assert res.c2 == gen_poly(2, {(2, 0): -1, (0, 2): -1})


def test_spinorial_secondary_test_scope():
    # the 2-adic secondary certificate only applies to plain nonzero weights
    res = is_spinorial(builtin_lattice("SL2"), PiSpec((1,), s_wrap=True))
    assert res.spinorial and res.valuation is None and res.secondary_integral is None
    res = is_spinorial(builtin_lattice("SL2"), (0,))
    assert res.spinorial and res.valuation is None


def test_spinorial_requires_orthogonal():
    with pytest.raises(DomainError):
        is_spinorial(builtin_lattice("SL2"), (1,))


# -- total-class factorization ---------------------------------------------------------


def test_so5_vector_factorization():
    res = total_swc_factorization(builtin_lattice("SO5"), (1, 0))
    assert res.total_factorization == (2, 0)
    assert res.w[2] == Mod2Poly(2, [(2, 0), (0, 2)])
    assert res.w[4] == Mod2Poly(2, [(2, 2)])


def test_so6_vector_factorization():
    res = total_swc_factorization(builtin_lattice("SO6"), (1, 0, 0))
    assert res.total_factorization == (2, 0, 0)
    assert res.w[2] == Mod2Poly(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])


def test_sp6_doubled_vector_factorization():
    res = total_swc_factorization(builtin_lattice("Sp6"), PiSpec((1, 0, 0), s_wrap=True))
    assert res.total_factorization == (4, 0, 0)
    assert all(m % 2 == 0 for m in res.total_factorization)


def test_gl_factorizations():
    res = total_swc_factorization(builtin_lattice("GL3"), PiSpec((1, 0, 0), s_wrap=True))
    assert res.total_factorization == (2, 0, 0)
    res = total_swc_factorization(builtin_lattice("GL2"), (1, -1))
    assert res.total_factorization == (0, 2)
    assert res.w[2] == Mod2Poly(2, [(2, 0), (0, 2)])


def test_adjoint_factorizations():
    res = total_swc_factorization(builtin_lattice("SL3"), (1, 1))
    assert res.total_factorization == (2, 2)
    assert res.w[4] == Mod2Poly(2, [(4, 0), (2, 2), (0, 4)])
    res = total_swc_factorization(builtin_lattice("Sp4"), (2, 0))
    assert res.total_factorization == (0, 4)
    assert res.w[4] == Mod2Poly(2, [(4, 0), (0, 4)])


def test_sl2_factorization_exponents():
    sl2 = builtin_lattice("SL2")
    for ell in (0, 2, 4, 6):
        assert total_swc_factorization(sl2, (ell,)).total_factorization == (0,)
    for ell in (1, 3, 5):
        res = total_swc_factorization(sl2, PiSpec((ell,), s_wrap=True))
        assert res.total_factorization == (2 * (ell + 1),)


def _sl3_doubled_exponent(m: int, n: int) -> int:
    if m % 2 == 1 and n % 2 == 1:
        return (m + 1) * (n + 1) * (m + n + 2) // 4
    if m % 2 == 1:
        return (m + 1) * ((n + 1) * (m + n + 2) + 1) // 4
    if n % 2 == 1:
        return (n + 1) * ((m + 1) * (m + n + 2) + 1) // 4
    return (m + n + 2) * ((m + 1) * (n + 1) - 1) // 4


@pytest.mark.parametrize("m", range(5))
@pytest.mark.parametrize("n", range(5))
def test_sl3_doubled_factorization_law(m, n):
    res = total_swc_factorization(builtin_lattice("SL3"), PiSpec((m, n), s_wrap=True), 2)
    expected = _sl3_doubled_exponent(m, n)
    assert res.total_factorization == (expected, expected)


def test_factorization_matches_restriction():
    for group, spec in [
        ("SO5", (0, 2)),
        ("Sp4", PiSpec((1, 0), s_wrap=True)),
        ("SL4", (1, 0, 1)),
        ("SL4", (0, 1, 0)),
        ("SL4", PiSpec((1, 0, 0), s_wrap=True)),
    ]:
        lat = builtin_lattice(group)
        fac = total_swc_factorization(lat, spec)
        ref = swc_restrict(lat, spec)
        assert fac.w == ref.w
        assert ref.total_factorization is None


def test_factorization_family_guard():
    with pytest.raises(DomainError, match="SL, GL, Sp and SO families only"):
        total_swc_factorization(builtin_lattice("Spin5"), (0, 1))
    with pytest.raises(DomainError, match="SL, GL, Sp and SO families only"):
        total_swc_factorization(builtin_lattice("G2"), (1, 0))


# -- mod-2 consistency triangle --------------------------------------------------------


@pytest.mark.parametrize("group", ["SL2", "SL3", "SL4", "Sp4", "SO5"])
def test_chern_swc_consistency_triangle(group):
    from weightcalc.polyalg import mod2_reduce

    lat = builtin_lattice(group)
    rank = lat.rank
    for weight in dominant_grid(rank, 1):
        if not lattice_contains(lat, weight):
            continue
        typ = lattice_orthogonality_type(lat, weight)
        spec = PiSpec(weight, s_wrap=(typ != "orthogonal"))
        ch = chern_classes(lat, spec, 6)
        sw = swc_restrict(lat, spec, 6)
        # degree by degree, the SWC restriction is the mod-2 Chern reduction
        for k in range(7):
            assert sw.w[k] == mod2_reduce(ch.c[k])
        for k in (1, 3, 5):
            assert sw.w[k].is_zero()

"""Power sums and elementary symmetric functions of weight multisets.

For the irreducible representation with dominant highest weight lam, the
weight multiset {(mu, m(mu))} determines, for each k >= 0,

    P_k(nu) = sum over weights of m(mu) * <mu, nu>^k,

a degree-k polynomial on the coweight side, and the elementary symmetric
functions E_k of the same multiset of linear forms.  Both are computed
exactly from alternating Weyl sums, never by enumerating weights: the
convolution identity

    F_m(lam + delta) = sum_k binom(m, k) * P_k * F_{m-k}(delta)

is triangular in m = N, N+1, ... because F_j(delta) vanishes below degree
N, so each P_k is an exact polynomial quotient; Newton's identities then
convert P to E.  Running the same recursion with the highest weight kept
symbolic (shifted by delta via translation) yields bivariate versions
whose a-degrees obey adeg P_k <= N + k and adeg E_k <= floor(k/2)*N + k.

Degree-0 terms: P_0 is the dimension of the representation and E_0 = 1.
P_1 = 0 always (the weights of a semisimple representation sum to zero),
and every odd P_k vanishes when -1 lies in the Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DomainError
from .polyalg import BiPoly, exact_divide, translate_delta
from .rootsys import RootSystem

from .weylsum import FkTable, fk_evaluated

__all__ = [
    "PowerSumResult",
    "weyl_dimension",
    "validate_dominant",
    "power_sums",
    "elementary_from_power",
    "power_sum_result",
    "symbolic_power_sums",
    "product_power_sums",
]

Scalar = int | Fraction


def validate_dominant(rs: RootSystem, lam: Sequence[int]) -> tuple[int, ...]:
    """Check that lam is a dominant integral weight; return it as a tuple."""
    if len(lam) != rs.rank:
        raise DomainError(
            f"weight has {len(lam)} coordinates, expected {rs.rank} for {rs.kind}{rs.rank}"
        )
    for c in lam:
        if not isinstance(c, int) or isinstance(c, bool):
            raise DomainError("weight coordinates must be integers")
        if c < 0:
            raise DomainError("weight must be dominant (nonnegative coordinates)")
    return tuple(lam)


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    """Dimension of the irreducible representation with highest weight lam.

    Product over positive coroots of <lam + delta, beta-vee> / <delta, beta-vee>.
    """
    lam = validate_dominant(rs, lam)
    num = 1
    den = 1
    for av in rs.positive_coroots:
        num *= sum((lam[i] + 1) * av[i] for i in range(rs.rank))
        den *= sum(av)
    q, rem = divmod(num, den)
    if rem:
        raise DomainError("dimension formula did not yield an integer")
    return q


def power_sums(rs: RootSystem, lam: Sequence[int], kmax: int) -> list[BiPoly]:
    """P_0..P_kmax of the weight multiset, each a y-polynomial.

    Triangular solve of the convolution identity; every division is an
    exact polynomial quotient by F_N(delta) = N! * d.
    """
    lam = validate_dominant(rs, lam)
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    n = rs.num_positive
    shifted = tuple(c + 1 for c in lam)
    delta = (1,) * rs.rank
    f_lam = [fk_evaluated(rs, shifted, n + i) for i in range(kmax + 1)]
    f_del = [fk_evaluated(rs, delta, n + j) for j in range(kmax + 1)]
    fn_delta = f_del[0]
    out: list[BiPoly] = []
    for i in range(kmax + 1):
        num = f_lam[i]
        for k in range(i):
            term = (out[k] * f_del[i - k]).scale(comb(n + i, k))
            num = num - term
        out.append(exact_divide(num.scale(Fraction(1, comb(n + i, i))), fn_delta))
    return out


def elementary_from_power(power: Sequence[BiPoly], kmax: int | None = None) -> list[BiPoly]:
    """E_0..E_kmax from P_1..P_kmax by Newton's identities.

    k * E_k = sum_{i=1..k} (-1)^(i-1) * E_{k-i} * P_i.  Works for concrete
    (y-only) and symbolic (bivariate) inputs alike.
    """
    if kmax is None:
        kmax = len(power) - 1
    if kmax >= len(power):
        raise DomainError("need P_0..P_kmax to produce E_0..E_kmax")
    if not power:
        raise DomainError("empty power-sum sequence")
    na, ny = power[0].na, power[0].ny
    ones = BiPoly.constant(na, ny, 1)
    elem: list[BiPoly] = [ones]
    for k in range(1, kmax + 1):
        acc = BiPoly.zero(na, ny)
        for i in range(1, k + 1):
            term = elem[k - i] * power[i]
            acc = acc + term if i % 2 == 1 else acc - term
        elem.append(acc.scale(Fraction(1, k)))
    return elem


@dataclass(frozen=True)
class PowerSumResult:
    """Power sums and elementary symmetric functions for one representation."""

    kind: str
    rank: int
    highest_weight: tuple[int, ...]
    kmax: int
    dimension: int
    power: tuple[BiPoly, ...]
    elementary: tuple[BiPoly, ...]


def power_sum_result(rs: RootSystem, lam: Sequence[int], kmax: int) -> PowerSumResult:
    """Bundle P_k and E_k for k = 0..kmax with the dimension."""
    p = power_sums(rs, lam, kmax)
    e = elementary_from_power(p, kmax)
    dim = p[0].constant_term()
    if not isinstance(dim, int):
        dim = int(dim)
    return PowerSumResult(
        kind=rs.kind,
        rank=rs.rank,
        highest_weight=validate_dominant(rs, lam),
        kmax=kmax,
        dimension=dim,
        power=tuple(p),
        elementary=tuple(e),
    )


def symbolic_power_sums(
    rs: RootSystem, kmax: int, table: FkTable | None = None
) -> list[BiPoly]:
    """P_0..P_kmax with the highest weight symbolic (a-variables).

    Same triangular recursion with lam + delta realized by translating
    every a-variable by one.  P_0 is the dimension polynomial
    d-vee(a + delta)/d-vee(delta).
    """
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    n = rs.num_positive
    if table is None:
        table = FkTable.build(rs, n + kmax)
    if table.kmax < n + kmax:
        raise DomainError("the supplied table is too short for the requested kmax")
    f_lam = [translate_delta(table.entries[n + i]) for i in range(kmax + 1)]
    delta = (1,) * rs.rank
    f_del = [table.entries[n + j].eval_a(delta) for j in range(kmax + 1)]
    fn_delta = f_del[0]
    out: list[BiPoly] = []
    for i in range(kmax + 1):
        num = f_lam[i]
        for k in range(i):
            term = (out[k] * f_del[i - k]).scale(comb(n + i, k))
            num = num - term
        out.append(exact_divide(num.scale(Fraction(1, comb(n + i, i))), fn_delta))
    return out


def product_power_sums(
    p: Sequence[BiPoly], q: Sequence[BiPoly], kmax: int
) -> list[BiPoly]:
    """Power sums of the sum-multiset {mu + nu} from those of two factors.

    P_k = sum_i binom(k, i) * P_i(first) * P_{k-i}(second).  The two factors
    must live in the same ring with disjoint y-variable support, so the
    products are literal polynomial products.
    """
    if len(p) <= kmax or len(q) <= kmax:
        raise DomainError("need factor power sums up to kmax")
    if not p or not q or p[0].na != q[0].na or p[0].ny != q[0].ny:
        raise DomainError("factor power sums must share one ring")
    sup_p = {i for f in p for e in f.terms for i in range(f.ny) if e[f.na + i]}
    sup_q = {i for f in q for e in f.terms for i in range(f.ny) if e[f.na + i]}
    if sup_p & sup_q:
        raise DomainError("factor power sums must use disjoint y-variables")
    out: list[BiPoly] = []
    for k in range(kmax + 1):
        acc = BiPoly.zero(p[0].na, p[0].ny)
        for i in range(k + 1):
            acc = acc + (p[i] * q[k - i]).scale(comb(k, i))
        out.append(acc)
    return out

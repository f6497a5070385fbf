"""Alternating Weyl sums F_k and their factored forms.

For a root system with Weyl group W acting on weight coordinates, the k-th
alternating sum is the bihomogeneous polynomial

    F_k(mu, nu) = sum over w in W of sign(w) * <w mu, nu>^k

of bidegree (k, k).  Facts used as computational shortcuts and cross-checks:

* F_k = 0 for k < N and for k = N+1, where N = number of positive roots;
* if -1 lies in W then F_k = 0 whenever N + k is odd;
* F_k is divisible by d * d-vee, where d is the product of the positive
  roots (a y-polynomial) and d-vee the product of the positive coroots
  (an a-polynomial); the quotient F'_k is W x W-invariant and invariant
  under the Killing-transport involution;
* F_N = N! * d * d-vee / d-vee(delta), and
  F_{N+2} = binom(N+2, 2)/dim(g) * q2 * q2-vee * F_N,
  with q2, q2-vee the Killing quadratics on the two sides.

F'_k lives in the span of the symmetrized products of any basis of the
degree-(k-N) W-invariants, which is what fk_via_invariants exploits: it
solves for the coefficients from exact scalar samples and never expands the
big alternating sum symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DomainError, InternalError
from .polyalg import BiPoly, exact_divide, expand_linear_power
from .rootsys import RootSystem

__all__ = [
    "FkTable",
    "fk_direct",
    "fk_evaluated",
    "fk_scalar",
    "fk_reduced",
    "weyl_denominator",
    "coweyl_denominator",
    "coweyl_denominator_at_delta",
    "q2_poly",
    "q2_dual_poly",
    "closed_form_FN",
    "closed_form_FN2",
    "sigma_involution",
    "invariant_basis",
    "fk_via_invariants",
]

#: Abort threshold for symbolic expansion.
MAX_TERMS = 10**7

Scalar = int | Fraction


def _parity_zero(rs: RootSystem, k: int) -> bool:
    return rs.minus_one_in_weyl and (rs.num_positive + k) % 2 == 1


def fk_direct(rs: RootSystem, k: int) -> BiPoly:
    """The full symbolic F_k as a BiPoly in (a, y).

    Expands <w mu, nu>^k = (sum_i l_i(a) y_i)^k per Weyl element by the
    multinomial over y-exponents, with the powers of the r linear forms
    l_i(a) shared along the recursion.  Intended for small rank; the term
    count is guarded by MAX_TERMS.
    """
    if k < 0:
        raise DomainError("negative power in Weyl sum")
    r = rs.rank
    acc: dict[tuple, Scalar] = {}
    for w in rs.weyl:
        sign = w.sign
        rows = w.matrix  # row i = linear form l_i(a)
        # powers of each linear form, expanded over a-exponents
        pows = [
            [expand_linear_power(rows[i], t) for t in range(k + 1)] for i in range(r)
        ]

        # iterative enumeration of y-exponent compositions of k
        stack = [(0, k, {(0,) * r: 1}, 1, ())]
        while stack:
            i, remaining, aparts, multi, yexp = stack.pop()
            if i == r - 1:
                block = pows[i][remaining]
                ye = yexp + (remaining,)
                for ae0, c0 in aparts.items():
                    for ae, c in block.items():
                        key = tuple(x + z for x, z in zip(ae0, ae)) + ye
                        s = acc.get(key, 0) + sign * multi * c0 * c
                        if s:
                            acc[key] = s
                        else:
                            acc.pop(key, None)
                continue
            for e in range(remaining + 1):
                block = pows[i][e]
                if not block:
                    continue
                if e == 0:
                    nparts = aparts
                else:
                    nparts = {}
                    for ae0, c0 in aparts.items():
                        for ae, c in block.items():
                            key = tuple(x + z for x, z in zip(ae0, ae))
                            s = nparts.get(key, 0) + c0 * c
                            if s:
                                nparts[key] = s
                            else:
                                nparts.pop(key, None)
                stack.append(
                    (i + 1, remaining - e, nparts, multi * comb(remaining, e), yexp + (e,))
                )
            if len(acc) > MAX_TERMS:
                raise InternalError("Weyl sum exceeded the term budget")
    out = BiPoly.zero(r, r)
    out.terms = {e: c for e, c in acc.items() if c}
    return out


def fk_evaluated(rs: RootSystem, mu: Sequence[Scalar], k: int) -> BiPoly:
    """F_k with the weight argument fixed: a y-polynomial of degree k."""
    r = rs.rank
    if len(mu) != r:
        raise DomainError(f"weight has {len(mu)} coordinates, expected {r}")
    acc: dict[tuple, Scalar] = {}
    for w in rs.weyl:
        rows = w.matrix
        coeffs = tuple(
            sum(rows[i][j] * mu[j] for j in range(r)) for i in range(r)
        )
        for ye, c in expand_linear_power(coeffs, k).items():
            key = (0,) * r + ye
            s = acc.get(key, 0) + w.sign * c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    out = BiPoly.zero(r, r)
    out.terms = acc
    return out


def fk_scalar(rs: RootSystem, mu: Sequence[Scalar], nu: Sequence[Scalar], k: int) -> Scalar:
    """F_k evaluated at a rational point pair; cheap even for big Weyl groups."""
    r = rs.rank
    total: Scalar = 0
    for w in rs.weyl:
        rows = w.matrix
        pair = sum(
            sum(rows[i][j] * mu[j] for j in range(r)) * nu[i] for i in range(r)
        )
        total += w.sign * pair**k
    return total


def weyl_denominator(rs: RootSystem) -> BiPoly:
    """d = product of the positive roots, as a y-polynomial."""
    out = BiPoly.constant(rs.rank, rs.rank, 1)
    for alpha in rs.positive_roots:
        out = out * BiPoly.y_linear(list(alpha), na=rs.rank)
    return out


def coweyl_denominator(rs: RootSystem) -> BiPoly:
    """d-vee = product of the positive coroots, as an a-polynomial."""
    out = BiPoly.constant(rs.rank, rs.rank, 1)
    for av in rs.positive_coroots:
        out = out * BiPoly.a_linear(list(av), ny=rs.rank)
    return out


def coweyl_denominator_at_delta(rs: RootSystem) -> int:
    """d-vee(delta) = product over positive coroots of their coordinate sums."""
    val = 1
    for av in rs.positive_coroots:
        val *= sum(av)
    return val


def q2_poly(rs: RootSystem) -> BiPoly:
    """Killing quadratic on the coweight side: sum K_ij y_i y_j."""
    r = rs.rank
    terms: dict[tuple, Scalar] = {}
    for i in range(r):
        for j in range(i, r):
            c = rs.killing[i][j] if i == j else 2 * rs.killing[i][j]
            if c:
                e = [0] * (2 * r)
                e[r + i] += 1
                e[r + j] += 1
                terms[tuple(e)] = c
    return BiPoly(r, r, terms)


def q2_dual_poly(rs: RootSystem) -> BiPoly:
    """Inverse Killing quadratic on the weight side: sum K-dual_ij a_i a_j."""
    r = rs.rank
    terms: dict[tuple, Scalar] = {}
    for i in range(r):
        for j in range(i, r):
            c = rs.killing_dual[i][j] if i == j else 2 * rs.killing_dual[i][j]
            if c:
                e = [0] * (2 * r)
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = c
    return BiPoly(r, r, terms)


def closed_form_FN(rs: RootSystem) -> BiPoly:
    """F_N = N! * d * d-vee / d-vee(delta)."""
    import math

    n = rs.num_positive
    return (weyl_denominator(rs) * coweyl_denominator(rs)).scale(
        Fraction(math.factorial(n), coweyl_denominator_at_delta(rs))
    )


def closed_form_FN2(rs: RootSystem) -> BiPoly:
    """F_{N+2} = binom(N+2,2)/dim(g) * q2 * q2-vee * F_N."""
    n = rs.num_positive
    return (q2_poly(rs) * q2_dual_poly(rs) * closed_form_FN(rs)).scale(
        Fraction(comb(n + 2, 2), rs.dim_g)
    )


def fk_reduced(rs: RootSystem, k: int, fk: BiPoly | None = None) -> BiPoly:
    """F'_k = F_k / (d * d-vee); exact by the divisibility theorem."""
    if fk is None:
        fk = fk_direct(rs, k)
    return exact_divide(fk, weyl_denominator(rs) * coweyl_denominator(rs))


def sigma_involution(rs: RootSystem, f: BiPoly) -> BiPoly:
    """Killing transport swap (mu, nu) -> (sigma nu, sigma^-1 mu).

    Substitutes a_i by the K-row linear form in y and y_i by the K-inverse
    row in a; F_k and F'_k are invariant under this.
    """
    r = rs.rank
    a_images = [
        BiPoly.y_linear([rs.killing[i][j] for j in range(r)], na=r) for i in range(r)
    ]
    y_images = [
        BiPoly.a_linear([rs.killing_dual[i][j] for j in range(r)], ny=r)
        for i in range(r)
    ]
    return f.compose(a_images=a_images, y_images=y_images)


@dataclass(frozen=True)
class FkTable:
    """F_k and F'_k for k = 0..kmax over one root system."""

    kind: str
    rank: int
    kmax: int
    entries: dict = field(repr=False)
    reduced: dict = field(repr=False)

    @classmethod
    def build(cls, rs: RootSystem, kmax: int = 10) -> "FkTable":
        if kmax < 0:
            raise DomainError("kmax must be nonnegative")
        n = rs.num_positive
        entries: dict[int, BiPoly] = {}
        reduced: dict[int, BiPoly] = {}
        zero = BiPoly.zero(rs.rank, rs.rank)
        for k in range(kmax + 1):
            if k < n or k == n + 1 or _parity_zero(rs, k):
                entries[k] = zero
                reduced[k] = zero
            else:
                fk = fk_direct(rs, k)
                entries[k] = fk
                reduced[k] = fk_reduced(rs, k, fk)
        return cls(kind=rs.kind, rank=rs.rank, kmax=kmax, entries=entries, reduced=reduced)


# -- invariant-basis route ---------------------------------------------------


def _monomials(r: int, degree: int) -> list[tuple]:
    """All exponent tuples of the given total degree, canonical descending order."""
    out: list[tuple] = []

    def rec(pos: int, remaining: int, cur: list) -> None:
        if pos == r - 1:
            cur.append(remaining)
            out.append(tuple(cur))
            cur.pop()
            return
        for e in range(remaining, -1, -1):
            cur.append(e)
            rec(pos + 1, remaining - e, cur)
            cur.pop()

    if r == 0:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    return out


def invariant_basis(rs: RootSystem, degree: int) -> list[BiPoly]:
    """Canonical basis of the degree-m W-invariant polynomials on the coweight side.

    Reynolds operator (orbit average of each degree-m y-monomial) followed by
    exact row reduction; the result is the reduced-echelon basis over the
    canonical monomial list, so it is deterministic.
    """
    if degree < 0:
        raise DomainError("invariant degree must be nonnegative")
    r = rs.rank
    monoms = _monomials(r, degree)
    index = {m: i for i, m in enumerate(monoms)}
    rows: list[list[Fraction]] = []
    order = rs.weyl_order
    for m in monoms:
        mono = BiPoly(r, r, {(0,) * r + m: 1})
        avg = BiPoly.zero(r, r)
        for w in rs.weyl:
            # y-substitution matrix for the action on functions is w^T
            y_images = [
                BiPoly.y_linear([w.matrix[j][i] for j in range(r)], na=r)
                for i in range(r)
            ]
            avg = avg + mono.compose(y_images=y_images)
        avg = avg.scale(Fraction(1, order))
        row = [Fraction(0)] * len(monoms)
        for e, c in avg.terms.items():
            row[index[e[r:]]] = Fraction(c)
        rows.append(row)
    basis_rows = _rref(rows)
    out = []
    for row in basis_rows:
        terms = {}
        for j, c in enumerate(row):
            if c:
                terms[(0,) * r + monoms[j]] = c
        out.append(BiPoly(r, r, terms))
    return out


def _rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form over exact rationals; drops zero rows."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, nrows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[pivot_row], mat[piv] = mat[piv], mat[pivot_row]
        pv = mat[pivot_row][col]
        mat[pivot_row] = [x / pv for x in mat[pivot_row]]
        for r2 in range(nrows):
            if r2 != pivot_row and mat[r2][col] != 0:
                f = mat[r2][col]
                mat[r2] = [a - f * b for a, b in zip(mat[r2], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return [row for row in mat[:pivot_row]]


def _sample_points(rs: RootSystem, count: int):
    """Deterministic sample pairs (mu_c, nu_c), regular points only.

    mu_c = delta + c*(1,2,...,r); nu_c = (r,...,2,1) + (c-1)*(1,2,...,r).
    Non-regular pairs (d or d-vee vanishing) are skipped; the sequence is the
    documented fallback for singular systems.
    """
    r = rs.rank
    produced = 0
    c = 1
    while produced < count:
        mu = tuple(1 + c * (j + 1) for j in range(r))
        nu = tuple((r - j) + (c - 1) * (j + 1) for j in range(r))
        c += 1
        dvee = 1
        for av in rs.positive_coroots:
            dvee *= sum(av[j] * mu[j] for j in range(r))
        dval = 1
        for al in rs.positive_roots:
            dval *= sum(al[j] * nu[j] for j in range(r))
        if dvee == 0 or dval == 0:
            continue
        produced += 1
        yield mu, nu, dval, dvee


def fk_via_invariants(rs: RootSystem, k: int, sample_budget: int = 64) -> BiPoly:
    """F_k reconstructed from the invariant-basis ansatz.

    Writes F'_k = sum c_ij beta_ij with beta_ij the transport-symmetrized
    products of a degree-(k-N) invariant basis, solves the c_ij from exact
    scalar samples, and multiplies d * d-vee back in.  Must agree with
    fk_direct exactly.
    """
    r = rs.rank
    n = rs.num_positive
    zero = BiPoly.zero(r, r)
    if k < n:
        return zero
    m = k - n
    basis = invariant_basis(rs, m)
    dd = weyl_denominator(rs) * coweyl_denominator(rs)
    if not basis:
        return zero
    # transport each basis element to the weight side: y := K-dual a
    y_images = [
        BiPoly.a_linear([rs.killing_dual[i][j] for j in range(r)], ny=r)
        for i in range(r)
    ]
    basis_a = [b.compose(y_images=y_images) for b in basis]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i, len(basis))]
    betas = []
    for i, j in pairs:
        beta = basis[i] * basis_a[j] + basis[j] * basis_a[i]
        betas.append(beta)
    # exact linear solve from deterministic samples
    rows: list[list[Fraction]] = []
    vals: list[Fraction] = []
    for mu, nu, dval, dvee in _sample_points(rs, sample_budget):
        muf = [Fraction(x) for x in mu]
        nuf = [Fraction(x) for x in nu]
        row = [Fraction(b.evaluate(muf, nuf)) for b in betas]
        fval = Fraction(fk_scalar(rs, muf, nuf, k))
        rows.append(row)
        vals.append(fval / (Fraction(dval) * Fraction(dvee)))
        solution = _solve_exact(rows, vals)
        if solution is not None:
            coeffs, consistent = solution
            if not consistent:
                raise InternalError("inconsistent sample system for F'_k")
            out = zero
            for c, beta in zip(coeffs, betas):
                if c:
                    out = out + beta.scale(c)
            return out * dd
    raise InternalError(
        f"sample system for F'_{k} stayed singular after {sample_budget} samples"
    )


def _solve_exact(rows: list[list[Fraction]], vals: list[Fraction]):
    """Solve rows * x = vals if the rank is full; returns (x, consistent) or None."""
    ncols = len(rows[0])
    aug = [list(r) + [v] for r, v in zip(rows, vals)]
    mat = [list(r) for r in aug]
    pivots = []
    pr = 0
    for col in range(ncols):
        piv = next((r for r in range(pr, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[pr], mat[piv] = mat[piv], mat[pr]
        pv = mat[pr][col]
        mat[pr] = [x / pv for x in mat[pr]]
        for r2 in range(len(mat)):
            if r2 != pr and mat[r2][col] != 0:
                f = mat[r2][col]
                mat[r2] = [a - f * b for a, b in zip(mat[r2], mat[pr])]
        pivots.append(col)
        pr += 1
    if len(pivots) < ncols:
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = mat[i][ncols]
    # residual check against the original rows (cheap and airtight)
    consistent = all(
        sum(c * xi for c, xi in zip(row, x)) == v for row, v in zip(rows, vals)
    )
    return x, consistent

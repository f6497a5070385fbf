"""Brute-force ground truth, independent of the Weyl-sum machinery.

Weight multiplicities come from the classical multiplicity recursion
(norm-difference denominator, root-string numerator), run entirely in
integers by scaling the invariant form with the adjugate of the Killing
matrix.  Power sums and elementary symmetric functions are then literal
sums/products over the expanded weight multiset, and characters at order-2
torus elements are parity sums over integer lattice coordinates.  Nothing
here touches alternating Weyl sums, polynomial division, or Newton's
identities, so agreement with the main engine is genuine corroboration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DomainError, InternalError
from .polyalg import BiPoly, expand_linear_power
from .powersum import validate_dominant, weyl_dimension
from .rootsys import RootSystem

__all__ = [
    "DEFAULT_MAX_DIM",
    "WeightMultiset",
    "weight_multiplicities",
    "oracle_power_sum",
    "oracle_elementary",
    "character_at_order2",
    "schur_at_signs",
]

#: Dimension guard for the brute-force path (overridable per call).
DEFAULT_MAX_DIM = 200000


# -- integer quadratic form (adjugate of the Killing matrix) -----------------


def _killing_adjugate(rs: RootSystem) -> tuple[tuple[tuple[int, ...], ...], int]:
    """(adjugate matrix, determinant) of the Killing matrix on weight coords.

    killing_dual = K^-1 exactly, so adj = det(K) * K^-1 is integral; the
    scaled pairing adj(mu, nu) = det(K) * (mu, nu) keeps the multiplicity
    recursion in integers (the scale cancels between numerator and
    denominator).
    """
    r = rs.rank
    det = Fraction(1)
    # det(K) via det(K^-1) = 1/det(K) is awkward; eliminate K directly.
    mat = [[Fraction(rs.killing[i][j]) for j in range(r)] for i in range(r)]
    for col in range(r):
        piv = next((k for k in range(col, r) if mat[k][col] != 0), None)
        if piv is None:
            raise InternalError("singular Killing matrix")
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for k in range(col + 1, r):
            f = mat[k][col] * inv
            if f:
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[col])]
    if det.denominator != 1:
        raise InternalError("Killing determinant is not an integer")
    d = int(det)
    adj = []
    for i in range(r):
        row = []
        for j in range(r):
            v = rs.killing_dual[i][j] * d
            if v.denominator != 1:
                raise InternalError("Killing adjugate is not integral")
            row.append(int(v))
        adj.append(tuple(row))
    return tuple(adj), d


def _form(adj, u: Sequence[int], v: Sequence[int]) -> int:
    return sum(u[i] * sum(adj[i][j] * v[j] for j in range(len(v))) for i in range(len(u)))


def _dominant_rep(cartan, vec: Sequence[int]) -> tuple[int, ...]:
    """Dominant orbit representative by simple-reflection descent."""
    cur = list(vec)
    rank = len(cur)
    while True:
        i = next((j for j in range(rank) if cur[j] < 0), None)
        if i is None:
            return tuple(cur)
        ci = cur[i]
        for j in range(rank):
            cur[j] -= cartan[i][j] * ci


# -- weight multiset ----------------------------------------------------------


@dataclass(frozen=True)
class WeightMultiset:
    """Weights of one irreducible representation, stored by dominant orbit.

    ``dominant`` maps each dominant weight to its multiplicity; the full
    W-orbit expansion is materialized once on demand and cached.
    """

    rs: RootSystem
    highest_weight: tuple[int, ...]
    dominant: dict
    _expanded: dict | None = field(default=None, repr=False, compare=False)

    def expanded(self) -> dict:
        """Every distinct weight with its multiplicity (cached)."""
        if self._expanded is None:
            rs = self.rs
            r = rs.rank
            full: dict[tuple, int] = {}
            for mu, m in self.dominant.items():
                orbit = set()
                for w in rs.weyl:
                    mat = w.matrix
                    orbit.add(
                        tuple(sum(mat[i][j] * mu[j] for j in range(r)) for i in range(r))
                    )
                for nu in orbit:
                    if nu in full:
                        raise InternalError("weight orbits are not disjoint")
                    full[nu] = m
            total = sum(full.values())
            dim = weyl_dimension(rs, self.highest_weight)
            if total != dim:
                raise InternalError(
                    f"weight multiset sums to {total}, dimension formula says {dim}"
                )
            object.__setattr__(self, "_expanded", full)
        return self._expanded

    @property
    def dimension(self) -> int:
        return sum(self.expanded().values())

    def multiplicity(self, mu: Sequence[int]) -> int:
        return self.dominant.get(_dominant_rep(self.rs.cartan, mu), 0)


def weight_multiplicities(
    rs: RootSystem, lam: Sequence[int], max_dim: int = DEFAULT_MAX_DIM
) -> WeightMultiset:
    """Exact weight multiplicities of the irreducible with highest weight lam.

    Dominant candidates are gathered by walking down from lam one simple
    root at a time inside the norm ball |mu + delta| <= |lam + delta| (every
    weight lies in the ball and is reachable through weights, so nothing is
    missed).  Multiplicities fill in by increasing depth; each one is an
    exact integer quotient, and the total is checked against the dimension
    formula on first expansion.
    """
    lam = validate_dominant(rs, lam)
    dim = weyl_dimension(rs, lam)
    if dim > max_dim:
        raise DomainError(
            f"representation dimension {dim} exceeds the guard {max_dim};"
            " raise max_dim to force the brute-force computation"
        )
    r = rs.rank
    cartan = rs.cartan
    adj, _ = _killing_adjugate(rs)
    delta = (1,) * r
    lam_d = tuple(lam[i] + 1 for i in range(r))
    bound = _form(adj, lam_d, lam_d)
    simple = [tuple(cartan[i]) for i in range(r)]

    # breadth-first sweep of the ball, collecting dominant lattice points
    start = tuple(lam)
    seen = {start}
    frontier = [start]
    levels: dict[tuple, int] = {start: 0}
    dominant_levels: list[tuple[int, tuple]] = [(0, start)]
    while frontier:
        nxt = []
        for node in frontier:
            lvl = levels[node]
            for s in simple:
                child = tuple(node[i] - s[i] for i in range(r))
                if child in seen:
                    continue
                shifted = tuple(child[i] + 1 for i in range(r))
                if _form(adj, shifted, shifted) > bound:
                    continue
                seen.add(child)
                levels[child] = lvl + 1
                nxt.append(child)
                if all(c >= 0 for c in child):
                    dominant_levels.append((lvl + 1, child))
        frontier = nxt
    del levels
    dominant_levels.sort()

    pos_roots = [tuple(a) for a in rs.positive_roots]
    mult: dict[tuple, int] = {}
    for lvl, mu in dominant_levels:
        if lvl == 0:
            mult[mu] = 1
            continue
        mu_d = tuple(mu[i] + 1 for i in range(r))
        denom = bound - _form(adj, mu_d, mu_d)
        if denom <= 0:
            raise InternalError("norm denominator must be positive below the top")
        total = 0
        for alpha in pos_roots:
            j = 1
            while True:
                nu = tuple(mu[i] + j * alpha[i] for i in range(r))
                nu_d = tuple(nu[i] + 1 for i in range(r))
                if _form(adj, nu_d, nu_d) > bound:
                    break
                m = mult.get(_dominant_rep(cartan, nu), 0)
                if m:
                    total += m * _form(adj, nu, alpha)
                j += 1
        num = 2 * total
        q, rem = divmod(num, denom)
        if rem:
            raise InternalError("multiplicity recursion yielded a non-integer")
        if q <= 0:
            raise InternalError("dominant candidate received a non-positive multiplicity")
        mult[mu] = q
    wm = WeightMultiset(rs=rs, highest_weight=lam, dominant=mult)
    wm.expanded()  # eager dimension check
    return wm


# -- direct sums and products over the multiset -------------------------------


def oracle_power_sum(wm: WeightMultiset, k: int) -> BiPoly:
    """Sum of m(mu) * <mu, .>^k over all weights, as a y-polynomial."""
    if k < 0:
        raise DomainError("negative power")
    r = wm.rs.rank
    acc: dict[tuple, int] = {}
    prefix = (0,) * r
    for mu, m in wm.expanded().items():
        for ye, c in expand_linear_power(mu, k).items():
            key = prefix + ye
            s = acc.get(key, 0) + m * c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    out = BiPoly.zero(r, r)
    out.terms = acc
    return out


def oracle_elementary(wm: WeightMultiset, kmax: int) -> list[BiPoly]:
    """E_0..E_kmax as the degree-truncated product of (1 + mu-hat)^m.

    Each weight contributes the binomially expanded factor truncated at
    total degree kmax; factors are combined pairwise (a balanced product
    tree) so most multiplications involve short polynomials.
    """
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    r = wm.rs.rank
    one = [dict() for _ in range(kmax + 1)]
    one[0][(0,) * r] = 1

    def leaf(mu: tuple, m: int) -> list[dict]:
        buckets = [dict() for _ in range(kmax + 1)]
        buckets[0][(0,) * r] = 1
        for j in range(1, min(m, kmax) + 1):
            cj = comb(m, j)
            blk = buckets[j]
            for ye, c in expand_linear_power(mu, j).items():
                blk[ye] = cj * c
        return buckets

    def mul(f: list[dict], g: list[dict]) -> list[dict]:
        out = [dict() for _ in range(kmax + 1)]
        for da in range(kmax + 1):
            fa = f[da]
            if not fa:
                continue
            for db in range(kmax + 1 - da):
                gb = g[db]
                if not gb:
                    continue
                blk = out[da + db]
                for e1, c1 in fa.items():
                    for e2, c2 in gb.items():
                        key = tuple(x + y for x, y in zip(e1, e2))
                        s = blk.get(key, 0) + c1 * c2
                        if s:
                            blk[key] = s
                        else:
                            blk.pop(key, None)
        return out

    factors = [leaf(mu, m) for mu, m in wm.expanded().items()]
    if not factors:
        factors = [one]
    while len(factors) > 1:
        nxt = [
            mul(factors[i], factors[i + 1]) for i in range(0, len(factors) - 1, 2)
        ]
        if len(factors) % 2:
            nxt.append(factors[-1])
        factors = nxt
    buckets = factors[0]
    prefix = (0,) * r
    out = []
    for k in range(kmax + 1):
        p = BiPoly.zero(r, r)
        p.terms = {prefix + ye: c for ye, c in buckets[k].items()}
        out.append(p)
    return out


# -- characters at order-2 torus elements -------------------------------------


def character_at_order2(
    wm: WeightMultiset,
    signs: Sequence[int],
    basis: Sequence[Sequence[int]] | None = None,
) -> int:
    """Character value at the element acting by the given signs on lattice generators.

    ``basis`` rows are the lattice generators in fundamental-weight
    coordinates (identity = full weight lattice).  Each weight is solved for
    integer coordinates against the basis and contributes m(mu) times the
    parity sign picked out by the -1 entries.
    """
    r = wm.rs.rank
    if len(signs) != r:
        raise DomainError(f"sign vector has {len(signs)} entries, expected {r}")
    if any(s not in (1, -1) for s in signs):
        raise DomainError("entries of an order-2 element must be +1 or -1")
    if basis is None:
        binv_t = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    else:
        if len(basis) != r or any(len(row) != r for row in basis):
            raise DomainError("lattice basis must be a square matrix of full rank")
        binv_t = _invert([[Fraction(basis[j][i]) for j in range(r)] for i in range(r)])
    neg = [i for i, s in enumerate(signs) if s == -1]
    total = 0
    for mu, m in wm.expanded().items():
        parity = 0
        for i in neg:
            ci = sum(binv_t[i][j] * mu[j] for j in range(r))
            if ci.denominator != 1:
                raise DomainError(
                    "weight does not lie in the span of the given lattice basis"
                )
            parity += int(ci)
        total += m if parity % 2 == 0 else -m
    return total


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((k for k in range(col, n) if aug[k][col] != 0), None)
        if piv is None:
            raise DomainError("lattice basis must be a square matrix of full rank")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for k in range(n):
            if k != col and aug[k][col] != 0:
                f = aug[k][col]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[col])]
    return [row[n:] for row in aug]


# -- complete symmetric functions at sign vectors ------------------------------


def _h_series(a_minus: int, b_plus: int, pmax: int) -> list[int]:
    """Coefficients H_0..H_pmax of (1+t)^(-a) (1-t)^(-b)."""
    if a_minus < 0 or b_plus < 0:
        raise DomainError("sign counts must be nonnegative")
    neg = [
        (-1) ** k * comb(a_minus + k - 1, k) if a_minus else (1 if k == 0 else 0)
        for k in range(pmax + 1)
    ]
    pos = [
        comb(b_plus + k - 1, k) if b_plus else (1 if k == 0 else 0)
        for k in range(pmax + 1)
    ]
    return [
        sum(neg[i] * pos[p - i] for i in range(p + 1)) for p in range(pmax + 1)
    ]


def schur_at_signs(partition: Sequence[int], a_minus: int, b_plus: int) -> int:
    """Schur polynomial of the partition at a_minus entries -1 and b_plus entries +1.

    Jacobi-Trudi: the determinant of the matrix with (i, j) entry
    H_{partition_i - i + j}, using the series above for the complete
    symmetric values.  Must agree with character_at_order2 on type A.
    """
    part = list(partition)
    if any(not isinstance(p, int) or isinstance(p, bool) or p < 0 for p in part):
        raise DomainError("partition parts must be nonnegative integers")
    if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
        raise DomainError("partition parts must be nonincreasing")
    n = len(part)
    if n > a_minus + b_plus:
        raise DomainError("partition has more parts than there are variables")
    if n == 0:
        return 1
    pmax = part[0] + n
    h = _h_series(a_minus, b_plus, pmax)

    def hval(p: int) -> int:
        if p < 0:
            return 0
        return h[p]

    mat = [[hval(part[i] - (i + 1) + (j + 1)) for j in range(n)] for i in range(n)]
    return _int_det(mat)


def _int_det(mat: list[list[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((k for k in range(col, n) if m[k][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for k in range(col + 1, n):
            for j in range(col + 1, n):
                m[k][j] = (m[k][j] * m[col][col] - m[k][col] * m[col][j]) // prev
            m[k][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]

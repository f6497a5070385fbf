"""Root-system data for the classical simple types A1-A6, B2-B6, C2-C6, D3-D6, G2.

Coordinate conventions (fixed once, used everywhere):

* Weights live in the fundamental-weight basis: a weight ``mu`` is a tuple of
  rational coordinates ``(m_1, ..., m_r)`` meaning ``mu = sum m_i w_i``.
* Coweights live in the simple-coroot basis: ``nu = sum n_j alpha_j-vee``.
* With these bases the natural pairing is the identity:
  ``<mu, nu> = sum_i m_i n_i``.
* Cartan matrix convention: ``cartan[i][j] = <alpha_i, alpha_j-vee>`` with the
  Bourbaki node labeling, so row ``i`` of the Cartan matrix is exactly the
  simple root ``alpha_i`` written in fundamental-weight coordinates.
* Simple reflections act on weight coordinates by
  ``s_i(w_j) = w_j - delta_ij alpha_i``; the Weyl group is enumerated as the
  breadth-first closure of the simple reflections, deduplicated by the integer
  matrix itself, with ``sign(w) = det(w)`` tracked as word-length parity.

The Killing form on the coweight side is computed from the root sum
``K(nu1, nu2) = sum over all roots alpha of <alpha, nu1><alpha, nu2>`` and is
an integer matrix in simple-coroot coordinates; ``killing_dual`` is its exact
rational inverse (the induced form on the weight side).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Tuple

from .errors import DomainError, InternalError

__all__ = [
    "WeightVector",
    "CoweightVector",
    "WeylElement",
    "RootSystem",
    "SUPPORTED_RANKS",
    "build_root_system",
    "act",
    "highest_root",
    "dominant_representative",
    "is_dominant",
]

Coord = Fraction | int
Matrix = Tuple[Tuple[int, ...], ...]

#: Supported rank range per type kind.
SUPPORTED_RANKS = {"A": (1, 6), "B": (2, 6), "C": (2, 6), "D": (3, 6), "G2": (2, 2)}

#: Hard cap on Weyl group enumeration.
_WEYL_CAP = 10**6


class WeightVector(tuple):
    """Weight in fundamental-weight coordinates (hashable tuple subclass)."""

    __slots__ = ()
    basis = "fundamental-weight"

    def __new__(cls, coords: Iterable[Coord]):
        return super().__new__(cls, tuple(coords))


class CoweightVector(tuple):
    """Coweight in simple-coroot coordinates (hashable tuple subclass)."""

    __slots__ = ()
    basis = "simple-coroot"

    def __new__(cls, coords: Iterable[Coord]):
        return super().__new__(cls, tuple(coords))


class WeylElement(NamedTuple):
    """One Weyl group element: its matrix on weight coordinates and its sign."""

    matrix: Matrix
    sign: int


def _cartan_matrix(kind: str, rank: int) -> Matrix:
    """Bourbaki Cartan matrix, rows = simple roots in fundamental-weight coords."""
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
    if kind == "A":
        for i in range(rank - 1):
            c[i][i + 1] = c[i + 1][i] = -1
    elif kind == "B":
        # chain, last simple root short: <alpha_{r-1}, alpha_r-vee> = -2
        for i in range(rank - 1):
            c[i][i + 1] = c[i + 1][i] = -1
        c[rank - 2][rank - 1] = -2
    elif kind == "C":
        # chain, last simple root long: <alpha_r, alpha_{r-1}-vee> = -2
        for i in range(rank - 1):
            c[i][i + 1] = c[i + 1][i] = -1
        c[rank - 1][rank - 2] = -2
    elif kind == "D":
        for i in range(rank - 2):
            c[i][i + 1] = c[i + 1][i] = -1
        c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1
        c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0
    elif kind == "G2":
        c[0][1] = -1
        c[1][0] = -3
    else:  # pragma: no cover - guarded by build_root_system
        raise DomainError(f"unknown kind {kind!r}")
    return tuple(tuple(row) for row in c)


def _simple_root_half_norms(kind: str, rank: int) -> Tuple[Fraction, ...]:
    """d_i = (alpha_i, alpha_i)/2 up to overall scale: (alpha_i, alpha_j) = d_j C_ij."""
    d = [Fraction(1)] * rank
    if kind == "B":
        d[rank - 1] = Fraction(1, 2)
    elif kind == "C":
        d[rank - 1] = Fraction(2)
    elif kind == "G2":
        d[1] = Fraction(3)
    return tuple(d)


def _positive_roots(cartan: Matrix, d: Sequence[Fraction]):
    """All positive roots as integer vectors over the simple roots.

    Standard root-string closure: beta + alpha_i is a root iff
    p - <beta, alpha_i-vee> > 0 where p is the depth of the alpha_i-string
    below beta.  Returns the roots sorted by (height, coefficient tuple).
    """
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found = set(simple)
    by_height = {1: list(simple)}
    h = 1
    while by_height.get(h):
        nxt = []
        for beta in by_height[h]:
            for i in range(rank):
                # <beta, alpha_i-vee> = sum_j beta_j * C[j][i]
                pairing = sum(beta[j] * cartan[j][i] for j in range(rank))
                p = 0
                lower = list(beta)
                lower[i] -= 1
                while tuple(lower) in found:
                    p += 1
                    lower[i] -= 1
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up_t = tuple(up)
                    if up_t not in found:
                        found.add(up_t)
                        nxt.append(up_t)
        h += 1
        if nxt:
            by_height[h] = nxt
    return sorted(found, key=lambda k: (sum(k), k))


def _root_weight_coords(k: Sequence[int], cartan: Matrix) -> Tuple[int, ...]:
    rank = len(cartan)
    return tuple(sum(k[i] * cartan[i][j] for i in range(rank)) for j in range(rank))


def _coroot_coords(k: Sequence[int], cartan: Matrix, d: Sequence[Fraction]) -> Tuple[int, ...]:
    """Coroot of beta = sum k_i alpha_i in simple-coroot coordinates.

    beta-vee = sum_i k_i * (2 d_i / (beta, beta)) alpha_i-vee; the results are
    integers for any root of a crystallographic system.
    """
    rank = len(cartan)
    norm = Fraction(0)
    for i in range(rank):
        if not k[i]:
            continue
        for j in range(rank):
            if k[j]:
                norm += k[i] * k[j] * d[j] * cartan[i][j]
    coords = []
    for i in range(rank):
        c = Fraction(2 * k[i]) * d[i] / norm
        if c.denominator != 1:
            raise InternalError(f"non-integral coroot coordinate {c} for root {k}")
        coords.append(int(c))
    return tuple(coords)


def _simple_reflection_matrix(i: int, cartan: Matrix) -> Matrix:
    """Matrix of s_i on weight coordinates: (s_i m)_j = m_j - C[i][j] m_i."""
    rank = len(cartan)
    rows = []
    for j in range(rank):
        row = [1 if j == kcol else 0 for kcol in range(rank)]
        row[i] -= cartan[i][j]
        rows.append(tuple(row))
    return tuple(rows)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
    )


def _enumerate_weyl(cartan: Matrix) -> Tuple[WeylElement, ...]:
    """Breadth-first closure of the simple reflections, matrix-keyed dedup."""
    rank = len(cartan)
    gens = [_simple_reflection_matrix(i, cartan) for i in range(rank)]
    identity = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    seen = {identity: 1}
    frontier = [(identity, 1)]
    while frontier:
        nxt = []
        for mat, sign in frontier:
            for g in gens:
                prod = _mat_mul(g, mat)
                if prod not in seen:
                    seen[prod] = -sign
                    nxt.append((prod, -sign))
                    if len(seen) > _WEYL_CAP:
                        raise InternalError("Weyl group enumeration exceeded cap")
        frontier = nxt
    elems = sorted(seen.items(), key=lambda kv: kv[0])
    return tuple(WeylElement(m, s) for m, s in elems)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one simple type.

    The Weyl group is enumerated lazily on first access to ``weyl`` (or
    ``weyl_order``), since many consumers need only the roots and the
    Killing form; enumeration is verified against the closed-form order
    and against the reflection-descent prediction for ``-1 in W``.
    """

    kind: str
    rank: int
    cartan: Matrix
    positive_roots: Tuple[WeightVector, ...]
    positive_coroots: Tuple[CoweightVector, ...]
    root_coefficients: Tuple[Tuple[int, ...], ...]  # over the simple roots
    killing: Tuple[Tuple[int, ...], ...]
    killing_dual: Tuple[Tuple[Fraction, ...], ...]
    minus_one_in_weyl: bool
    _weyl: Tuple[WeylElement, ...] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_g(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @property
    def weyl(self) -> Tuple[WeylElement, ...]:
        if self._weyl is None:
            elems = _enumerate_weyl(self.cartan)
            _, w_exp = _expected_counts(self.kind, self.rank)
            if len(elems) != w_exp:
                raise InternalError(
                    f"{self.kind}{self.rank}: enumerated {len(elems)} Weyl elements,"
                    f" expected {w_exp}"
                )
            minus_one = tuple(
                tuple(-1 if i == j else 0 for j in range(self.rank))
                for i in range(self.rank)
            )
            if self.minus_one_in_weyl != any(w.matrix == minus_one for w in elems):
                raise InternalError(
                    f"{self.kind}{self.rank}: -1-in-W prediction contradicts enumeration"
                )
            object.__setattr__(self, "_weyl", elems)
        return self._weyl

    @property
    def weyl_order(self) -> int:
        return len(self.weyl)

    @property
    def delta(self) -> WeightVector:
        """Half sum of positive roots: all-ones in fundamental-weight coords."""
        return WeightVector((1,) * self.rank)

    def pairing(self, mu: Sequence[Coord], nu: Sequence[Coord]):
        """<mu, nu> in the chosen coordinates (identity pairing matrix)."""
        return sum(m * n for m, n in zip(mu, nu))


def _invert_symmetric(mat: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Exact inverse via Gauss-Jordan over Fractions."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise InternalError("singular Killing matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _parse_type(kind: str, rank: int) -> tuple[str, int]:
    kind = kind.upper()
    if kind == "G" :
        kind = "G2"
    if kind not in SUPPORTED_RANKS:
        raise DomainError(
            f"unsupported type kind {kind!r}; supported: A1-A6, B2-B6, C2-C6, D3-D6, G2"
        )
    lo, hi = SUPPORTED_RANKS[kind]
    if not (isinstance(rank, int) and lo <= rank <= hi):
        raise DomainError(
            f"rank {rank} out of range for kind {kind} (supported {lo}..{hi})"
        )
    return kind, rank


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int) -> RootSystem:
    """Construct (and memoize) the full root system of the given type.

    Raises DomainError for types outside the supported table.
    """
    kind, rank = _parse_type(kind, rank)
    cartan = _cartan_matrix(kind, rank)
    d = _simple_root_half_norms(kind, rank)
    coeffs = _positive_roots(cartan, d)
    pos_roots = tuple(WeightVector(_root_weight_coords(k, cartan)) for k in coeffs)
    pos_coroots = tuple(CoweightVector(_coroot_coords(k, cartan, d)) for k in coeffs)
    # Killing form from the root sum: K_ij = sum over all roots of a_i a_j
    killing = tuple(
        tuple(2 * sum(a[i] * a[j] for a in pos_roots) for j in range(rank))
        for i in range(rank)
    )
    rs = RootSystem(
        kind=kind,
        rank=rank,
        cartan=cartan,
        positive_roots=pos_roots,
        positive_coroots=pos_coroots,
        root_coefficients=tuple(coeffs),
        killing=killing,
        killing_dual=_invert_symmetric(killing),
        minus_one_in_weyl=_minus_one_in_weyl(cartan),
    )
    _check_counts(rs)
    return rs


def _minus_one_in_weyl(cartan: Matrix) -> bool:
    """Whether -1 lies in the Weyl group, without enumerating it.

    -1 is in W exactly when negation preserves each orbit, which the single
    regular weight mu = (1, 2, ..., r) detects: the dominant representative
    of -mu (by simple-reflection descent, each step adding a positive
    multiple of a simple root, hence terminating) equals mu iff the duality
    involution is trivial iff -1 is in W.
    """
    rank = len(cartan)
    mu = list(range(1, rank + 1))
    cur = [-c for c in mu]
    while True:
        i = next((j for j in range(rank) if cur[j] < 0), None)
        if i is None:
            return cur == mu
        ci = cur[i]
        for j in range(rank):
            cur[j] -= cartan[i][j] * ci


def _expected_counts(kind: str, rank: int) -> tuple[int, int]:
    """(number of positive roots, Weyl order) for cross-checking construction."""
    import math

    if kind == "A":
        return rank * (rank + 1) // 2, math.factorial(rank + 1)
    if kind in ("B", "C"):
        return rank * rank, 2**rank * math.factorial(rank)
    if kind == "D":
        return rank * (rank - 1), 2 ** (rank - 1) * math.factorial(rank)
    return 6, 12  # G2


def _check_counts(rs: RootSystem) -> None:
    n_exp, _ = _expected_counts(rs.kind, rs.rank)
    if rs.num_positive != n_exp:
        raise InternalError(
            f"{rs.kind}{rs.rank}: generated {rs.num_positive} positive roots, expected {n_exp}"
        )


def act(w: WeylElement, mu: Sequence[Coord]) -> WeightVector:
    """Apply a Weyl element to a weight (matrix times coordinate vector)."""
    mat = w.matrix
    n = len(mat)
    if len(mu) != n:
        raise DomainError(f"weight has {len(mu)} coordinates, expected {n}")
    return WeightVector(tuple(sum(mat[i][j] * mu[j] for j in range(n)) for i in range(n)))


def highest_root(rs: RootSystem) -> WeightVector:
    """The unique maximal-height positive root, in weight coordinates."""
    best = max(range(rs.num_positive), key=lambda i: sum(rs.root_coefficients[i]))
    return rs.positive_roots[best]


def is_dominant(mu: Sequence[Coord]) -> bool:
    return all(c >= 0 for c in mu)


def dominant_representative(rs: RootSystem, mu: Sequence[Coord]) -> WeightVector:
    """Weyl-orbit representative in the closed dominant chamber.

    Repeatedly reflects at a negative coordinate; terminates for any input.
    """
    m = list(mu)
    cartan = rs.cartan
    rank = rs.rank
    while True:
        i = next((k for k in range(rank) if m[k] < 0), None)
        if i is None:
            return WeightVector(m)
        mi = m[i]
        for j in range(rank):
            m[j] -= mi * cartan[i][j]

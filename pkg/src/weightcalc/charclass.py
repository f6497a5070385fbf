"""Group-level characteristic classes restricted to a maximal torus.

A choice of compact connected group with a fixed simple root system is made
through a :class:`CharacterLattice`: a basis of the character group of a
maximal torus, written in fundamental-weight coordinates (or, for the GL
family, in the standard diagonal coordinates).  On top of that choice this
module computes, always in exact arithmetic:

* Chern classes ``c_k`` of an irreducible representation, as integer
  polynomials in the lattice generators (the elementary symmetric functions
  of the weight multiset, re-expressed in the generator basis);
* a closed form for ``c_2`` from the quadratic Casimir data;
* Stiefel-Whitney classes of orthogonal representations, obtained from the
  Chern classes by reduction mod 2;
* spinoriality (does the representation lift to the spin group of its
  orthogonal form?), decided by evenness of ``c_2`` and cross-checked by a
  2-adic divisibility test on the invariant quadratic form;
* orthogonal / symplectic / non-self-dual typing of a highest weight;
* the factorization of the total Stiefel-Whitney class into factors
  ``(1 + v_S)^{m_k}`` indexed by subsets ``S`` of the order-2 subgroup
  generators, with the exponents recovered from finitely many character
  values at diagonal sign patterns.

Representations enter either as a plain dominant weight or wrapped in
:class:`PiSpec` with ``s_wrap=True``, meaning the sum of the representation
with its dual -- the standard way to make a non-orthogonal representation
orthogonal without changing its characteristic data in odd degrees.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Optional, Sequence, Tuple

from .errors import DomainError, InternalError
from .polyalg import BiPoly, Mod2Poly, Scalar, mod2_reduce
from .rootsys import RootSystem, build_root_system, dominant_representative
from .powersum import (
    elementary_from_power,
    power_sums,
    product_power_sums,
    validate_dominant,
    weyl_dimension,
)
from .weylsum import q2_poly
from .oracle import (
    DEFAULT_MAX_DIM,
    character_at_order2,
    schur_at_signs,
    weight_multiplicities,
)

__all__ = [
    "CharacterLattice",
    "PiSpec",
    "ChernResult",
    "SWCResult",
    "SpinorialResult",
    "builtin_lattice",
    "builtin_lattice_names",
    "lattice_contains",
    "chern_classes",
    "chern2_closed",
    "swc_restrict",
    "is_spinorial",
    "orthogonality_type",
    "lattice_orthogonality_type",
    "total_swc_factorization",
]


# -- domain types -------------------------------------------------------------


@dataclass(frozen=True)
class CharacterLattice:
    """A maximal-torus character lattice for a compact connected group.

    ``basis`` rows are the lattice generators.  For the semisimple families
    they are written in fundamental-weight coordinates of the underlying root
    system (``torus_rank == rank``); for the GL family the torus has one more
    circle than the root-system rank and the generators are the diagonal
    coordinate characters themselves, so ``basis`` is the identity and
    weights are given in diagonal coordinates.

    ``v_names`` label the generators of the dual of the 2-torsion subgroup
    of the torus, the variables of every mod-2 (Stiefel-Whitney) output.
    """

    name: str
    family: str  # "SL" | "PGL" | "GL" | "Sp" | "SO" | "Spin" | "G"
    kind: str
    rank: int
    torus_rank: int
    basis: Tuple[Tuple[int, ...], ...]
    gen_names: Tuple[str, ...]
    v_names: Tuple[str, ...]

    @property
    def is_semisimple(self) -> bool:
        return self.family != "GL"

    def root_system(self) -> RootSystem:
        return _rs(self.kind, self.rank)

    def weight_length(self) -> int:
        """Number of coordinates a weight takes for this lattice."""
        return self.torus_rank if self.family == "GL" else self.rank


@dataclass(frozen=True)
class PiSpec:
    """An irreducible representation, optionally doubled with its dual.

    ``s_wrap=True`` denotes the direct sum of the representation and its
    dual, which is always orthogonal; its Chern classes are the convolution
    of those of the two summands and its degree is doubled.
    """

    weight: Tuple[int, ...]
    s_wrap: bool = False


@dataclass(frozen=True)
class ChernResult:
    """Chern classes c_0..c_kmax in lattice generators, integer coefficients."""

    lattice: CharacterLattice
    pi: PiSpec
    kmax: int
    degree: int
    c: Tuple[BiPoly, ...]


@dataclass(frozen=True)
class SWCResult:
    """Stiefel-Whitney classes by degree; optionally factorization exponents.

    ``w[k]`` is the degree-k part, a polynomial over GF(2) in the 2-torsion
    generators.  ``total_factorization``, when present, lists the exponents
    m_1..m_r with ``w == prod_k prod_{|S|=k} (1 + v_S)^{m_k}`` truncated at
    ``kmax``.
    """

    lattice: CharacterLattice
    pi: PiSpec
    kmax: int
    w: Tuple[Mod2Poly, ...]
    total_factorization: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class SpinorialResult:
    """Spinoriality decision with its certificate.

    ``spinorial`` is the primary test: every coefficient of c_2 is even.
    When the secondary 2-adic test applies (plain representation of a simple
    type, nonzero weight), ``valuation`` holds the threshold j and
    ``secondary_integral`` whether 2^(-j) times the invariant quadratic form
    is 2-integral in the generators; the two tests are required to agree.
    """

    lattice: CharacterLattice
    pi: PiSpec
    spinorial: bool
    c2: BiPoly
    valuation: Optional[int] = None
    secondary_integral: Optional[bool] = None

    def __bool__(self) -> bool:
        return self.spinorial


# -- built-in lattices --------------------------------------------------------


@lru_cache(maxsize=None)
def _rs(kind: str, rank: int) -> RootSystem:
    return build_root_system(kind, rank)


def _chain_rows(r: int) -> list[list[int]]:
    """Rows x_1 = w_1, x_j = w_j - w_(j-1): diagonal coordinate characters."""
    rows = []
    for j in range(r):
        row = [0] * r
        row[j] = 1
        if j > 0:
            row[j - 1] = -1
        rows.append(row)
    return rows


def _identity_rows(r: int) -> list[list[int]]:
    return [[int(i == j) for j in range(r)] for i in range(r)]


def _freeze(rows: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


_NAME_RE = re.compile(r"(?i)^(SL|PGL|GL|SP|SO|SPIN|G)[-_ ]?([0-9]+)$")


def builtin_lattice_names() -> list[str]:
    """All recognized built-in group names, in display order."""
    names: list[str] = []
    names += [f"SL{n}" for n in range(2, 8)]
    names += ["PGL2"]
    names += [f"GL{n}" for n in range(2, 8)]
    names += [f"Sp{2 * n}" for n in range(2, 7)]
    names += [f"SO{2 * n + 1}" for n in range(2, 7)]
    names += [f"SO{2 * n}" for n in range(3, 7)]
    names += [f"Spin{2 * n + 1}" for n in range(2, 7)]
    names += [f"Spin{2 * n}" for n in range(3, 7)]
    names += ["G2"]
    return names


@lru_cache(maxsize=None)
def builtin_lattice(group_name: str) -> CharacterLattice:
    """Character lattice of a built-in group, by name (e.g. "SL3", "Spin7").

    Naming of generators follows the classical diagonal conventions:
    ``e`` / ``e1..`` for the determinant-one and classical matrix groups,
    ``eb`` for the adjoint form PGL2 (pulling back to twice the generator
    of SL2), ``x1..`` for the simply connected spin groups and G2, where
    the lattice is the full weight lattice.  ``v`` names mirror them on the
    2-torsion side.
    """
    m = _NAME_RE.match(group_name.strip())
    if not m:
        raise DomainError(
            f"unknown group name {group_name!r}; supported: "
            + ", ".join(builtin_lattice_names())
        )
    fam, num = m.group(1).upper(), int(m.group(2))
    if fam == "G":
        fam_name = "G"
    else:
        fam_name = {"SL": "SL", "PGL": "PGL", "GL": "GL", "SP": "Sp",
                    "SO": "SO", "SPIN": "Spin"}[fam]
    display = f"{fam_name}{num}"

    def bad() -> DomainError:
        return DomainError(
            f"unknown group name {group_name!r}; supported: "
            + ", ".join(builtin_lattice_names())
        )

    if fam_name == "SL":
        if not 2 <= num <= 7:
            raise bad()
        r = num - 1
        gen = ("e",) if num == 2 else tuple(f"e{i+1}" for i in range(r))
        vn = ("v",) if num == 2 else tuple(f"v{i+1}" for i in range(r))
        return CharacterLattice(display, "SL", "A", r, r, _freeze(_chain_rows(r)), gen, vn)
    if fam_name == "PGL":
        if num != 2:
            raise bad()
        return CharacterLattice(display, "PGL", "A", 1, 1, ((2,),), ("eb",), ("vb",))
    if fam_name == "GL":
        if not 2 <= num <= 7:
            raise bad()
        gen = tuple(f"e{i+1}" for i in range(num))
        vn = tuple(f"v{i+1}" for i in range(num))
        return CharacterLattice(
            display, "GL", "A", num - 1, num, _freeze(_identity_rows(num)), gen, vn
        )
    if fam_name == "Sp":
        if num % 2 or not 4 <= num <= 12:
            raise bad()
        r = num // 2
        gen = tuple(f"e{i+1}" for i in range(r))
        vn = tuple(f"v{i+1}" for i in range(r))
        return CharacterLattice(display, "Sp", "C", r, r, _freeze(_chain_rows(r)), gen, vn)
    if fam_name in ("SO", "Spin"):
        if num % 2 == 1:
            r = (num - 1) // 2
            if not 2 <= r <= 6:
                raise bad()
            kind = "B"
        else:
            r = num // 2
            if not 3 <= r <= 6:
                raise bad()
            kind = "D"
        if fam_name == "Spin":
            gen = tuple(f"x{i+1}" for i in range(r))
            vn = tuple(f"v{i+1}" for i in range(r))
            return CharacterLattice(
                display, "Spin", kind, r, r, _freeze(_identity_rows(r)), gen, vn
            )
        rows = _chain_rows(r)
        if kind == "B":
            # last generator is the last diagonal coordinate: 2w_r - w_(r-1)
            rows[r - 1] = [0] * r
            rows[r - 1][r - 1] = 2
            if r >= 2:
                rows[r - 1][r - 2] = -1
        else:
            # fork: e_(r-1) = w_(r-1) + w_r - w_(r-2), e_r = w_r - w_(r-1)
            rows[r - 2] = [0] * r
            rows[r - 2][r - 2] = 1
            rows[r - 2][r - 1] = 1
            if r >= 3:
                rows[r - 2][r - 3] = -1
            rows[r - 1] = [0] * r
            rows[r - 1][r - 2] = -1
            rows[r - 1][r - 1] = 1
        gen = tuple(f"e{i+1}" for i in range(r))
        vn = tuple(f"v{i+1}" for i in range(r))
        return CharacterLattice(display, "SO", kind, r, r, _freeze(rows), gen, vn)
    if fam_name == "G":
        if num != 2:
            raise bad()
        return CharacterLattice(
            display, "G", "G", 2, 2, _freeze(_identity_rows(2)), ("x1", "x2"), ("v1", "v2")
        )
    raise bad()


# -- exact linear algebra on lattice bases ------------------------------------


def _invert(mat: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(mat)
    ]
    for col in range(n):
        piv = next((k for k in range(col, n) if aug[k][col] != 0), None)
        if piv is None:
            raise InternalError("lattice basis matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for k in range(n):
            if k != col and aug[k][col] != 0:
                f = aug[k][col]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _basis_inverse(lattice: CharacterLattice) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in _invert(lattice.basis))


def _generator_coordinates(
    lattice: CharacterLattice, mu: Sequence[int]
) -> Optional[tuple[int, ...]]:
    """Integer coordinates of a weight in the generator basis, or None.

    Solves basis^T c = mu exactly; the weight lies in the lattice iff the
    solution is integral.
    """
    binv = _basis_inverse(lattice)
    r = lattice.torus_rank
    out = []
    for i in range(r):
        # mu = basis^T c, so c = (basis^{-1})^T mu: read binv column-wise
        ci = sum(binv[j][i] * mu[j] for j in range(r))
        if ci.denominator != 1:
            return None
        out.append(int(ci))
    return tuple(out)


def lattice_contains(lattice: CharacterLattice, mu: Sequence[int]) -> bool:
    """Whether a weight (fundamental-weight coordinates) lies in the lattice."""
    if lattice.family == "GL":
        return len(mu) == lattice.torus_rank and all(isinstance(c, int) for c in mu)
    if len(mu) != lattice.rank:
        return False
    return _generator_coordinates(lattice, mu) is not None


@lru_cache(maxsize=None)
def _generator_images(lattice: CharacterLattice) -> tuple[BiPoly, ...]:
    """Images of the weight-side variables in the generator polynomial ring.

    The weight-side variable y_j stands for the j-th fundamental weight
    (for GL: the j-th diagonal coordinate, with the extra last variable
    standing for the average of all diagonal coordinates).  Its expression
    in lattice generators is row j of the inverse basis matrix.
    """
    if lattice.family == "GL":
        n = lattice.torus_rank
        rmat = _gl_transition(n)
        rinv = _invert(rmat)
        # y_j maps to column j of the inverse transition matrix
        return tuple(
            BiPoly.a_linear([rinv[m][j] for m in range(n)], ny=0) for j in range(n)
        )
    binv = _basis_inverse(lattice)
    return tuple(BiPoly.a_linear(list(row), ny=0) for row in binv)


def _to_generators(lattice: CharacterLattice, f: BiPoly) -> BiPoly:
    """Re-express a weight-side polynomial in the lattice generators."""
    if any(any(e[i] for i in range(f.na)) for e in f.terms):
        raise InternalError("expected a polynomial without symbolic weight variables")
    images = _generator_images(lattice)
    if f.ny != len(images):
        raise InternalError("arity mismatch between polynomial and lattice")
    tr = lattice.torus_rank
    zero = BiPoly.zero(tr, 0)
    return f.compose(a_images=[zero] * f.na, y_images=list(images))


def _require_integer(f: BiPoly, what: str) -> BiPoly:
    for e, c in f.terms.items():
        if isinstance(c, Fraction) and c.denominator != 1:
            raise InternalError(
                f"non-integer coefficient {c} in {what}; "
                "the weight data is inconsistent with the lattice"
            )
    return f


# -- GL family: diagonal-coordinate plumbing ----------------------------------


def _validate_gl_weight(lattice: CharacterLattice, weight: Sequence[int]) -> tuple[int, ...]:
    n = lattice.torus_rank
    if len(weight) != n:
        raise DomainError(
            f"weight has {len(weight)} coordinates, expected {n} for {lattice.name}"
        )
    for c in weight:
        if not isinstance(c, int) or isinstance(c, bool):
            raise DomainError("weight coordinates must be integers")
    if any(weight[i] < weight[i + 1] for i in range(n - 1)):
        raise DomainError(
            "a dominant weight for the GL family must have nonincreasing coordinates"
        )
    return tuple(weight)


@lru_cache(maxsize=None)
def _gl_transition(n: int) -> tuple[tuple[int, ...], ...]:
    """Matrix sending diagonal coordinates to (trace-free part, total sum).

    Row j < n-1 gives the j-th fundamental-weight coordinate of the
    trace-free part; the last row is the coordinate sum.  Its inverse
    converts symmetric-function data of the trace-free and central parts
    back to the diagonal coordinate generators.
    """
    sl = builtin_lattice(f"SL{n}")
    b = sl.basis  # rows: diagonal coordinates of SL_n in fundamental weights
    rows = []
    for j in range(n - 1):
        row = [b[i][j] for i in range(n - 1)]
        row.append(-sum(row))
        rows.append(row)
    rows.append([1] * n)
    return tuple(tuple(r) for r in rows)


def _gl_split(weight: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Trace-free highest weight (fundamental coordinates) and coordinate sum."""
    n = len(weight)
    lbar = tuple(weight[i] - weight[i + 1] for i in range(n - 1))
    return lbar, sum(weight)


def _gl_weight_table(
    lattice: CharacterLattice, weight: Tuple[int, ...], max_dim: int
) -> Dict[tuple[int, ...], int]:
    """Weight multiset in diagonal coordinates, as a dict with multiplicities."""
    n = lattice.torus_rank
    lbar, s = _gl_split(weight)
    rsA = _rs("A", n - 1)
    wm = weight_multiplicities(rsA, lbar, max_dim=max_dim)
    sl = builtin_lattice(f"SL{n}")
    out: Dict[tuple[int, ...], int] = {}
    for mu, mult in wm.expanded().items():
        coords = _generator_coordinates(sl, mu)
        if coords is None:
            raise InternalError("trace-free weight escaped its own character lattice")
        lift, rem = divmod(s - sum(coords), n)
        if rem:
            raise InternalError("central character does not lift integrally")
        full = tuple(c + lift for c in coords) + (lift,)
        out[full] = out.get(full, 0) + mult
    return out


# -- Chern classes ------------------------------------------------------------


def _as_pi(lattice: CharacterLattice, spec) -> PiSpec:
    if isinstance(spec, PiSpec):
        weight, s_wrap = tuple(spec.weight), spec.s_wrap
    else:
        weight, s_wrap = tuple(spec), False
    if lattice.family == "GL":
        weight = _validate_gl_weight(lattice, weight)
    else:
        weight = validate_dominant(lattice.root_system(), weight)
        if _generator_coordinates(lattice, weight) is None:
            raise DomainError("weight not in character lattice")
    return PiSpec(weight, s_wrap)


def _plain_chern(lattice: CharacterLattice, weight: Tuple[int, ...], kmax: int) -> tuple[list[BiPoly], int]:
    """Chern classes of the plain irreducible, plus its degree."""
    if lattice.family == "GL":
        n = lattice.torus_rank
        lbar, s = _gl_split(weight)
        rsA = _rs("A", n - 1)
        p_free = [f.embed(n, n) for f in power_sums(rsA, lbar, kmax)]
        p_central = []
        for j in range(kmax + 1):
            e = [0] * (2 * n)
            e[2 * n - 1] = j
            coeff = s ** j
            terms = {tuple(e): coeff} if coeff else {}
            p_central.append(BiPoly(n, n, terms))
        power = product_power_sums(p_free, p_central, kmax)
        degree = weyl_dimension(rsA, lbar)
    else:
        rs = lattice.root_system()
        power = power_sums(rs, weight, kmax)
        degree = weyl_dimension(rs, weight)
    elem = elementary_from_power(power, kmax)
    cs = [
        _require_integer(_to_generators(lattice, ek), f"c_{k}")
        for k, ek in enumerate(elem)
    ]
    return cs, degree


def chern_classes(lattice: CharacterLattice, pi_spec, kmax: int = 6) -> ChernResult:
    """Chern classes c_0..c_kmax in lattice generators, exactly.

    The plain classes are the elementary symmetric functions of the weight
    multiset re-expressed in the generator basis; for the doubled form the
    classes of the representation and of its dual (all weights negated) are
    convolved.  All coefficients are integers; anything else signals an
    internal inconsistency.
    """
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    pi = _as_pi(lattice, pi_spec)
    cs, degree = _plain_chern(lattice, pi.weight, kmax)
    if pi.s_wrap:
        dual = [ck.scale((-1) ** k) for k, ck in enumerate(cs)]
        cs = [
            sum(
                (cs[i] * dual[k - i] for i in range(1, k + 1)),
                start=cs[0] * dual[k],
            )
            for k in range(kmax + 1)
        ]
        degree *= 2
    return ChernResult(lattice, pi, kmax, degree, tuple(cs))


def _dual_norm_shift(rs: RootSystem, lam: Sequence[int]) -> Fraction:
    """<lam + 2 delta, lam> under the inverse Killing form on weights."""
    kd = rs.killing_dual
    r = rs.rank
    shifted = [lam[i] + 1 for i in range(r)]
    delta = [1] * r

    def q(u):
        return sum(kd[i][j] * u[i] * u[j] for i in range(r) for j in range(r))

    return q(shifted) - q(delta)


@lru_cache(maxsize=None)
def _q2_in_generators(lattice: CharacterLattice) -> BiPoly:
    """The invariant quadratic form, expressed in lattice generators."""
    return _to_generators(lattice, q2_poly(lattice.root_system()))


def chern2_closed(lattice: CharacterLattice, lam: Sequence[int]) -> BiPoly:
    """Closed form for c_2: -(degree * <lam+2delta, lam> / (2 dim g)) * Q2.

    Valid for the simple families (everything except GL); agrees with
    ``chern_classes(...).c[2]`` exactly.
    """
    if lattice.family == "GL":
        raise DomainError("the closed form for c_2 requires a simple group type")
    rs = lattice.root_system()
    lam = validate_dominant(rs, lam)
    if _generator_coordinates(lattice, lam) is None:
        raise DomainError("weight not in character lattice")
    degree = weyl_dimension(rs, lam)
    scalar = -Fraction(degree) * _dual_norm_shift(rs, lam) / (2 * rs.dim_g)
    return _require_integer(_q2_in_generators(lattice).scale(scalar), "closed-form c_2")


# -- orthogonality typing ------------------------------------------------------


def orthogonality_type(rs: RootSystem, lam: Sequence[int]) -> str:
    """One of "orthogonal", "symplectic", "not-self-dual".

    Self-dual iff the dominant representative of the negated weight is the
    weight itself; self-dual representations are orthogonal exactly when the
    sum of the pairings with all positive coroots is even.
    """
    lam = validate_dominant(rs, lam)
    negated = [-c for c in lam]
    if tuple(dominant_representative(rs, negated)) != lam:
        return "not-self-dual"
    parity = 0
    for av in rs.positive_coroots:
        parity += sum(lam[i] * av[i] for i in range(rs.rank))
    return "orthogonal" if parity % 2 == 0 else "symplectic"


def lattice_orthogonality_type(lattice: CharacterLattice, weight: Sequence[int]) -> str:
    """Orthogonality typing in lattice terms (handles the GL family)."""
    if lattice.family == "GL":
        weight = _validate_gl_weight(lattice, weight)
        n = lattice.torus_rank
        if any(weight[i] + weight[n - 1 - i] != 0 for i in range(n)):
            return "not-self-dual"
        lbar, _ = _gl_split(weight)
        return orthogonality_type(_rs("A", n - 1), lbar)
    return orthogonality_type(lattice.root_system(), weight)


def _require_orthogonal(lattice: CharacterLattice, pi: PiSpec, task: str) -> None:
    if pi.s_wrap:
        return  # the doubled form is orthogonal by construction
    kind = lattice_orthogonality_type(lattice, pi.weight)
    if kind != "orthogonal":
        raise DomainError(
            f"{task} needs an orthogonal representation, but this one is "
            f"{kind}; wrap it in the doubled form (s_wrap) instead"
        )


# -- Stiefel-Whitney classes ---------------------------------------------------


def swc_restrict(lattice: CharacterLattice, pi_spec, kmax: int = 6) -> SWCResult:
    """Stiefel-Whitney classes of an orthogonal representation, by degree.

    Each w_k is the mod-2 reduction of c_k, read in the 2-torsion generator
    variables.  The input must be orthogonal, either as a plain weight or as
    the doubled form.
    """
    pi = _as_pi(lattice, pi_spec)
    _require_orthogonal(lattice, pi, "the Stiefel-Whitney restriction")
    ch = chern_classes(lattice, pi, kmax)
    w = tuple(mod2_reduce(ck) for ck in ch.c)
    return SWCResult(lattice, pi, kmax, w)


# -- spinoriality ----------------------------------------------------------------


def _ord2(x) -> int:
    """2-adic valuation of a nonzero rational."""
    num = x.numerator if isinstance(x, Fraction) else x
    den = x.denominator if isinstance(x, Fraction) else 1
    if num == 0:
        raise InternalError("2-adic valuation of zero requested")
    v = 0
    while num % 2 == 0:
        num //= 2
        v += 1
    while den % 2 == 0:
        den //= 2
        v -= 1
    return v


def is_spinorial(lattice: CharacterLattice, pi_spec) -> SpinorialResult:
    """Whether the orthogonal representation lifts to the spin group.

    Primary criterion: every coefficient of c_2 is even.  For a plain
    representation of a simple type with nonzero weight the 2-adic secondary
    criterion also runs -- with j the negated 2-adic valuation of
    degree * <lam+2delta, lam> / (4 dim g), the lift exists iff 2^(-j) times
    the invariant quadratic form is 2-integral in the generators -- and the
    two answers must agree.
    """
    pi = _as_pi(lattice, pi_spec)
    _require_orthogonal(lattice, pi, "the spinoriality test")
    ch = chern_classes(lattice, pi, kmax=2)
    c2 = ch.c[2]
    primary = all(int(c) % 2 == 0 for _, c in c2.terms.items())
    valuation: Optional[int] = None
    secondary: Optional[bool] = None
    if not pi.s_wrap and lattice.family != "GL" and any(pi.weight):
        rs = lattice.root_system()
        ratio = (
            Fraction(ch.degree)
            * _dual_norm_shift(rs, pi.weight)
            / (4 * rs.dim_g)
        )
        valuation = -_ord2(ratio)
        q2g = _q2_in_generators(lattice)
        secondary = all(_ord2(c) >= valuation for c in q2g.terms.values())
        if secondary != primary:
            raise InternalError(
                "spinoriality criteria disagree: c_2 parity says "
                f"{primary}, the 2-adic quadratic-form test says {secondary}"
            )
    return SpinorialResult(lattice, pi, primary, c2, valuation, secondary)


# -- total Stiefel-Whitney factorization ----------------------------------------


_FACTORIZATION_FAMILIES = ("SL", "GL", "Sp", "SO")


def _sign_pattern_coefficient(r: int, i: int, k: int) -> int:
    """Coefficient of x^i in (1-x)^k (1+x)^(r-k)."""
    return sum(
        (-1) ** t * comb(k, t) * comb(r - k, i - t)
        for t in range(max(0, i - (r - k)), min(i, k) + 1)
    )


def _sl_partition(weight: Sequence[int]) -> list[int]:
    """Partition whose Schur function is the character (last coordinate 0)."""
    return [sum(weight[j:]) for j in range(len(weight))]


def _character_values(
    lattice: CharacterLattice, weight: Tuple[int, ...], max_dim: int
) -> list[int]:
    """chi(b_0), ..., chi(b_r) at the nested diagonal sign patterns.

    b_i inverts the first i lattice generators and fixes the rest.  For the
    determinant-one family the values are cross-checked against an exact
    Schur-polynomial evaluation at the matching +-1 eigenvalue multiset.
    """
    r = lattice.torus_rank
    chi: list[int] = []
    if lattice.family == "GL":
        table = _gl_weight_table(lattice, weight, max_dim)
        for i in range(r + 1):
            total = 0
            for mu, mult in table.items():
                parity = sum(mu[j] for j in range(i)) % 2
                total += mult if parity == 0 else -mult
            chi.append(total)
        n = r
        t = -weight[n - 1] if weight[n - 1] < 0 else 0
        part = [c + t for c in weight]
        for i in range(r + 1):
            expected = (-1) ** ((i * t) % 2) * schur_at_signs(part, i, n - i)
            if expected != chi[i]:
                raise InternalError(
                    f"character value at sign pattern {i} disagrees with the "
                    f"Schur evaluation: {chi[i]} versus {expected}"
                )
        return chi
    rs = lattice.root_system()
    wm = weight_multiplicities(rs, weight, max_dim=max_dim)
    for i in range(r + 1):
        signs = tuple(-1 if j < i else 1 for j in range(r))
        chi.append(character_at_order2(wm, signs, basis=lattice.basis))
    if lattice.family == "SL":
        n = r + 1
        part = _sl_partition(weight)
        for i in range(r + 1):
            minus = i + (i % 2)
            expected = schur_at_signs(part, minus, n - minus)
            if expected != chi[i]:
                raise InternalError(
                    f"character value at sign pattern {i} disagrees with the "
                    f"Schur evaluation: {chi[i]} versus {expected}"
                )
    return chi


def _pow_truncated(base: Mod2Poly, k: int, maxdeg: int) -> Mod2Poly:
    result = Mod2Poly.one(base.nv)
    b = base.truncate(maxdeg)
    while k:
        if k & 1:
            result = (result * b).truncate(maxdeg)
        b = b.square().truncate(maxdeg)
        k >>= 1
    return result


def total_swc_factorization(
    lattice: CharacterLattice,
    pi_spec,
    kmax: int = 6,
    max_dim: int = DEFAULT_MAX_DIM,
) -> SWCResult:
    """Total Stiefel-Whitney class as prod_k prod_{|S|=k} (1 + v_S)^{m_k}.

    The exponents come from character values at the nested sign patterns:
    m_k = 2^(-r) * sum_i A_{i,k} chi(b_i) with A_{i,k} the coefficient of
    x^i in (1-x)^k (1+x)^(r-k).  They must come out as nonnegative integers,
    and the expanded product must reproduce the mod-2 Chern reduction degree
    by degree; either failure signals a broken torus convention.
    """
    if lattice.family not in _FACTORIZATION_FAMILIES:
        raise DomainError(
            "the total-class factorization is defined for the SL, GL, Sp and "
            f"SO families only, not {lattice.name}"
        )
    pi = _as_pi(lattice, pi_spec)
    _require_orthogonal(lattice, pi, "the total-class factorization")
    r = lattice.torus_rank
    chi = _character_values(lattice, pi.weight, max_dim)
    if pi.s_wrap:
        chi = [2 * c for c in chi]
    exponents: list[int] = []
    for k in range(r + 1):
        total = sum(_sign_pattern_coefficient(r, i, k) * chi[i] for i in range(r + 1))
        mk = Fraction(total, 2 ** r)
        if mk.denominator != 1 or mk < 0:
            raise InternalError(
                f"factorization exponent m_{k} = {mk} is not a nonnegative "
                "integer; the sign-pattern convention does not match the lattice"
            )
        exponents.append(int(mk))
    w_total = Mod2Poly.one(r)
    for k in range(1, r + 1):
        if exponents[k] == 0:
            continue
        for subset in combinations(range(r), k):
            terms = [(0,) * r] + [
                tuple(1 if t == j else 0 for t in range(r)) for j in subset
            ]
            base = Mod2Poly(r, terms)
            w_total = (w_total * _pow_truncated(base, exponents[k], kmax)).truncate(kmax)
    w = tuple(w_total.degree_part(k) for k in range(kmax + 1))
    reference = swc_restrict(lattice, pi, kmax)
    for k in range(kmax + 1):
        if w[k] != reference.w[k]:
            raise InternalError(
                f"factorized total class disagrees with the mod-2 Chern "
                f"reduction in degree {k}"
            )
    return SWCResult(lattice, pi, kmax, w, tuple(exponents[1:]))

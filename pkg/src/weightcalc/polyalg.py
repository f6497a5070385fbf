"""Exact sparse polynomial arithmetic on the bigraded algebra used everywhere.

A BiPoly is an element of the polynomial ring over Q in two blocks of
variables: ``a1..a_r`` (weight-side coordinates, fundamental-weight basis) and
``y1..y_r`` (coweight-side coordinates, simple-coroot basis).  Coefficients
are exact rationals (Python int or fractions.Fraction, never float).
Single-family polynomials (Chern generators, power sums of a fixed weight)
are the degenerate cases with one block unused.

Canonical term order everywhere (rendering, JSON, leading terms): graded
lexicographic, descending, on the combined exponent tuple (a-block first),
i.e. compare total degree first, then the exponent tuples themselves.

Text grammar (bit-exact): ``term ( (+|-) term )*`` where each term is
``coeff`` or ``coeff*var^exp*...`` with ``coeff`` rendered ``p`` or ``p/q``
(magnitude only; signs live in the separators, a leading minus is attached),
and ``^exp`` omitted when the exponent is 1.  The zero polynomial renders
``0``.

JSON schema: ``{"terms": [{"c": "-5/3", "m": {"a1": 2, "y2": 1}}, ...]}``
with terms in canonical order and signed coefficient strings.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InternalError

__all__ = [
    "BiPoly",
    "Mod2Poly",
    "eval_mu",
    "translate_delta",
    "exact_divide",
    "substitute_linear",
    "mod2_reduce",
    "expand_linear_power",
]

Scalar = int | Fraction


def _norm(c: Scalar) -> Scalar:
    """Collapse integral Fractions to int; keeps the common case fast."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _scalar_str(c: Scalar) -> str:
    c = _norm(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def _parse_scalar(s: str) -> Scalar:
    try:
        return _norm(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad coefficient string {s!r}") from exc


def _order_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class BiPoly:
    """Sparse exact-rational polynomial in a-variables and y-variables.

    Treat instances as immutable; all operations return new objects.
    """

    __slots__ = ("na", "ny", "terms")

    def __init__(self, na: int, ny: int, terms: Mapping[tuple, Scalar] | None = None):
        self.na = na
        self.ny = ny
        t: dict[tuple, Scalar] = {}
        if terms:
            for exps, c in terms.items():
                c = _norm(c)
                if c:
                    if len(exps) != na + ny:
                        raise DomainError(
                            f"exponent tuple {exps} does not match arity ({na},{ny})"
                        )
                    t[tuple(exps)] = c
        self.terms = t

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, na: int, ny: int) -> "BiPoly":
        return cls(na, ny)

    @classmethod
    def constant(cls, na: int, ny: int, c: Scalar) -> "BiPoly":
        return cls(na, ny, {(0,) * (na + ny): c})

    @classmethod
    def a_var(cls, i: int, na: int, ny: int) -> "BiPoly":
        e = [0] * (na + ny)
        e[i] = 1
        return cls(na, ny, {tuple(e): 1})

    @classmethod
    def y_var(cls, i: int, na: int, ny: int) -> "BiPoly":
        e = [0] * (na + ny)
        e[na + i] = 1
        return cls(na, ny, {tuple(e): 1})

    @classmethod
    def a_linear(cls, coeffs: Sequence[Scalar], ny: int | None = None) -> "BiPoly":
        """Linear form sum_i coeffs[i] * a_i."""
        na = len(coeffs)
        ny = na if ny is None else ny
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * (na + ny)
                e[i] = 1
                terms[tuple(e)] = c
        return cls(na, ny, terms)

    @classmethod
    def y_linear(cls, coeffs: Sequence[Scalar], na: int | None = None) -> "BiPoly":
        """Linear form sum_i coeffs[i] * y_i."""
        ny = len(coeffs)
        na = ny if na is None else na
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * (na + ny)
                e[na + i] = 1
                terms[tuple(e)] = c
        return cls(na, ny, terms)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def a_degree(self) -> int:
        """Max total degree in the a-variables (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(sum(e[: self.na]) for e in self.terms)

    def y_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e[self.na:]) for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self) -> tuple[tuple, Scalar]:
        """(exponents, coefficient) of the canonical leading term."""
        if not self.terms:
            raise InternalError("leading term of the zero polynomial")
        k = max(self.terms, key=_order_key)
        return k, self.terms[k]

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * (self.na + self.ny), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.na == other.na and self.ny == other.ny and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"BiPoly({self.render()})"

    # -- ring operations ----------------------------------------------------

    def _check_compat(self, other: "BiPoly") -> None:
        if self.na != other.na or self.ny != other.ny:
            raise DomainError(
                f"arity mismatch: ({self.na},{self.ny}) vs ({other.na},{other.ny})"
            )

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check_compat(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        out = BiPoly.zero(self.na, self.ny)
        out.terms = {e: _norm(c) for e, c in t.items() if c}
        return out

    def __neg__(self) -> "BiPoly":
        out = BiPoly.zero(self.na, self.ny)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compat(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        t: dict[tuple, Scalar] = {}
        n = self.na + self.ny
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        out = BiPoly.zero(self.na, self.ny)
        out.terms = {e: _norm(c) for e, c in t.items() if c}
        return out

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "BiPoly":
        c = _norm(c)
        out = BiPoly.zero(self.na, self.ny)
        if c:
            out.terms = {e: _norm(v * c) for e, v in self.terms.items()}
        return out

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise DomainError("negative polynomial power")
        result = BiPoly.constant(self.na, self.ny, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- substitutions ------------------------------------------------------

    def eval_a(self, values: Sequence[Scalar]) -> "BiPoly":
        """Substitute rational values for all a-variables (a-degree 0 result)."""
        if len(values) != self.na:
            raise DomainError(f"expected {self.na} values, got {len(values)}")
        vals = [_norm(Fraction(v) if not isinstance(v, (int, Fraction)) else v)
                for v in values]
        t: dict[tuple, Scalar] = {}
        zero_a = (0,) * self.na
        for e, c in self.terms.items():
            s = c
            for i in range(self.na):
                if e[i]:
                    s = s * vals[i] ** e[i]
            if s:
                key = zero_a + e[self.na:]
                acc = t.get(key, 0) + s
                if acc:
                    t[key] = acc
                else:
                    t.pop(key, None)
        out = BiPoly.zero(self.na, self.ny)
        out.terms = {e: _norm(c) for e, c in t.items() if c}
        return out

    def translate_a(self, shifts: Sequence[Scalar]) -> "BiPoly":
        """Substitute a_i := a_i + shifts[i]; binomial expansion per term."""
        if len(shifts) != self.na:
            raise DomainError(f"expected {self.na} shifts, got {len(shifts)}")
        t: dict[tuple, Scalar] = {}
        for e, c in self.terms.items():
            partial = {e[: self.na]: c}
            for i, sh in enumerate(shifts):
                if not sh or not e[i]:
                    continue
                nxt: dict[tuple, Scalar] = {}
                for ae, pc in partial.items():
                    deg = ae[i]
                    for down in range(deg + 1):
                        ne = list(ae)
                        ne[i] = deg - down
                        coef = pc * comb(deg, down) * sh**down
                        key = tuple(ne)
                        acc = nxt.get(key, 0) + coef
                        if acc:
                            nxt[key] = acc
                        else:
                            nxt.pop(key, None)
                partial = nxt
            ytail = e[self.na:]
            for ae, pc in partial.items():
                key = ae + ytail
                acc = t.get(key, 0) + pc
                if acc:
                    t[key] = acc
                else:
                    t.pop(key, None)
        out = BiPoly.zero(self.na, self.ny)
        out.terms = {e: _norm(c) for e, c in t.items() if c}
        return out

    def evaluate(self, a_values: Sequence[Scalar], y_values: Sequence[Scalar]) -> Scalar:
        """Full scalar evaluation at rational points."""
        if len(a_values) != self.na or len(y_values) != self.ny:
            raise DomainError("evaluation point does not match arity")
        vals = list(a_values) + list(y_values)
        total: Scalar = 0
        for e, c in self.terms.items():
            s = c
            for i, k in enumerate(e):
                if k:
                    s = s * vals[i] ** k
            total += s
        return _norm(total)

    def embed(self, na: int, ny: int, a_offset: int = 0, y_offset: int = 0) -> "BiPoly":
        """Reinterpret inside a larger ring, shifting each block by an offset."""
        if self.na + a_offset > na or self.ny + y_offset > ny:
            raise DomainError("embed target too small")
        t = {}
        for e, c in self.terms.items():
            ne = [0] * (na + ny)
            for i in range(self.na):
                ne[a_offset + i] = e[i]
            for i in range(self.ny):
                ne[na + y_offset + i] = e[self.na + i]
            t[tuple(ne)] = c
        return BiPoly(na, ny, t)

    def compose(
        self,
        a_images: Sequence["BiPoly"] | None = None,
        y_images: Sequence["BiPoly"] | None = None,
    ) -> "BiPoly":
        """General substitution: variable i is replaced by its image polynomial.

        Omitted blocks keep their variables.  All images must share one arity,
        which becomes the arity of the result.
        """
        if a_images is None and y_images is None:
            return self
        ref = (a_images or y_images)[0]
        na2, ny2 = ref.na, ref.ny
        if a_images is None:
            a_images = [BiPoly.a_var(i, na2, ny2) for i in range(self.na)]
        if y_images is None:
            y_images = [BiPoly.y_var(i, na2, ny2) for i in range(self.ny)]
        if len(a_images) != self.na or len(y_images) != self.ny:
            raise DomainError("compose image count does not match arity")
        images = list(a_images) + list(y_images)
        for im in images:
            if im.na != na2 or im.ny != ny2:
                raise DomainError("compose images must share one arity")
        pow_cache: dict[tuple[int, int], BiPoly] = {}

        def img_pow(i: int, k: int) -> BiPoly:
            key = (i, k)
            got = pow_cache.get(key)
            if got is None:
                got = images[i] ** k
                pow_cache[key] = got
            return got

        acc = BiPoly.zero(na2, ny2)
        for e, c in self.terms.items():
            term = BiPoly.constant(na2, ny2, c)
            for i, k in enumerate(e):
                if k:
                    term = term * img_pow(i, k)
            acc = acc + term
        return acc

    # -- rendering ----------------------------------------------------------

    def default_names(self) -> tuple[list[str], list[str]]:
        return (
            [f"a{i+1}" for i in range(self.na)],
            [f"y{i+1}" for i in range(self.ny)],
        )

    def render(
        self,
        a_names: Sequence[str] | None = None,
        y_names: Sequence[str] | None = None,
    ) -> str:
        if not self.terms:
            return "0"
        da, dy = self.default_names()
        names = list(a_names if a_names is not None else da) + list(
            y_names if y_names is not None else dy
        )
        pieces = []
        for e, c in self.sorted_terms():
            factors = [_scalar_str(abs(c))]
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            pieces.append((c < 0, "*".join(factors)))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, text in pieces[1:]:
            out += (" - " if neg else " + ") + text
        return out

    def to_json_obj(
        self,
        a_names: Sequence[str] | None = None,
        y_names: Sequence[str] | None = None,
    ) -> dict:
        da, dy = self.default_names()
        names = list(a_names if a_names is not None else da) + list(
            y_names if y_names is not None else dy
        )
        terms = []
        for e, c in self.sorted_terms():
            m = {}
            for i, k in enumerate(e):
                if k:
                    m[names[i]] = k
            terms.append({"c": _scalar_str(c), "m": m})
        return {"terms": terms}

    @classmethod
    def from_json_obj(
        cls,
        obj: Mapping,
        na: int,
        ny: int,
        a_names: Sequence[str] | None = None,
        y_names: Sequence[str] | None = None,
    ) -> "BiPoly":
        dummy = cls.zero(na, ny)
        da, dy = dummy.default_names()
        names = list(a_names if a_names is not None else da) + list(
            y_names if y_names is not None else dy
        )
        index = {n: i for i, n in enumerate(names)}
        terms: dict[tuple, Scalar] = {}
        for t in obj.get("terms", []):
            e = [0] * (na + ny)
            for var, k in t.get("m", {}).items():
                if var not in index:
                    raise DomainError(f"unknown variable {var!r} in polynomial JSON")
                if not isinstance(k, int) or k < 0:
                    raise DomainError(f"bad exponent {k!r} in polynomial JSON")
                e[index[var]] = k
            key = tuple(e)
            if key in terms:
                raise DomainError("duplicate monomial in polynomial JSON")
            terms[key] = _parse_scalar(t.get("c", "0"))
        return cls(na, ny, terms)


class Mod2Poly:
    """Polynomial over GF(2) in v-variables; a term set with XOR addition."""

    __slots__ = ("nv", "terms")

    def __init__(self, nv: int, terms: Iterable[tuple] = ()):  # terms: exponent tuples
        self.nv = nv
        t = set()
        for e in terms:
            e = tuple(e)
            if len(e) != nv:
                raise DomainError(f"exponent tuple {e} does not match arity {nv}")
            if e in t:
                t.discard(e)
            else:
                t.add(e)
        self.terms = frozenset(t)

    @classmethod
    def zero(cls, nv: int) -> "Mod2Poly":
        return cls(nv)

    @classmethod
    def one(cls, nv: int) -> "Mod2Poly":
        return cls(nv, [(0,) * nv])

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mod2Poly):
            return NotImplemented
        return self.nv == other.nv and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nv, self.terms))

    def __add__(self, other: "Mod2Poly") -> "Mod2Poly":
        if self.nv != other.nv:
            raise DomainError("arity mismatch in Mod2Poly addition")
        return Mod2Poly(self.nv, self.terms ^ other.terms)

    def __mul__(self, other: "Mod2Poly") -> "Mod2Poly":
        if self.nv != other.nv:
            raise DomainError("arity mismatch in Mod2Poly product")
        acc: set[tuple] = set()
        for e1 in self.terms:
            for e2 in other.terms:
                e = tuple(x + y for x, y in zip(e1, e2))
                if e in acc:
                    acc.discard(e)
                else:
                    acc.add(e)
        return Mod2Poly(self.nv, acc)

    def square(self) -> "Mod2Poly":
        """Frobenius: squaring doubles every exponent over GF(2)."""
        return Mod2Poly(self.nv, (tuple(2 * x for x in e) for e in self.terms))

    def __pow__(self, k: int) -> "Mod2Poly":
        if k < 0:
            raise DomainError("negative polynomial power")
        result = Mod2Poly.one(self.nv)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base.square()
            k >>= 1
        return result

    def truncate(self, maxdeg: int) -> "Mod2Poly":
        return Mod2Poly(self.nv, (e for e in self.terms if sum(e) <= maxdeg))

    def degree_part(self, k: int) -> "Mod2Poly":
        return Mod2Poly(self.nv, (e for e in self.terms if sum(e) == k))

    def render(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names is not None else [f"v{i+1}" for i in range(self.nv)]
        pieces = []
        for e in sorted(self.terms, key=_order_key, reverse=True):
            if not any(e):
                pieces.append("1")
                continue
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            pieces.append("*".join(factors))
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"Mod2Poly({self.render()})"


# -- module-level operation names matching the interface --------------------


def eval_mu(f: BiPoly, mu: Sequence[Scalar]) -> BiPoly:
    """Evaluate the weight-side variables at a rational weight vector."""
    return f.eval_a(mu)


def translate_delta(f: BiPoly) -> BiPoly:
    """The shift a_i := a_i + 1 for every weight-side variable."""
    return f.translate_a((1,) * f.na)


def exact_divide(f: BiPoly, g: BiPoly) -> BiPoly:
    """Exact polynomial division f / g; InternalError if any remainder is left.

    Leading-term elimination in the canonical graded-lex order.  Exactness is
    a mathematical guarantee at every call site, so a nonzero remainder means
    a bug upstream and carries the offending remainder in the message.
    """
    f._check_compat(g)
    if g.is_zero():
        raise DomainError("division by the zero polynomial")
    if f.is_zero():
        return BiPoly.zero(f.na, f.ny)
    n = f.na + f.ny
    ge, gc = g.leading()
    rem = dict(f.terms)
    q: dict[tuple, Scalar] = {}
    while rem:
        fe = max(rem, key=_order_key)
        fc = rem[fe]
        diff = tuple(fe[i] - ge[i] for i in range(n))
        if any(x < 0 for x in diff):
            leftover = BiPoly.zero(f.na, f.ny)
            leftover.terms = {e: c for e, c in rem.items()}
            raise InternalError(
                f"inexact polynomial division; remainder {leftover.render()}"
            )
        c = _norm(Fraction(fc, gc) if not isinstance(fc, Fraction) and not isinstance(gc, Fraction)
                  else Fraction(fc) / Fraction(gc))
        q[diff] = c
        for e2, c2 in g.terms.items():
            e = tuple(diff[i] + e2[i] for i in range(n))
            s = rem.get(e, 0) - c * c2
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    out = BiPoly.zero(f.na, f.ny)
    out.terms = {e: _norm(c) for e, c in q.items() if c}
    return out


def substitute_linear(f: BiPoly, matrix: Sequence[Sequence[Scalar]]) -> BiPoly:
    """Replace each a_i by the linear form sum_j matrix[i][j] * a_j."""
    if len(matrix) != f.na or any(len(row) != f.na for row in matrix):
        raise DomainError(f"substitution matrix must be {f.na}x{f.na}")
    images = [BiPoly.a_linear(list(row), ny=f.ny) for row in matrix]
    return f.compose(a_images=images)


def expand_linear_power(coeffs: Sequence[Scalar], k: int) -> dict[tuple, Scalar]:
    """Expand (sum_i coeffs[i] x_i)^k as {exponent tuple: coefficient}.

    Multinomial expansion over the nonzero slots only; the fast path under the
    Weyl sums and the brute-force oracle, so it works on raw dicts rather than
    BiPoly objects.
    """
    r = len(coeffs)
    live = [i for i, c in enumerate(coeffs) if c]
    out: dict[tuple, Scalar] = {}
    if k == 0:
        out[(0,) * r] = 1
        return out
    if not live:
        return out

    def rec(pos: int, remaining: int, exps: list, weight: Scalar) -> None:
        i = live[pos]
        if pos == len(live) - 1:
            exps[i] = remaining
            key = tuple(exps)
            out[key] = out.get(key, 0) + weight * coeffs[i] ** remaining
            exps[i] = 0
            return
        for e in range(remaining + 1):
            exps[i] = e
            rec(pos + 1, remaining - e, exps,
                weight * comb(remaining, e) * coeffs[i] ** e)
        exps[i] = 0

    rec(0, k, [0] * r, 1)
    return out


def mod2_reduce(f: BiPoly) -> Mod2Poly:
    """Reduce a weight-side (Chern-generator) polynomial mod 2.

    The kernel is exactly the polynomials with all coefficients in 2Z; input
    must have integer coefficients and no y-variables.
    """
    if f.y_degree() > 0:
        raise DomainError("mod-2 reduction applies to weight-side polynomials only")
    odd = []
    for e, c in f.terms.items():
        if isinstance(c, Fraction):
            raise DomainError(
                f"non-integer coefficient {c} under mod-2 reduction"
            )
        if c & 1:
            odd.append(e[: f.na])
    return Mod2Poly(f.na, odd)

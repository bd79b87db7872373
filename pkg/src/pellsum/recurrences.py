"""Integer linear recurrences: exact terms, order-2 closed forms, degeneracy,
multiplicative dependence of roots, and polynomial-exponential sums in
several variables.

Roots live in Fraction (rational case) or QuadNum (quadratic case, d may be
negative); orders 3 and 4 are handled only when the characteristic
polynomial splits into integer linear and quadratic factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import (
    DimensionMismatchError,
    InvariantViolationError,
    MixedFieldError,
    RepeatedRootError,
    UnsupportedOrderError,
)
from .quadfield import QuadNum, squarefree_decompose, value_equal

Root = Fraction | QuadNum


def _check_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class LinearRecurrence:
    """U_n = a1*U_{n-1} + ... + ad*U_{n-d} with integer data.

    coeffs is (a1, ..., ad) with ad != 0; initials is (U_0, ..., U_{d-1}),
    not all zero. Term generation is exact big-integer arithmetic.
    """

    coeffs: tuple[int, ...]
    initials: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(_check_int(a, "coefficient") for a in self.coeffs)
        initials = tuple(_check_int(u, "initial term") for u in self.initials)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "initials", initials)
        if not coeffs:
            raise ValueError("order must be at least 1")
        if coeffs[-1] == 0:
            raise ValueError("last coefficient must be nonzero")
        if len(initials) != len(coeffs):
            raise ValueError(
                f"need {len(coeffs)} initial terms, got {len(initials)}"
            )
        if not any(initials):
            raise ValueError("initial terms must not all be zero")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_literal(cls, text: str) -> "LinearRecurrence":
        """Parse "a1,...,ad;U0,...,U_{d-1}" (whitespace allowed)."""
        parts = text.split(";")
        if len(parts) != 2:
            raise ValueError(
                f"recurrence literal needs one ';' separating coefficients "
                f"from initial terms, got {text!r}"
            )

        def ints(chunk: str, what: str) -> tuple[int, ...]:
            items = [p.strip() for p in chunk.split(",")]
            try:
                return tuple(int(p) for p in items)
            except ValueError:
                raise ValueError(f"could not parse {what} in {chunk!r}") from None

        return cls(ints(parts[0], "coefficients"), ints(parts[1], "initial terms"))


def terms_up_to(rec: LinearRecurrence, n: int) -> list[int]:
    """[U_0, ..., U_n], exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    terms = list(rec.initials[: n + 1])
    for _ in range(len(terms), n + 1):
        terms.append(sum(a * u for a, u in zip(rec.coeffs, reversed(terms))))
    return terms


# -- characteristic roots -------------------------------------------------


def _quadratic_roots(a: int, b: int) -> tuple[Root, Root]:
    # monic x^2 + a*x + b; repeated roots come back as an equal pair
    disc = a * a - 4 * b
    if disc >= 0:
        s = isqrt(disc)
        if s * s == disc:
            return Fraction(-a + s, 2), Fraction(-a - s, 2)
    c, d0 = squarefree_decompose(disc)
    return (
        QuadNum(Fraction(-a, 2), Fraction(c, 2), d0),
        QuadNum(Fraction(-a, 2), Fraction(-c, 2), d0),
    )


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _root_key(r: Root):
    if isinstance(r, QuadNum):
        return (1, r.d, r.x, r.y)
    return (0, r, 0, 0)


def characteristic_roots(rec: LinearRecurrence) -> tuple[Root, ...]:
    """Roots of x^d - a1*x^{d-1} - ... - ad, with multiplicity, order d <= 4.

    Deterministic order: rationals ascending, then quadratic roots by
    (d, x, y). Raises UnsupportedOrder when an irreducible factor of degree
    >= 3 remains; 0 is never a root since ad != 0.
    """
    d = rec.order
    if d > 4:
        raise UnsupportedOrderError(f"order {d} is past the exact-root range")
    if d == 1:
        return (Fraction(rec.coeffs[0]),)
    # poly[k] is the coefficient of x^(deg-k), monic
    poly = [1] + [-a for a in rec.coeffs]
    roots: list[Root] = []
    changed = True
    while changed and len(poly) > 3:
        changed = False
        const = poly[-1]
        for r in sorted((x for k in _divisors(const) for x in (k, -k)), key=lambda v: (abs(v), v)):
            quot, acc = [], 0
            for c in poly:
                acc = acc * r + c
                quot.append(acc)
            if quot.pop() == 0:
                roots.append(Fraction(r))
                poly = quot
                changed = True
                break
    deg = len(poly) - 1
    if deg == 1:
        roots.append(Fraction(-poly[1]))
    elif deg == 2:
        roots.extend(_quadratic_roots(poly[1], poly[2]))
    elif deg == 3:
        raise UnsupportedOrderError("irreducible cubic factor; exact roots unavailable")
    elif deg == 4:
        pair = _split_quartic(poly[1], poly[2], poly[3], poly[4])
        if pair is None:
            raise UnsupportedOrderError(
                "quartic does not split into integer quadratics; exact roots unavailable"
            )
        (a1, b1), (a2, b2) = pair
        roots.extend(_quadratic_roots(a1, b1))
        roots.extend(_quadratic_roots(a2, b2))
    return tuple(sorted(roots, key=_root_key))


def _split_quartic(p: int, q: int, r: int, s: int):
    # x^4+px^3+qx^2+rx+s = (x^2+ax+b)(x^2+cx+e) with integer a,b,c,e
    for b in sorted((x for k in _divisors(s) for x in (k, -k)), key=lambda v: (abs(v), v)):
        if s % b:
            continue
        e = s // b
        disc = p * p - 4 * (q - b - e)
        if disc < 0:
            continue
        t = isqrt(disc)
        if t * t != disc or (p + t) % 2:
            continue
        a = (p + t) // 2
        c = p - a
        if a * e + b * c == r:
            return (a, b), (c, e)
    return None


# -- order-2 closed form ---------------------------------------------------


@dataclass(frozen=True)
class BinetForm:
    """U_n = f1*a1^n + f2*a2^n for an order-2 recurrence with distinct roots."""

    roots: tuple[Root, Root]
    coeffs: tuple[Root, Root]
    discriminant: int

    def term(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be >= 0")
        f1, f2 = self.coeffs
        a1, a2 = self.roots
        v = _power(a1, n) * f1 + _power(a2, n) * f2
        x = v.x if isinstance(v, QuadNum) else Fraction(v)
        irr = v.y if isinstance(v, QuadNum) else 0
        if irr != 0 or x.denominator != 1:
            raise InvariantViolationError(f"closed form gave non-integer {v} at n={n}")
        return int(x)


def binet(rec: LinearRecurrence) -> BinetForm:
    """Exact roots and coefficients; the 2x2 initial-condition solve.

    Only order 2 with distinct roots; the discriminant a1^2 + 4*a2 decides
    the root field (rational when a perfect square, quadratic otherwise,
    including the negative case).
    """
    if rec.order != 2:
        raise UnsupportedOrderError("closed form implemented for order 2 only")
    a1, a2 = rec.coeffs
    u0, u1 = rec.initials
    disc = a1 * a1 + 4 * a2
    if disc == 0:
        raise RepeatedRootError(f"repeated root, discriminant 0 for coeffs {rec.coeffs}")
    s = isqrt(disc) if disc > 0 else 0
    if disc > 0 and s * s == disc:
        alpha: Root = Fraction(a1 + s, 2)
        beta: Root = Fraction(a1 - s, 2)
        f1: Root = (u1 - u0 * beta) / (alpha - beta)
        f2: Root = u0 - f1
    else:
        c, d0 = squarefree_decompose(disc)
        alpha = QuadNum(Fraction(a1, 2), Fraction(c, 2), d0)
        beta = alpha.conjugate()
        f1 = (u1 - u0 * beta) / (alpha - beta)
        f2 = u0 - f1
    return BinetForm((alpha, beta), (f1, f2), disc)


# -- degeneracy ------------------------------------------------------------


def _power(v, k: int):
    if isinstance(v, QuadNum):
        return v**k
    return Fraction(v) ** k


def root_of_unity_order(v, kmax: int = 12) -> int | None:
    """Smallest k <= kmax with v^k = 1, or None."""
    acc = v
    for k in range(1, kmax + 1):
        if value_equal(acc, 1):
            return k
        acc = acc * v
    return None


@dataclass(frozen=True)
class DegeneracyVerdict:
    degenerate: bool
    unity_order: int | None
    repeated_root: bool
    detail: str


_UNITY_NAMES = {1: "1", 2: "-1", 3: "a primitive cube root of unity",
                4: "a primitive fourth root of unity",
                6: "a primitive sixth root of unity"}


def is_degenerate(rec: LinearRecurrence) -> DegeneracyVerdict:
    """Does some ratio of distinct-index roots equal a root of unity?

    Order 2 is decided by closed coefficient conditions on a = a1, b = a2:
    a = 0 (ratio -1), a^2 = -b (cube root), a^2 = -2b (fourth), a^2 = -3b
    (sixth); a^2 + 4b = 0 means a repeated root (ratio 1), flagged
    separately. Orders 3-4 fall back to exact ratio powers up to k = 12,
    which covers every root of unity of degree <= 4.
    """
    d = rec.order
    if d == 1:
        return DegeneracyVerdict(False, None, False, "single root, no ratio to test")
    if d == 2:
        a, b = rec.coeffs
        if a * a + 4 * b == 0:
            return DegeneracyVerdict(True, 1, True, "repeated root (ratio 1)")
        for k, cond in ((2, a == 0), (3, a * a == -b), (4, a * a == -2 * b), (6, a * a == -3 * b)):
            if cond:
                return DegeneracyVerdict(
                    True, k, False, f"root ratio is {_UNITY_NAMES[k]}"
                )
        return DegeneracyVerdict(False, None, False, "no coefficient condition holds")
    roots = characteristic_roots(rec)
    for k in range(1, 13):
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                if value_equal(_power(roots[i], k), _power(roots[j], k)):
                    repeated = k == 1
                    what = "repeated root (ratio 1)" if repeated else (
                        f"ratio of roots {i + 1} and {j + 1} is a root of unity of order {k}"
                    )
                    return DegeneracyVerdict(True, k, repeated, what)
    return DegeneracyVerdict(False, None, False, "no root ratio is a root of unity up to order 12")


# -- multiplicative dependence ----------------------------------------------


@dataclass(frozen=True)
class DependenceVerdict:
    """Outcome of the bounded search for alpha^p * beta^q = 1."""

    dependent: bool
    witness: tuple[int, int] | None
    bound: int

    @property
    def independent(self) -> bool:
        return not self.dependent

    def describe(self) -> str:
        if self.dependent:
            p, q = self.witness
            return f"dependent: alpha^{p} * beta^{q} = 1"
        return f"independent up to exponent {self.bound}"


def _abs_norm(v) -> Fraction:
    # both embeddings multiplied; for a rational that is just the square
    if isinstance(v, QuadNum):
        return abs(v.norm())
    return Fraction(v) ** 2


def roots_multiplicatively_independent(alpha, beta, expbound: int) -> DependenceVerdict:
    """Search |p|, |q| <= expbound for an exact relation alpha^p * beta^q = 1.

    Witnesses are canonicalized to p >= 0 (and q > 0 when p = 0), scanned in
    rings of growing max(|p|, |q|), lexicographically inside a ring, so the
    reported witness is stable. A norm pre-filter (the relation forces
    |N(alpha)|^p * |N(beta)|^q = 1 exactly) prunes most candidates; the few
    survivors are checked as alpha^p = beta^(-q) to stay inside one field.
    """
    if expbound < 1:
        raise ValueError("exponent bound must be >= 1")
    for v, name in ((alpha, "alpha"), (beta, "beta")):
        nonzero = bool(v) if isinstance(v, QuadNum) else Fraction(v) != 0
        if not nonzero:
            raise ValueError(f"{name} must be nonzero")
    na, nb = _abs_norm(alpha), _abs_norm(beta)
    for ring in range(1, expbound + 1):
        for p in range(0, ring + 1):
            for q in range(-ring, ring + 1):
                if max(p, abs(q)) != ring:
                    continue
                if p == 0 and q <= 0:
                    continue
                if na**p * nb**q != 1:
                    continue
                if value_equal(_power(alpha, p), _power(beta, -q)):
                    return DependenceVerdict(True, (p, q), expbound)
    return DependenceVerdict(False, None, expbound)


# -- polynomial-exponential sums in several variables -----------------------


@dataclass(frozen=True)
class Poly:
    """Polynomial in dims variables; monomials map exponent tuples to
    rational (or, for dims = 1 only, quadratic) coefficients."""

    dims: int
    monomials: tuple[tuple[tuple[int, ...], Fraction | QuadNum], ...]

    def __post_init__(self) -> None:
        if self.dims < 1:
            raise ValueError("dims must be >= 1")
        seen = set()
        cleaned = []
        for exps, coeff in self.monomials:
            exps = tuple(exps)
            if len(exps) != self.dims:
                raise DimensionMismatchError(
                    f"monomial {exps} does not have {self.dims} exponents"
                )
            if any(e < 0 for e in exps):
                raise ValueError("monomial exponents must be >= 0")
            if exps in seen:
                raise ValueError(f"duplicate monomial {exps}")
            seen.add(exps)
            if not isinstance(coeff, QuadNum):
                coeff = Fraction(coeff)
            elif self.dims != 1:
                raise MixedFieldError(
                    "quadratic coefficients are only supported in one variable"
                )
            if coeff:
                cleaned.append((exps, coeff))
        object.__setattr__(self, "monomials", tuple(sorted(cleaned, key=lambda m: m[0])))

    @classmethod
    def constant(cls, value, dims: int) -> "Poly":
        return cls(dims, (((0,) * dims, value),))

    def evaluate(self, point: tuple[int, ...]):
        if len(point) != self.dims:
            raise DimensionMismatchError(
                f"expected {self.dims} arguments, got {len(point)}"
            )
        total = Fraction(0)
        for exps, coeff in self.monomials:
            term = coeff
            for n, e in zip(point, exps):
                term = term * Fraction(n) ** e
            total = total + term
        return total


@dataclass(frozen=True)
class MultiRecurrence:
    """Sum of P_i(n) * prod_k alpha_ik^(n_k) over terms i, in dims variables.

    Every base entry must be nonzero; quadratic bases must all share one
    field so cross-term comparisons stay exact.
    """

    terms: tuple[tuple[Poly, tuple], ...]
    dims: int

    def __post_init__(self) -> None:
        if self.dims < 1:
            raise ValueError("dims must be >= 1")
        fields = set()
        fixed = []
        for poly, bases in self.terms:
            bases = tuple(bases)
            if poly.dims != self.dims:
                raise DimensionMismatchError(
                    f"polynomial in {poly.dims} variables, expected {self.dims}"
                )
            if len(bases) != self.dims:
                raise DimensionMismatchError(
                    f"base vector {bases} does not have {self.dims} entries"
                )
            coerced = []
            for b in bases:
                if isinstance(b, QuadNum):
                    fields.add(b.d)
                    if not b:
                        raise ValueError("base entries must be nonzero")
                    coerced.append(b)
                else:
                    b = Fraction(b)
                    if b == 0:
                        raise ValueError("base entries must be nonzero")
                    coerced.append(b)
            fixed.append((poly, tuple(coerced)))
        if len(fields) > 1:
            raise MixedFieldError(
                f"base entries span several quadratic fields: {sorted(fields)}"
            )
        object.__setattr__(self, "terms", tuple(fixed))


def _base_power(bases: tuple, exps: tuple[int, ...]):
    acc = Fraction(1)
    for b, e in zip(bases, exps):
        acc = acc * _power(b, e)
    return acc


def eval_multirec(rec: MultiRecurrence, point: tuple[int, ...]):
    """Exact value at a vector of non-negative integers."""
    point = tuple(point)
    if len(point) != rec.dims:
        raise DimensionMismatchError(
            f"expected {rec.dims} arguments, got {len(point)}"
        )
    for n in point:
        if _check_int(n, "argument") < 0:
            raise ValueError("arguments must be >= 0")
    total = Fraction(0)
    for poly, bases in rec.terms:
        total = total + poly.evaluate(point) * _base_power(bases, point)
    return total


@dataclass(frozen=True)
class MultiRecVerdict:
    degenerate: bool
    witness: tuple[int, int, tuple[int, ...]] | None
    bound: int


def multirec_degenerate(rec: MultiRecurrence, nbound: int) -> MultiRecVerdict:
    """Search nonzero integer vectors with all |n_k| <= nbound for a pair of
    base vectors agreeing: alpha_i^n = alpha_j^n.

    Vectors are canonicalized to first nonzero entry positive (n and -n give
    the same relation) and scanned smallest max-norm first; the witness is
    (i, j, n) with 1-based term indices.
    """
    if nbound < 1:
        raise ValueError("nbound must be >= 1")
    seen = set()
    vectors = []
    for vec in product(range(-nbound, nbound + 1), repeat=rec.dims):
        if not any(vec):
            continue
        first = next(v for v in vec if v)
        if first < 0:
            vec = tuple(-v for v in vec)
        if vec not in seen:
            seen.add(vec)
            vectors.append(vec)
    vectors.sort(key=lambda v: (max(abs(e) for e in v), v))
    for vec in vectors:
        powers = [_base_power(bases, vec) for _, bases in rec.terms]
        for i in range(len(powers)):
            for j in range(i + 1, len(powers)):
                if value_equal(powers[i], powers[j]):
                    return MultiRecVerdict(True, (i + 1, j + 1, vec), nbound)
    return MultiRecVerdict(False, None, nbound)

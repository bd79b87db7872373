"""Exact arithmetic in quadratic fields Q(sqrt(d)).

Elements are x + y*sqrt(d) with rational x, y and squarefree integer d.
Negative d is allowed (imaginary quadratic); the Pell machinery elsewhere
restricts itself to d > 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import MixedFieldError, NotSquarefreeError

Rational = int | Fraction


def is_squarefree(n: int) -> bool:
    """True when no prime square divides |n|. 0 is not squarefree."""
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    while n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 2
    return True


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = c^2 * d0 with c >= 1 and d0 squarefree (sign kept on d0)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    c, d0 = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        c *= p ** (e // 2)
        if e % 2:
            d0 *= p
        p += 1 if p == 2 else 2
    return c, sign * d0 * n


def _validate_d(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool):
        raise NotSquarefreeError(f"d must be an int, got {d!r}")
    if d in (0, 1):
        raise NotSquarefreeError(f"d must not be 0 or 1, got {d}")
    if not is_squarefree(d):
        raise NotSquarefreeError(f"d must be squarefree, got {d}")


@dataclass(frozen=True)
class QuadNum:
    """x + y*sqrt(d), exact. Immutable; hashable; equality is componentwise.

    Note componentwise equality treats QuadNum(5, 0, 2) and QuadNum(5, 0, 3)
    as distinct even though both denote 5; use value_equal for cross-field
    comparison of values.
    """

    x: Fraction
    y: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        _validate_d(self.d)

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other) -> "QuadNum":
        if isinstance(other, QuadNum):
            if other.d != self.d:
                raise MixedFieldError(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(Fraction(other), Fraction(0), self.d)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(self.x - o.x, self.y - o.y, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(o.x - self.x, o.y - self.y, self.d)

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.x, -self.y, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(
            self.x * o.x + self.d * self.y * o.y,
            self.x * o.y + self.y * o.x,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return QuadNum(self.x / n, -self.y / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "QuadNum":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = QuadNum(Fraction(1), Fraction(0), self.d)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field structure -------------------------------------------------

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.x, -self.y, self.d)

    def norm(self) -> Fraction:
        """x^2 - d*y^2. Zero only for the zero element (d squarefree)."""
        return self.x * self.x - self.d * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def is_rational(self) -> bool:
        return self.y == 0

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        ys = "" if abs(self.y) == 1 else f"{abs(self.y)}*"
        tail = f"{ys}sqrt({self.d})"
        if self.x == 0:
            return tail if self.y > 0 else f"-{tail}"
        op = "+" if self.y > 0 else "-"
        return f"{self.x} {op} {tail}"


def quad(x: Rational, y: Rational, d: int) -> QuadNum:
    """Shorthand constructor."""
    return QuadNum(Fraction(x), Fraction(y), d)


def value_equal(a, b) -> bool:
    """Exact equality of values across representations.

    Accepts int, Fraction and QuadNum in any combination. Two irrational
    elements of different fields are never equal (sqrt(d1), sqrt(d2) are
    linearly independent over Q for distinct squarefree d).
    """
    ax, ay, ad = _parts(a)
    bx, by, bd = _parts(b)
    if ay == 0 and by == 0:
        return ax == bx
    return ad == bd and ax == bx and ay == by


def _parts(v) -> tuple[Fraction, Fraction, int | None]:
    if isinstance(v, QuadNum):
        return v.x, v.y, v.d
    if isinstance(v, (int, Fraction)):
        return Fraction(v), Fraction(0), None
    raise TypeError(f"expected a number, got {type(v).__name__}")


def as_fraction(v) -> Fraction:
    """Collapse a rational-valued element to a Fraction."""
    x, y, _ = _parts(v)
    if y != 0:
        raise ValueError(f"{v} has a nonzero irrational part")
    return x

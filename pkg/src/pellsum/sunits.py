"""Rational S-units (signed smooth numbers) and subsum certificates.

An S-unit over the primes P_1 < ... < P_l is sign * prod P_i^(b_i) with
integer exponents of either sign. Enumeration order is deterministic so
searches shard reproducibly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import TupleTooLargeError

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24, far past desk scale."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class SPrimeSet:
    """Strictly increasing tuple of primes."""

    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise ValueError("need at least one prime")
        for p in primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class SUnit:
    sign: int
    exponents: tuple[int, ...]
    basis: SPrimeSet

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if len(self.exponents) != len(self.basis):
            raise ValueError("one exponent per prime")

    @property
    def value(self) -> Fraction:
        v = Fraction(self.sign)
        for p, b in zip(self.basis.primes, self.exponents):
            v *= Fraction(p) ** b
        return v


def enumerate_sunits(
    basis: SPrimeSet,
    expbound: int,
    positive_only: bool = False,
    nonnegative_only: bool = False,
) -> Iterator[SUnit]:
    """All S-units with every |b_i| <= expbound, in a fixed order.

    Order: exponent vectors lexicographically (from -expbound up), sign +1
    before -1. positive_only drops the negatives; nonnegative_only restricts
    exponents to b_i >= 0 (some arguments only need that half).
    """
    if expbound < 0:
        raise ValueError("exponent bound must be >= 0")
    low = 0 if nonnegative_only else -expbound
    signs = (1,) if positive_only else (1, -1)
    for exps in product(range(low, expbound + 1), repeat=len(basis)):
        for sign in signs:
            yield SUnit(sign, exps, basis)


def sunit_from_rational(basis: SPrimeSet, value: Fraction | int) -> SUnit:
    """Refactor a nonzero rational over the basis; the enumeration round-trip."""
    value = Fraction(value)
    if value == 0:
        raise ValueError("0 is not an S-unit")
    sign = 1 if value > 0 else -1
    exps = []
    num, den = abs(value.numerator), value.denominator
    for p in basis.primes:
        e = 0
        while num % p == 0:
            num //= p
            e += 1
        while den % p == 0:
            den //= p
            e -= 1
        exps.append(e)
    if num != 1 or den != 1:
        raise ValueError(f"{value} is not supported on primes {basis.primes}")
    return SUnit(sign, tuple(exps), basis)


@dataclass(frozen=True)
class SubsumCertificate:
    """Verdict that every nonempty subsum of a tuple is nonzero.

    vanishing, when set, is the lexicographically first offending index set
    (1-based).
    """

    ok: bool
    vanishing: tuple[int, ...] | None
    size: int


def subsums_nonvanishing(entries) -> SubsumCertificate:
    """Check all 2^t - 1 nonempty subsums of up to t = 20 rationals."""
    values = [Fraction(w) for w in entries]
    t = len(values)
    if t < 1:
        raise ValueError("need at least one entry")
    if t > 20:
        raise TupleTooLargeError(f"{t} entries means 2^{t} subsums; capped at 20")

    def scan(start: int, acc: Fraction, picked: tuple[int, ...]):
        for i in range(start, t):
            total = acc + values[i]
            chosen = picked + (i + 1,)
            if total == 0:
                return chosen
            hit = scan(i + 1, total, chosen)
            if hit is not None:
                return hit
        return None

    witness = scan(0, Fraction(0), ())
    return SubsumCertificate(witness is None, witness, t)


@dataclass(frozen=True)
class SUnitTuple:
    """A candidate (w_1, ..., w_t) with its sum and subsum certificate."""

    entries: tuple[Fraction, ...]
    total: Fraction
    certificate: SubsumCertificate


def sunit_tuple(entries) -> SUnitTuple:
    values = tuple(Fraction(w) for w in entries)
    return SUnitTuple(values, sum(values, Fraction(0)), subsums_nonvanishing(values))

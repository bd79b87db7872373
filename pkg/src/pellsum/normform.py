"""Norm-form equations x^2 - d y^2 = m and their solution classes.

Multiplication by a power of the automorph unit partitions the solutions
into finitely many classes. Everything here works with |x|, |y| pairs:
conjugate and negated solutions share coordinates, and the coordinate sets
of interest collect absolute values only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import InvariantViolationError
from .pell import _validate_real_d, pell_data
from .quadfield import QuadNum, quad


@dataclass(frozen=True)
class NormFormProblem:
    """x^2 - d y^2 = m with d squarefree > 1 and m a nonzero integer."""

    d: int
    m: int

    def __post_init__(self) -> None:
        _validate_real_d(self.d)
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m == 0:
            raise ValueError(f"m must be a nonzero integer, got {self.m!r}")

    def norm_of(self, pair: tuple[int, int]) -> int:
        x, y = pair
        return x * x - self.d * y * y


def sign_variants(pair: tuple[int, int]) -> tuple[tuple[int, int], ...]:
    """The distinct signed solutions sharing the coordinates of pair."""
    x, y = pair
    return tuple(sorted({(x, y), (x, -y), (-x, y), (-x, -y)}))


def step(automorph: tuple[int, int], d: int, x: int, y: int) -> tuple[int, int]:
    """Coordinates of (x + y*sqrt(d)) * (t + u*sqrt(d))/2."""
    t, u = automorph
    a = t * x + d * u * y
    b = u * x + t * y
    if a % 2 or b % 2:
        raise InvariantViolationError(
            f"step left the integers at {(x, y)} under automorph {automorph}"
        )
    return a // 2, b // 2


def inv_step(automorph: tuple[int, int], d: int, x: int, y: int) -> tuple[int, int]:
    """Coordinates of (x + y*sqrt(d)) * (t - u*sqrt(d))/2, the inverse of step."""
    t, u = automorph
    a = t * x - d * u * y
    b = t * y - u * x
    if a % 2 or b % 2:
        raise InvariantViolationError(
            f"inverse step left the integers at {(x, y)} under automorph {automorph}"
        )
    return a // 2, b // 2


def _cubed_automorph(t: int, u: int, d: int) -> tuple[int, int]:
    # ((t + u*sqrt(d))/2)^3 written back as (t', u')/2; lands in Z[sqrt(d)],
    # so t', u' come out even whenever t, u are odd.
    e = QuadNum(Fraction(t, 2), Fraction(u, 2), d) ** 3
    t3, u3 = 2 * e.x, 2 * e.y
    if t3.denominator != 1 or u3.denominator != 1:
        raise InvariantViolationError(f"automorph cube not integral for d={d}")
    return int(t3), int(u3)


@dataclass(frozen=True)
class SolutionOrbit:
    """One class of solutions, folded to nonnegative coordinates.

    automorph is the generator whose step stays integral on this class:
    the minimal (t, u) when coordinates share parity, its cube otherwise.
    seeds are the members found inside the scan window.
    """

    problem: NormFormProblem
    representative: tuple[int, int]
    automorph: tuple[int, int]
    seeds: tuple[tuple[int, int], ...]

    def step(self, pair: tuple[int, int]) -> tuple[int, int]:
        return step(self.automorph, self.problem.d, *pair)

    def inv_step(self, pair: tuple[int, int]) -> tuple[int, int]:
        return inv_step(self.automorph, self.problem.d, *pair)

    def elements(self, bound: int, coord: int = 1) -> list[tuple[int, int]]:
        """Orbit members with the chosen coordinate <= bound, sorted by (y, x).

        Forward closure of the seeds; complete because the step map never
        decreases either coordinate on nonnegative pairs (t >= 3).
        """
        if coord not in (1, 2):
            raise ValueError("coord must be 1 or 2")
        seen: set[tuple[int, int]] = set()
        for start in self.seeds:
            x, y = start
            while (x, y)[coord - 1] <= bound:
                seen.add((x, y))
                x, y = self.step((x, y))
        return sorted(seen, key=lambda p: (p[1], p[0]))

    def sign_variants(self, pair: tuple[int, int] | None = None) -> tuple[tuple[int, int], ...]:
        return sign_variants(self.representative if pair is None else pair)

    @property
    def sign_class(self) -> tuple[tuple[int, int], ...]:
        """The signed solutions the representative stands for."""
        return sign_variants(self.representative)


@dataclass(frozen=True)
class NormFormSolutions:
    """Full class decomposition for one problem."""

    problem: NormFormProblem
    orbits: tuple[SolutionOrbit, ...]
    scan_bound: int

    def representatives(self) -> list[tuple[int, int]]:
        return [orbit.representative for orbit in self.orbits]


def solution_classes(problem: NormFormProblem) -> NormFormSolutions:
    """Decompose the solutions of x^2 - d y^2 = m into automorph classes.

    Seeds come from a direct scan of y values; the window is wide enough
    that stepping any solution down with the even generator lands in it
    before the coordinates can turn negative, so every class is seeded.
    Seeds are then merged when a step image (folded to absolute values)
    is itself a seed.
    """
    d, m = problem.d, problem.m
    data = pell_data(d)
    t, u = data.automorph
    odd = t % 2 == 1
    even_gen = _cubed_automorph(t, u, d) if odd else (t, u)
    bt, bu = even_gen
    sm = isqrt(abs(m)) + 1
    sd = isqrt(d)
    ylim = sm * (bt + 2 + (bu + 1) * (sd + 1)) // (2 * sd) + 2

    seeds: list[tuple[int, int]] = []
    for y in range(ylim + 1):
        s = m + d * y * y
        if s < 0:
            continue
        x = isqrt(s)
        if x * x == s:
            seeds.append((x, y))

    def gen_for(x: int, y: int) -> tuple[int, int]:
        if not odd or (x - y) % 2 == 0:
            return (t, u)
        return even_gen

    parent = {s: s for s in seeds}

    def find(a: tuple[int, int]) -> tuple[int, int]:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s in seeds:
        g = gen_for(*s)
        for img in (step(g, d, *s), inv_step(g, d, *s)):
            folded = (abs(img[0]), abs(img[1]))
            if folded in parent:
                ra, rb = find(s), find(folded)
                if ra != rb:
                    parent[ra] = rb

    groups: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for s in seeds:
        groups.setdefault(find(s), []).append(s)

    orbits = []
    for members in groups.values():
        nontrivial = [p for p in members if p[0] and p[1]]
        pool = nontrivial or members
        rep = min(pool, key=lambda p: (p[1], p[0]))
        orbits.append(
            SolutionOrbit(
                problem,
                rep,
                gen_for(*rep),
                tuple(sorted(members, key=lambda p: (p[1], p[0]))),
            )
        )
    orbits.sort(key=lambda o: (o.representative[1], o.representative[0]))
    return NormFormSolutions(problem, tuple(orbits), ylim)


def class_representatives(problem: NormFormProblem) -> list[SolutionOrbit]:
    """The solution classes, ordered by representative (y, x). Empty when the
    equation has no integral solutions."""
    return list(solution_classes(problem).orbits)


def orbit_elements(orbit: SolutionOrbit, bound: int, coord: int = 1) -> list[tuple[int, int]]:
    return orbit.elements(bound, coord)


def coordinate_set(
    problem: NormFormProblem,
    coord: int,
    bound: int,
    include_trivial: bool = False,
) -> list[int]:
    """Sorted |x| values (coord=1) or |y| values (coord=2) up to bound.

    By default only solutions with both coordinates nonzero contribute;
    include_trivial adds values coming from solutions with a zero
    coordinate. Zero itself is never listed.
    """
    if coord not in (1, 2):
        raise ValueError("coord must be 1 or 2")
    values: set[int] = set()
    if bound < 1:
        return []
    for orbit in solution_classes(problem).orbits:
        for x, y in orbit.elements(bound, coord):
            if not include_trivial and (x == 0 or y == 0):
                continue
            v = (x, y)[coord - 1]
            if 1 <= v <= bound:
                values.add(v)
    return sorted(values)


def solutions_within(problem: NormFormProblem, bound: int) -> list[tuple[int, int]]:
    """All solutions with 0 <= x <= bound, folded to nonnegative pairs.

    Meant for cross-checks against direct scans: bounding x bounds y too.
    """
    found: set[tuple[int, int]] = set()
    for orbit in solution_classes(problem).orbits:
        found.update(orbit.elements(bound, 1))
    return sorted(found)


@dataclass(frozen=True)
class UnitPowerForm:
    """One coordinate along a class as c1 * eps^a + c2 * conj(eps)^a.

    eps is the orbit automorph (t + u*sqrt(d))/2, so c2 = conj(c1) and
    eps * conj(eps) = 1; evaluate(a) for a >= 0 walks the signed coordinate
    starting from the representative.
    """

    coordinate: int
    c1: QuadNum
    c2: QuadNum
    eps: QuadNum

    def evaluate(self, a: int) -> int:
        v = self.c1 * self.eps**a + self.c2 * self.eps.conjugate() ** a
        if v.y != 0 or v.x.denominator != 1:
            raise InvariantViolationError(
                f"power form gave non-integer {v} at exponent {a}"
            )
        return int(v.x)


def unit_power_form(
    problem: NormFormProblem, orbit: SolutionOrbit, coord: int = 1
) -> UnitPowerForm:
    """Closed form for one coordinate along a solution class of problem.

    coord=1 sets c1 = mu/2, coord=2 sets c1 = mu/(2*sqrt(d)), mu being the
    representative; either way the irrational parts cancel in evaluate.
    """
    if coord not in (1, 2):
        raise ValueError("coord must be 1 or 2")
    if orbit.problem != problem:
        raise ValueError("orbit does not belong to this problem")
    d = problem.d
    t, u = orbit.automorph
    eps = QuadNum(Fraction(t, 2), Fraction(u, 2), d)
    x, y = orbit.representative
    mu = quad(x, y, d)
    if coord == 1:
        c1 = mu / 2
    else:
        c1 = mu / quad(0, 2, d)
    return UnitPowerForm(coord, c1, c1.conjugate(), eps)

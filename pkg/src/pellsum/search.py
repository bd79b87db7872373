"""Bounded Diophantine searches over norm-form coordinate sets, the
hypothesis audit for the finiteness statement on pair sums, vanishing
pair-sum detection, the exponential counting bound, and partition analysis.

Every search materializes coordinate sets up to a hard bound B and reports
hits "within B"; the finiteness results themselves are ineffective, so
stabilization counts (hits at half the bound vs the full bound) stand in as
falsifiable evidence.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .errors import InvariantViolationError, TooManyIndicesError, UnsupportedOrderError
from .normform import NormFormProblem, solution_classes
from .recurrences import (
    DegeneracyVerdict,
    DependenceVerdict,
    LinearRecurrence,
    binet,
    characteristic_roots,
    is_degenerate,
    root_of_unity_order,
    roots_multiplicatively_independent,
    terms_up_to,
)
from .sunits import SPrimeSet, SubsumCertificate, enumerate_sunits, subsums_nonvanishing


def resolve_shard_count(requested: int | None = None) -> int:
    """Shard count: explicit argument, then PELLSUM_SHARDS, then cpu count.

    Sharding never changes results (shards merge by sorting), only how the
    work is partitioned.
    """
    if requested is None:
        env = os.environ.get("PELLSUM_SHARDS")
        if env is not None and env.strip():
            try:
                requested = int(env)
            except ValueError:
                raise ValueError(f"PELLSUM_SHARDS must be an integer, got {env!r}") from None
    if requested is None:
        requested = os.cpu_count() or 1
    if requested < 1:
        raise ValueError("shard count must be >= 1")
    return requested


def _shard_ranges(n_items: int, shards: int) -> list[range]:
    shards = max(1, min(shards, n_items)) if n_items else 1
    base, extra = divmod(n_items, shards)
    ranges, start = [], 0
    for i in range(shards):
        size = base + (1 if i < extra else 0)
        ranges.append(range(start, start + size))
        start += size
    return ranges


# -- membership index -------------------------------------------------------


def coordinate_index(
    problem: NormFormProblem, bound: int
) -> dict[int, dict[int, tuple[int, int]]]:
    """value -> witness solution, for each coordinate, nontrivial view.

    Each listed value keeps the smallest solution pair realizing it; every
    entry is re-verified against the form equation on insertion.
    """
    index: dict[int, dict[int, tuple[int, int]]] = {1: {}, 2: {}}
    for orbit in solution_classes(problem).orbits:
        for coord in (1, 2):
            for x, y in orbit.elements(bound, coord):
                if x == 0 or y == 0:
                    continue
                v = (x, y)[coord - 1]
                if not 1 <= v <= bound:
                    continue
                if problem.norm_of((x, y)) != problem.m:
                    raise InvariantViolationError(f"bad orbit element {(x, y)}")
                prev = index[coord].get(v)
                if prev is None or (x, y) < prev:
                    index[coord][v] = (x, y)
    return index


def _memberships(index, value) -> tuple[tuple[int, tuple[int, int]], ...]:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            return ()
        value = int(value)
    return tuple(
        (coord, index[coord][value]) for coord in (1, 2) if value in index[coord]
    )


# -- hypothesis audit -------------------------------------------------------


@dataclass(frozen=True)
class RecurrenceHypotheses:
    """The four conditions the pair-sum finiteness statement needs.

    independence holds one certificate per root pair (1-based indices);
    unity_orders has one entry per root (None = not a root of unity up to
    order 12). applicable is the plain conjunction.
    """

    recurrence: LinearRecurrence
    degeneracy: DegeneracyVerdict
    independence: tuple[tuple[int, int, DependenceVerdict], ...]
    unity_orders: tuple[int | None, ...]
    last_coeff_not_unit: bool
    expbound: int

    @property
    def nondegenerate(self) -> bool:
        return not self.degeneracy.degenerate

    @property
    def pairwise_independent(self) -> bool:
        return all(v.independent for _, _, v in self.independence)

    @property
    def no_root_of_unity(self) -> bool:
        return all(order is None for order in self.unity_orders)

    @property
    def applicable(self) -> bool:
        return (
            self.nondegenerate
            and self.pairwise_independent
            and self.no_root_of_unity
            and self.last_coeff_not_unit
        )


def audit_hypotheses(rec: LinearRecurrence, expbound: int = 10) -> RecurrenceHypotheses:
    """Check all four hypotheses with exact root data (order <= 4)."""
    roots = characteristic_roots(rec)
    pairs = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            pairs.append(
                (i + 1, j + 1, roots_multiplicatively_independent(roots[i], roots[j], expbound))
            )
    orders = tuple(root_of_unity_order(r) for r in roots)
    return RecurrenceHypotheses(
        rec,
        is_degenerate(rec),
        tuple(pairs),
        orders,
        abs(rec.coeffs[-1]) != 1,
        expbound,
    )


# -- pair-sum search --------------------------------------------------------


@dataclass(frozen=True)
class PairHit:
    """U_{n1} + U_{n2} landed in a coordinate set; memberships lists
    (coordinate, witness solution) for every set containing the value."""

    n1: int
    n2: int
    value: int
    memberships: tuple[tuple[int, tuple[int, int]], ...]


@dataclass(frozen=True)
class SUnitHit:
    entries: tuple[Fraction, ...]
    total: Fraction
    memberships: tuple[tuple[int, tuple[int, int]], ...]
    certificate: SubsumCertificate


@dataclass(frozen=True)
class SearchReport:
    kind: str
    problem: NormFormProblem
    bounds: tuple[tuple[str, int], ...]
    hits: tuple
    hypotheses: RecurrenceHypotheses | None
    hypotheses_note: str | None
    stabilization: tuple[int, int]
    shard_count: int
    wall_time: float

    @property
    def stable(self) -> bool:
        """Same hit count in the half-bound box as in the full box."""
        return self.stabilization[0] == self.stabilization[1]


def pair_sum_search(
    rec: LinearRecurrence,
    problem: NormFormProblem,
    nbound: int,
    coordbound: int,
    shards: int | None = None,
) -> SearchReport:
    """All pairs n1 <= n2 <= nbound with U_{n1} + U_{n2} in X1 or X2 (values
    materialized up to coordbound).

    Membership uses the nontrivial positive-value view of the coordinate
    sets, so only sums >= 1 can hit. Work shards by n1 range; shard results
    merge by sorting, so the shard count never changes the report.
    """
    if nbound < 1 or coordbound < 1:
        raise ValueError("bounds must be >= 1")
    start = time.perf_counter()
    shard_count = resolve_shard_count(shards)
    terms = terms_up_to(rec, nbound)
    index = coordinate_index(problem, coordbound)

    def run_shard(n1_range: range) -> list[PairHit]:
        out = []
        for n1 in n1_range:
            u1 = terms[n1]
            for n2 in range(n1, nbound + 1):
                s = u1 + terms[n2]
                if s < 1:
                    continue
                hits_in = _memberships(index, s)
                if hits_in:
                    out.append(PairHit(n1, n2, s, hits_in))
        return out

    collected: list[PairHit] = []
    for rng in _shard_ranges(nbound + 1, shard_count):
        collected.extend(run_shard(rng))
    collected.sort(key=lambda h: (h.n1, h.n2))

    half = nbound // 2
    at_half = sum(1 for h in collected if h.n2 <= half)
    hypotheses, note = None, None
    try:
        hypotheses = audit_hypotheses(rec)
    except UnsupportedOrderError as exc:
        note = f"hypothesis audit unavailable: {exc}"

    return SearchReport(
        kind="pair-sum",
        problem=problem,
        bounds=(("index_bound", nbound), ("coord_bound", coordbound)),
        hits=tuple(collected),
        hypotheses=hypotheses,
        hypotheses_note=note,
        stabilization=(at_half, len(collected)),
        shard_count=shard_count,
        wall_time=time.perf_counter() - start,
    )


# -- S-unit sum search -------------------------------------------------------


def sunit_sum_search(
    basis: SPrimeSet,
    tuple_size: int,
    expbound: int,
    problem: NormFormProblem,
    coordbound: int,
    shards: int | None = None,
) -> SearchReport:
    """All size-t multisets of S-units (every |b_i| <= expbound) whose sum
    lies in X1 or X2 and whose nonempty subsums all stay nonzero.

    Hits record the certificate; entries are reported in ascending value
    order. Shards split on the first unit of the multiset.
    """
    if not 1 <= tuple_size <= 4:
        raise ValueError("tuple size must be between 1 and 4")
    if coordbound < 1:
        raise ValueError("coordinate bound must be >= 1")
    start = time.perf_counter()
    shard_count = resolve_shard_count(shards)
    units = list(enumerate_sunits(basis, expbound))
    values = [u.value for u in units]
    index = coordinate_index(problem, coordbound)
    half_box = {
        i for i, u in enumerate(units) if all(abs(b) <= expbound // 2 for b in u.exponents)
    }

    def run_shard(first_range: range) -> list[tuple]:
        out = []
        for i in first_range:
            for rest in combinations_with_replacement(range(i, len(units)), tuple_size - 1):
                picked = (i, *rest)
                total = sum((values[k] for k in picked), Fraction(0))
                if total < 1:
                    continue
                hits_in = _memberships(index, total)
                if not hits_in:
                    continue
                entry_vals = tuple(sorted(values[k] for k in picked))
                cert = subsums_nonvanishing(entry_vals)
                if cert.ok:
                    in_half = all(k in half_box for k in picked)
                    out.append((SUnitHit(entry_vals, total, hits_in, cert), in_half))
        return out

    collected: list[tuple] = []
    for rng in _shard_ranges(len(units), shard_count):
        collected.extend(run_shard(rng))
    collected.sort(key=lambda pair: (pair[0].total, pair[0].entries))
    at_half = sum(1 for _, in_half in collected if in_half)
    hits = tuple(h for h, _ in collected)

    return SearchReport(
        kind="sunit-sum",
        problem=problem,
        bounds=(
            ("tuple_size", tuple_size),
            ("exp_bound", expbound),
            ("coord_bound", coordbound),
        ),
        hits=hits,
        hypotheses=None,
        hypotheses_note=None,
        stabilization=(at_half, len(hits)),
        shard_count=shard_count,
        wall_time=time.perf_counter() - start,
    )


# -- vanishing pair sums ------------------------------------------------------


def vanishing_pair_sums(
    rec: LinearRecurrence, nbound: int
) -> list[tuple[int, int, tuple[int, ...]]]:
    """All (n1 <= n2 <= nbound, delta) with sum over i in delta of
    f_i*(alpha_i^{n1} + alpha_i^{n2}) exactly zero.

    delta ranges over {1}, {2} (the per-root conditions) and {1, 2} (the
    full sum U_{n1} + U_{n2} = 0). Exact in the root field; (0, 0) counts
    when U_0 = 0.
    """
    if nbound < 1:
        raise ValueError("nbound must be >= 1")
    form = binet(rec)
    f1, f2 = form.coeffs
    a1, a2 = form.roots
    pow1, pow2 = [a1**0], [a2**0]
    for _ in range(nbound):
        pow1.append(pow1[-1] * a1)
        pow2.append(pow2[-1] * a2)
    out = []
    for n1 in range(nbound + 1):
        for n2 in range(n1, nbound + 1):
            s1 = f1 * (pow1[n1] + pow1[n2])
            s2 = f2 * (pow2[n1] + pow2[n2])
            for delta, s in (((1,), s1), ((2,), s2), ((1, 2), s1 + s2)):
                if not s:
                    out.append((n1, n2, delta))
    return out


# -- counting bound ----------------------------------------------------------


def schlickewei_bound(dims: int, degrees: list[int], field_degree: int) -> int:
    """2^(35*A^3) * D^(6*A^2) with A = max(dims, sum of C(dims+delta, dims)).

    Exact big integer; pair with describe_bound for display.
    """
    if dims < 1:
        raise ValueError("dims must be >= 1")
    if field_degree < 1:
        raise ValueError("field degree must be >= 1")
    if not degrees:
        raise ValueError("need at least one degree")
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be >= 0")
    a = max(dims, sum(comb(dims + delta, dims) for delta in degrees))
    return 2 ** (35 * a**3) * field_degree ** (6 * a**2)


def digit_count(n: int) -> int:
    """Exact decimal length of |n| without going through str()."""
    n = abs(n)
    if n == 0:
        return 1
    d = max(1, int(n.bit_length() * 0.30103))
    while 10**d <= n:
        d += 1
    while d > 1 and 10 ** (d - 1) > n:
        d -= 1
    return d


def _int_str(n: int) -> str:
    # split-and-pad around the interpreter's int-to-str digit cap
    if n < 0:
        return "-" + _int_str(-n)
    if n.bit_length() < 10000:
        return str(n)
    k = digit_count(n) // 2
    hi, lo = divmod(n, 10**k)
    return _int_str(hi) + _int_str(lo).zfill(k)


def describe_bound(n: int, full_digit_limit: int = 10**4) -> str:
    """Full decimal rendering when small enough, scientific sketch otherwise."""
    digits = digit_count(n)
    if digits <= full_digit_limit:
        return _int_str(n)
    lead = _int_str(n // 10 ** (digits - 12))
    return f"{lead[0]}.{lead[1:]}e+{digits - 1} ({digits} digits)"


# -- partition analysis --------------------------------------------------------


@dataclass(frozen=True)
class PartitionReport:
    """Pairwise dependence evidence inside the blocks of one partition.

    witnesses lists (i, j, (p, q)) for every dependent in-block pair,
    1-based. A dependence witness is necessary evidence toward a nontrivial
    relation group for the partition; its absence is only 'independent up
    to E', never a proof.
    """

    blocks: tuple[tuple[int, ...], ...]
    witnesses: tuple[tuple[int, int, tuple[int, int]], ...]
    verdict: str


def partition_analysis(bases, expbound: int) -> tuple[PartitionReport, ...]:
    """For every set partition of the base indices, certify in-block pairwise
    dependences or report independence up to expbound."""
    from .partitions import set_partitions

    n = len(bases)
    if n < 2:
        raise ValueError("need at least two bases")
    if n > 8:
        raise TooManyIndicesError(f"{n} bases means Bell({n}) partitions; capped at 8")
    reports = []
    for partition in set_partitions(n):
        witnesses = []
        for block in partition:
            for ai in range(len(block)):
                for aj in range(ai + 1, len(block)):
                    i, j = block[ai], block[aj]
                    verdict = roots_multiplicatively_independent(
                        bases[i], bases[j], expbound
                    )
                    if verdict.dependent:
                        witnesses.append((i + 1, j + 1, verdict.witness))
        label = "certified-dependent" if witnesses else f"independent-up-to-{expbound}"
        reports.append(
            PartitionReport(
                tuple(tuple(i + 1 for i in block) for block in partition),
                tuple(witnesses),
                label,
            )
        )
    return tuple(reports)

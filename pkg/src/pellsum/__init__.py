"""Exact arithmetic for Pell-type norm forms and sums of recurrence terms.

Everything here works over the integers and rationals: continued
fractions of square roots, solution orbits of x^2 - d*y^2 = m, closed
forms and degeneracy tests for linear recurrences, S-unit enumeration,
and searches for recurrence or S-unit sums landing in the solution
coordinate sets, with the counting bound that controls the finiteness
statements.
"""

from .errors import (
    DimensionMismatchError,
    InvariantViolationError,
    MixedFieldError,
    NotSquarefreeError,
    PellsumError,
    RepeatedRootError,
    TooManyIndicesError,
    TupleTooLargeError,
    UnknownRemarkError,
    UnsupportedOrderError,
)
from .fixtures import FixtureReport, verify_remark
from .normform import (
    NormFormProblem,
    NormFormSolutions,
    SolutionOrbit,
    UnitPowerForm,
    class_representatives,
    coordinate_set,
    orbit_elements,
    solution_classes,
    solutions_within,
    unit_power_form,
)
from .partitions import bell_number, set_partitions
from .pell import PellData, continued_fraction_sqrt, pell_data
from .quadfield import QuadNum, is_squarefree, quad, squarefree_decompose, value_equal
from .recurrences import (
    BinetForm,
    DegeneracyVerdict,
    DependenceVerdict,
    LinearRecurrence,
    MultiRecurrence,
    MultiRecVerdict,
    Poly,
    binet,
    characteristic_roots,
    eval_multirec,
    is_degenerate,
    multirec_degenerate,
    root_of_unity_order,
    roots_multiplicatively_independent,
    terms_up_to,
)
from .search import (
    PairHit,
    PartitionReport,
    RecurrenceHypotheses,
    SearchReport,
    SUnitHit,
    audit_hypotheses,
    coordinate_index,
    describe_bound,
    digit_count,
    pair_sum_search,
    partition_analysis,
    resolve_shard_count,
    schlickewei_bound,
    sunit_sum_search,
    vanishing_pair_sums,
)
from .sunits import (
    SPrimeSet,
    SubsumCertificate,
    SUnit,
    SUnitTuple,
    enumerate_sunits,
    is_prime,
    subsums_nonvanishing,
    sunit_from_rational,
    sunit_tuple,
)

__version__ = "0.1.0"

__all__ = [
    "BinetForm",
    "DegeneracyVerdict",
    "DependenceVerdict",
    "DimensionMismatchError",
    "FixtureReport",
    "InvariantViolationError",
    "LinearRecurrence",
    "MixedFieldError",
    "MultiRecVerdict",
    "MultiRecurrence",
    "NormFormProblem",
    "NormFormSolutions",
    "NotSquarefreeError",
    "PairHit",
    "PartitionReport",
    "PellData",
    "PellsumError",
    "Poly",
    "QuadNum",
    "RecurrenceHypotheses",
    "RepeatedRootError",
    "SPrimeSet",
    "SUnit",
    "SUnitHit",
    "SUnitTuple",
    "SearchReport",
    "SolutionOrbit",
    "SubsumCertificate",
    "TooManyIndicesError",
    "TupleTooLargeError",
    "UnitPowerForm",
    "UnknownRemarkError",
    "UnsupportedOrderError",
    "audit_hypotheses",
    "bell_number",
    "binet",
    "characteristic_roots",
    "class_representatives",
    "continued_fraction_sqrt",
    "coordinate_index",
    "coordinate_set",
    "describe_bound",
    "digit_count",
    "enumerate_sunits",
    "eval_multirec",
    "is_degenerate",
    "is_prime",
    "is_squarefree",
    "multirec_degenerate",
    "orbit_elements",
    "pair_sum_search",
    "partition_analysis",
    "pell_data",
    "quad",
    "resolve_shard_count",
    "root_of_unity_order",
    "roots_multiplicatively_independent",
    "schlickewei_bound",
    "set_partitions",
    "solution_classes",
    "solutions_within",
    "squarefree_decompose",
    "subsums_nonvanishing",
    "sunit_from_rational",
    "sunit_sum_search",
    "sunit_tuple",
    "terms_up_to",
    "unit_power_form",
    "value_equal",
    "vanishing_pair_sums",
    "verify_remark",
]

"""The explicit solution-count bound and the partition bookkeeping behind it.

The count of essentially distinct solutions is controlled by an explicit
tower 2^(35*A^3) * D^(6*A^2). The numbers are astronomically large and
purely of bookkeeping interest, but they are exact integers here, so we
can print them. The second half enumerates set partitions of a base
tuple and certifies which blocks carry multiplicative dependences.
"""

from pellsum import (
    QuadNum,
    bell_number,
    describe_bound,
    digit_count,
    partition_analysis,
    schlickewei_bound,
    set_partitions,
)

# the smallest instance: one dimension, one constant form, rational field
b = schlickewei_bound(1, [0], 1)
print(f"A = 1, D = 1: 2^35 = {b}")

# the quadratic field version of the same instance
b = schlickewei_bound(1, [0], 2)
print(f"A = 1, D = 2: 2^35 * 2^24 = {b}")

# two dimensions with a linear form already leaves the printable range
b = schlickewei_bound(2, [1], 2)
print(f"A = 3, D = 2: {describe_bound(b)}")
print(f"  ({digit_count(b)} digits)")

# growth along each axis, never decreasing
for dims in (1, 2, 3):
    row = [digit_count(schlickewei_bound(dims, [dg], 2)) for dg in (0, 1, 2)]
    print(f"digit counts, dims={dims}, degree 0..2: {row}")

print()

# set partitions: the index bookkeeping for grouping recurrence roots
print("Bell numbers:", [bell_number(n) for n in range(7)])
print("partitions of {1, 2, 3}:")
for p in set_partitions(3):
    print("  ", [tuple(i + 1 for i in block) for block in p])

print()

# partition analysis over three bases: 3 + 2*sqrt(2) and its inverse are
# dependent (their product is 1), the rational 2 is independent of both
alpha = QuadNum(3, 2, 2)
bases = (alpha, alpha.inverse(), QuadNum(2, 0, 2))
for report in partition_analysis(bases, 5):
    blocks = " | ".join("{" + ", ".join(map(str, b)) + "}" for b in report.blocks)
    print(f"{blocks:25s} {report.verdict:22s} witnesses: {list(report.witnesses)}")

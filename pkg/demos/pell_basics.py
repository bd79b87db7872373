"""Continued fractions of square roots and fundamental solutions.

Everything below is exact: no floats anywhere, so the printed numbers are
the numbers.
"""

from pellsum import continued_fraction_sqrt, pell_data

# The expansion of sqrt(d) is eventually periodic; the period drives
# everything else (solvability of the -1 equation, size of the units).
for d in (2, 5, 13, 61):
    a0, period = continued_fraction_sqrt(d)
    print(f"sqrt({d}) = [{a0}; {period} repeating], period length {len(period)}")

print()

# The convergent just before the period closes gives the fundamental
# solution of x^2 - d y^2 = 1. Odd period length means the -1 equation is
# solvable and the found pair solves it first.
for d in (2, 3, 13, 61):
    data = pell_data(d)
    x, y = data.fundamental
    print(f"d={d}: fundamental ({x}, {y}), check {x*x - d*y*y}")
    if data.negative:
        a, b = data.negative
        print(f"      negative  ({a}, {b}), check {a*a - d*b*b}")
    else:
        print("      x^2 - d y^2 = -1 unsolvable (even period)")

print()

# The automorph is the minimal (t, u) with t^2 - d u^2 = 4; it can be a
# genuinely smaller, half-integral unit when d = 5 (mod 8).
for d in (13, 5, 37, 3):
    data = pell_data(d)
    t, u = data.automorph
    print(f"d={d}: automorph ({t}, {u}), unit {data.unit()}, norm {data.unit().norm()}")

"""Solution classes of x^2 - d y^2 = m and their coordinate sets.

The automorph acts on solutions; finitely many orbits cover everything,
so a short seed scan plus orbit stepping replaces unbounded search.
"""

from pellsum import (
    NormFormProblem,
    class_representatives,
    coordinate_set,
    solution_classes,
    unit_power_form,
)

problem = NormFormProblem(13, 4)
sol = solution_classes(problem)
print(f"x^2 - 13 y^2 = 4 has {len(sol.orbits)} class(es); scan went to y <= {sol.scan_bound}")

orbit = sol.orbits[0]
print(f"representative {orbit.representative}, automorph {orbit.automorph}")

# walk the orbit a few steps in both directions
pair = orbit.representative
for _ in range(4):
    pair = orbit.step(pair)
    print("  forward ->", pair)
pair = orbit.inv_step(orbit.representative)
print("  backward ->", pair, "(the seed (2, 0) folds in here)")

print()

# The coordinate sets are the positive values each coordinate takes.
# Trivial solutions (one coordinate zero) are excluded by default since
# the sum searches never want them; flip the flag to see them.
print("X1 up to 2e6: ", coordinate_set(problem, 1, 2 * 10**6))
print("X2 up to 5e5: ", coordinate_set(problem, 2, 5 * 10**5))
print("X1 of (5, 4) up to 20, with and without the trivial (2, 0):")
print("  ", coordinate_set(NormFormProblem(5, 4), 1, 20, include_trivial=True))
print("  ", coordinate_set(NormFormProblem(5, 4), 1, 20))

print()

# Each coordinate along a class is c1*eps^a + c2*conj(eps)^a, which is how
# the coordinate sets connect back to linear recurrences.
form = unit_power_form(problem, class_representatives(problem)[0], 1)
print(f"coordinate 1 closed form: c1 = {form.c1}, eps = {form.eps}")
print("values:", [form.evaluate(a) for a in range(5)])

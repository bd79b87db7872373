"""Closed forms, degeneracy, and the hypotheses behind the finiteness results.

A sum search over a recurrence only carries finiteness meaning when the
recurrence is non-degenerate, its roots are pairwise multiplicatively
independent and not roots of unity, and the last coefficient is not a
unit. The auditor checks all four exactly.
"""

from pellsum import (
    LinearRecurrence,
    audit_hypotheses,
    binet,
    is_degenerate,
    roots_multiplicatively_independent,
    terms_up_to,
)

# a healthy example: U_{n+1} = 2U_n + 2U_{n-1}
rec = LinearRecurrence((2, 2), (0, 1))
print("terms:", terms_up_to(rec, 8))
hyp = audit_hypotheses(rec)
print(f"applicable: {hyp.applicable} (degenerate={not hyp.nondegenerate}, "
      f"independent={hyp.pairwise_independent}, unity={not hyp.no_root_of_unity}, "
      f"|a_d|!=1: {hyp.last_coeff_not_unit})")

print()

# a degenerate one: the root ratio is a primitive cube root of unity,
# so the sequence is periodic and the finiteness statements say nothing
rec = LinearRecurrence((1, -1), (0, 3))
print("terms:", terms_up_to(rec, 11))
print(is_degenerate(rec).detail)

print()

# a non-degenerate recurrence can still fail the audit: here the two
# roots multiply to 1, so they are multiplicatively dependent
rec = LinearRecurrence((6, -1), (0, 1))
form = binet(rec)
print(f"roots {form.roots[0]} and {form.roots[1]}, f1 = {form.coeffs[0]}")
verdict = roots_multiplicatively_independent(*form.roots, 5)
print(f"dependent: {verdict.dependent}, witness alpha^{verdict.witness[0]} * "
      f"beta^{verdict.witness[1]} = 1")
print("terms still come out exactly:", [form.term(n) for n in range(8)])

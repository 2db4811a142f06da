"""Suprema of fixed vectors, taken within the fixed space rather than
the ambient lattice, and the transfinite iteration that reaches them.

For a commuting family of positive contractions the fixed space is a
lattice in its own order, and the supremum of fixed vectors within it
keeps the ambient norm.  The iteration below exhibits that supremum as
a monotone orbit limit.
Run with: python3 demos/03_fixed_space_suprema.py
"""

from fractions import Fraction

from latfix.exactnum.rational import QMatrix, QVector
from latfix.fixlattice import (
    fixed_space_report,
    least_fixed_above,
    sup_in_fixspace,
    transfinite_trace,
)
from latfix.opcore import OperatorFamily, PositiveMatrixOperator

third = Fraction(1, 3)
averaging = QMatrix(
    [
        [1, 0, 0],
        [third, third, third],
        [0, 0, 1],
    ]
)
family = OperatorFamily([PositiveMatrixOperator(averaging)])

report = fixed_space_report(family)
print("family contractive:", report.family_valid)
print("fixed space basis:", [[str(x) for x in b] for b in report.fixed_space.basis])
print("classification:", report.classification.verdict.value)
print("conforms to the contraction theorem:", report.theorem_conformant)
for check in report.norm_checks:
    print(
        f"  norm check {check.description}: ambient {check.ambient_norm},"
        f" within F {check.fixed_norm}, equal: {check.equal}"
    )

# the supremum of {f, -f} within the fixed space is the modulus there;
# it dominates the ambient modulus and has the same sup norm
f_hat = QVector([1, 0, -1])
g_f, g_e = sup_in_fixspace(family, [f_hat, -f_hat])
print("\nambient sup g_E:", [str(x) for x in g_e], "norm", g_e.sup_norm())
print("sup within F g_F:", [str(x) for x in g_f], "norm", g_f.sup_norm())

# the same vector through the orbit route: iterate, take monotone
# limits, repeat; here a single limit step reaches the fixed point
trace = transfinite_trace(family.members[0], [f_hat, -f_hat])
print("\ntransfinite trace outcome:", trace.outcome)
print("limit steps:", trace.limit_steps)
print("fixed point:", [str(x) for x in trace.fixed_point])

# least fixed vector above a super fixed one (Tg >= g)
g = QVector([1, 0, 1])
least = least_fixed_above(family, g)
print("\nsuper fixed bound:", [str(x) for x in g])
print("least fixed vector above it:", [str(x) for x in least])

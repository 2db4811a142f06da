"""Exact two-phase simplex against hand-worked programs and scipy.

scipy solves the same programs in floating point; statuses must agree
and optimal values must match to 1e-7, which an exact solver passes
with room to spare.
"""

from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from latfix.conegeom.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, minimize
from latfix.exactnum.rational import QVector, rat

from conftest import random_qvector, rng_for


class TestFrozenPrograms:
    def test_basic_optimum(self):
        # min x + y  s.t.  x >= 1, y >= 2
        res = minimize(
            QVector([1, 1]),
            inequalities=[
                (QVector([1, 0]), rat(1)),
                (QVector([0, 1]), rat(2)),
            ],
        )
        assert res.status == OPTIMAL
        assert res.value == 3
        assert res.point == QVector([1, 2])

    def test_equality_constraints(self):
        # min x - y  s.t.  x + y == 4, x - y >= 0
        res = minimize(
            QVector([1, -1]),
            equalities=[(QVector([1, 1]), rat(4))],
            inequalities=[(QVector([1, -1]), rat(0))],
        )
        assert res.status == OPTIMAL
        assert res.value == 0
        assert res.point == QVector([2, 2])

    def test_infeasible(self):
        res = minimize(
            QVector([1]),
            inequalities=[
                (QVector([1]), rat(2)),
                (QVector([-1]), rat(-1)),  # x <= 1
            ],
        )
        assert res.status == INFEASIBLE
        assert res.value is None
        assert res.point is None

    def test_unbounded(self):
        res = minimize(QVector([-1]), inequalities=[(QVector([1]), rat(0))])
        assert res.status == UNBOUNDED

    def test_free_variables(self):
        # variables are free: the optimum can be negative
        res = minimize(
            QVector([1, 0]),
            equalities=[(QVector([0, 1]), rat(0))],
            inequalities=[(QVector([1, 1]), rat(-3))],
        )
        assert res.status == OPTIMAL
        assert res.value == -3

    def test_exact_rational_answer(self):
        # min 3x + 5y  s.t.  2x + y >= 1, x + 3y >= 1
        res = minimize(
            QVector([3, 5]),
            inequalities=[
                (QVector([2, 1]), rat(1)),
                (QVector([1, 3]), rat(1)),
            ],
        )
        assert res.status == OPTIMAL
        assert res.point == QVector([rat("2/5"), rat("1/5")])
        assert res.value == rat("11/5")

    def test_degenerate_vertex_terminates(self):
        # three planes through one vertex: Bland's rule must not cycle
        res = minimize(
            QVector([1, 1, 1]),
            inequalities=[
                (QVector([1, 0, 0]), rat(0)),
                (QVector([0, 1, 0]), rat(0)),
                (QVector([0, 0, 1]), rat(0)),
                (QVector([1, 1, 0]), rat(0)),
                (QVector([1, 1, 1]), rat(0)),
            ],
        )
        assert res.status == OPTIMAL
        assert res.value == 0


class TestAgainstScipy:
    def test_random_programs(self):
        rng = rng_for("lp-vs-scipy")
        solved = 0
        for trial in range(120):
            n = rng.randint(1, 4)
            m = rng.randint(1, 5)
            objective = random_qvector(rng, n, span=4, den_max=4)
            ineqs = [
                (random_qvector(rng, n, span=3, den_max=3), Fraction(rng.randint(-4, 4)))
                for _ in range(m)
            ]
            res = minimize(objective, inequalities=ineqs)

            # scipy's linprog uses A_ub x <= b_ub and bounds=None for free
            a_ub = np.array([[-float(x) for x in row] for row, _ in ineqs])
            b_ub = np.array([-float(rhs) for _, rhs in ineqs])
            ref = linprog(
                [float(c) for c in objective],
                A_ub=a_ub,
                b_ub=b_ub,
                bounds=[(None, None)] * n,
                method="highs",
            )
            if res.status == OPTIMAL:
                assert ref.status == 0, f"trial {trial}: scipy disagrees"
                assert abs(ref.fun - float(res.value)) < 1e-7
                # the exact point is feasible for every constraint
                for row, rhs in ineqs:
                    assert row.dot(res.point) >= rhs
                solved += 1
            elif res.status == INFEASIBLE:
                assert ref.status == 2
            else:
                assert ref.status == 3
        assert solved >= 20  # the sample exercises the optimal branch

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            minimize(QVector([1]), inequalities=[(QVector([1, 2]), rat(0))])

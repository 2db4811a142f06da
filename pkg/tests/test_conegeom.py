"""Cone geometry: extreme rays, lattice classification, least upper
bounds within a subspace.

The classifier is cross-checked against the exhaustive sign-pattern
oracle, least elements against per-coordinate scipy programs, and ray
computations against membership and independence invariants.
"""

from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from latfix.conegeom.core import (
    SIGN_ORACLE_DIM_BOUND,
    Subspace,
    Verdict,
    am_property_check,
    classify_subspace,
    extreme_rays_of_inequality_cone,
    in_conic_hull,
    least_element_above,
    least_upper_bound_in,
    modulus_in,
    positive_cone,
    sign_pattern_sublattice_oracle,
)
from latfix.exactnum.rational import QMatrix, QVector, rat
from latfix.exactnum.linalg import rank

from conftest import random_subspace_mix, random_qvector, rng_for


def span(ambient, *vectors):
    return Subspace.from_vectors(ambient, [QVector(v) for v in vectors])


class TestClassification:
    def test_full_space_is_sublattice(self):
        full = span(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
        c = classify_subspace(full)
        assert c.verdict == Verdict.SUBLATTICE
        assert c.cone_generating and c.cone_simplicial and c.rays_support_disjoint

    def test_zero_subspace_is_vacuous_sublattice(self):
        c = classify_subspace(Subspace(3, ()))
        assert c.verdict == Verdict.SUBLATTICE
        assert c.cone_generating and c.cone_simplicial and c.rays_support_disjoint

    def test_diagonal_is_sublattice(self):
        c = classify_subspace(span(3, (1, 1, 1)))
        assert c.verdict == Verdict.SUBLATTICE

    def test_lattice_subspace_only(self):
        # overlapping-support rays (0,1,2) and (2,1,0)
        f = span(3, (1, 1, 1), (1, 0, -1))
        c = classify_subspace(f)
        assert c.verdict == Verdict.LATTICE_SUBSPACE_ONLY
        assert c.cone_generating and c.cone_simplicial
        assert not c.rays_support_disjoint
        assert set(positive_cone(f).rays) == {
            QVector([0, 1, 2]),
            QVector([2, 1, 0]),
        }

    def test_not_lattice_subspace_thin_cone(self):
        # positive cone is a single ray: not generating
        f = span(3, (1, 0, -1), (0, 1, 0))
        c = classify_subspace(f)
        assert c.verdict == Verdict.NOT_LATTICE_SUBSPACE
        assert not c.cone_generating
        assert positive_cone(f).rays == (QVector([0, 1, 0]),)

    def test_not_lattice_subspace_too_many_rays(self):
        # a 3-space in R^4 whose positive cone has a square slice:
        # generating with 4 extreme rays, so not simplicial
        g = span(4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0))
        cg = classify_subspace(g)
        assert len(positive_cone(g).rays) == 4
        assert cg.cone_generating and not cg.cone_simplicial
        assert cg.verdict == Verdict.NOT_LATTICE_SUBSPACE

    def test_coordinate_slab_is_simplicial(self):
        f = span(4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1))
        c = classify_subspace(f)
        assert len(positive_cone(f).rays) == 3
        assert c.verdict == Verdict.SUBLATTICE


class TestExtremeRays:
    def test_orthant_rays(self):
        rows = [QVector([1, 0]), QVector([0, 1])]
        assert set(extreme_rays_of_inequality_cone(rows)) == {
            QVector([1, 0]),
            QVector([0, 1]),
        }

    def test_rejects_non_pointed(self):
        with pytest.raises(ValueError):
            extreme_rays_of_inequality_cone([QVector([1, 0])])

    def test_ray_invariants_on_random_subspaces(self):
        rng = rng_for("rays")
        for index in range(40):
            f = random_subspace_mix(rng, index)
            cone = positive_cone(f)
            for r in cone.rays:
                assert f.contains(r)
                assert r.is_nonneg() and not r.is_zero()
                assert r == r.primitive()
            if cone.rays:
                # rays are conically independent: none lies in the hull
                # of the others
                for i in range(len(cone.rays)):
                    others = [r for j, r in enumerate(cone.rays) if j != i]
                    if others:
                        assert not in_conic_hull(others, cone.rays[i])

    def test_membership_via_conic_hull(self):
        rays = [QVector([0, 1, 2]), QVector([2, 1, 0])]
        assert in_conic_hull(rays, QVector([2, 2, 2]))
        assert not in_conic_hull(rays, QVector([1, 0, 0]))


class TestOracleAgreement:
    def test_classifier_matches_sign_oracle(self):
        rng = rng_for("oracle")
        for index in range(60):
            f = random_subspace_mix(rng, index)
            verdict = classify_subspace(f).verdict
            assert (verdict == Verdict.SUBLATTICE) == sign_pattern_sublattice_oracle(f)

    def test_oracle_dimension_bound(self):
        with pytest.raises(ValueError):
            sign_pattern_sublattice_oracle(Subspace(SIGN_ORACLE_DIM_BOUND + 1, ()))


class TestLeastElementAbove:
    def test_frozen_example(self):
        f = span(3, (1, 0, -1), (0, 1, 1))
        assert least_element_above(f, QVector([1, 0, 1])) == QVector([1, 2, 1])

    def test_infeasible_returns_none(self):
        f = span(3, (1, 0, -1), (0, 1, 0))  # z1 = -z3 forced
        assert least_element_above(f, QVector([1, 0, 1])) is None

    def test_no_least_element_returns_none(self):
        # feasible but the coordinatewise minimum leaves the subspace
        f = span(3, (1, 0, -1), (0, 1, 0))
        assert least_element_above(f, QVector([-1, 0, -1])) is None

    def test_zero_subspace(self):
        z = Subspace(2, ())
        assert least_element_above(z, QVector([-1, 0])) == QVector([0, 0])
        assert least_element_above(z, QVector([1, 0])) is None

    def test_least_property_on_random_instances(self):
        rng = rng_for("least-above")
        found = 0
        for index in range(60):
            f = random_subspace_mix(rng, index)
            bound = random_qvector(rng, f.ambient_dim, span=3, den_max=3)
            result = least_element_above(f, bound)
            if result is None:
                continue
            found += 1
            assert f.contains(result)
            assert result.ge(bound)
            # least: no feasible point goes below it in any coordinate
            # (cross-checked in floating point with scipy)
            basis = f.basis
            a_ub = []
            b_ub = []
            for j in range(f.ambient_dim):
                a_ub.append([-float(b[j]) for b in basis])
                b_ub.append(-float(bound[j]))
            for j in range(f.ambient_dim):
                ref = linprog(
                    [float(b[j]) for b in basis],
                    A_ub=np.array(a_ub),
                    b_ub=np.array(b_ub),
                    bounds=[(None, None)] * len(basis),
                    method="highs",
                )
                assert ref.status == 0
                assert ref.fun >= float(result[j]) - 1e-7
        assert found >= 10


class TestLubAndModulus:
    def test_requires_membership(self):
        f = span(3, (1, 1, 1))
        with pytest.raises(ValueError):
            least_upper_bound_in(f, [QVector([1, 0, 0])])
        with pytest.raises(ValueError):
            least_upper_bound_in(f, [])

    def test_sublattice_lub_is_pointwise_max(self):
        f = span(4, (1, 2, 0, 0), (0, 0, 3, 1))
        u = QVector([1, 2, 0, 0]) - QVector([0, 0, 3, 1])
        v = QVector([0, 0, 3, 1])
        lub = least_upper_bound_in(f, [u, v])
        assert lub == u.cwise_max(v)

    def test_modulus_frozen(self):
        f = span(3, (1, 1, 1), (1, 0, -1))
        assert modulus_in(f, QVector([1, 0, -1])) == QVector([1, 1, 1])

    def test_modulus_absent(self):
        f = span(3, (1, 0, -1), (0, 1, 0))
        assert modulus_in(f, QVector([1, 0, -1])) is None

    def test_modulus_on_sublattice_is_abs(self):
        rng = rng_for("modulus-sub")
        f = span(4, (2, 1, 0, 0), (0, 0, 1, 3))
        for _ in range(10):
            c1 = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            c2 = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            x = QVector([2, 1, 0, 0]).scale(c1) + QVector([0, 0, 1, 3]).scale(c2)
            assert modulus_in(f, x) == x.abs()


class TestAmProperty:
    def test_requires_lattice_subspace(self):
        with pytest.raises(ValueError):
            am_property_check(span(3, (1, 0, -1), (0, 1, 0)), 5, 1)

    def test_sublattice_always_passes(self):
        assert am_property_check(span(4, (1, 1, 0, 0), (0, 0, 2, 1)), 30, 7)

    def test_overlapping_rays_can_fail(self):
        # rays (1,1,0) and (0,1,1): the lub of the pair jumps to norm 2
        f = span(3, (1, 1, 0), (0, 1, 1))
        assert classify_subspace(f).verdict == Verdict.LATTICE_SUBSPACE_ONLY
        assert not am_property_check(f, 50, 3)

    def test_e42_space_has_am_property(self):
        f = span(3, (1, 1, 1), (1, 0, -1))
        assert am_property_check(f, 50, 11)

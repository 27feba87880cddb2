"""Tests for the lattice-box oracle and the survey cross-check."""
from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from pdclass.classifier import classify, grading_cone_system
from pdclass.cone import decide_cone, make_cone_system
from pdclass.grading import make_grading
from pdclass.oracle import (
    SearchBox,
    check_instance,
    lattice_cone_search,
    survey_crosscheck,
    sweep_instances,
)
from pdclass.rootsys import build_root_system

from conftest import lattice_points_in_cone, sweep_label_vectors


class TestSearchBox:
    def test_radius_bound(self):
        with pytest.raises(ValueError):
            SearchBox(radius=0, dimension=2)

    def test_dimension_bound(self):
        with pytest.raises(ValueError):
            SearchBox(radius=1, dimension=0)

    def test_mismatched_dimension_rejected(self):
        system = make_cone_system([(1, 0)])
        with pytest.raises(ValueError):
            lattice_cone_search(system, SearchBox(radius=1, dimension=3))


class TestLatticeSearch:
    def test_half_line(self):
        system = make_cone_system([(1,)])
        assert lattice_cone_search(system, SearchBox(1, 1)) == (1,)

    def test_first_hit_is_lexicographic_minimum(self, c2):
        system = grading_cone_system(make_grading(c2, (0, 1)))
        assert lattice_cone_search(system, SearchBox(2, 2)) == (-2, -2)
        assert lattice_cone_search(system, SearchBox(3, 2)) == (-3, -3)

    def test_trivial_cone_yields_nothing(self, c2):
        system = grading_cone_system(make_grading(c2, (1, 1)))
        assert lattice_cone_search(system, SearchBox(3, 2)) is None

    def test_mixed_sign_normals(self):
        system = make_cone_system([(2, -2), (2, 0), (2, -4), (0, -2)])
        assert lattice_cone_search(system, SearchBox(2, 2)) == (0, -2)

    def test_found_point_lies_in_cone(self, c2):
        system = grading_cone_system(make_grading(c2, (0, 1)))
        point = lattice_cone_search(system, SearchBox(3, 2))
        assert system.contains(point)

    def test_matches_slow_scan(self, c2, g2):
        for rs in (c2, g2):
            for labels in sweep_label_vectors(2):
                system = grading_cone_system(make_grading(rs, labels))
                hits = lattice_points_in_cone(system.normals, 2, 2)
                found = lattice_cone_search(system, SearchBox(2, 2))
                if hits:
                    assert found == hits[0]
                else:
                    assert found is None

    @settings(deadline=None, max_examples=100)
    @given(
        st.integers(1, 3),
        st.lists(
            st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=5
        ).filter(lambda rows: any(any(r) for r in rows)),
    )
    def test_one_sided_contract(self, radius, normals):
        system = make_cone_system(normals)
        found = lattice_cone_search(system, SearchBox(radius, 2))
        decision = decide_cone(system)
        if found is not None:
            # a concrete point refutes triviality
            assert not decision.trivial
            assert system.contains(found)
        if not decision.trivial and max(map(abs, decision.witness)) <= radius:
            assert found is not None


class TestSweepInstances:
    def test_lexicographic_order(self):
        instances = sweep_instances(["C", "A"], 2)
        assert instances == sorted(instances)
        assert instances[0] == ("A", 1, (1,))

    def test_rank_floors(self):
        instances = sweep_instances(["A", "B", "C", "D", "E", "F", "G"], 3)
        families = {t for t, _, _ in instances}
        # D starts at rank 4, E at 6, F is rank 4 only
        assert families == {"A", "B", "C", "G"}

    def test_all_labels_have_a_one(self):
        for _, _, labels in sweep_instances(["B"], 3):
            assert 1 in labels

    def test_counts_per_rank(self):
        instances = sweep_instances(["A"], 4)
        by_rank = {}
        for _, rank, _ in instances:
            by_rank[rank] = by_rank.get(rank, 0) + 1
        assert by_rank == {1: 1, 2: 5, 3: 19, 4: 65}


class TestCheckInstance:
    def test_row_fields(self):
        row = check_instance("C", 2, (1, 1))
        assert (row.classical, row.hermitian) == (False, True)
        assert (row.m0, row.dim_D) == (3, 4)

    def test_nonhermitian_instance(self):
        row = check_instance("G", 2, (1, 0))
        assert (row.classical, row.hermitian) == (False, False)

    def test_classical_instance(self):
        row = check_instance("A", 1, (1,))
        assert (row.classical, row.hermitian) == (True, True)


class TestSurvey:
    def test_single_grading_family(self):
        result = survey_crosscheck(["A"], 1)
        assert len(result.rows) == 1
        assert result.failures == ()
        agg = result.aggregates[0]
        assert (agg.total, agg.n_classical, agg.n_nonclassical, agg.n_hermitian) == (
            1,
            1,
            0,
            1,
        )

    def test_rank_two_symplectic_counts(self):
        result = survey_crosscheck(["C"], 2)
        assert result.failures == ()
        agg = result.aggregates[0]
        assert (agg.total, agg.n_classical, agg.n_nonclassical, agg.n_hermitian) == (
            5,
            2,
            3,
            3,
        )
        verdicts = {row.labels: row.classical for row in result.rows}
        assert verdicts[(1, 1)] is False
        assert verdicts[(0, 1)] is True

    def test_no_hermitian_split_form(self):
        result = survey_crosscheck(["G"], 2)
        agg = result.aggregates[0]
        assert agg.total == 5
        assert agg.n_hermitian == 0

    def test_failures_empty_through_rank_three(self):
        result = survey_crosscheck(["A", "B", "C", "G"], 3)
        assert result.failures == ()
        assert len(result.rows) == (1 + 5 + 19) + (5 + 19) + (5 + 19) + 5

    def test_job_count_does_not_change_result(self):
        serial = survey_crosscheck(["A", "C", "G"], 2)
        threaded = survey_crosscheck(["A", "C", "G"], 2, jobs=4)

        def flat(result):
            return [
                (r.type_label, r.rank, r.labels, r.classical, r.hermitian, r.m0, r.dim_D)
                for r in result.rows
            ]

        assert flat(serial) == flat(threaded)
        assert serial.failures == threaded.failures

    def test_rows_align_with_classify(self):
        result = survey_crosscheck(["B"], 2)
        for row in result.rows:
            rs = build_root_system(row.type_label, row.rank)
            report = classify(make_grading(rs, row.labels))
            assert row.classical == report.classical
            assert row.hermitian == bool(report.hermitian_type)
            assert (row.m0, row.dim_D) == (report.m0, report.dim_D)

"""Cone feasibility: frozen small systems, oracle agreement, certificates."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SWEEP_SYSTEMS, cone_has_nonzero_point, sweep_label_vectors
from pdclass.cone import (
    ConeSystem,
    FarkasCertificate,
    decide_cone,
    make_cone_system,
    signed_directions,
    verify_certificate,
)
from pdclass.grading import make_grading
from pdclass.rootsys import build_root_system


def grading_cone(type_label, rank, labels):
    g = make_grading(build_root_system(type_label, rank), labels)
    normals = [g.root_system.bilinear_row(a) for a in g.compact_positive]
    normals += [
        tuple(-x for x in g.root_system.bilinear_row(b))
        for b in g.noncompact_positive
    ]
    return make_cone_system(normals)


class TestFrozenSystems:
    def test_c2_1_1_trivial(self):
        sys = grading_cone("C", 2, (1, 1))
        assert sys.normals == (
            (0, 2),
            (-2, 2),
            (2, -4),
            (-2, 0),
        )
        decision = decide_cone(sys)
        assert decision.trivial
        assert decision.witness is None
        assert verify_certificate(sys, decision.certificate)

    def test_c2_0_1_nontrivial(self):
        sys = grading_cone("C", 2, (0, 1))
        assert sys.normals == ((2, -2), (2, -4), (0, -2), (-2, 0))
        decision = decide_cone(sys)
        assert not decision.trivial
        assert decision.witness == (-1, -1)
        assert sys.contains(decision.witness)

    def test_mixed_sign_four_normal_system(self):
        # same shape as a rank-2 grading system but with the third normal
        # replaced so the first coordinate axis stays available
        sys = make_cone_system([(2, -2), (2, 0), (2, -4), (0, -2)])
        decision = decide_cone(sys)
        assert not decision.trivial
        assert decision.witness == (1, -1)
        assert sys.contains(decision.witness)
        assert sys.contains((1, 0))

    def test_half_line(self):
        decision = decide_cone(make_cone_system([(1,)]))
        assert not decision.trivial
        assert decision.witness == (1,)

    def test_negative_half_line(self):
        decision = decide_cone(make_cone_system([(-2,)]))
        assert not decision.trivial
        # sign is preserved by normalization: the cone is the negative ray
        assert decision.witness == (-1,)

    def test_full_plane_from_zero_normal(self):
        decision = decide_cone(make_cone_system([(0, 0)]))
        assert not decision.trivial
        assert decision.witness is not None and any(decision.witness)

    def test_construction_rejects_bad_input(self):
        with pytest.raises(ValueError):
            make_cone_system([])
        with pytest.raises(ValueError):
            make_cone_system([(1, 0), (1,)])


class TestCertificates:
    def test_certificate_replays_exactly(self):
        sys = grading_cone("C", 2, (1, 1))
        cert = decide_cone(sys).certificate
        assert len(cert.combinations) == 4
        for direction, coeffs in zip(signed_directions(2), cert.combinations):
            recombined = [
                sum(c * n[i] for c, n in zip(coeffs, sys.normals)) for i in range(2)
            ]
            assert tuple(recombined) == direction

    def test_tampered_sign_rejected(self):
        sys = grading_cone("C", 2, (1, 1))
        cert = decide_cone(sys).certificate
        combos = [list(c) for c in cert.combinations]
        for row in combos:
            for j, value in enumerate(row):
                if value > 0:
                    row[j] = -value
                    bad = FarkasCertificate(2, tuple(tuple(c) for c in combos))
                    assert not verify_certificate(sys, bad)
                    return
        raise AssertionError("certificate had no positive coefficient")

    def test_tampered_sum_rejected(self):
        sys = grading_cone("C", 2, (1, 1))
        cert = decide_cone(sys).certificate
        combos = [list(c) for c in cert.combinations]
        combos[0][0] += Fraction(1, 7)
        bad = FarkasCertificate(2, tuple(tuple(c) for c in combos))
        assert not verify_certificate(sys, bad)

    def test_wrong_shape_rejected(self):
        sys = grading_cone("C", 2, (1, 1))
        cert = decide_cone(sys).certificate
        assert not verify_certificate(sys, FarkasCertificate(3, cert.combinations))
        assert not verify_certificate(
            sys, FarkasCertificate(2, cert.combinations[:-1])
        )


class TestDeterminismAndScaling:
    def test_repeat_runs_identical(self):
        sys = grading_cone("C", 2, (0, 1))
        first = decide_cone(sys)
        second = decide_cone(sys)
        assert first.witness == second.witness
        sys2 = grading_cone("C", 2, (1, 1))
        assert (
            decide_cone(sys2).certificate.combinations
            == decide_cone(sys2).certificate.combinations
        )

    @pytest.mark.parametrize(
        "scales", [(1, 2, 3, 4), (Fraction(1, 2), 5, Fraction(7, 3), 1)]
    )
    def test_positive_rescaling_keeps_branch(self, scales):
        for labels in [(1, 1), (0, 1), (1, 0), (2, 1), (1, 2)]:
            sys = grading_cone("C", 2, labels)
            scaled = make_cone_system(
                [
                    tuple(s * x for x in normal)
                    for s, normal in zip(scales, sys.normals)
                ]
            )
            original = decide_cone(sys)
            rescaled = decide_cone(scaled)
            assert original.trivial == rescaled.trivial
            if not rescaled.trivial:
                assert sys.contains(rescaled.witness)


class TestEliminationOracleAgreement:
    @pytest.mark.parametrize(
        "type_label,rank", [(t, r) for t, r in SWEEP_SYSTEMS if r <= 3]
    )
    def test_sweep_systems_match_oracle(self, type_label, rank):
        for labels in sweep_label_vectors(rank):
            sys = grading_cone(type_label, rank, labels)
            expected = cone_has_nonzero_point(sys.normals, rank)
            decision = decide_cone(sys)
            assert decision.trivial == (not expected)
            if not decision.trivial:
                assert sys.contains(decision.witness)
            else:
                assert verify_certificate(sys, decision.certificate)

    @given(
        st.integers(min_value=1, max_value=4).flatmap(
            lambda dim: st.lists(
                st.tuples(*[st.integers(-5, 5) for _ in range(dim)]),
                min_size=1,
                max_size=6,
            )
        )
    )
    @settings(max_examples=120, deadline=None)
    def test_random_systems_match_oracle(self, normals):
        dim = len(normals[0])
        sys = make_cone_system(normals)
        decision = decide_cone(sys)
        assert decision.trivial == (not cone_has_nonzero_point(normals, dim))
        if not decision.trivial:
            assert any(decision.witness)
            assert sys.contains(decision.witness)

"""Registry behavior: sampling, execution, witnesses, and determinism."""

import dataclasses
from fractions import Fraction

import pytest

from qdetlab import GaussianRational, ONE, ZERO
from qdetlab.errors import DegenerateSampleError
from qdetlab.identities import (
    REGISTRY,
    ParamPoint,
    check_ids,
    get_check,
    run_check,
    run_suite,
    sample_point,
)
from qdetlab.identities.runner import EVIDENCE_PASS, FAIL, PASS, SKIPPED
from qdetlab.qseries import q_pochhammer


def frac(num, den=1):
    return GaussianRational(Fraction(num, den))


class TestRegistryShape:
    def test_ids_unique_and_sorted_listing(self):
        ids = check_ids()
        assert len(ids) == len(set(ids)) == 39
        assert ids == sorted(ids)

    def test_single_evidence_check(self):
        evidence = [cid for cid, c in REGISTRY.items() if c.mode == "evidence"]
        assert evidence == ["conjecture_mw3"]

    def test_unknown_id_rejected(self):
        with pytest.raises(KeyError):
            get_check("no_such_id")

    def test_every_check_has_summary_and_sizes(self):
        for entry in REGISTRY.values():
            assert entry.summary
            assert entry.default_sizes
            assert min(entry.default_sizes) >= entry.min_size


class TestSampler:
    def test_deterministic(self):
        p1 = sample_point("thm_main_phi", seed=42, trial=3, n=4)
        p2 = sample_point("thm_main_phi", seed=42, trial=3, n=4)
        assert p1 == p2

    def test_different_trials_differ(self):
        p1 = sample_point("thm_main_phi", seed=42, trial=0, n=4)
        p2 = sample_point("thm_main_phi", seed=42, trial=1, n=4)
        assert p1 != p2

    def test_kappa_constraints(self):
        for trial in range(6):
            pt = sample_point("thm_main_phi", seed=7, trial=trial, n=3)
            assert pt.kappa not in (ZERO, ONE, -ONE)
            assert pt.a == pt.alpha * pt.alpha
            assert pt.q == pt.kappa * pt.kappa

    def test_nonvanishing_predicate_for_main_theorem(self):
        n = 5
        for trial in range(4):
            pt = sample_point("thm_main_phi", seed=11, trial=trial, n=n)
            abq2 = pt.a * pt.b * pt.q * pt.q
            for k in range(1, n + 1):
                assert q_pochhammer(abq2, pt.q, k + n + pt.r - 2) != ZERO

    def test_k_tuple_distinct_in_range(self):
        pt = sample_point("thm_rows", seed=3, trial=0, n=6)
        assert len(set(pt.k_tuple)) == len(pt.k_tuple)
        assert all(1 <= k <= 12 for k in pt.k_tuple)

    def test_degeneracy_error_after_exhaustion(self):
        entry = REGISTRY["hankel"]

        def always_pole(pt, n):
            raise ZeroDivisionError("forced")

        broken = dataclasses.replace(entry, evaluate=always_pole)
        try:
            REGISTRY["hankel"] = broken
            with pytest.raises(DegenerateSampleError):
                sample_point("hankel", seed=1, trial=0, n=2)
        finally:
            REGISTRY["hankel"] = entry


class TestRunCheck:
    def test_main_theorem_size_one_value(self):
        pt = sample_point("thm_main_phi", seed=42, trial=0, n=1)
        comparisons = get_check("thm_main_phi").evaluate(pt, 1)
        (label, lhs, rhs) = comparisons[0]
        expected = (
            (ONE - pt.c)
            * q_pochhammer(pt.a * pt.q, pt.q, pt.r)
            / q_pochhammer(pt.a * pt.b * pt.q * pt.q, pt.q, pt.r)
        )
        assert lhs == rhs == expected
        assert run_check("thm_main_phi", 1, pt).status == PASS

    def test_both_theorem_forms_agree_on_shared_points(self):
        # the two closed forms take the same slots, so each sampled point
        # must satisfy both (their right-hand sides are equal)
        for n in range(1, 7):
            pt = sample_point("thm_main_phi", seed=5, trial=2, n=n)
            for check in ("thm_main_phi", "thm_main_aw"):
                assert run_check(check, n, pt).status == PASS

    def test_odd_corollary_degenerates_to_zero_at_c_one(self):
        base = sample_point("cor_odd_phi", seed=9, trial=0, n=3)
        pt = dataclasses.replace(base, c=ONE)
        comparisons = get_check("cor_odd_phi").evaluate(pt, 3)
        (_, lhs, rhs) = comparisons[0]
        assert lhs == rhs == ZERO
        assert run_check("cor_odd_phi", 3, pt).status == PASS

    def test_dj_generic_passes(self):
        pt = sample_point("dj_generic", seed=4, trial=1, n=4)
        assert run_check("dj_generic", 4, pt).status == PASS

    def test_quadratic_phi_smallest_degree(self):
        # at degree 1 the non-terminating factor carries a vanishing multiplier
        pt = sample_point("quadratic_phi", seed=6, trial=0, n=1)
        assert run_check("quadratic_phi", 1, pt).status == PASS

    def test_conjecture_reports_evidence(self):
        pt = sample_point("conjecture_mw3", seed=8, trial=0, n=3)
        result = run_check("conjecture_mw3", 3, pt)
        assert result.status == EVIDENCE_PASS
        assert result.lhs is None and result.rhs is None

    def test_degenerate_point_is_skipped_not_crashed(self):
        base = sample_point("thm_main_phi", seed=10, trial=0, n=2)
        # beta = 1 makes b = 1, a pole of the (bq;q)_{k-2} factor at k = 1
        pt = dataclasses.replace(base, beta=ONE, b=ONE)
        result = run_check("thm_main_phi", 2, pt)
        assert result.status == SKIPPED
        assert result.detail

    def test_failure_carries_witnesses(self):
        entry = REGISTRY["hankel"]
        rigged = dataclasses.replace(
            entry, evaluate=lambda pt, n: [("forced mismatch", ONE, ZERO)]
        )
        try:
            REGISTRY["hankel"] = rigged
            result = run_check("hankel", 2, ParamPoint(seed=1, trial=0))
            assert result.status == FAIL
            assert result.lhs == "1" and result.rhs == "0"
            assert result.detail == "forced mismatch"
        finally:
            REGISTRY["hankel"] = entry


class TestCrossValidation:
    def test_quadratic_forms_agree_at_shared_points(self):
        # the plain and series-form quadratic relations draw the same slots,
        # so one point must satisfy both
        for trial in range(3):
            pt = sample_point("quadratic_clean", seed=21, trial=trial, n=4)
            assert run_check("quadratic_clean", 4, pt).status == PASS
            assert run_check("quadratic_phi", 4, pt).status == PASS

    def test_specialized_condensation_follows_generic_shape(self):
        # the raw five-minor identity holds on the shifted q-moment kernel,
        # which is what the specialized check rearranges
        from qdetlab import determinant, submatrix
        from qdetlab.identities import build_theorem_matrix

        pt = sample_point("dj_specialized", seed=22, trial=0, n=5)
        n = 5
        a = build_theorem_matrix(n, 0, pt.a, pt.b, pt.c, pt.q)
        inner = list(range(2, n))
        head = list(range(1, n))
        tail = list(range(2, n + 1))
        lhs = determinant(submatrix(a, inner, inner)) * determinant(a)
        rhs = determinant(submatrix(a, head, head)) * determinant(
            submatrix(a, tail, tail)
        ) - determinant(submatrix(a, head, tail)) * determinant(submatrix(a, tail, head))
        assert lhs == rhs
        assert run_check("dj_specialized", n, pt).status == PASS

    def test_suite_reports_skips_when_sampling_exhausted(self):
        entry = REGISTRY["andrews"]

        def always_pole(pt, n):
            raise ZeroDivisionError("forced")

        try:
            REGISTRY["andrews"] = dataclasses.replace(entry, evaluate=always_pole)
            report = run_suite(["andrews"], n_min=1, n_max=1, trials=1, seed=1)
            assert report.summary["skipped"] == 1
            assert not report.failed
        finally:
            REGISTRY["andrews"] = entry


class TestRootFlipInvariance:
    @pytest.mark.parametrize(
        "check_id, n",
        [
            ("thm_main_phi", 3),
            ("thm_main_aw", 3),
            ("quadratic_full", 3),
            ("watson", 3),
            ("w8_contiguous", 2),
        ],
    )
    def test_alpha_sign_flip_preserves_pass(self, check_id, n):
        pt = sample_point(check_id, seed=13, trial=0, n=n)
        assert run_check(check_id, n, pt).status == PASS
        flipped = dataclasses.replace(pt, alpha=-pt.alpha)
        assert run_check(check_id, n, flipped).status == PASS

    def test_nishizawa_root_flips(self):
        pt = sample_point("nishizawa", seed=13, trial=1, n=3)
        assert run_check("nishizawa", 3, pt).status == PASS
        for flip in (
            dataclasses.replace(pt, s_half=-pt.s_half),
            dataclasses.replace(pt, t_half=-pt.t_half),
        ):
            assert run_check("nishizawa", 3, flip).status == PASS


class TestRunSuite:
    def test_byte_identical_reports(self):
        r1 = run_suite(["hankel", "andrews"], trials=2, seed=123)
        r2 = run_suite(["hankel", "andrews"], trials=2, seed=123)
        assert r1.to_json() == r2.to_json()
        assert r1.to_text() == r2.to_text()

    def test_results_ordered_by_check_size_trial(self):
        r = run_suite(["mehta_wang", "andrews"], trials=2, seed=1)
        keys = [(res.check, res.n, res.trial) for res in r.results]
        assert keys == sorted(keys)

    def test_unknown_check_rejected(self):
        with pytest.raises(KeyError):
            run_suite(["no_such_id"], trials=1, seed=1)

    def test_empty_requests_rejected(self):
        with pytest.raises(ValueError):
            run_suite([], trials=1, seed=1)
        with pytest.raises(ValueError):
            run_suite(["hankel"], n_min=4, n_max=2, trials=1, seed=1)
        with pytest.raises(ValueError):
            run_suite(["hankel"], trials=0, seed=1)

    def test_size_window_clamped_to_check_bounds(self):
        r = run_suite(["residue_ids"], n_min=5, n_max=9, trials=1, seed=2)
        sizes = {res.n for res in r.results}
        assert sizes == {5, 6}

    def test_one_sided_size_windows(self):
        r = run_suite(["hankel"], n_min=4, trials=1, seed=2)
        assert {res.n for res in r.results} == {4, 5, 6}
        r = run_suite(["bottom_rows"], n_max=3, trials=1, seed=2)
        assert {res.n for res in r.results} == {2, 3}

    def test_seed_changes_points_not_verdicts(self):
        r1 = run_suite(["q_kratt"], trials=1, seed=1)
        r2 = run_suite(["q_kratt"], trials=1, seed=2)
        assert all(res.status == PASS for res in r1.results + r2.results)
        assert r1.to_json() != r2.to_json()

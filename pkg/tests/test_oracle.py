import io
import json
import math
from fractions import Fraction

import pytest

from arctanbounds import (
    BoundId,
    DomainError,
    GridSpec,
    ParamError,
    dominance_report,
    oracle_arctan,
    sweep,
)

GRID = GridSpec(1e-8, 1e8, 400, "log")


class TestOracle:
    def test_known_points(self):
        PI = Fraction("3.14159265358979323846264338327950288419716939937511")
        assert abs(oracle_arctan(1.0, 30).as_fraction() - PI / 4) < Fraction(1, 10**30)
        assert oracle_arctan(0.0, 30).units == 0

    def test_odd(self):
        assert oracle_arctan(-3.7, 25).units == -oracle_arctan(3.7, 25).units

    def test_digit_floor(self):
        with pytest.raises(ParamError):
            oracle_arctan(1.0, 19)

    def test_finite_only(self):
        with pytest.raises(DomainError):
            oracle_arctan(math.inf, 30)

    def test_thirty_forty_agreement(self):
        for x in [-12345.678, -1.0, 1e-5, 0.5, 99.0]:
            a30 = oracle_arctan(x, 30).as_fraction()
            a40 = oracle_arctan(x, 40).as_fraction()
            assert abs(a30 - a40) < Fraction(1, 10**28)


class TestGridSpec:
    def test_values_hit_endpoints(self):
        xs = GridSpec(1e-8, 1e8, 100, "log").values()
        assert xs[0] == 1e-8 and xs[-1] == 1e8 and len(xs) == 100

    def test_linear(self):
        xs = GridSpec(0.0, 1.0, 5, "linear").values()
        assert xs == (0.0, 0.25, 0.5, 0.75, 1.0)

    def test_validation(self):
        with pytest.raises(ParamError):
            GridSpec(1.0, 2.0, 1)
        with pytest.raises(ParamError):
            GridSpec(2.0, 1.0, 10)
        with pytest.raises(ParamError):
            GridSpec(0.0, 1.0, 10, "log")
        with pytest.raises(ParamError):
            GridSpec(1.0, 2.0, 10, "cubic")


class TestSweep:
    def test_shafer_clean(self):
        report = sweep(BoundId.SHAFER_LOWER, grid=GRID)
        assert report.ok
        assert report.violations == []
        assert report.min_margin > 0

    def test_identity_upper_clean(self):
        report = sweep(BoundId.IDENTITY_UPPER, grid=GRID)
        assert report.ok and report.min_margin > 0

    def test_errata_violations(self):
        report = sweep(BoundId.TWO_OVER_PI_LOWER_ERRATA, grid=GRID)
        assert not report.ok
        assert len(report.violations) > 0
        assert report.min_margin <= 0

    def test_violations_iff_nonpositive_margin(self):
        clean = sweep(BoundId.CUBIC_LOWER, grid=GRID)
        dirty = sweep(BoundId.TWO_OVER_PI_LOWER_ERRATA, grid=GRID)
        assert (not clean.violations) == (clean.min_margin > 0)
        assert (not dirty.violations) == (dirty.min_margin > 0)

    def test_side_must_match_catalog(self):
        with pytest.raises(ParamError):
            sweep(BoundId.SHAFER_LOWER, side="upper", grid=GRID)
        report = sweep(BoundId.SHAFER_LOWER, side="lower", grid=GRID)
        assert report.side == "lower"

    def test_param_validation_propagates(self):
        with pytest.raises(ParamError):
            sweep(BoundId.FAMILY_LOWER, a=0.7, grid=GRID)
        with pytest.raises(ParamError):
            sweep(BoundId.FAMILY_LOWER, grid=GRID)  # missing a

    def test_margin_convention(self):
        report = sweep(BoundId.FAMILY_UPPER, a=0.25, grid=GRID)
        for x, bound, oracle, margin in report.rows[:: len(report.rows) // 7]:
            raw = bound - oracle
            expected = raw if x <= 1 else raw / oracle
            # the float recomputation cancels ~8 digits near pi/2, so this
            # checks the abs/rel convention, not the margin's full precision
            assert margin == pytest.approx(expected, rel=1e-5, abs=1e-20)

    def test_csv_rows(self):
        report = sweep(BoundId.RATIO_LOWER, grid=GridSpec(0.1, 10, 16, "log"))
        buffer = io.StringIO()
        report.write_csv(buffer)
        lines = buffer.getvalue().strip().splitlines()
        assert lines[0] == "x,bound,oracle,margin"
        assert len(lines) == 17

    def test_json_round_trip(self):
        report = sweep(BoundId.LOG_LOWER, grid=GridSpec(0.1, 10, 16, "log"))
        payload = report.to_json_dict()
        assert json.loads(json.dumps(payload)) == payload
        assert payload["ok"] is True
        assert payload["trusted"] is True


class TestDominance:
    def test_reflexive_is_all_equal(self):
        report = dominance_report(BoundId.SHAFER_LOWER, BoundId.SHAFER_LOWER, grid=GRID)
        assert report.equal == GRID.points
        assert report.a_tighter == report.b_tighter == 0
        assert report.crossovers == []
        assert [r.verdict for r in report.regions] == ["equal"]

    def test_two_over_pi_upper_beats_half_angle_everywhere(self):
        report = dominance_report(
            BoundId.TWO_OVER_PI_UPPER, BoundId.HALF_ANGLE_UPPER, grid=GRID)
        assert report.side == "upper"
        assert report.a_strictly_tighter_everywhere
        # near zero the gap (~x^3 * 0.055) sits inside the relative tie band,
        # so the labeled counts are allowed to contain "equal" points
        assert report.b_tighter == 0

    def test_two_over_pi_upper_beats_other_uppers_everywhere(self):
        for rival in (BoundId.IDENTITY_UPPER, BoundId.LOG_UPPER):
            report = dominance_report(BoundId.TWO_OVER_PI_UPPER, rival, grid=GRID)
            assert report.a_strictly_tighter_everywhere, rival

    def test_corrected_vs_shafer_single_crossover(self):
        report = dominance_report(
            BoundId.TWO_OVER_PI_LOWER, BoundId.SHAFER_LOWER, grid=GRID)
        assert len(report.crossovers) == 1
        # closed form: both lowers meet where 1.5 (2/pi + u) = (pi/2)(1/2 + u)
        u = (math.pi / 4 - 3 / math.pi) / (1.5 - math.pi / 2)
        assert report.crossovers[0] == pytest.approx(math.sqrt(u * u - 1), abs=1e-9)
        verdicts = [r.verdict for r in report.regions]
        assert verdicts == ["b", "a"]  # Shafer tighter near 0, corrected after

    def test_sides_must_agree(self):
        with pytest.raises(ParamError):
            dominance_report(BoundId.SHAFER_LOWER, BoundId.IDENTITY_UPPER, grid=GRID)

    def test_json_round_trip(self):
        report = dominance_report(
            BoundId.FAMILY_LOWER, BoundId.SHAFER_LOWER, a_a=0.25,
            grid=GridSpec(0.01, 100, 64, "log"))
        payload = report.to_json_dict()
        assert json.loads(json.dumps(payload)) == payload


class TestFamilySweepMatrix:
    @pytest.mark.parametrize("a", [0.0, 0.25, 0.5])
    def test_family_regime(self, a):
        for bound in (BoundId.FAMILY_LOWER, BoundId.FAMILY_UPPER):
            report = sweep(bound, a=a, grid=GRID)
            assert report.ok, (bound, a, report.min_margin)

    @pytest.mark.parametrize("a", [2 / math.pi, 1.0, 2.0])
    def test_reversed_regime(self, a):
        for bound in (BoundId.REVERSED_LOWER, BoundId.REVERSED_UPPER):
            report = sweep(bound, a=a, grid=GRID)
            assert report.ok, (bound, a, report.min_margin)

    @pytest.mark.parametrize("a", [0.55, 0.6])
    def test_mid_regime(self, a):
        for bound in (BoundId.MID_REGIME_LOWER, BoundId.MID_REGIME_UPPER):
            report = sweep(bound, a=a, grid=GRID)
            assert report.ok, (bound, a, report.min_margin)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from thetalab.bundles import BundleSymbol, chi
from thetalab.lefschetz import (
    FixedPointDatum,
    Infeasible,
    LefschetzScenario,
    hom_ee_scenario,
    hom_ow_scenario,
    lefschetz_number,
    split_eigendims,
    sym2_possibilities,
    sym2_rejected_scenario,
    sym2_scenario,
)


def scenario(traces, h0=0, h1=6, h0_plus=0):
    points = tuple(FixedPointDatum(Fraction(t)) for t in traces)
    return LefschetzScenario(points, h0, h1, h0_plus)


class TestLefschetzNumber:
    def test_five_ones_and_a_three(self):
        assert lefschetz_number(scenario([1, 1, 1, 1, 1, 3])) == 4

    def test_five_threes_and_a_one(self):
        assert lefschetz_number(scenario([3, 3, 3, 3, 3, 1])) == 8

    def test_empty_sum(self):
        assert lefschetz_number(scenario([])) == 0

    def test_negating_traces_negates_number(self):
        s = scenario([1, 1, 1, 1, 1, 3])
        negated = scenario([-1, -1, -1, -1, -1, -3])
        assert lefschetz_number(negated) == -lefschetz_number(s)

    def test_fractional_determinants(self):
        datum = FixedPointDatum(Fraction(1), Fraction(1, 2))
        s = LefschetzScenario((datum,), 0, 0, 0)
        assert lefschetz_number(s) == 2


class TestSplit:
    def test_sym2_table(self):
        assert split_eigendims(scenario([1, 1, 1, 1, 1, 3])) == (1, 5)

    def test_rejected_sym2_table(self):
        with pytest.raises(Infeasible):
            split_eigendims(scenario([3, 3, 3, 3, 3, 1]))

    def test_hom_ee_table(self):
        assert split_eigendims(scenario([0, 0, 0, 0, 0, 4], h1=4)) == (1, 3)

    def test_parity_mismatch(self):
        with pytest.raises(Infeasible):
            split_eigendims(scenario([1], h1=2))

    def test_out_of_range(self):
        with pytest.raises(Infeasible):
            split_eigendims(scenario([20], h1=2))

    def test_components_sum_to_total(self):
        plus, minus = split_eigendims(scenario([0, 0, 0, 0, 0, 4], h1=4))
        assert plus + minus == 4
        assert plus >= 0 and minus >= 0


class TestScenarios:
    def test_sym2_scenario_split(self):
        assert split_eigendims(sym2_scenario()) == (1, 5)

    def test_sym2_h1_from_riemann_roch(self):
        sym2 = BundleSymbol(2, -1).sym2()
        assert sym2 == BundleSymbol(3, -3)
        assert sym2_scenario().h1_total == -chi(sym2) == 6

    def test_sym2_rejected_raises(self):
        with pytest.raises(Infeasible):
            split_eigendims(sym2_rejected_scenario())

    def test_sym2_tables_are_the_two_candidates(self):
        tables = {
            tuple(p.trace for p in c.fixed_points) for c in sym2_possibilities()
        }
        assert tables == {(1, 1, 1, 1, 1, 3), (3, 3, 3, 3, 3, 1)}

    def test_rejected_is_the_other_candidate(self):
        assert sym2_rejected_scenario() != sym2_scenario()
        assert sym2_rejected_scenario() in sym2_possibilities()

    def test_hom_ee(self):
        s = hom_ee_scenario()
        assert lefschetz_number(s) == 2
        assert s.h1_total == -chi(BundleSymbol(2, -1).hom(BundleSymbol(2, -1))) == 4
        assert split_eigendims(s) == (1, 3)

    def test_hom_ow(self):
        s = hom_ow_scenario()
        assert lefschetz_number(s) == 1
        assert s.h0_plus == 1
        assert s.h1_total == 2
        assert split_eigendims(s) == (1, 1)


class TestValidation:
    def test_zero_determinant_rejected(self):
        with pytest.raises(ValueError):
            FixedPointDatum(Fraction(1), Fraction(0))

    def test_h0_plus_bounded(self):
        with pytest.raises(ValueError):
            LefschetzScenario((), 1, 0, 2)

    def test_negative_dimensions_rejected(self):
        with pytest.raises(ValueError):
            LefschetzScenario((), 0, -1, 0)


@st.composite
def scenarios(draw):
    traces = draw(st.lists(st.integers(-6, 6), min_size=0, max_size=8))
    h0 = draw(st.integers(0, 5))
    h0_plus = draw(st.integers(0, h0))
    h1 = draw(st.integers(0, 8))
    return scenario(traces, h0=h0, h1=h1, h0_plus=h0_plus)


class TestFeasibilityParity:
    @settings(max_examples=1000)
    @given(s=scenarios())
    def test_split_exists_iff_parity_and_range(self, s):
        number = lefschetz_number(s)
        implied = s.h1_total + (2 * s.h0_plus - s.h0_total) - number
        feasible = (
            implied.denominator == 1
            and implied.numerator % 2 == 0
            and 0 <= implied.numerator // 2 <= s.h1_total
        )
        if feasible:
            plus, minus = split_eigendims(s)
            assert plus + minus == s.h1_total
            assert (2 * s.h0_plus - s.h0_total) - (plus - minus) == number
        else:
            with pytest.raises(Infeasible):
                split_eigendims(s)

    @settings(max_examples=200)
    @given(s=scenarios())
    def test_trace_negation_linearity(self, s):
        flipped = LefschetzScenario(
            tuple(FixedPointDatum(-p.trace, p.jacobian_det) for p in s.fixed_points),
            s.h0_total, s.h1_total, s.h0_plus,
        )
        assert lefschetz_number(flipped) == -lefschetz_number(s)

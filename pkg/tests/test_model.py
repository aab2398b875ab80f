from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moilfp.errors import (
    DimensionMismatch,
    EmptyDomain,
    LengthMismatch,
    NonIntegralConstraintData,
    NonpositiveDenominator,
    UnboundedDomain,
    ZeroDenominator,
)
from moilfp.model import (
    FractionalObjective,
    Instance,
    Rational,
    dominates,
    eval_criteria,
    eval_fractional,
    fmt,
    fmt4,
    rational,
    validate_instance,
)

ints = st.integers(-10 ** 6, 10 ** 6)
nonzero = ints.filter(bool)
rationals = st.builds(lambda p, q: Rational(p, q), ints, nonzero)


def q(a, b=1):
    return Rational(a, b)


def box_instance(A, b, criteria, master, relations=None):
    return Instance(A, b, criteria, master, relations)


class TestRational:
    @given(rationals, rationals.filter(bool))
    def test_division_round_trip(self, a, b):
        assert (a / b) * b == a

    @given(rationals)
    def test_lowest_terms(self, a):
        f = Fraction(int(a.numerator), int(a.denominator))
        assert (a.numerator, a.denominator) == (f.numerator, f.denominator)
        assert a.denominator > 0

    def test_zero_is_zero_over_one(self):
        z = Rational(0, 5)
        assert (z.numerator, z.denominator) == (0, 1)

    @given(rationals, rationals, rationals)
    def test_total_order(self, a, b, c):
        assert (a <= b) or (b <= a)
        if a <= b and b <= c:
            assert a <= c

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Rational(1) / Rational(0)

    def test_parse_text(self):
        assert rational("22/7") == Fraction(22, 7)
        assert rational(" -3 ") == -3
        with pytest.raises(ZeroDenominator):
            rational("1/0")
        with pytest.raises(TypeError):
            rational(0.5)

    def test_formatting(self):
        assert fmt(q(2126, 355)) == "2126/355"
        assert fmt(q(-4)) == "-4"
        assert fmt4(q(2126, 355)) == "5.9887"
        assert fmt4(q(290, 49)) == "5.9184"


class TestEvaluation:
    def test_psi_at_node1_point(self, example):
        v = eval_fractional(example.master, (0, 0, 3, 0, 0, 0))
        assert v == q(290, 49)
        assert fmt4(v) == "5.9184"

    def test_psi_at_reference_incumbent(self, example):
        v = eval_fractional(example.master, (0, 1, 0, 12, 0, 0))
        assert v == q(724, 617)
        assert fmt4(v) == "1.1734"

    def test_psi_at_origin(self, example):
        assert eval_fractional(example.master, (0,) * 6) == q(2, 13)

    def test_criteria_at_reference_incumbent(self, example):
        z = eval_criteria(example, (0, 1, 0, 12, 0, 0))
        assert z == (q(1286, 876), q(604, 421))
        assert tuple(fmt4(v) for v in z) == ("1.4680", "1.4347")

    def test_criteria_at_node1_point(self, example):
        assert eval_criteria(example, (0, 0, 3, 0, 0, 0)) == (q(138, 224), q(211, 171))

    def test_single_criterion(self):
        c = FractionalObjective([1, 2], 3, [1, 1], 1)
        inst = box_instance([[1, 1]], [4], [c], c)
        assert eval_criteria(inst, (1, 1)) == (eval_fractional(c, (1, 1)),)

    def test_zero_denominator(self):
        obj = FractionalObjective([1], 0, [-1], 1)
        with pytest.raises(ZeroDenominator):
            eval_fractional(obj, (1,))

    def test_length_mismatch(self, example):
        with pytest.raises(LengthMismatch):
            eval_fractional(example.master, (0, 0))

    @given(st.lists(st.integers(0, 5), min_size=6, max_size=6))
    def test_criteria_consistent_with_fractional(self, x):
        from moilfp import example_instance

        inst = example_instance()
        z = eval_criteria(inst, x)
        assert z == tuple(eval_fractional(c, x) for c in inst.criteria)


class TestDominance:
    def test_reference_dominance(self, example):
        a = eval_criteria(example, (0, 1, 0, 12, 0, 0))
        b = eval_criteria(example, (0, 0, 3, 0, 0, 0))
        assert dominates(a, b)

    def test_irreflexive(self):
        assert not dominates((q(1), q(2)), (q(1), q(2)))

    def test_incomparable(self):
        assert not dominates((2, 1), (1, 2))
        assert not dominates((1, 2), (2, 1))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            dominates((1, 2), (1, 2, 3))

    @given(st.lists(st.tuples(ints, ints, ints), min_size=3, max_size=3))
    def test_strict_partial_order(self, vs):
        a, b, c = vs
        assert not (dominates(a, b) and dominates(b, a))
        assert not dominates(a, a)
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)


class TestInstance:
    def test_dimension_checks(self):
        c = FractionalObjective([1, 1], 0, [1, 1], 1)
        with pytest.raises(DimensionMismatch):
            Instance([[1, 1, 1]], [3], [c], c)
        with pytest.raises(DimensionMismatch):
            Instance([[1, 1]], [3, 4], [c], c)
        with pytest.raises(DimensionMismatch):
            Instance([[1, 1]], [3], [], c)
        with pytest.raises(DimensionMismatch):
            Instance([[1, 1]], [3], [c], c, ["lt"])

    def test_standard_rows_normalise_relations(self):
        c = FractionalObjective([1, 1], 0, [1, 1], 1)
        inst = Instance([[1, 2], [3, 4], [5, 6]], [7, 8, 9], [c], c, ["le", "ge", "eq"])
        assert inst.standard_rows() == (
            ((1, 2), 7), ((-3, -4), -8), ((5, 6), 9), ((-5, -6), -9),
        )

    def test_feasibility_predicate(self, example):
        assert example.is_feasible((0, 1, 0, 12, 0, 0))
        assert not example.is_feasible((0, 0, 4, 0, 0, 0))
        assert not example.is_feasible((-1, 0, 0, 0, 0, 0))


class TestValidation:
    def test_example_is_valid(self, example):
        rep = validate_instance(example)
        assert rep.sum_bound == q(97, 7)
        assert all(v > 0 for v in rep.min_denominators)

    def test_unbounded(self):
        c = FractionalObjective([1], 0, [1], 1)
        inst = Instance([[-1]], [0], [c], c)
        with pytest.raises(UnboundedDomain):
            validate_instance(inst)

    def test_empty(self):
        c = FractionalObjective([1], 0, [1], 1)
        inst = Instance([[1]], [-1], [c], c)
        with pytest.raises(EmptyDomain):
            validate_instance(inst)

    def test_nonpositive_denominator(self):
        good = FractionalObjective([1], 0, [1], 1)
        bad = FractionalObjective([1], 0, [-1], 1)
        inst = Instance([[1]], [2], [good], bad)
        with pytest.raises(NonpositiveDenominator) as info:
            validate_instance(inst)
        assert info.value.index is None
        inst = Instance([[1]], [2], [bad, good], good)
        with pytest.raises(NonpositiveDenominator) as info:
            validate_instance(inst)
        assert info.value.index == 0

    def test_non_integral_data(self):
        c = FractionalObjective([1], 0, [1], 1)
        inst = Instance([[q(1, 2)]], [2], [c], c)
        with pytest.raises(NonIntegralConstraintData):
            validate_instance(inst)

import itertools

import pytest

from moilfp import oracle
from moilfp.errors import TooLarge, UnboundedDomain
from moilfp.model import FractionalObjective, Instance, Rational, dominates, eval_criteria

EXAMPLE_EFFICIENT = [
    (0, 3, 0, 0, 0, 0), (1, 2, 0, 0, 0, 0), (2, 2, 0, 0, 0, 0), (3, 2, 0, 0, 0, 0),
    (4, 0, 0, 0, 0, 0), (4, 0, 0, 0, 0, 1), (4, 0, 0, 0, 0, 2), (4, 0, 0, 1, 0, 0),
    (4, 0, 0, 1, 0, 1), (4, 1, 0, 0, 0, 0), (4, 2, 0, 0, 0, 0),
]


def test_example_truth(example):
    truth = oracle.enumerate(example)
    assert truth.box == (4, 3, 3, 13, 2, 2)
    assert len(truth.feasible) == 408
    assert truth.efficient == EXAMPLE_EFFICIENT
    assert truth.best == ((4, 0, 0, 0, 0, 0), Rational(266, 165))


def test_reference_points_are_not_efficient(example):
    truth = oracle.enumerate(example)
    for x in [(0, 1, 0, 12, 0, 0), (4, 1, 0, 0, 0, 1), (4, 0, 0, 2, 0, 0)]:
        assert x in truth.feasible and not truth.is_efficient(x)


def test_efficient_set_invariants(example):
    truth = oracle.enumerate(example)
    vecs = [eval_criteria(example, x) for x in truth.feasible]
    for x in truth.efficient:
        z = eval_criteria(example, x)
        assert not any(dominates(v, z) for v in vecs)
    for x in truth.feasible:
        if not truth.is_efficient(x):
            z = eval_criteria(example, x)
            assert any(dominates(v, z) for v in vecs)
    again = oracle.efficient_subset(truth.efficient, [eval_criteria(example, x) for x in truth.efficient])
    assert len(again) == len(truth.efficient)


def test_feasible_scan_matches_plain_loop(example):
    truth = oracle.enumerate(example)
    plain = [x for x in itertools.product(*(range(u + 1) for u in truth.box)) if example.is_feasible(x)]
    assert sorted(plain) == sorted(truth.feasible)


def test_singleton_domain():
    c = FractionalObjective([1, 2], 3, [1, 1], 4)
    inst = Instance([[1, 1]], [0], [c, c], c)
    truth = oracle.enumerate(inst)
    assert truth.feasible == truth.efficient == [(0, 0)]
    assert truth.best == ((0, 0), Rational(3, 4))


def test_single_criterion():
    z = FractionalObjective([1, 1], 0, [0, 0], 1)
    psi = FractionalObjective([1, 0], 0, [0, 0], 1)
    inst = Instance([[1, 1]], [3], [z], psi)
    truth = oracle.enumerate(inst)
    assert truth.efficient == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert truth.best == ((3, 0), 3)


def test_lexicographic_tie_break():
    z1 = FractionalObjective([1, 0], 0, [0, 0], 1)
    z2 = FractionalObjective([0, 1], 0, [0, 0], 1)
    psi = FractionalObjective([0, 0], 1, [0, 0], 1)
    inst = Instance([[1, 1]], [2], [z1, z2], psi)
    truth = oracle.enumerate(inst)
    assert truth.best[0] == (0, 2)


def test_cap(example):
    with pytest.raises(TooLarge):
        oracle.enumerate(example, cap=1)


def test_unbounded():
    c = FractionalObjective([1], 0, [0], 1)
    with pytest.raises(UnboundedDomain):
        oracle.enumerate(Instance([[-1]], [0], [c, c], c))


def test_empty_relaxation():
    c = FractionalObjective([1], 0, [0], 1)
    truth = oracle.enumerate(Instance([[1]], [-1], [c, c], c))
    assert truth.feasible == [] and truth.best is None


def test_report(example):
    text = oracle.report(example, oracle.enumerate(example))
    assert "feasible 408" in text and "efficient 11" in text
    assert text.rstrip().endswith("best (4, 0, 0, 0, 0, 0) psi=266/165 (1.6121)")

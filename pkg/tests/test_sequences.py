import random
from fractions import Fraction

import pytest

from dlaplace.exact import PHI, PSI, QuadExt
from dlaplace.sequences import (ClosedFormSequence, Term, convolve, delta,
                                equal_prefix, fibonacci_normal,
                                inverse_transform, partial_sums)
from dlaplace.transforms import (TransformExpr, convolve as xf_convolve,
                                 geometric, n_power)


def test_term_normalization_combines_and_drops():
    seq = ClosedFormSequence([(1, 2, 1), (2, 2, 1), (0, 3, 1)])
    assert seq.terms == (Term(QuadExt(3), QuadExt(2), 1),)
    assert ClosedFormSequence([(1, 2, 1), (-1, 2, 1)]).is_zero


def test_zero_root_folds_to_spike():
    seq = ClosedFormSequence([(5, 0, 3)])
    assert seq.terms == ()
    assert seq.deltas == {3: QuadExt(5)}
    assert [seq(n) for n in (1, 2, 3, 4)] == [0, 0, 5, 0]


def test_eval_simple_cases():
    # 1/(t-1)^2 inverts to n - 1
    ramp = ClosedFormSequence([(1, 1, 2)])
    assert [ramp(n) for n in (1, 2, 3, 10)] == [0, 1, 2, 9]
    geo = ClosedFormSequence([(1, Fraction(1, 2), 1)])
    assert geo(4) == Fraction(1, 8)
    # binomial weight vanishes below the multiplicity: no negative powers
    heavy = ClosedFormSequence([(1, 2, 3)])
    assert heavy(1) == 0 and heavy(2) == 0
    assert heavy(3) == 1 and heavy(4) == 3 * 2


def test_eval_rejects_nonpositive_index():
    with pytest.raises(ValueError):
        ClosedFormSequence([(1, 1, 1)])(0)


def test_add_and_scale():
    a = ClosedFormSequence([(1, 2, 1)])
    b = ClosedFormSequence([(1, 2, 1), (1, 1, 1)], deltas={1: 1})
    combined = a + b.scale(2)
    assert combined(3) == a(3) + 2 * b(3)
    assert combined.deltas == {1: QuadExt(2)}


def test_delta_and_partial_sums_are_inverse_ish():
    fib = inverse_transform(TransformExpr.from_ratfunc((0, 1), (-1, -1, 1)))
    diffs = delta(fib)
    sums = partial_sums(diffs)
    for n in range(1, 51):
        assert sums(n) == fib(n) - fib(1)


def test_delta_of_squares():
    square = inverse_transform(n_power(2))
    stepped = delta(square)
    for n in range(1, 20):
        assert stepped(n) == 2 * n + 1


def test_convolve_oracles():
    n_seq = inverse_transform(n_power(1))
    one = inverse_transform(geometric(1))
    for n in range(1, 30):
        assert convolve(n_seq, one, n) == Fraction(n * n - n, 2)
        assert convolve(n_seq, n_seq, n) == Fraction(n ** 3 - n, 6)
    assert convolve(one, one, 1) == 0   # empty sum at n = 1


def test_equal_prefix_reports_first_mismatch():
    a = ClosedFormSequence([(1, 1, 1)])
    b = ClosedFormSequence([(1, 1, 1)], deltas={4: 1})
    assert equal_prefix(a, b, 3) == (True, None)
    assert equal_prefix(a, b, 10) == (False, 4)


def test_inverse_transform_fibonacci():
    fib = inverse_transform(TransformExpr.from_ratfunc((0, 1), (-1, -1, 1)))
    values = [fib(n) for n in range(1, 10)]
    assert values == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert all(v.is_rational for v in values)
    assert {t.root for t in fib.terms} == {PHI, PSI}


def test_inverse_transform_keeps_deltas():
    expr = TransformExpr.from_ratfunc((1,), (-1, 1), deltas={2: 7})
    seq = inverse_transform(expr)
    assert seq(1) == 1 and seq(2) == 8 and seq(3) == 1


def test_round_trip_randomized():
    # closed form -> forward transform -> partial fractions -> closed form
    rng = random.Random(161803)
    roots_pool = [QuadExt(1), QuadExt(2), QuadExt(Fraction(1, 2)),
                  QuadExt(-1), PHI, PSI]
    cases = 0
    while cases < 100:
        chosen = rng.sample(roots_pool, rng.randint(1, 3))
        terms = [(Fraction(rng.randint(-6, 6), rng.randint(1, 3)), r,
                  rng.randint(1, 3)) for r in chosen]
        deltas = {}
        if rng.random() < 0.3:
            deltas[rng.randint(1, 4)] = Fraction(rng.randint(-5, 5))
        seq = ClosedFormSequence(terms, deltas)
        if seq.is_zero:
            continue
        back = inverse_transform(seq.transform())
        assert back == seq
        cases += 1


def test_forward_transform_matches_rule_assembly():
    seq = ClosedFormSequence([(1, 2, 2)])
    expected = xf_convolve(geometric(2), geometric(2))
    assert seq.transform() == expected


def test_rationality_of_rational_data():
    rng = random.Random(55)
    for _ in range(100):
        seq = ClosedFormSequence([
            (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(1, 3)),
             rng.randint(1, 2)),
        ])
        for n in range(1, 30):
            assert seq(n).is_rational


def test_fibonacci_normal_rendering():
    binet = ClosedFormSequence([
        (QuadExt(Fraction(1, 2), Fraction(1, 10), 5), PHI, 1),
        (QuadExt(Fraction(1, 2), Fraction(-1, 10), 5), PSI, 1),
    ])
    assert fibonacci_normal(binet) == \
        "((1+sqrt(5))^n - (1-sqrt(5))^n)/(2^n*sqrt(5))"
    # anything that is not exactly the golden pair keeps the generic form
    assert fibonacci_normal(ClosedFormSequence([(1, 2, 1)])) is None
    assert fibonacci_normal(ClosedFormSequence([(1, PHI, 1)])) is None


def test_str_rendering():
    assert str(ClosedFormSequence([(1, 1, 1)])) == "1"
    assert str(ClosedFormSequence([(1, 1, 2)])) == "(n-1)"
    assert str(ClosedFormSequence([(2, 3, 1)])) == "2*3^(n-1)"
    assert str(ClosedFormSequence([(1, Fraction(1, 2), 1)])) == \
        "(1/2)^(n-1)"
    assert str(ClosedFormSequence([(-1, 2, 1), (1, 1, 1)])) == \
        "1 - 2^(n-1)"
    assert str(ClosedFormSequence([], {2: 3})) == "3*delta(n,2)"
    assert str(ClosedFormSequence()) == "0"

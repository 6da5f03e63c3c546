from fractions import Fraction

import pytest

from amalgrowth.spectral import (
    Recurrence,
    WeightedAlphabet,
    count_avoiding,
    descartes_sign_changes,
    dominant_root,
    fit_recurrence,
    largest_positive_root,
    lpv_bound,
    positive_root_from_lengths,
    unique_positive_root,
)

GOLDEN = (1 + 5 ** 0.5) / 2


def test_unique_positive_root_golden():
    enc = unique_positive_root([-1, -1, 1])  # z^2 - z - 1
    assert enc.unique_positive
    assert abs(enc.mid - GOLDEN) < 1e-9
    assert enc.lo < Fraction(GOLDEN).limit_denominator(10**15) < enc.hi


def test_unique_positive_root_exact_hit():
    enc = unique_positive_root([-4, 0, 1])  # z^2 - 4
    assert enc.contains(Fraction(2))
    assert abs(enc.mid - 2.0) < 1e-9


def test_positive_root_from_lengths():
    # sum x^(-l) = 1; lengths (1, 1) give x = 2 exactly
    enc = positive_root_from_lengths([1, 1])
    assert abs(enc.mid - 2.0) < 1e-9
    # lengths (2, 3) give the plastic number, root of z^3 - z - 1
    enc = positive_root_from_lengths([2, 3])
    assert abs(enc.mid ** 3 - enc.mid - 1) < 1e-6


def test_largest_positive_root_picks_largest():
    # (z - 1)(z - 3) = z^2 - 4z + 3
    enc = largest_positive_root([3, -4, 1])
    assert abs(enc.mid - 3.0) < 1e-9
    assert largest_positive_root([1, 0, 1]) is None  # z^2 + 1


def test_descartes():
    assert descartes_sign_changes([-1, -1, 1]) == 1
    assert descartes_sign_changes([1, 1, 1]) == 0


def test_recurrence_extend_fibonacci():
    rec = Recurrence(order=2,
                     coefficients=(Fraction(1), Fraction(1)),
                     initial=(1, 1), guard=0)
    seq = rec.extend(10)
    assert seq[:7] == [1, 1, 2, 3, 5, 8, 13]
    assert list(rec.char_poly()) == [Fraction(-1), Fraction(-1), Fraction(1)]


def test_fit_recurrence_recovers_fibonacci():
    fib = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]
    rec = fit_recurrence(fib, guard=4)
    assert rec is not None
    assert rec.order == 2
    assert rec.coefficients == (Fraction(1), Fraction(1))
    enc = dominant_root(rec)
    assert abs(enc.mid - GOLDEN) < 1e-9


def test_fit_recurrence_rejects_random():
    assert fit_recurrence([1, 5, 2, 9, 3, 11, 4, 17, 6, 23, 8, 29],
                          guard=3) is None


def test_fit_requires_guard_terms():
    # an order-5 "fit" always exists on 10 terms; the guard must block it
    assert fit_recurrence([1, 2, 4, 9, 17, 40, 79, 163, 331, 669],
                          guard=3) is None


def test_count_avoiding_unrestricted():
    alpha = WeightedAlphabet(symbols=(("a", 1), ("b", 1)), forbidden=())
    counts = count_avoiding(alpha, 8)
    assert counts == [1, 2, 4, 8, 16, 32, 64, 128, 256]


def test_count_avoiding_no_double_letter():
    alpha = WeightedAlphabet(symbols=(("a", 1), ("b", 1)),
                             forbidden=(("a", "a"),))
    counts = count_avoiding(alpha, 8)
    # avoiding "aa" over {a,b}: Fibonacci shift
    assert counts == [1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_count_avoiding_weighted():
    # symbols of weighted lengths 1 and 2, no constraints:
    # W(n) = W(n-1) + W(n-2)
    alpha = WeightedAlphabet(symbols=(("x", 1), ("y", 2)), forbidden=())
    counts = count_avoiding(alpha, 10)
    for n in range(2, 11):
        assert counts[n] == counts[n - 1] + counts[n - 2]


def test_lpv_bound_values():
    assert lpv_bound(2, 2) == 1
    assert lpv_bound(2, 3) == Fraction(4, 3)
    assert lpv_bound(2, 7) == Fraction(12, 7)
    assert lpv_bound(2, 7) > Fraction(5, 3)
    assert lpv_bound(2, 2, 1, 0) == 3


def test_enclosure_width_request():
    enc = unique_positive_root([-1, -1, 1], width=Fraction(1, 10**15))
    assert enc.width <= Fraction(1, 10**15) or enc.degenerate

import pytest

from polyawalk import (
    binomial_convolve,
    brute_force_first_return_count,
    brute_force_loop_count,
    central_binomial,
    indecomposable_count,
    indecomposable_sequence,
    loop_count,
    loop_count_1d,
    loop_sequence,
)
from polyawalk.exceptions import DomainError, EnumerationTooLarge


@pytest.mark.parametrize("k,expected", [(0, 1), (1, 2), (2, 6), (5, 252)])
def test_central_binomial(k, expected):
    assert central_binomial(k) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 0), (3, 0), (2, 2), (4, 6), (6, 20)])
def test_loop_count_1d(n, expected):
    assert loop_count_1d(n) == expected


@pytest.mark.parametrize(
    "d,n,expected",
    [
        (1, 4, 6),
        (2, 2, 4),
        (2, 4, 36),
        (2, 6, 400),
        (3, 2, 6),
        (3, 4, 90),
        (5, 0, 1),
    ],
)
def test_loop_count_known_values(d, n, expected):
    assert loop_count(d, n) == expected


@pytest.mark.parametrize(
    "d,n,expected",
    [(1, 2, 2), (1, 4, 2), (1, 6, 4), (1, 8, 10), (2, 2, 4), (2, 4, 20)],
)
def test_indecomposable_known_values(d, n, expected):
    assert indecomposable_count(d, n) == expected


@pytest.mark.parametrize(
    "d,n,expected", [(1, 2, 2), (2, 2, 4), (3, 4, 90)]
)
def test_brute_force_loop_values(d, n, expected):
    assert brute_force_loop_count(d, n) == expected


@pytest.mark.parametrize("d,n,expected", [(1, 2, 2), (1, 4, 2), (2, 2, 4)])
def test_brute_force_first_return_values(d, n, expected):
    assert brute_force_first_return_count(d, n) == expected


@pytest.mark.parametrize("d", [1, 2, 3])
def test_convolution_matches_enumeration(d):
    # the convolution route must agree with exhaustive enumeration
    for n in range(0, 7):
        assert loop_count(d, n) == brute_force_loop_count(d, n)
    for n in range(1, 7):
        assert indecomposable_count(d, n) == brute_force_first_return_count(d, n)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_odd_lengths_vanish(d):
    for m in range(5):
        assert loop_count(d, 2 * m + 1) == 0


def test_monotone_in_dimension():
    for d in range(1, 5):
        for n in range(2, 12, 2):
            assert loop_count(d + 1, n) >= loop_count(d, n)


def test_indecomposable_bounded_by_loops():
    for d in (1, 2, 3):
        for n in range(1, 12):
            assert 0 <= indecomposable_count(d, n) <= loop_count(d, n)


def test_convolution_bracketing_is_associative():
    # building Z^3 as (Z^2)+Z^1 or Z^1+(Z^2) gives the same counts
    n_max = 10
    row1 = [loop_count_1d(n) for n in range(n_max + 1)]
    row2 = binomial_convolve(row1, row1)
    left = binomial_convolve(row2, row1)
    right = binomial_convolve(row1, row2)
    assert left == right == loop_sequence(3, n_max)


def test_sequences_match_pointwise():
    assert loop_sequence(2, 6) == [loop_count(2, n) for n in range(7)]
    seq = indecomposable_sequence(2, 6)
    assert seq[0] == 0
    assert seq[1:] == [indecomposable_count(2, n) for n in range(1, 7)]


def test_counts_exceed_64_bits():
    # d=4, n=40 has far more loops than 2^63; exactness must survive
    value = loop_count(4, 40)
    assert value > 2**63
    assert value == loop_sequence(4, 40)[40]


def test_enumeration_guard():
    with pytest.raises(EnumerationTooLarge):
        brute_force_loop_count(10, 9)
    with pytest.raises(EnumerationTooLarge):
        brute_force_first_return_count(5, 12)


@pytest.mark.parametrize("bad_d", [0, -1, 2.5])
def test_dimension_validation(bad_d):
    with pytest.raises(DomainError):
        loop_count(bad_d, 2)


def test_length_validation():
    with pytest.raises(DomainError):
        loop_count(2, -1)
    with pytest.raises(DomainError):
        indecomposable_count(2, 0)
    with pytest.raises(DomainError):
        central_binomial(-3)

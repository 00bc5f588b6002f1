import pytest
from hypothesis import given, strategies as st

from hecke_bn.afunction import (
    WeightParams,
    a_value,
    a_value_at_padding,
    a_value_closed,
    a_value_symmetric,
    build_symbol,
    is_L_good,
    longest_element_weight,
    min_padding,
)
from hecke_bn.partitions import Partition, dominates_bipartitions, dominates_partitions, enumerate_multipartitions

from conftest import bp

GRID = [(1, 0), (1, 1), (1, 4), (2, 1), (3, 5)]

B3_AVALUES = {
    "3|": (0, 0),
    "21|": (2, 1),
    "111|": (6, 3),
    "2|1": (1, 4),
    "11|1": (3, 5),
    "1|2": (1, 7),
    "|3": (0, 9),
    "1|11": (3, 10),
    "|21": (2, 13),
    "|111": (6, 18),
}


def test_weight_params():
    w = WeightParams(2, 7)
    assert (w.r, w.b_prime) == (3, 1)
    z = WeightParams(0, 3)
    assert z.r is None and z.b_prime is None and not z.divmod_defined
    with pytest.raises(ValueError):
        WeightParams(-1, 0)


def test_build_symbol_examples():
    s = build_symbol(bp("|"), WeightParams(2, 1), 3)
    assert (s.alpha, s.beta) == ((1, 3, 5), (0, 2, 4))
    s = build_symbol(bp("3|1"), WeightParams(2, 1), 3)
    assert (s.alpha, s.beta) == ((1, 3, 11), (0, 2, 6))
    s = build_symbol(bp("1|"), WeightParams(1, 0), 2)
    assert (s.alpha, s.beta) == ((0, 2), (0, 1))


def test_build_symbol_errors():
    with pytest.raises(ValueError):
        build_symbol(bp("1|"), WeightParams(0, 1), 2)
    with pytest.raises(ValueError):
        build_symbol(bp("|11"), WeightParams(1, 0), 1)


def test_symbol_initial_segment():
    w = WeightParams(3, 7)
    for lam in enumerate_multipartitions(4, 2):
        N = min_padding(lam, w) + 2
        s = build_symbol(lam, w, N)
        assert all(x < y for x, y in zip(s.alpha, s.alpha[1:]))
        assert all(x < y for x, y in zip(s.beta, s.beta[1:]))
        for i in range(1, w.r + 1):
            assert s.alpha[i - 1] == w.a * (i - 1) + w.b_prime
        assert s.beta[0] == 0


@pytest.mark.parametrize("label", B3_AVALUES)
def test_b3_a_values(label):
    b0, b4 = B3_AVALUES[label]
    assert a_value(bp(label), WeightParams(1, 0)) == b0
    assert a_value(bp(label), WeightParams(1, 4)) == b4


def test_spot_values():
    assert a_value(bp("2|1"), WeightParams(1, 0)) == 1
    assert a_value(bp("|21"), WeightParams(1, 4)) == 13
    assert a_value_closed(bp("1|2"), WeightParams(1, 4)) == 7
    assert a_value_closed(bp("|111"), WeightParams(1, 4)) == 18
    assert a_value_closed(bp("3|"), WeightParams(1, 4)) == 0


@pytest.mark.parametrize("a,b", GRID + [(0, 3), (0, 0), (2, 0)])
def test_trivial_and_sign(a, b):
    w = WeightParams(a, b)
    for n in range(1, 7):
        assert a_value(((n,), ()), w) == 0
        assert a_value(((), (1,) * n), w) == longest_element_weight(n, w) == n * b + n * (n - 1) * a


@pytest.mark.parametrize("a,b", GRID)
def test_N_stability(a, b):
    w = WeightParams(a, b)
    for n in range(7):
        for lam in enumerate_multipartitions(n, 2):
            N = min_padding(lam, w)
            vals = {a_value_at_padding(lam, w, M) for M in (N, N + 1, N + 5)}
            assert vals == {a_value(lam, w)}


def test_closed_formula_agreement():
    for n in range(1, 7):
        for a in (1, 2, 3):
            for b in range((n - 1) * a + 1, (n - 1) * a + 4):
                w = WeightParams(a, b)
                for lam in enumerate_multipartitions(n, 2):
                    assert a_value_closed(lam, w) == a_value(lam, w)


@pytest.mark.parametrize("b", [0, 1, 5])
def test_a_zero(b):
    w = WeightParams(0, b)
    for n in range(7):
        for lam in enumerate_multipartitions(n, 2):
            assert a_value(lam, w) == b * lam[1].size


def test_b_zero_symmetric_in_components():
    # with no weight on t the two components play the same role
    for a in (1, 2):
        w = WeightParams(a, 0)
        for n in range(6):
            for lam in enumerate_multipartitions(n, 2):
                assert a_value(lam, w) == a_value((lam[1], lam[0]), w)


@given(st.integers(0, 8), st.integers(0, 10))
def test_scaling(a, b):
    # a is homogeneous of degree one in (a, b)
    for lam in enumerate_multipartitions(3, 2):
        assert a_value(lam, WeightParams(2 * a, 2 * b)) == 2 * a_value(lam, WeightParams(a, b))


@pytest.mark.parametrize("a,b", GRID)
def test_componentwise_dominance_implication(a, b):
    w = WeightParams(a, b)
    for n in range(7):
        lams = enumerate_multipartitions(n, 2)
        av = {lam: a_value(lam, w) for lam in lams}
        for x in lams:
            for y in lams:
                if x == y or x[0].size != y[0].size:
                    continue
                if dominates_partitions(x[0], y[0]) and dominates_partitions(x[1], y[1]):
                    assert av[y] < av[x], (x, y)


def test_asymptotic_triangularity():
    for n in range(1, 7):
        lams = enumerate_multipartitions(n, 2)
        for a in (1, 2):
            for b in ((n - 1) * a + 1, (n - 1) * a + 3):
                w = WeightParams(a, b)
                av = {lam: a_value(lam, w) for lam in lams}
                for x in lams:
                    for y in lams:
                        if x != y and dominates_bipartitions(x, y):
                            assert av[y] < av[x], (x, y, a, b)


def test_symmetric_a():
    assert a_value_symmetric((5,), 3) == 0
    assert a_value_symmetric((1, 1, 1, 1), 1) == 6
    assert a_value_symmetric(Partition((3, 1)), 2) == 2


def test_L_good():
    assert is_L_good(2, WeightParams(1, 2), 3) is False
    assert is_L_good(2, WeightParams(1, 4), 3) is True
    assert is_L_good(0, WeightParams(0, 5), 9) is True
    assert is_L_good(5, WeightParams(0, 1), 3) is True
    assert is_L_good(3, WeightParams(0, 1), 3) is False
    assert is_L_good(3, WeightParams(1, 2), 3) is True
    # b/a = 3/2 is not an integer
    assert is_L_good(2, WeightParams(2, 3), 3) is True

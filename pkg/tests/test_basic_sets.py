import math

import pytest

from hecke_bn.afunction import WeightParams
from hecke_bn.basic_sets import (
    BetaStatus,
    Case,
    CharacteristicTwoError,
    NotLGoodError,
    SpecializationParams,
    basic_set,
    equal_parameter_shortcut,
    lambda_set,
    resolve_case,
)
from hecke_bn.decomposition import extract_basic_set, load_b3_matrix
from hecke_bn.afunction import a_value
from hecke_bn.fock import uglov_set
from hecke_bn.partitions import enumerate_multipartitions

from conftest import bp

INF = math.inf
LAMBDA3 = {bp("3|"), bp("21|"), bp("2|1"), bp("1|2")}


def resolve(n, a, b, l, p=0):
    return resolve_case(SpecializationParams.of(n, a, b, l, p))


def test_resolve_examples():
    c = resolve(3, 1, 0, 2)
    assert (c.case, c.e, c.s, c.d_class) == (Case.C, 2, -1, 1)
    assert not c.q_is_one and c.f_n_zero
    c = resolve(3, 1, 4, 2)
    assert (c.case, c.e, c.s) == (Case.C, 2, 3)
    c = resolve(3, 1, 1, 3)
    assert (c.case, c.e, c.f_n_zero) == (Case.A, 3, False)
    c = resolve(3, 2, 1, 2, 3)
    assert (c.case, c.e, c.q_is_one, c.f_n_zero) == (Case.B, 3, True, True)


def test_generic_xi():
    c = resolve(4, 1, 2, INF)
    assert c.case is Case.A and c.e == INF
    assert lambda_set(c) == set(enumerate_multipartitions(4, 2))
    assert resolve(4, 0, 2, INF).case is Case.A


def test_case_c_charge_window():
    for n in range(1, 6):
        for l in (2, 4, 6):
            for a in (1, 2, 3):
                for b in range(8):
                    c = resolve(n, a, b, l)
                    if c.case is Case.C:
                        assert c.s % c.e == c.d_class
                        assert a * c.s < b < a * (c.s + c.e)


def test_characteristic_two():
    with pytest.raises(CharacteristicTwoError):
        resolve(3, 1, 1, 3, 2)  # Q = q in char 2, so f_n = 0
    assert resolve(1, 1, 1, 3, 2).case is Case.A


@pytest.mark.parametrize("kw", [dict(n=0), dict(p=4), dict(p=3, l=6), dict(l=0)])
def test_bad_params(kw):
    args = dict(n=3, a=1, b=0, l=2, p=0) | kw
    with pytest.raises(ValueError):
        SpecializationParams.of(args["n"], args["a"], args["b"], args["l"], args["p"])


def test_lambda_set_examples():
    assert lambda_set(resolve(2, 2, 1, 4)) == {bp("2|"), bp("1|1"), bp("|2")}
    assert lambda_set(resolve(3, 1, 0, 2)) == LAMBDA3
    assert lambda_set(resolve(3, 2, 1, 2)) == {bp("3|"), bp("21|"), bp("111|")}


def test_basic_set_examples():
    r = basic_set(resolve(3, 1, 0, 2))
    assert r.basic_set == {bp("3|"), bp("|3"), bp("1|2"), bp("2|1")}
    assert r.beta is None and r.beta_status is BetaStatus.UNAVAILABLE
    r = basic_set(resolve(3, 1, 4, 2))
    assert r.basic_set == LAMBDA3 and r.beta_status is BetaStatus.IDENTITY
    assert all(k == v for k, v in r.beta.items())
    r = basic_set(resolve(4, 2, 1, 2))
    assert r.basic_set == {bp("4|"), bp("3|1"), bp("2|2"), bp("21|1"), bp("11|11")}
    assert r.beta_status is BetaStatus.EXPLICIT
    assert r.beta[bp("211|")] == bp("21|1")
    r = basic_set(resolve(3, 1, 1, 3))
    assert r.basic_set == r.lambda_set and r.beta_status is BetaStatus.IDENTITY


def test_basic_set_matches_matrix_extraction():
    D = load_b3_matrix()
    for b in (0, 4):
        w = WeightParams(1, b)
        B, _ = extract_basic_set(D, {lam: a_value(lam, w) for lam in D.rows})
        assert basic_set(resolve(3, 1, b, 2)).basic_set == B


def test_not_L_good():
    c = resolve(3, 0, 1, 2, 3)
    assert c.case is Case.B and not c.l_good
    with pytest.raises(NotLGoodError):
        basic_set(c)


def test_large_charge_gives_kleshchev():
    for n in range(1, 6):
        for e in (2, 3):
            l = 2 * e
            for a in (1, 2, 3):
                for b in range(12):
                    try:
                        c = resolve(n, a, b, l)
                    except ValueError:
                        continue
                    if c.case is Case.C and math.gcd(l, a) * e == l and c.s > n - 1:
                        r = basic_set(c)
                        assert r.basic_set == r.lambda_set
                        assert r.beta_status is BetaStatus.IDENTITY


@pytest.mark.parametrize("e", [3, 5])
@pytest.mark.parametrize("r", range(5))
def test_a2_odd_b_charge(e, r):
    c = resolve(e + 1, 2, 2 * r + 1, 2 * e)
    assert c.case is Case.C and c.e == e
    assert (c.s - (r + (1 - e) // 2)) % e == 0


def test_equal_parameter_shortcut():
    assert equal_parameter_shortcut(3, 1, 2) == (0, 0)
    assert equal_parameter_shortcut(3, 0, 4) == (-2, 0)
    assert equal_parameter_shortcut(3, 3, 2) == (2, 0)
    with pytest.raises(ValueError):
        equal_parameter_shortcut(3, 1, 3)
    for n in range(1, 6):
        assert uglov_set(n, (-2, 0), 4) == uglov_set(n, (0, 2), 4)


def test_shortcut_matches_resolved_charge():
    for e in (2, 4, 6):
        for b in range(8):
            n = e
            c = resolve(n, 1, b, e)
            if c.case is Case.C:
                assert (c.s, 0) == equal_parameter_shortcut(n, b, e)


def test_descriptor_json():
    j = resolve(3, 1, 4, 2).to_json()
    assert j["case"] == "C" and j["s"] == 3 and j["e"] == 2
    assert resolve(2, 1, 0, INF).to_json()["e"] == "infinity"


def test_cardinality_small_grid():
    for n in range(1, 5):
        for l in (2, 3, 4, 6):
            for a in (1, 2, 3):
                for b in range(8):
                    c = resolve(n, a, b, l)
                    if c.l_good:
                        r = basic_set(c)
                        assert len(r.basic_set) == len(r.lambda_set)
                        if r.beta is not None:
                            assert set(r.beta) == r.lambda_set
                            assert set(r.beta.values()) == r.basic_set

import random

import pytest

from iwagrowth.errors import NotFinite, PhiDividesF, PrecisionExhausted, ValidationError
from iwagrowth.iwapoly import IwaPoly, WeierstrassData, gcd_with_omega, phi_poly, totient
from iwagrowth.kobayashi import (
    NablaResult,
    TowerOfQuotients,
    elementary_divisor_valuations,
    nabla_asymptotic,
    nabla_closed_form,
    nabla_finite_tower,
    nabla_resultant_oracle,
    nabla_snf_oracle,
)


class TestTower:
    def test_rejects_zero(self):
        with pytest.raises(ValidationError):
            TowerOfQuotients(IwaPoly(3, ()))

    def test_rejects_bad_degree(self):
        with pytest.raises(ValidationError):
            TowerOfQuotients(IwaPoly.const(3, 1), coeff_degree=0)


class TestElementaryDivisors:
    def test_diagonal(self):
        vals = elementary_divisor_valuations([[9, 0], [0, 3]], 3, 8)
        assert sorted(vals) == [1, 2]

    def test_row_operations_invariant(self):
        a = [[9, 0], [9, 3]]
        assert sorted(elementary_divisor_valuations(a, 3, 8)) == [1, 2]

    def test_redundant_generators(self):
        # columns of [3] and [9] generate 3Z: one divisor of valuation 1
        vals = elementary_divisor_valuations([[3], [9]], 3, 8)
        assert vals == [1]

    def test_infinite_cokernel(self):
        with pytest.raises((NotFinite, PrecisionExhausted)):
            elementary_divisor_valuations([[1, 0], [2, 0]], 3, 8)

    def test_precision_exhausted(self):
        with pytest.raises(PrecisionExhausted):
            elementary_divisor_valuations([[81]], 3, 2)


def test_constant_p_all_methods():
    t = TowerOfQuotients(IwaPoly.const(3, 3))
    for n in (1, 2):
        expect = totient(3, n)  # ord_eps(p) = phi(p^n)
        assert nabla_closed_form(t, n).value == expect
        assert nabla_resultant_oracle(t, n).value == expect
        assert nabla_snf_oracle(t, n).value == expect


def test_x_is_the_uniformizer():
    t = TowerOfQuotients(IwaPoly.x(3))
    assert nabla_closed_form(t, 1).value == 1
    # X divides omega_n, so the quotient tower is infinite for the oracles
    with pytest.raises(NotFinite):
        nabla_resultant_oracle(t, 1)
    with pytest.raises(NotFinite):
        nabla_snf_oracle(t, 1)


def test_coeff_degree_scales():
    t = TowerOfQuotients(IwaPoly.const(3, 3), coeff_degree=2)
    assert nabla_closed_form(t, 2).value == 2 * totient(3, 2)
    assert nabla_snf_oracle(t, 2).value == 2 * totient(3, 2)


def test_phi_divisor_raises():
    f = phi_poly(3, 1) * (IwaPoly.x(3) - IwaPoly.const(3, 3))
    t = TowerOfQuotients(f)
    with pytest.raises(PhiDividesF):
        nabla_closed_form(t, 1)
    # closed form still works above the shared level
    assert nabla_closed_form(t, 2).value == 3
    # oracles need full coprimality with omega_n
    with pytest.raises(NotFinite):
        nabla_resultant_oracle(t, 2)
    with pytest.raises(NotFinite):
        nabla_snf_oracle(t, 2)


def test_snf_fixed_precision_can_exhaust():
    t = TowerOfQuotients(IwaPoly.const(3, 81))
    with pytest.raises(PrecisionExhausted):
        nabla_snf_oracle(t, 1, prec=2)
    assert nabla_snf_oracle(t, 1, prec=16).value == 4 * totient(3, 1)


def test_triple_agreement_random():
    rng = random.Random(17)
    p = 3
    done = 0
    while done < 15:
        coeffs = tuple(rng.randint(-p**6, p**6) for _ in range(rng.randint(1, 11)))
        f = IwaPoly(p, coeffs)
        if f.is_zero or gcd_with_omega(f, 4).degree > 0:
            continue
        done += 1
        t = TowerOfQuotients(f)
        for n in (1, 2, 3):
            a = nabla_closed_form(t, n).value
            b = nabla_resultant_oracle(t, n).value
            c = nabla_snf_oracle(t, n).value
            assert a == b == c, (coeffs, n, a, b, c)


def test_asymptotic():
    assert nabla_asymptotic(WeierstrassData(1, 2), 3, 2) == 8
    assert nabla_asymptotic(WeierstrassData(0, 5), 3, 4) == 5
    with pytest.raises(ValidationError):
        nabla_asymptotic(WeierstrassData(0, 0), 3, 0)


def test_asymptotic_matches_closed_form_for_stable_f():
    # f = p * X^2 * unit has mu=1, lambda=2; stable once phi(p^n) > lambda
    f = IwaPoly(3, (0, 0, 3, 3 * 7))
    t = TowerOfQuotients(f)
    for n in (2, 3, 4):
        assert nabla_closed_form(t, n).value == \
            nabla_asymptotic(WeierstrassData(1, 2), 3, n)


def test_finite_tower_differences():
    results = nabla_finite_tower([0, 2, 5, 9])
    assert [r.value for r in results] == [2, 3, 4]
    assert [r.n for r in results] == [1, 2, 3]
    assert all(r.method == "finite_tower" for r in results)


def test_nabla_result_json_round_trip():
    r = NablaResult(3, 12, "closed_form")
    assert NablaResult.from_json(r.to_json()) == r

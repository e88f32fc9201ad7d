from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from iwagrowth.errors import (
    NonUnitLeadingCoefficient,
    PrecisionExhausted,
    ValidationError,
    ZeroPolynomial,
)
from iwagrowth.iwapoly import (
    IwaPoly,
    eval_at_eps,
    gcd_with_omega,
    mu_lambda,
    omega,
    ord_eps,
    phi_poly,
    totient,
)


class TestIwaPoly:
    def test_trimming_and_degree(self):
        f = IwaPoly(3, (1, 2, 0, 0))
        assert f.coeffs == (1, 2) and f.degree == 1
        assert IwaPoly(3, ()).is_zero
        assert IwaPoly(3, (0,)).degree == -1

    def test_modular_reduction(self):
        f = IwaPoly(3, (10, 27), mod_prec=2)
        assert f.coeffs == (1,)

    def test_mixed_primes_rejected(self):
        with pytest.raises(ValidationError):
            IwaPoly(3, (1,)) + IwaPoly(5, (1,))

    def test_arithmetic(self):
        x = IwaPoly.x(3)
        f = (x + IwaPoly.const(3, 1)) * (x - IwaPoly.const(3, 1))
        assert f == IwaPoly(3, (-1, 0, 1))
        assert f.scale(2) == IwaPoly(3, (-2, 0, 2))
        assert f(2) == 3

    def test_divmod_exact(self):
        f = IwaPoly(3, (-1, 0, 1))
        g = IwaPoly(3, (1, 1))
        q, r = divmod(f, g)
        assert q == IwaPoly(3, (-1, 1)) and r.is_zero

    def test_divmod_needs_unit_lead(self):
        f = IwaPoly(3, (1, 1, 1))
        with pytest.raises(NonUnitLeadingCoefficient):
            divmod(f, IwaPoly(3, (1, 3)))
        with pytest.raises(NonUnitLeadingCoefficient):
            divmod(f, IwaPoly(3, (1, 2)))  # unit lead but not +-1, exact path
        q, r = divmod(f, IwaPoly(3, (1, 2), mod_prec=4))
        assert (q * IwaPoly(3, (1, 2)) + r - f).with_modulus(4).is_zero

    def test_with_modulus_cannot_raise(self):
        f = IwaPoly(3, (1,), mod_prec=2)
        with pytest.raises(PrecisionExhausted):
            f.with_modulus(5)
        assert f.with_modulus(1).mod_prec == 1

    def test_json_round_trip(self):
        f = IwaPoly(3, (12, -7, 5), mod_prec=6)
        assert IwaPoly.from_json(f.to_json()) == f


def test_totient():
    assert totient(3, 0) == 1
    assert [totient(3, n) for n in (1, 2, 3)] == [2, 6, 18]
    assert totient(5, 2) == 20


def test_omega_and_phi():
    assert omega(3, 0) == IwaPoly.x(3)
    assert omega(3, 1) == IwaPoly(3, (0, 3, 3, 1))
    phi1 = phi_poly(3, 1)
    assert phi1 == IwaPoly(3, (3, 3, 1))
    # Eisenstein: constant term p, middle coefficients divisible by p, monic
    for p, n in ((3, 2), (5, 1), (3, 3)):
        phi = phi_poly(p, n)
        assert phi.degree == totient(p, n)
        assert phi.coeff(0) == p and phi.coeffs[-1] == 1
        assert all(c % p == 0 for c in phi.coeffs[:-1])
    # telescoping product: X * Phi_1 * ... * Phi_n = omega_n
    acc = omega(3, 0)
    for m in (1, 2, 3):
        acc = acc * phi_poly(3, m)
        assert acc == omega(3, m)


def test_ord_eps_uniformizer():
    # ord(eps_n) = 1 and ord(p) = totient
    for p, n in ((3, 1), (3, 2), (5, 2), (7, 1)):
        assert ord_eps(eval_at_eps(IwaPoly.x(p), n)) == 1
        assert ord_eps(eval_at_eps(IwaPoly.const(p, p), n)) == totient(p, n)


def test_ord_eps_multiplicative():
    f = IwaPoly(3, (3, 1))
    g = IwaPoly(3, (0, 2, 1))
    n = 2
    of = ord_eps(eval_at_eps(f, n))
    og = ord_eps(eval_at_eps(g, n))
    assert ord_eps(eval_at_eps(f * g, n)) == of + og


def test_ord_eps_exact_zero_is_infinite():
    assert ord_eps(eval_at_eps(phi_poly(3, 2), 2)).is_infinite


def test_ord_eps_modular_zero_raises():
    e = eval_at_eps(IwaPoly.const(3, 9, mod_prec=2), 1)
    with pytest.raises(PrecisionExhausted):
        ord_eps(e)


def test_mu_lambda():
    # 9*(X^2 + ...) with a unit coefficient first at X^2
    f = IwaPoly(3, (27, 54, 9, 45))
    w = mu_lambda(f)
    assert (w.mu, w.lam) == (2, 2)
    with pytest.raises(ZeroPolynomial):
        mu_lambda(IwaPoly(3, ()))
    with pytest.raises(PrecisionExhausted):
        mu_lambda(IwaPoly(3, (9,), mod_prec=1))


def test_gcd_with_omega():
    f = phi_poly(3, 1) * IwaPoly(3, (1, 1))
    assert gcd_with_omega(f, 2) == phi_poly(3, 1)
    assert gcd_with_omega(f, 1) == IwaPoly.const(3, 1)
    g = omega(3, 0) * phi_poly(3, 2)
    assert gcd_with_omega(g, 3) == omega(3, 0) * phi_poly(3, 2)
    assert gcd_with_omega(IwaPoly.const(3, 7), 3).degree == 0


small_polys = st.lists(st.integers(min_value=-40, max_value=40), min_size=1, max_size=6)


@settings(max_examples=50, deadline=None)
@given(small_polys, small_polys)
def test_mu_of_product_adds(fc, gc):
    f = IwaPoly(3, tuple(fc))
    g = IwaPoly(3, tuple(gc))
    if f.is_zero or g.is_zero:
        return
    wf, wg, wfg = mu_lambda(f), mu_lambda(g), mu_lambda(f * g)
    assert wfg.mu == wf.mu + wg.mu
    assert wfg.lam == wf.lam + wg.lam


@settings(max_examples=30, deadline=None)
@given(small_polys)
def test_division_by_omega_round_trips(fc):
    f = IwaPoly(3, tuple(fc))
    w = omega(3, 1)
    q, r = divmod(f, w)
    assert q * w + r == f
    assert r.degree < w.degree

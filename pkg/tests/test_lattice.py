import pytest

from iwagrowth.errors import NonUnit, ValidationError
from iwagrowth.iwapoly import IwaPoly, omega
from iwagrowth.lattice import (
    LatticePair,
    cross_identity_check,
    h_u_map,
    in_image,
    witness,
)
from iwagrowth.logmat import LocalCurveData, h_entries
from iwagrowth.padic import PadicNumber, unit_from_int


def const_pair(p, a, b):
    return LatticePair(IwaPoly.const(p, a), IwaPoly.const(p, b))


class TestLatticePair:
    def test_mixed_primes_rejected(self):
        with pytest.raises(ValidationError):
            LatticePair(IwaPoly.const(3, 1), IwaPoly.const(5, 1))

    def test_module_structure(self):
        a = const_pair(3, 1, 2)
        b = const_pair(3, 3, 4)
        s = a + b
        assert s.g1 == IwaPoly.const(3, 4) and s.g2 == IwaPoly.const(3, 6)
        f = IwaPoly.x(3)
        scaled = a.scale(f)
        assert scaled.g1 == IwaPoly(3, (0, 1)) and scaled.g2 == IwaPoly(3, (0, 2))

    def test_json_round_trip(self):
        a = LatticePair(IwaPoly(3, (1, 2)), IwaPoly(3, (0, 5)))
        assert LatticePair.from_json(a.to_json()) == a


class TestInImage:
    def test_membership(self):
        d = LocalCurveData(3, 0)
        assert in_image(const_pair(3, 2, 2), d)  # 2*2 = 2*2
        assert not in_image(const_pair(3, 1, 2), d)  # 2 != 4
        # constant term 0 on both sides always qualifies
        assert in_image(LatticePair(IwaPoly.x(3), IwaPoly.x(3)), d)

    def test_trace_enters_the_condition(self):
        d = LocalCurveData(3, 3)  # (p-1) G1(0) = -G2(0)
        assert in_image(const_pair(3, 1, -2), d)
        assert not in_image(const_pair(3, 1, 2), d)

    def test_modular_membership(self):
        d = LocalCurveData(3, 0)
        pair = const_pair(3, 1, 1 + 2 * 27)  # 2 vs 2 + 4*27
        assert not in_image(pair, d)
        assert in_image(pair, d, n_prec=3)
        with pytest.raises(ValidationError):
            in_image(pair, d, n_prec=0)

    def test_lattice_closed_under_module_operations(self):
        d = LocalCurveData(3, 0)
        a = const_pair(3, 2, 2)
        b = LatticePair(IwaPoly(3, (1, 7)), IwaPoly(3, (1, -4)))
        assert in_image(a, d) and in_image(b, d)
        assert in_image(a + b, d)
        assert in_image(a.scale(IwaPoly(3, (5, 1))), d)


class TestFiniteLevelMap:
    def test_reduces_mod_omega(self):
        d = LocalCurveData(3, 0)
        pair = LatticePair(IwaPoly.const(3, 5), IwaPoly(3, (1, 2, 3, 4)))
        # H_1 = (0, 1): the map is G2 mod omega_1
        assert h_u_map(pair, d, 1, 1) == IwaPoly(3, (1, 2, 3, 4)) % omega(3, 1)

    def test_unit_must_be_unit(self):
        d = LocalCurveData(3, 0)
        pair = const_pair(3, 1, 1)
        with pytest.raises(NonUnit):
            h_u_map(pair, d, 1, PadicNumber.from_int(3, 3))

    def test_witness_hits_omega(self):
        for p, av, nmax in ((3, 0, 4), (3, -3, 4), (5, 0, 2)):
            d = LocalCurveData(p, av)
            for n in range(1, nmax + 1):
                for u in (1, -1, unit_from_int(1 + p, p, 32)):
                    w = witness(d, n, u)
                    assert in_image(w, d)
                    img = h_u_map(w, d, n, u)
                    target = omega(p, n - 1)
                    if img.mod_prec is not None:
                        target = target.with_modulus(img.mod_prec)
                    assert img == target

    def test_linearity(self):
        d = LocalCurveData(3, 3)
        a = LatticePair(IwaPoly(3, (2, 1)), IwaPoly(3, (0, 3)))
        b = LatticePair(IwaPoly(3, (1,)), IwaPoly(3, (4, 4)))
        assert h_u_map(a + b, d, 2, 1) == \
            (h_u_map(a, d, 2, 1) + h_u_map(b, d, 2, 1)) % omega(3, 2)


class TestCrossIdentity:
    def test_holds_on_grid(self):
        for p, av, nmax in ((3, 0, 5), (3, 3, 5), (5, 0, 3)):
            d = LocalCurveData(p, av)
            for n in range(1, nmax + 1):
                assert cross_identity_check(d, n).passed

    def test_negative_control(self):
        d = LocalCurveData(3, 0)
        sharp, _ = h_entries(d, 2)
        rep = cross_identity_check(d, 2, sharp_n=sharp + IwaPoly.const(3, 1))
        assert not rep.passed and rep.failures

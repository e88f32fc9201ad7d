"""Polynomial arithmetic in Lambda = Z_p[[X]] truncated to polynomials.

Provides the cyclotomic family omega_n = (1+X)^(p^n) - 1 and
Phi_n = omega_n / omega_(n-1), evaluation at eps_n = zeta_(p^n) - 1 inside the
totally ramified quotient Z_p[X]/Phi_n, the eps_n-adic valuation there, and
mu/lambda extraction.  Coefficients are exact arbitrary-size integers; a
polynomial may optionally carry a p^N reduction flag, in which case every
operation stays at (the minimum of) the working moduli and precision loss is
reported by raising, never by silent truncation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb

from .errors import (
    NonUnitLeadingCoefficient,
    PrecisionExhausted,
    ValidationError,
    ZeroPolynomial,
)
from .padic import INF, ExtendedRational, int_valuation, is_odd_prime
from .polyres import resultant


@dataclass(frozen=True)
class IwaPoly:
    """Element of Lambda: coeffs[i] holds the coefficient of X^i."""

    prime: int
    coeffs: tuple[int, ...]
    mod_prec: int | None = None

    def __post_init__(self):
        if not is_odd_prime(self.prime):
            raise ValidationError(f"{self.prime} is not an odd prime")
        c = list(self.coeffs)
        if self.mod_prec is not None:
            if self.mod_prec < 1:
                raise ValidationError("mod_prec must be positive")
            pn = self.prime**self.mod_prec
            c = [x % pn for x in c]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # -- basics ------------------------------------------------------------

    @classmethod
    def const(cls, prime: int, value: int, mod_prec: int | None = None) -> "IwaPoly":
        return cls(prime, (value,), mod_prec)

    @classmethod
    def x(cls, prime: int) -> "IwaPoly":
        return cls(prime, (0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def lift(self) -> "IwaPoly":
        """Drop the modulus flag, keeping the canonical coefficient lift."""
        return IwaPoly(self.prime, self.coeffs)

    def with_modulus(self, mod_prec: int) -> "IwaPoly":
        if self.mod_prec is not None and self.mod_prec < mod_prec:
            raise PrecisionExhausted(
                f"cannot raise modulus p^{self.mod_prec} to p^{mod_prec}"
            )
        return IwaPoly(self.prime, self.coeffs, mod_prec)

    # -- ring operations ---------------------------------------------------

    def _join_prec(self, other: "IwaPoly") -> int | None:
        if self.prime != other.prime:
            raise ValidationError("mixed primes")
        if self.mod_prec is None:
            return other.mod_prec
        if other.mod_prec is None:
            return self.mod_prec
        return min(self.mod_prec, other.mod_prec)

    def __add__(self, other: "IwaPoly") -> "IwaPoly":
        prec = self._join_prec(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IwaPoly(
            self.prime,
            tuple(self.coeff(i) + other.coeff(i) for i in range(n)),
            prec,
        )

    def __neg__(self) -> "IwaPoly":
        return IwaPoly(self.prime, tuple(-c for c in self.coeffs), self.mod_prec)

    def __sub__(self, other: "IwaPoly") -> "IwaPoly":
        return self + (-other)

    def __mul__(self, other: "IwaPoly") -> "IwaPoly":
        prec = self._join_prec(other)
        if self.is_zero or other.is_zero:
            return IwaPoly(self.prime, (), prec)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IwaPoly(self.prime, tuple(out), prec)

    def scale(self, k: int) -> "IwaPoly":
        return IwaPoly(self.prime, tuple(k * c for c in self.coeffs), self.mod_prec)

    def __divmod__(self, other: "IwaPoly") -> tuple["IwaPoly", "IwaPoly"]:
        """f = q*g + r with deg r < deg g; exact over Z when inputs exact.

        Requires an invertible leading coefficient: +-1 in the exact case
        (a general p-adic unit has an infinite expansion as an inverse),
        any unit mod p^N in the modular case.
        """
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        prec = self._join_prec(other)
        p = self.prime
        lead = other.coeffs[-1]
        if lead % p == 0:
            raise NonUnitLeadingCoefficient(f"leading coefficient {lead} divisible by {p}")
        if prec is None:
            if lead not in (1, -1):
                raise NonUnitLeadingCoefficient(
                    f"exact division needs leading coefficient +-1, got {lead};"
                    " attach a modulus for a general unit"
                )
            inv = lead
            reduce = lambda x: x  # noqa: E731
        else:
            pn = p**prec
            inv = pow(lead % pn, -1, pn)
            reduce = lambda x: x % pn  # noqa: E731
        r = list(self.coeffs)
        dg = other.degree
        q = [0] * max(len(r) - dg, 1)
        for k in range(len(r) - 1 - dg, -1, -1):
            c = reduce(r[k + dg] * inv)
            q[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    r[k + i] = reduce(r[k + i] - c * b)
        del r[dg:]
        return IwaPoly(p, tuple(q), prec), IwaPoly(p, tuple(r), prec)

    def __floordiv__(self, other: "IwaPoly") -> "IwaPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "IwaPoly") -> "IwaPoly":
        return divmod(self, other)[1]

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "coeffs": [str(c) for c in self.coeffs],
            "mod_prec": self.mod_prec,
        }

    @classmethod
    def from_json(cls, d: dict) -> "IwaPoly":
        return cls(d["p"], tuple(int(c) for c in d["coeffs"]), d.get("mod_prec"))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*X" if c != 1 else "X")
            else:
                parts.append(f"{c}*X^{i}" if c != 1 else f"X^{i}")
        s = " + ".join(parts)
        if self.mod_prec is not None:
            s += f"  (mod {self.prime}^{self.mod_prec})"
        return s


@dataclass(frozen=True)
class CycloElement:
    """Element of Z_p[eps_n] as a residue mod Phi_n; the class of X is eps_n."""

    prime: int
    level: int
    rep: IwaPoly

    def __post_init__(self):
        if self.level < 1:
            raise ValidationError("level must be >= 1")
        if self.rep.degree >= totient(self.prime, self.level):
            raise ValidationError("representative not reduced mod Phi_n")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.prime, self.level, self.rep + other.rep)

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        phi = phi_poly(self.prime, self.level)
        return CycloElement(self.prime, self.level, (self.rep * other.rep) % phi)

    def _check(self, other: "CycloElement"):
        if (self.prime, self.level) != (other.prime, other.level):
            raise ValidationError("mixed cyclotomic levels")


@dataclass(frozen=True)
class WeierstrassData:
    """mu = minimal coefficient valuation, lambda = least index attaining it."""

    mu: int
    lam: int


def totient(p: int, n: int) -> int:
    """phi(p^n) = p^n - p^(n-1) for n >= 1; 1 for n = 0."""
    return p**n - p ** (n - 1) if n >= 1 else 1


@functools.lru_cache(maxsize=None)
def omega(p: int, n: int) -> IwaPoly:
    """omega_n = (1+X)^(p^n) - 1; omega_0 = X."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    q = p**n
    coeffs = [comb(q, k) for k in range(q + 1)]
    coeffs[0] = 0
    return IwaPoly(p, tuple(coeffs))


@functools.lru_cache(maxsize=None)
def phi_poly(p: int, n: int) -> IwaPoly:
    """Phi_n = omega_n / omega_(n-1), Eisenstein of degree phi(p^n)."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    # Phi_n = sum_{i=0}^{p-1} (1+X)^(i*p^(n-1)); computed as the exact quotient
    q, r = divmod(omega(p, n), omega(p, n - 1))
    assert r.is_zero
    return q


def eval_at_eps(f: IwaPoly, n: int) -> CycloElement:
    """Reduce f mod Phi_n: the ring map sending X to eps_n."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    return CycloElement(f.prime, n, f % phi_poly(f.prime, n))


def ord_eps(e: CycloElement) -> ExtendedRational:
    """eps_n-adic valuation, normalized so ord(eps_n) = 1 (= totient * ord_p).

    The extension is totally ramified of degree phi(p^n), so the valuation of
    a nonzero element equals ord_p of its norm, computed as the resultant
    Res(Phi_n, rep) over exact integers.
    """
    rep = e.rep
    phi_deg = totient(e.prime, e.level)
    if rep.is_zero:
        if rep.mod_prec is not None:
            raise PrecisionExhausted(
                f"element vanishes mod {e.prime}^{rep.mod_prec}: ord only bounded below"
            )
        return INF
    res = resultant(phi_poly(e.prime, e.level).coeffs, rep.coeffs)
    assert res != 0  # Phi_n is irreducible and deg rep < deg Phi_n
    v = int_valuation(res, e.prime)
    if rep.mod_prec is not None and v >= rep.mod_prec * phi_deg:
        raise PrecisionExhausted(
            f"ord {v} reaches the modulus bound {rep.mod_prec}*{phi_deg}"
        )
    return ExtendedRational(v)


def mu_lambda(f: IwaPoly) -> WeierstrassData:
    """mu = min coefficient ord_p, lambda = least index attaining it."""
    if f.is_zero:
        if f.mod_prec is not None:
            raise PrecisionExhausted(f"polynomial vanishes mod p^{f.mod_prec}")
        raise ZeroPolynomial("mu/lambda undefined for 0")
    mu = None
    lam = None
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        v = int_valuation(c, f.prime)
        if mu is None or v < mu:
            mu, lam = v, i
    if f.mod_prec is not None and mu >= f.mod_prec:
        raise PrecisionExhausted(f"all coefficients vanish mod p^{f.mod_prec}")
    return WeierstrassData(mu, lam)


def gcd_with_omega(f: IwaPoly, n: int) -> IwaPoly:
    """gcd(omega_(n-1), f): the product of the factors X, Phi_1..Phi_(n-1)
    of omega_(n-1) dividing f.

    Exact f: divisibility by exact remainder.  Modular f at p^N: a factor
    divides when the residue of f vanishes mod p^N (equivalently the
    ord_eps threshold N*phi(p^m); f(0) = 0 mod p^N for the factor X).
    """
    if f.is_zero and f.mod_prec is None:
        raise ZeroPolynomial("gcd with omega undefined for exact 0")
    if n < 1:
        raise ValidationError("n must be >= 1")
    p = f.prime
    out = IwaPoly.const(p, 1)
    factors = [omega(p, 0)] + [phi_poly(p, m) for m in range(1, n)]
    for fac in factors:
        if f.mod_prec is None:
            divides = (f % fac).is_zero
        else:
            divides = (f.lift() % fac).with_modulus(f.mod_prec).is_zero
        if divides:
            out = out * fac
    return out

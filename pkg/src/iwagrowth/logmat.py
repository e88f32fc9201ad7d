"""The 2x2 matrices A_v, C_(v,n), H_(v,n), M_(v,n) and their valuation data.

H_(v,n) = C_(v,n)...C_(v,1) is computed both as a direct product and through
the second-order recursion on first-row entries; the two must agree exactly.
M_(v,n) = A_v^(n+1) H_(v,n) is kept as an integer matrix with an explicit
power-of-p denominator exponent, so no p-adic division ever happens inside a
matrix product.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AmbiguousSignature, ValidationError
from .iwapoly import IwaPoly, eval_at_eps, omega, ord_eps, phi_poly, totient
from .padic import INF, ExtendedRational, int_valuation, is_odd_prime

SHARP = "sharp"
FLAT = "flat"


@dataclass(frozen=True)
class LocalCurveData:
    """Supersingular local data: prime, trace of Frobenius, residue degrees."""

    prime: int
    a_v: int
    degrees: tuple[int, ...] = (1,)

    def __post_init__(self):
        if not is_odd_prime(self.prime):
            raise ValidationError(f"{self.prime} is not an odd prime")
        if self.a_v % self.prime != 0:
            raise ValidationError(
                f"supersingular trace must be divisible by p: a_v={self.a_v}, p={self.prime}"
            )
        if self.a_v**2 > 4 * self.prime:
            raise ValidationError(
                f"Weil bound violated: a_v^2={self.a_v**2} > 4p={4 * self.prime}"
            )
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise ValidationError("degrees must be positive")
        object.__setattr__(self, "degrees", tuple(self.degrees))

    @property
    def r_v(self) -> ExtendedRational:
        """ord_p(a_v), which is 1 or +infinity by the Weil bound."""
        if self.a_v == 0:
            return INF
        return ExtendedRational(int_valuation(self.a_v, self.prime))


@dataclass(frozen=True)
class LogMatrix2:
    """2x2 matrix of polynomials times p^(-denom_exp)."""

    entries: tuple[tuple[IwaPoly, IwaPoly], tuple[IwaPoly, IwaPoly]]
    denom_exp: int = 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def det(self) -> IwaPoly:
        """Determinant of the integer part (value has denominator p^(2*denom_exp))."""
        e = self.entries
        return e[0][0] * e[1][1] - e[0][1] * e[1][0]

    def __mul__(self, other: "LogMatrix2") -> "LogMatrix2":
        a, b = self.entries, other.entries
        rows = tuple(
            tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2))
            for i in range(2)
        )
        return LogMatrix2(rows, self.denom_exp + other.denom_exp)

    def __sub__(self, other: "LogMatrix2") -> "LogMatrix2":
        if self.denom_exp != other.denom_exp:
            raise ValidationError("align denominator exponents before subtracting")
        a, b = self.entries, other.entries
        return LogMatrix2(
            tuple(tuple(a[i][j] - b[i][j] for j in range(2)) for i in range(2)),
            self.denom_exp,
        )

    def to_json(self) -> dict:
        return {
            "denom_exp": self.denom_exp,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, d: dict) -> "LogMatrix2":
        return cls(
            tuple(tuple(IwaPoly.from_json(e) for e in row) for row in d["entries"]),
            d["denom_exp"],
        )


@dataclass(frozen=True)
class ValuationMatrix:
    """2x2 matrix of ord_p values."""

    entries: tuple[tuple[ExtendedRational, ExtendedRational],
                   tuple[ExtendedRational, ExtendedRational]]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_json(self) -> dict:
        return {"entries": [[e.to_json() for e in row] for row in self.entries]}

    @classmethod
    def from_json(cls, d: dict) -> "ValuationMatrix":
        return cls(
            tuple(
                tuple(ExtendedRational.from_json(e) for e in row)
                for row in d["entries"]
            )
        )


@dataclass
class StructureReport:
    """Outcome of an exact identity check, with located failures."""

    passed: bool
    failures: list[str] = field(default_factory=list)


def c_matrix(data: LocalCurveData, n: int) -> LogMatrix2:
    """C_(v,n) = [[a_v, 1], [-Phi_n, 0]]."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    p = data.prime
    return LogMatrix2(
        (
            (IwaPoly.const(p, data.a_v), IwaPoly.const(p, 1)),
            (-phi_poly(p, n), IwaPoly.const(p, 0)),
        )
    )


@functools.lru_cache(maxsize=None)
def _first_row(p: int, a_v: int, n: int) -> tuple[IwaPoly, IwaPoly]:
    """First row of H_(v,n) by the recursion
    H_n = a_v*H_(n-1) - Phi_(n-1)*H_(n-2), seeded by H_0 = (1, 0), H_1 = (a_v, 1)."""
    if n == 0:
        return IwaPoly.const(p, 1), IwaPoly.const(p, 0)
    if n == 1:
        return IwaPoly.const(p, a_v), IwaPoly.const(p, 1)
    s1, f1 = _first_row(p, a_v, n - 1)
    s2, f2 = _first_row(p, a_v, n - 2)
    av = IwaPoly.const(p, a_v)
    phi = phi_poly(p, n - 1)
    return av * s1 - phi * s2, av * f1 - phi * f2


@functools.lru_cache(maxsize=None)
def _h_product(p: int, a_v: int, n: int) -> LogMatrix2:
    if n == 0:
        one, zero = IwaPoly.const(p, 1), IwaPoly.const(p, 0)
        return LogMatrix2(((one, zero), (zero, one)))
    data = LocalCurveData(p, a_v)
    return c_matrix(data, n) * _h_product(p, a_v, n - 1)


def h_entries(data: LocalCurveData, n: int) -> tuple[IwaPoly, IwaPoly]:
    """(H_sharp, H_flat): the first row of H_(v,n)."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    return _first_row(data.prime, data.a_v, n)


def h_matrix(data: LocalCurveData, n: int) -> LogMatrix2:
    """H_(v,n) = C_(v,n)...C_(v,1); H_0 is the identity.

    Computed by direct product and checked entrywise against the first-row
    recursion plus the block shape (second row = -Phi_n times the first row
    of H_(v,n-1)).
    """
    if n < 0:
        raise ValidationError("n must be >= 0")
    prod = _h_product(data.prime, data.a_v, n)
    if n >= 1:
        sharp, flat = _first_row(data.prime, data.a_v, n)
        ps, pf = _first_row(data.prime, data.a_v, n - 1)
        phi = phi_poly(data.prime, n)
        expected = ((sharp, flat), (-(phi * ps), -(phi * pf)))
        if prod.entries != expected:
            raise AssertionError("product and recursion forms of H disagree")
    return prod


def m_matrix(data: LocalCurveData, n: int) -> LogMatrix2:
    """M_(v,n) = A_v^(n+1) H_(v,n), A_v = p^(-1) [[0, -1], [p, a_v]]."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    p = data.prime
    a = ((0, -1), (p, data.a_v))
    power = ((1, 0), (0, 1))
    for _ in range(n + 1):
        power = tuple(
            tuple(sum(power[i][k] * a[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )
    apoly = LogMatrix2(
        tuple(tuple(IwaPoly.const(p, power[i][j]) for j in range(2)) for i in range(2)),
        denom_exp=n + 1,
    )
    return apoly * h_matrix(data, n)


def det_structure_check(data: LocalCurveData, n: int,
                        h: LogMatrix2 | None = None) -> StructureReport:
    """Assert det H_(v,n) = omega_n / X and the block shape of H_(v,n)."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    p = data.prime
    if h is None:
        h = h_matrix(data, n)
    failures = []
    expected_det = omega(p, n) // omega(p, 0)
    if h.det() != expected_det:
        failures.append("det != omega_n/X")
    ps, pf = h_entries(data, n - 1)
    phi = phi_poly(p, n)
    if h[1, 0] != -(phi * ps):
        failures.append("entry (1,0) != -Phi_n * H_sharp(n-1)")
    if h[1, 1] != -(phi * pf):
        failures.append("entry (1,1) != -Phi_n * H_flat(n-1)")
    return StructureReport(not failures, failures)


def valuation_matrix(data: LocalCurveData, n: int) -> ValuationMatrix:
    """ord_p of every entry of H_(v,n)(eps_n), via eps-adic valuations."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    h = h_matrix(data, n)
    phi_deg = totient(data.prime, n)
    rows = []
    for i in range(2):
        row = []
        for j in range(2):
            o = ord_eps(eval_at_eps(h[i, j], n))
            if o.is_infinite:
                row.append(INF)
            else:
                row.append(ExtendedRational(Fraction(o.value, phi_deg)))
        rows.append(tuple(row))
    return ValuationMatrix(tuple(rows))


def valuation_matrix_closed_form(data: LocalCurveData, n: int) -> ValuationMatrix:
    """The parity-split closed form for ord_p(H_(v,n)(eps_n))."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    p = data.prime
    r_v = data.r_v
    even_sum = lambda m: sum(Fraction(1, p ** (2 * i)) for i in range(1, m + 1))  # noqa: E731
    odd_sum = lambda m: sum(Fraction(1, p ** (2 * i - 1)) for i in range(1, m + 1))  # noqa: E731
    if n % 2 == 1:
        half = (n - 1) // 2
        sharp = r_v + ExtendedRational(even_sum(half))
        flat = ExtendedRational(odd_sum(half))
    else:
        half = n // 2
        sharp = ExtendedRational(odd_sum(half))
        flat = r_v + ExtendedRational(even_sum(half - 1))
    return ValuationMatrix(((sharp, flat), (INF, INF)))


def signature(data: LocalCurveData, n: int) -> str:
    """The dominant column of the first row: the symbol with strictly
    smaller ord_p.  For a_v = 0 this is flat at odd n and sharp at even n."""
    vm = valuation_matrix_closed_form(data, n)
    sharp, flat = vm[0, 0], vm[0, 1]
    if sharp == flat:
        raise AmbiguousSignature(f"first-row valuations tie at {sharp}")
    return SHARP if sharp < flat else FLAT


def m_convergence_gap(data: LocalCurveData, n: int, deg_cap: int) -> ExtendedRational:
    """min ord_p over low-degree coefficients of M_(v,n+1) - M_(v,n).

    Convergence of the finite stages shows up as this gap being nondecreasing
    in n.  deg_cap = 0 restricts to constant coefficients.
    """
    if n < 1 or deg_cap < 0:
        raise ValidationError("need n >= 1 and deg_cap >= 0")
    p = data.prime
    m_next = m_matrix(data, n + 1)
    m_cur = m_matrix(data, n)
    # align denominators: p^-(n+2) * (E_(n+1) - p*E_n)
    best: ExtendedRational = INF
    for i in range(2):
        for j in range(2):
            diff = m_next[i, j] - m_cur[i, j].scale(p)
            for k in range(min(deg_cap, diff.degree) + 1):
                c = diff.coeff(k)
                if c == 0:
                    continue
                v = ExtendedRational(int_valuation(c, p) - (n + 2))
                if v < best:
                    best = v
    return best

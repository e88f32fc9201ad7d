"""Kobayashi ranks of the quotient towers Lambda/(f, omega_n).

Three routes that must agree on finite towers:

* closed form: ord_eps of f(eps_n), scaled by the coefficient-ring degree;
* resultant oracle: first differences of ord_p Res(f, omega_n), using that
  the tower module has size p^(ord_p Res);
* elementary-divisor oracle: the kernel/cokernel lengths of the projection
  between consecutive levels, read off from valuation-pivot elimination of
  multiplication-by-f lattices over Z/p^N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFinite, PhiDividesF, PrecisionExhausted, ValidationError
from .iwapoly import IwaPoly, WeierstrassData, eval_at_eps, gcd_with_omega, omega, ord_eps, totient
from .padic import int_valuation
from .polyres import resultant

CLOSED_FORM = "closed_form"
RESULTANT_ORACLE = "resultant_oracle"
SNF_ORACLE = "snf_oracle"
FINITE_TOWER = "finite_tower"


@dataclass(frozen=True)
class TowerOfQuotients:
    """The system Lambda/(f, omega_n); coeff_degree k > 1 models coefficients
    in the ring of integers of a degree-k extension."""

    f: IwaPoly
    coeff_degree: int = 1

    def __post_init__(self):
        if self.f.is_zero:
            raise ValidationError("defining element must be nonzero")
        if self.coeff_degree < 1:
            raise ValidationError("coefficient degree must be >= 1")

    @property
    def prime(self) -> int:
        return self.f.prime


@dataclass(frozen=True)
class NablaResult:
    n: int
    value: int
    method: str

    def to_json(self) -> dict:
        return {"n": self.n, "value": self.value, "method": self.method}

    @classmethod
    def from_json(cls, d: dict) -> "NablaResult":
        return cls(d["n"], d["value"], d["method"])


def nabla_closed_form(t: TowerOfQuotients, n: int) -> NablaResult:
    """k * ord_eps f(eps_n); requires Phi_n not dividing f."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    o = ord_eps(eval_at_eps(t.f, n))
    if o.is_infinite:
        raise PhiDividesF(f"Phi_{n} divides f")
    return NablaResult(n, t.coeff_degree * int(o.value), CLOSED_FORM)


def _is_coprime_to_omega(f: IwaPoly, n: int) -> bool:
    g = gcd_with_omega(f, n + 1)  # factors X, Phi_1..Phi_n of omega_n
    return g.degree == 0


def nabla_resultant_oracle(t: TowerOfQuotients, n: int) -> NablaResult:
    """ord_p Res(f, omega_n) - ord_p Res(f, omega_(n-1)), exact integers."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    f = t.f
    if f.mod_prec is not None:
        f = f.lift()
    if not _is_coprime_to_omega(f, n):
        raise NotFinite("f shares a factor with omega_n")
    p = t.prime
    e_hi = int_valuation(resultant(f.coeffs, omega(p, n).coeffs), p)
    e_lo = int_valuation(resultant(f.coeffs, omega(p, n - 1).coeffs), p)
    return NablaResult(n, t.coeff_degree * (e_hi - e_lo), RESULTANT_ORACLE)


def elementary_divisor_valuations(rows: list[list[int]], p: int, prec: int) -> list[int]:
    """Valuations of the elementary divisors of an integer matrix, computed
    by minimal-valuation pivoting over Z/p^prec.

    Raises PrecisionExhausted when a needed pivot is indistinguishable from
    zero at the working modulus (an elementary divisor reaching p^prec, or an
    infinite cokernel).
    """
    pn = p**prec
    m = [[x % pn for x in row] for row in rows]
    act_rows = list(range(len(m)))
    act_cols = list(range(len(m[0]))) if m else []
    vals: list[int] = []
    while act_rows and act_cols:
        best = None  # (val, row, col)
        for i in act_rows:
            mi = m[i]
            for j in act_cols:
                x = mi[j]
                if x == 0:
                    continue
                v = 0
                while x % p == 0:
                    x //= p
                    v += 1
                    if best is not None and v >= best[0]:
                        break
                else:
                    best = (v, i, j)
                    if v == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            if all(m[i][j] == 0 for i in act_rows for j in act_cols):
                raise PrecisionExhausted(
                    f"remaining block vanishes mod {p}^{prec} with "
                    f"{len(act_cols)} columns unpivoted"
                )
            raise AssertionError("pivot search missed a nonzero entry")
        v, pi, pj = best
        vals.append(v)
        pivot = m[pi][pj]
        unit_inv = pow(pivot // p**v, -1, pn)
        prow = m[pi]
        for i in act_rows:
            if i == pi:
                continue
            entry = m[i][pj]
            if entry == 0:
                continue
            factor = (entry // p**v) * unit_inv % pn
            row = m[i]
            for j in act_cols:
                row[j] = (row[j] - factor * prow[j]) % pn
        act_rows.remove(pi)
        act_cols.remove(pj)
    if act_cols:
        raise NotFinite("matrix has a nontrivial kernel direction: infinite cokernel")
    return vals


def _mult_matrix_columns(f: IwaPoly, m: int) -> list[list[int]]:
    """Columns of multiplication by f on Z[X]/omega_m, as coefficient lists."""
    p = f.prime
    w = omega(p, m)
    d = p**m
    cur = (f % w).coeffs
    cols = []
    for _ in range(d):
        padded = list(cur) + [0] * (d - len(cur))
        cols.append(padded)
        # multiply by X and reduce once mod the monic omega_m
        nxt = [0] + list(cur)
        if len(nxt) - 1 == d:
            lead = nxt.pop()
            nxt = [c - lead * w.coeff(i) for i, c in enumerate(nxt)]
        cur = tuple(nxt)
    return cols


def _module_size_exponent(f: IwaPoly, m: int, p: int, prec: int) -> int:
    return sum(elementary_divisor_valuations(_mult_matrix_columns(f, m), p, prec))


def nabla_snf_oracle(t: TowerOfQuotients, n: int, prec: int | None = None) -> NablaResult:
    """length ker pi - length coker pi for pi: Lambda/(f, omega_n) ->
    Lambda/(f, omega_(n-1)), via elementary divisors over Z/p^prec.

    length ker is read from the cokernel of the augmented lattice
    (f, omega_(n-1)) inside Z[X]/omega_n; the cokernel length of pi comes out
    as a consistency difference (the projection is surjective, so it is 0).
    With prec=None the modulus is grown adaptively.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    f = t.f
    if f.mod_prec is not None:
        f = f.lift()
    if not _is_coprime_to_omega(f, n):
        raise NotFinite("f shares a factor with omega_n")
    p = t.prime
    precisions = (16, 32, 64, 128) if prec is None else (prec,)
    last_exc: PrecisionExhausted | None = None
    for pr in precisions:
        try:
            e_n = _module_size_exponent(f, n, p, pr)
            aug = _mult_matrix_columns(f, n) + _mult_matrix_columns(
                omega(p, n - 1), n
            )
            e_aug = sum(elementary_divisor_valuations(aug, p, pr))
            e_prev = _module_size_exponent(f, n - 1, p, pr)
        except PrecisionExhausted as exc:
            last_exc = exc
            continue
        length_ker = e_n - e_aug
        length_coker = e_prev - e_aug
        return NablaResult(n, t.coeff_degree * (length_ker - length_coker), SNF_ORACLE)
    raise last_exc


def nabla_asymptotic(w: WeierstrassData, p: int, n: int) -> int:
    """phi(p^n) * mu + lambda: the stabilized value of the closed form."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    return totient(p, n) * w.mu + w.lam


def nabla_finite_tower(sizes: list[int]) -> list[NablaResult]:
    """First differences of the size exponents e(M_n) of a finite tower."""
    return [
        NablaResult(i + 1, b - a, FINITE_TOWER)
        for i, (a, b) in enumerate(zip(sizes, sizes[1:]))
    ]

"""End-to-end identity and oracle suites, one per acceptance criterion.

Each check_* function exercises its full default grid, intersected with the
primes in p_list and capped at n_max, and returns a CriterionResult.  The
grids are deterministic given the seed; changing the seed changes the random
fixtures but must not change pass/fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .errors import ValidationError
from .growth import GrowthScenario, SsPrime, av_zero_closed_form, s_term, sha_delta, sha_table, t_term
from .iwapoly import IwaPoly, eval_at_eps, gcd_with_omega, mu_lambda, omega, ord_eps, totient
from .kobayashi import (
    TowerOfQuotients,
    nabla_closed_form,
    nabla_finite_tower,
    nabla_resultant_oracle,
    nabla_snf_oracle,
)
from .lattice import h_u_map, in_image, witness
from .lattice import cross_identity_check
from .logmat import (
    LocalCurveData,
    det_structure_check,
    m_convergence_gap,
    valuation_matrix,
    valuation_matrix_closed_form,
)
from .padic import unit_from_int

DEFAULT_PRIMES = (3, 5, 7)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number} ({self.name}): {status} [{self.seconds:.1f}s] {self.detail}"


def _curve_grid(p_list, n_max):
    """(data, n) pairs of the valuation-table grid."""
    grid = []
    for p, avs, cap in ((3, (0, 3, -3), 5), (5, (0,), 3), (7, (0,), 3)):
        if p not in p_list:
            continue
        for av in avs:
            data = LocalCurveData(p, av)
            for n in range(1, min(cap, n_max) + 1):
                grid.append((data, n))
    return grid


def _finish(number, name, failures, count, t0):
    if failures:
        detail = f"{len(failures)} of {count} cases failed; first: {failures[0]}"
    else:
        detail = f"{count} cases"
    return CriterionResult(number, name, not failures, detail, time.time() - t0)


def check_valuation_tables(p_list=DEFAULT_PRIMES, n_max=9, seed=0) -> CriterionResult:
    t0 = time.time()
    failures, count = [], 0
    for data, n in _curve_grid(p_list, n_max):
        count += 1
        a = valuation_matrix(data, n)
        b = valuation_matrix_closed_form(data, n)
        if a.entries != b.entries:
            failures.append(f"p={data.prime} av={data.a_v} n={n}")
    return _finish(1, "valuation tables", failures, count, t0)


def check_matrix_structure(p_list=DEFAULT_PRIMES, n_max=9, seed=0) -> CriterionResult:
    t0 = time.time()
    failures, count = [], 0
    for data, n in _curve_grid(p_list, n_max):
        count += 1
        rep = det_structure_check(data, n)
        if not rep.passed:
            failures.append(f"p={data.prime} av={data.a_v} n={n}: {rep.failures[0]}")
            continue
        rep = cross_identity_check(data, n)
        if not rep.passed:
            failures.append(f"p={data.prime} av={data.a_v} n={n}: {rep.failures[0]}")
    return _finish(2, "determinant and block structure", failures, count, t0)


def check_witness_mapping(p_list=DEFAULT_PRIMES, n_max=9, seed=0) -> CriterionResult:
    t0 = time.time()
    failures, count = [], 0
    for data, n in _curve_grid(p_list, n_max):
        p = data.prime
        units = (1, unit_from_int(1 + p, p, 48), unit_from_int(p - 1, p, 48))
        for u in units:
            count += 1
            w = witness(data, n, u)
            if not in_image(w, data):
                failures.append(f"p={p} av={data.a_v} n={n}: witness outside lattice")
                continue
            img = h_u_map(w, data, n, u)
            target = omega(p, n - 1)
            if img.mod_prec is not None:
                target = target.with_modulus(img.mod_prec)
            if img != target:
                failures.append(f"p={p} av={data.a_v} n={n} u={u}")
    return _finish(3, "witness mapping", failures, count, t0)


def _random_coprime_poly(rng, p, deg_cap, coeff_bound, omega_level):
    while True:
        deg = rng.randint(0, deg_cap)
        coeffs = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(deg + 1))
        f = IwaPoly(p, coeffs)
        if not f.is_zero and gcd_with_omega(f, omega_level + 1).degree == 0:
            return f


def check_rank_oracles(p_list=DEFAULT_PRIMES, n_max=9, seed=0, samples=50) -> CriterionResult:
    t0 = time.time()
    failures, count = [], 0
    for p in (3, 5):
        if p not in p_list:
            continue
        rng = random.Random(seed * 1000003 + p)
        for _ in range(samples):
            f = _random_coprime_poly(rng, p, 10, p**6, 3)
            tower = TowerOfQuotients(f)
            for n in range(1, min(3, n_max) + 1):
                count += 1
                a = nabla_closed_form(tower, n).value
                b = nabla_resultant_oracle(tower, n).value
                c = nabla_snf_oracle(tower, n).value
                if not a == b == c:
                    failures.append(f"p={p} f={f.coeffs} n={n}: {a},{b},{c}")
    return _finish(4, "rank oracle triple agreement", failures, count, t0)


def check_asymptotic_law(p_list=DEFAULT_PRIMES, n_max=9, seed=0, samples=20) -> CriterionResult:
    t0 = time.time()
    p = 3
    failures, count = [], 0
    if p in p_list:
        rng = random.Random(seed * 1000003 + 101)
        for _ in range(samples):
            mu = rng.randint(0, 3)
            d_deg = rng.randint(0, 4)
            # distinguished part: monic, lower coefficients divisible by p
            d = IwaPoly(p, tuple(p * rng.randint(-9, 9) for _ in range(d_deg)) + (1,))
            u_deg = rng.randint(0, 4)
            unit_c0 = rng.choice([c for c in range(-9, 10) if c % p != 0])
            u = IwaPoly(p, (unit_c0,) + tuple(rng.randint(-9, 9) for _ in range(u_deg)))
            f = (d * u).scale(p**mu)
            inv = mu_lambda(f)
            if (inv.mu, inv.lam) != (mu, d_deg):
                failures.append(f"mu/lambda read-off failed for {f.coeffs}")
                continue
            # stabilization: ord matches once lambda < phi(p^n)
            start = 1
            while totient(p, start) <= d_deg:
                start += 1
            for n in range(start, min(5, n_max) + 1):
                count += 1
                o = ord_eps(eval_at_eps(f, n))
                expect = totient(p, n) * mu + d_deg
                if o.is_infinite or o.value != expect:
                    failures.append(f"f={f.coeffs} n={n}: {o} != {expect}")
    return _finish(5, "asymptotic valuation law", failures, count, t0)


def check_growth_closed_forms(p_list=DEFAULT_PRIMES, n_max=9, seed=0) -> CriterionResult:
    t0 = time.time()
    failures, count = [], 0
    rng = random.Random(seed * 1000003 + 211)
    for p in (3, 5, 7):
        if p not in p_list:
            continue
        for _ in range(5):
            degs = tuple(SsPrime(rng.randint(1, 6), 0)
                         for _ in range(rng.randint(1, 4)))
            sc = GrowthScenario(p, degs)
            for n in range(1, min(9, n_max) + 1):
                count += 1
                term = s_term(sc, n) if n % 2 == 1 else t_term(sc, n)
                if term != av_zero_closed_form(sc, n):
                    failures.append(f"p={p} degs={degs} n={n}")
    return _finish(6, "growth closed forms", failures, count, t0)


def check_growth_composition(p_list=DEFAULT_PRIMES, n_max=9, seed=0) -> CriterionResult:
    t0 = time.time()
    failures = []
    sc = GrowthScenario(3, (SsPrime(2, 0),), mu_sigma=0, lambda_sigma=5,
                        mu_tau=0, lambda_tau=5, r_inf=2, base_n0=0, base_e0=0)
    if sha_delta(sc, 3) != 15:
        failures.append(f"worked scenario delta(3) = {sha_delta(sc, 3)} != 15")
    rows = sha_table(sc, 5)
    cum = sc.base_e0
    sizes = [sc.base_e0]
    for r in rows:
        cum += r.delta
        if r.cumulative != cum:
            failures.append(f"row n={r.n} cumulative {r.cumulative} != {cum}")
        sizes.append(r.cumulative)
    recovered = [x.value for x in nabla_finite_tower(sizes)]
    if recovered != [r.delta for r in rows]:
        failures.append("finite-tower differences do not recover the deltas")
    return _finish(7, "growth composition", failures, 3, t0)


def check_convergence_gaps(p_list=DEFAULT_PRIMES, n_max=9, seed=0) -> CriterionResult:
    t0 = time.time()
    failures, count = [], 0
    for av in (0, 3):
        data = LocalCurveData(3, av)
        gaps = [m_convergence_gap(data, n, 10) for n in range(1, min(5, n_max) + 1)]
        for a, b in zip(gaps, gaps[1:]):
            count += 1
            if b < a:
                failures.append(f"av={av}: gaps {[str(g) for g in gaps]} not monotone")
                break
    return _finish(8, "convergence gaps", failures, count, t0)


ALL_CHECKS = (
    check_valuation_tables,
    check_matrix_structure,
    check_witness_mapping,
    check_rank_oracles,
    check_asymptotic_law,
    check_growth_closed_forms,
    check_growth_composition,
    check_convergence_gaps,
)


def run_selfcheck(p_list=DEFAULT_PRIMES, n_max=9, seed=0, out=None) -> bool:
    if n_max < 1:
        raise ValidationError("n_max must be >= 1")
    if not p_list:
        raise ValidationError("need at least one prime")
    ok = True
    for check in ALL_CHECKS:
        result = check(p_list=tuple(p_list), n_max=n_max, seed=seed)
        ok = ok and result.passed
        print(result.line(), file=out)
    return ok

"""Sha-growth predictions along the cyclotomic tower.

The level-n delta is S (odd n) or T (even n) plus phi(p^n)*mu + lambda minus
r_inf, where S and T are degree-weighted valuation sums over the supersingular
places and mu, lambda, r_inf are user-supplied global invariants.  Cumulative
tables prefix-sum the deltas from a base anchor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InfiniteTerm, NonIntegerResult, NotAvZero, ValidationError
from .iwapoly import totient
from .logmat import FLAT, SHARP, LocalCurveData, signature


@dataclass(frozen=True)
class SsPrime:
    """One supersingular place: residue degree and trace of Frobenius."""

    degree: int
    a_v: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValidationError("degree must be >= 1")

    def to_json(self) -> dict:
        return {"degree": self.degree, "a_v": self.a_v}

    @classmethod
    def from_json(cls, d: dict) -> "SsPrime":
        return cls(d["degree"], d["a_v"])


@dataclass(frozen=True)
class GrowthScenario:
    """Inputs of a growth prediction.

    sigma is used at odd levels, tau at even levels; None means the defaults
    chosen by the valuation-matrix signature.  Construction only checks
    shapes; semantic problems (bad traces, inconsistent signatures) are
    reported by validate_scenario and raised by the term evaluators.
    """

    prime: int
    ss_primes: tuple[SsPrime, ...]
    sigma: tuple[str, ...] | None = None
    tau: tuple[str, ...] | None = None
    mu_sigma: int = 0
    lambda_sigma: int = 0
    mu_tau: int = 0
    lambda_tau: int = 0
    r_inf: int = 0
    base_n0: int = 0
    base_e0: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ss_primes", tuple(self.ss_primes))
        for name in ("sigma", "tau"):
            vec = getattr(self, name)
            if vec is None:
                continue
            vec = tuple(vec)
            if len(vec) != len(self.ss_primes):
                raise ValidationError(f"{name} length does not match ss_primes")
            if any(s not in (SHARP, FLAT) for s in vec):
                raise ValidationError(f"{name} entries must be 'sharp' or 'flat'")
            object.__setattr__(self, name, vec)
        for name in ("mu_sigma", "lambda_sigma", "mu_tau", "lambda_tau", "r_inf",
                     "base_e0"):
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be nonnegative")

    def local_data(self) -> list[LocalCurveData]:
        return [LocalCurveData(self.prime, w.a_v) for w in self.ss_primes]

    def signs(self, parity_n: int) -> tuple[str, ...]:
        """The effective signature vector at a level of the given parity."""
        explicit = self.sigma if parity_n % 2 == 1 else self.tau
        if explicit is not None:
            return explicit
        return tuple(signature(d, parity_n) for d in self.local_data())

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "ss_primes": [w.to_json() for w in self.ss_primes],
            "sigma": list(self.sigma) if self.sigma is not None else None,
            "tau": list(self.tau) if self.tau is not None else None,
            "mu_sigma": self.mu_sigma,
            "lambda_sigma": self.lambda_sigma,
            "mu_tau": self.mu_tau,
            "lambda_tau": self.lambda_tau,
            "r_inf": self.r_inf,
            "base": {"n0": self.base_n0, "e0": self.base_e0},
        }

    @classmethod
    def from_json(cls, d: dict) -> "GrowthScenario":
        base = d.get("base", {"n0": 0, "e0": 0})
        return cls(
            prime=d["p"],
            ss_primes=tuple(SsPrime.from_json(w) for w in d["ss_primes"]),
            sigma=tuple(d["sigma"]) if d.get("sigma") is not None else None,
            tau=tuple(d["tau"]) if d.get("tau") is not None else None,
            mu_sigma=d.get("mu_sigma", 0),
            lambda_sigma=d.get("lambda_sigma", 0),
            mu_tau=d.get("mu_tau", 0),
            lambda_tau=d.get("lambda_tau", 0),
            r_inf=d.get("r_inf", 0),
            base_n0=base["n0"],
            base_e0=base["e0"],
        )


def _require_places(sc: GrowthScenario) -> list[LocalCurveData]:
    if not sc.ss_primes:
        raise ValidationError("scenario needs at least one supersingular place")
    return sc.local_data()


def _weighted_sum(sc: GrowthScenario, n: int, sharp_first: bool) -> int:
    """phi(p^n) times the degree-weighted valuation sum at level n.

    sharp_first selects the odd-level shape (sharp entries carry r_v plus the
    even-exponent tail) versus the even-level shape (flat entries do).
    """
    p = sc.prime
    places = _require_places(sc)
    signs = sc.signs(n)
    if sharp_first:
        half = (n - 1) // 2
        carries_rv = SHARP
        rv_terms = half
        tail_terms = half
    else:
        half = n // 2
        carries_rv = FLAT
        rv_terms = half - 1
        tail_terms = half
    even_tail = sum(Fraction(1, p ** (2 * i)) for i in range(1, rv_terms + 1))
    odd_tail = sum(Fraction(1, p ** (2 * i - 1)) for i in range(1, tail_terms + 1))
    total = Fraction(0)
    for w, data, s in zip(sc.ss_primes, places, signs):
        if s == carries_rv:
            r_v = data.r_v
            if r_v.is_infinite:
                raise InfiniteTerm(
                    f"signature {s} needs finite ord_p(a_v) but a_v = {w.a_v}"
                )
            total += w.degree * (r_v.value + even_tail)
        else:
            total += w.degree * odd_tail
    value = totient(p, n) * total
    if value.denominator != 1:
        raise NonIntegerResult(f"term {value} is not an integer")
    return int(value)


def s_term(sc: GrowthScenario, n: int) -> int:
    """The odd-level term S(sigma, n)."""
    if n < 1 or n % 2 == 0:
        raise ValidationError("n must be odd and >= 1")
    return _weighted_sum(sc, n, sharp_first=True)


def t_term(sc: GrowthScenario, n: int) -> int:
    """The even-level term T(tau, n)."""
    if n < 2 or n % 2 == 1:
        raise ValidationError("n must be even and >= 2")
    return _weighted_sum(sc, n, sharp_first=False)


def av_zero_closed_form(sc: GrowthScenario, n: int) -> int:
    """Sum of d_w times the alternating tail p^(n-1) - p^(n-2) + ... ending at
    -p (odd n) or -1 (even n); only valid when every a_v = 0."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    if any(w.a_v != 0 for w in sc.ss_primes):
        raise NotAvZero("closed form requires every a_v = 0")
    _require_places(sc)
    p = sc.prime
    low = 1 if n % 2 == 1 else 0
    tail = sum((-1) ** (n - 1 - j) * p**j for j in range(low, n))
    return sum(w.degree for w in sc.ss_primes) * tail


def sha_delta(sc: GrowthScenario, n: int) -> int:
    """Predicted e(Sha at level n) - e(Sha at level n-1); asymptotic in n."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    phi = totient(sc.prime, n)
    if n % 2 == 1:
        return s_term(sc, n) + phi * sc.mu_sigma + sc.lambda_sigma - sc.r_inf
    return t_term(sc, n) + phi * sc.mu_tau + sc.lambda_tau - sc.r_inf


@dataclass(frozen=True)
class TableRow:
    n: int
    parity: str
    s_or_t: int
    phi_mu: int
    lam: int
    r_inf: int
    delta: int
    cumulative: int
    warning: str | None = None

    def to_json(self) -> dict:
        d = {
            "n": self.n,
            "parity": self.parity,
            "S_or_T": self.s_or_t,
            "phi_mu": self.phi_mu,
            "lambda": self.lam,
            "r_inf": self.r_inf,
            "delta": self.delta,
            "cumulative": self.cumulative,
        }
        if self.warning:
            d["warning"] = self.warning
        return d


def sha_table(sc: GrowthScenario, n_max: int) -> list[TableRow]:
    """Rows for base_n0 < n <= n_max, cumulative anchored at (n0, e0)."""
    if n_max < sc.base_n0:
        raise ValidationError(f"n_max {n_max} is below the anchor n0 {sc.base_n0}")
    rows = []
    cum = sc.base_e0
    for n in range(sc.base_n0 + 1, n_max + 1):
        odd = n % 2 == 1
        term = s_term(sc, n) if odd else t_term(sc, n)
        mu = sc.mu_sigma if odd else sc.mu_tau
        lam = sc.lambda_sigma if odd else sc.lambda_tau
        phi_mu = totient(sc.prime, n) * mu
        delta = term + phi_mu + lam - sc.r_inf
        cum += delta
        warning = None
        if cum < 0:
            warning = f"cumulative exponent {cum} is negative: inconsistent inputs"
        rows.append(TableRow(n, "odd" if odd else "even", term, phi_mu, lam,
                             sc.r_inf, delta, cum, warning))
    return rows


@dataclass
class ScenarioReport:
    """Outcome of scenario validation with the defaulted signature vectors."""

    ok: bool
    violations: list[str] = field(default_factory=list)
    default_sigma: tuple[str, ...] | None = None
    default_tau: tuple[str, ...] | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": self.violations,
            "default_sigma": list(self.default_sigma) if self.default_sigma else None,
            "default_tau": list(self.default_tau) if self.default_tau else None,
        }


def validate_scenario(sc: GrowthScenario) -> ScenarioReport:
    violations = []
    if not sc.ss_primes:
        violations.append("no supersingular places")
    places = []
    for i, w in enumerate(sc.ss_primes):
        try:
            places.append(LocalCurveData(sc.prime, w.a_v))
        except ValidationError as exc:
            violations.append(f"place {i}: {exc}")
            places.append(None)
    default_sigma = default_tau = None
    if places and all(d is not None for d in places):
        default_sigma = tuple(signature(d, 1) for d in places)
        default_tau = tuple(signature(d, 2) for d in places)
        for parity, vec in (1, sc.sigma or default_sigma), (2, sc.tau or default_tau):
            carries_rv = SHARP if parity == 1 else FLAT
            which = "sigma" if parity == 1 else "tau"
            for i, (d, s) in enumerate(zip(places, vec)):
                if s == carries_rv and d.r_v.is_infinite:
                    violations.append(
                        f"{which}[{i}] = {s} needs finite ord_p(a_v) but a_v = {d.a_v}"
                    )
    return ScenarioReport(not violations, violations, default_sigma, default_tau)

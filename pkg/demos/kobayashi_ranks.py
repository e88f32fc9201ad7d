"""Kobayashi ranks of Lambda/(f, omega_n) three ways.

Picks a few defining elements f, computes the rank at each level by the
eps-adic closed form, the resultant difference and the elementary-divisor
route, and shows the asymptotic phi(p^n)*mu + lambda law taking over.
"""

from iwagrowth import (
    IwaPoly,
    TowerOfQuotients,
    mu_lambda,
    nabla_asymptotic,
    nabla_closed_form,
    nabla_resultant_oracle,
    nabla_snf_oracle,
    totient,
)


def main():
    p = 3
    samples = {
        "f = p": IwaPoly.const(p, p),
        "f = X^2 + p": IwaPoly(p, (p, 0, 1)),
        "f = p*(X^2 + pX + 2p)*(2 + X)": IwaPoly(p, (2 * p, p, 1)).scale(p) * IwaPoly(p, (2, 1)),
    }
    for label, f in samples.items():
        tower = TowerOfQuotients(f)
        w = mu_lambda(f)
        print(f"\n{label}   (mu = {w.mu}, lambda = {w.lam})")
        for n in (1, 2, 3):
            a = nabla_closed_form(tower, n).value
            b = nabla_resultant_oracle(tower, n).value
            c = nabla_snf_oracle(tower, n).value
            asym = nabla_asymptotic(w, p, n)
            stable = "stable" if totient(p, n) > w.lam else "pre-asymptotic"
            print(
                f"  n={n}: closed {a}, resultant {b}, divisors {c}"
                f"  | phi*mu+lambda = {asym} ({stable})"
            )
            assert a == b == c


if __name__ == "__main__":
    main()

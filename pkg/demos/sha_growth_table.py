"""A Sha-growth prediction table from scenario data.

Builds the scenario with one supersingular place of degree 2 and a_v = 0,
mu = 0 and lambda = 5 at both parities, r_inf = 2, then prints the level-by-
level deltas and the cumulative exponent e with |Sha_p| = p^e.
"""

import json

from iwagrowth import GrowthScenario, SsPrime, sha_table, validate_scenario


def main():
    scenario = GrowthScenario(
        prime=3,
        ss_primes=(SsPrime(degree=2, a_v=0),),
        mu_sigma=0,
        lambda_sigma=5,
        mu_tau=0,
        lambda_tau=5,
        r_inf=2,
    )
    report = validate_scenario(scenario)
    print("scenario:", json.dumps(scenario.to_json()))
    print("defaults: sigma =", report.default_sigma, " tau =", report.default_tau)

    print(f"\n{'n':>3} {'parity':>7} {'S/T':>5} {'delta':>6} {'e':>4}")
    for row in sha_table(scenario, 6):
        print(f"{row.n:>3} {row.parity:>7} {row.s_or_t:>5} {row.delta:>6} {row.cumulative:>4}")


if __name__ == "__main__":
    main()

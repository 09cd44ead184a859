"""Tour of the three polynomial-module families.

Each family realizes the six generators e, f, h, eb, fb, hb as exact
operators on Q[h, hb].  This script builds one module per family,
applies a few generators to sample polynomials, and runs the full
bracket-identity report.
"""

from takiff import (BiPoly, FamilyParams, UniPoly, check_family_axioms,
                    check_omega_constraint, family_act, solve_omega_alpha)

SAMPLES = ["1", "h", "hb^2", "h^2*hb - 3"]


def show(params):
    print(f"== {params.label()} ==")
    for gen in ("e", "f", "eb", "fb"):
        for s in SAMPLES:
            image = family_act(gen, params, BiPoly.parse(s))
            print(f"  {gen} . {s:<10} = {image.text()}")
    report = check_family_axioms(params)
    counts = report.counts()
    print(f"  bracket identities: {counts['PASS']} of {len(report.checks)} hold\n")


def main():
    show(FamilyParams("gamma", 2, 1, -1))
    show(FamilyParams("theta", 3, -2, 5))

    # the third family needs its alpha coefficient solved from (lam, a, beta)
    lam, a = 1, 3
    beta = UniPoly.parse("hb")
    alpha = solve_omega_alpha(lam, a, beta)
    print(f"solved alpha for lam={lam}, a={a}, beta={beta.text()}:  "
          f"alpha = {alpha.text()}")
    show(FamilyParams("omega", lam, a, beta=beta))

    print("constraint report (solved alpha vs the matrix form, then axioms):")
    print(check_omega_constraint(lam, a, beta).render_text())


if __name__ == "__main__":
    main()

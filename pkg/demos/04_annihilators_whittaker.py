"""Two spectral probes: binomial annihilators and eigenvector searches.

The binomial operators w^(r) act as finite differences on the first
tensor factor, so they kill any polynomial of h-degree below r there;
on the full tensor product they probe how strongly the two factors are
linked.  The second half scans a grid of eigenvalue pairs (mu1, mu2)
for simultaneous eigenvectors of e and eb -- the searches are exact
and complete for the window, and come back empty everywhere on the
grid, with the one exceptional eigenvalue pair of the shift family
shown explicitly off-grid.
"""

from takiff import (BiPoly, FamilyParams, HighestWeight, Q, TensorModule,
                    annihilator_check, build_hw_module, build_verma_module,
                    whittaker_report, whittaker_vector_search)


def main():
    mod = TensorModule(FamilyParams("theta", 2, 1, 1),
                       build_verma_module(HighestWeight(Q(1), Q(0))))
    print(f"annihilator probe on {mod.label()}:")
    print(annihilator_check(mod, BiPoly.parse("h"), 2).render_text())

    print()
    gmod = TensorModule(FamilyParams("gamma", 2, 1, -1),
                        build_verma_module(HighestWeight(Q(1), Q(0))))
    print(f"annihilator probe on {gmod.label()} (note the top-line collapse):")
    print(annihilator_check(gmod, BiPoly.parse("h"), 2).render_text())

    print()
    lam = Q(2)
    wmod = TensorModule(FamilyParams("gamma", lam),
                        build_hw_module(HighestWeight(Q(0), Q(0))))
    grid = [(m1, m2) for m1 in (-1, 0, 1) for m2 in (-1, 0, 1)]
    print(f"eigenvector scan on {wmod.label()}, depth 4:")
    print(whittaker_report(wmod, grid, 4).render_text())
    sols = whittaker_vector_search(wmod, 0, lam, 4)
    print(f"\nat the off-grid pair (0, lam) = (0, {lam}) the solutions reappear:")
    for x in sols:
        print(f"  {x.text()}")


if __name__ == "__main__":
    main()

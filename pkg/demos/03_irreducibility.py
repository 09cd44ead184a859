"""Certifying irreducibility of a tensor product, seed by seed.

The engine grows the exact span closure of a seed under all six
generators inside a finite window.  Reaching 1 (x) v is a sound
certificate (the generated submodule contains the generator of the
whole module); not reaching it is reported as inconclusive, never as
"reducible".  The one genuinely reducible point in the parameter space
shows up exactly that way, and its invariant subspace is verified
directly.
"""

from takiff import (FamilyParams, HighestWeight, Q, TensorModule, UniPoly,
                    build_hw_module, certify_irreducible,
                    check_invariant_subspace, make_seeds)


def main():
    mod = TensorModule(FamilyParams("gamma", 2, 1, -1),
                       build_hw_module(HighestWeight(Q(1), Q(3))))
    print(f"module: {mod.label()}")
    print(f"expectation: {mod.expectation}\n")
    seeds = make_seeds(mod, 5, rng_seed=42)
    report = certify_irreducible(mod, seeds, depth=8)
    print(report.render_text())

    print()
    red = TensorModule(FamilyParams("omega", 1, 0, beta=UniPoly.zero()),
                       build_hw_module(HighestWeight(Q(1), Q(1))))
    print(f"module: {red.label()}")
    print(f"expectation: {red.expectation}\n")
    report = certify_irreducible(red, [red.pure("hb")], depth=4)
    print(report.render_text())
    print()
    print("the obstruction, verified exactly:")
    print(check_invariant_subspace(red, 5).render_text())


if __name__ == "__main__":
    main()

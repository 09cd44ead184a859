"""The rank-one picture over the upper subalgebra and the triangular lift.

Restricting a family module to its upper subalgebra leaves a rank-one
module on C[hb].  Inducing back up and mapping f^j fb^k h^q (x) hb^i to
the corresponding action on 1 (x) v gives a lift phi whose matrix in
the window basis is unitriangular -- the computational heart of the
isomorphism between the two pictures.
"""

from takiff import (BorelSpec, FamilyParams, HighestWeight, IndElement, Q,
                    TensorModule, UniPoly, borel_act,
                    borel_reducibility_check, build_verma_module,
                    check_borel_axioms, check_phi, phi_map)


def main():
    spec = BorelSpec("gamma", 2, eta=1)
    print(f"rank-one module {spec.label()}: sample actions on C[hb]")
    for gen in spec.generators:
        for s in ("1", "hb", "hb^2"):
            image = borel_act(gen, spec, UniPoly.parse(s))
            print(f"  {gen} . {s:<5} = {image.text()}")
    print()
    print(check_borel_axioms(spec).render_text())
    print()
    print(borel_reducibility_check(spec, 5).render_text())

    print()
    mod = TensorModule(FamilyParams("gamma", 1),
                       build_verma_module(HighestWeight(Q(1), Q(0))))
    print(f"lift into {mod.label()}: images of small basis vectors")
    for key in ((0, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)):
        x = IndElement.basis(*key)
        print(f"  phi({x.text():<14}) = {phi_map(mod, x).text()}")
    print()
    print(check_phi(mod, 3).render_text())


if __name__ == "__main__":
    main()

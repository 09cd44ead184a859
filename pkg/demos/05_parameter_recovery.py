"""Reading the construction parameters back off the module.

Probe actions on 1 (x) v recover every parameter that went into the
construction -- the computational face of the statement that the
parameters are isomorphism invariants.
"""

from takiff import (FamilyParams, HighestWeight, Q, TensorModule,
                    build_verma_module, recover_parameters, recover_report)


def main():
    modules = [
        TensorModule(FamilyParams("gamma", 2, 1, -1),
                     build_verma_module(HighestWeight(Q(1), Q(3)))),
        TensorModule(FamilyParams("theta", 3, -2, 5),
                     build_verma_module(HighestWeight(Q(2), Q(0)))),
        TensorModule(FamilyParams("omega", 1, 3, beta="hb^2 + 2"),
                     build_verma_module(HighestWeight(Q(1), Q(1)))),
    ]
    for mod in modules:
        rec = recover_parameters(mod)
        print(f"{mod.label()}")
        print(f"  recovered: {rec.as_tuple()}")
        print(recover_report(mod).render_text())
        print()


if __name__ == "__main__":
    main()

"""Highest-weight modules and the singular-vector scan.

A weight (eta, theta) determines an infinite tower spanned by the
f^i fb^j v.  When eta = 0 the tower is reducible -- the scan below
finds the vectors killed by both raising operators -- and for theta a
nonnegative integer a finite quotient takes its place.
"""

from takiff import (HighestWeight, Q, build_hw_module, singular_vectors,
                    verma_reducible_predicate)
from takiff.verma import verma_act


def main():
    print("singular vectors by level, over a small weight grid:")
    for eta in (0, 1):
        for theta in (0, 2):
            hw = HighestWeight(Q(eta), Q(theta))
            hits = []
            for level in (1, 2, 3):
                hits += [v.text() for v in singular_vectors(hw, level)]
            verdict = "reducible" if verma_reducible_predicate(hw) else "irreducible"
            shown = "; ".join(hits) if hits else "none"
            print(f"  (eta={eta}, theta={theta})  predicted {verdict:<11}  "
                  f"scan found: {shown}")

    print()
    hw = HighestWeight(Q(0), Q(0))
    v = singular_vectors(hw, 1)[0]
    print(f"checking {v.text()} at (0,0):  e.{v.text()} = "
          f"{verma_act('e', hw, v).text()},  eb.{v.text()} = "
          f"{verma_act('eb', hw, v).text()}")

    print()
    print("constructed modules with their certificates:")
    for eta, theta in ((2, 1), (0, 3)):
        m = build_hw_module(HighestWeight(Q(eta), Q(theta)))
        print(f"  {m.label():<22} kind={m.kind:<7} {m.certificate}")


if __name__ == "__main__":
    main()

"""Walk through the four hand-checked examples.

For each composition we build the t-module, print ρ_t in the same
layout as the reference tables, print the distinguished point v, and
run the torsion test both through the factored annihilator and through
a blind nullspace search.
"""
from ffmzv import (
    Motive,
    TModule,
    annihilator_mzv,
    field_for_q,
    is_eulerian,
    torsion_witness,
)

CASES = [(3, (2, 4)), (2, (1, 2, 4)), (3, (4, 2)), (3, (2, 2, 2))]


def main():
    for q, s in CASES:
        F = field_for_q(q)
        motive = Motive(F, s)
        tm = TModule.from_motive(motive)
        print(f"\n=== q = {q}, s = {s} (dimension {tm.d}) ===")
        print(tm.render())
        print("v =", "(" + ", ".join(str(c) for c in motive.special_point_v()) + ")")

        ann = annihilator_mzv(F, s)
        verdict = is_eulerian(F, s)
        label = "Eulerian" if verdict.eulerian else "non-Eulerian"
        print(f"annihilator degree {ann.degree} -> {label}")

        witness = torsion_witness(F, s, ann.degree)
        if witness is not None:
            print(f"independent minimal witness: a(t) = {witness}")
        else:
            print(f"no torsion witness up to degree {ann.degree} "
                  "(consistent with the verdict)" if not verdict.eulerian
                  else "!! verdict and witness search disagree")


if __name__ == "__main__":
    main()

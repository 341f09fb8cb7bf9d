"""Cross-check the exact decision procedure against truncated Laurent
series in F_q((1/θ)).

The oracle shares no code with the t-module side: it sums the defining
series directly, then asks whether ζ(s)/ζ(w) reconstructs as a rational
function.  A stable reconstruction for a value the criterion calls
non-Eulerian would be a bug; a failed reconstruction for an Eulerian
value just means the window was too small.
"""
from ffmzv import (
    SeriesContext,
    field_for_q,
    is_eulerian,
    run_identity_corpus,
    verify_verdict,
    zeta_laurent,
)


def main():
    for q in (2, 3):
        ctx = SeriesContext(field_for_q(q), prec=12)
        print(f"\n=== identity corpus, q = {q} ===")
        for name, passed in sorted(run_identity_corpus(ctx).items()):
            print(f"  {name}: {'ok' if passed else 'FAILED'}")

    F = field_for_q(3)
    ctx = SeriesContext(F, prec=16, degree_budget=16)
    print("\n=== verdict cross-checks, q = 3, N = 16 ===")
    for s in [(2, 4), (4, 2), (2, 2), (2, 6), (6, 2)]:
        verdict = is_eulerian(F, s)
        outcome = verify_verdict(ctx, s, verdict)
        label = "Eulerian" if verdict.eulerian else "non-Eulerian"
        print(f"  ζ{s}: {label}; series says: {outcome}")

    print("\nfirst digits of ζ(2, 4) over F_3(θ):")
    print(" ", zeta_laurent(SeriesContext(F, prec=10), (2, 4)))


if __name__ == "__main__":
    main()

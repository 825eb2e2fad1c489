"""Run the exhaustive verifier and read its findings, including the two
claims the search refutes.

At 5 objects the construction uniquely maximizes every statistic and
majorizes its single playable competitor. At 7 objects the statistic-level
claims still hold, but one playable game's equilibrium sequence is
incomparable with the construction's, and strong connectivity turns out to be
far weaker than playability (341 of 353 strong classes are unplayable).
"""

from tourneylab import verify_structural_lemmas, verify_theorem
from tourneylab.tournament import tournament_from_canonical

print(verify_theorem(2).to_markdown())

report = verify_theorem(3)
print(report.to_markdown())
for canon, seq in report.equilibrium_majorization.counterexamples:
    t = tournament_from_canonical(7, canon)
    print(f"incomparable competitor (canonical {canon}): equilibrium {seq}")
    print("  edges:", t.edges())

print()
structural = verify_structural_lemmas(7)
print(structural.to_markdown())
print(
    "strong but unplayable classes at 7 objects:",
    structural.strong_but_unplayable_count,
)

"""The lopsided construction, its closed-form equilibrium, and blow-ups.

Blowing up the three-cycle at its most balanced object, repeatedly, rebuilds
the construction; the product formula stitches the equilibria together.
"""

from tourneylab import (
    blow_up,
    blow_up_equilibrium,
    canonical_form,
    classify_playability,
    extended_weak_majorizes,
    ExtendedSequence,
    imbalanced_equilibrium_closed_form,
    imbalanced_rps,
    nrps_closed_forms,
)

for n in (1, 2, 3):
    t = imbalanced_rps(n)
    eq = imbalanced_equilibrium_closed_form(n)
    assert classify_playability(t).equilibrium == eq
    print(f"{2 * n + 1}-object construction: "
          + ", ".join(f"{lab}={p}" for lab, p in zip(t.labels, eq)))

print()
three = imbalanced_rps(1)
current, v = three, imbalanced_equilibrium_closed_form(1)
for n in (2, 3, 4):
    glue = current.n - 1  # the most balanced object sits last
    v = blow_up_equilibrium(v, glue, imbalanced_equilibrium_closed_form(1))
    current = blow_up(current, glue, three)
    same = canonical_form(current) == canonical_form(imbalanced_rps(n))
    print(f"blow-up x{n - 1} of the 3-cycle == {2 * n + 1}-object construction: {same}")
    assert tuple(sorted(v, reverse=True)) == tuple(
        sorted(imbalanced_equilibrium_closed_form(n), reverse=True)
    )

print()
probs, e_min = nrps_closed_forms(8)
print("countable construction, first 8 equilibrium probabilities:",
      ", ".join(str(p) for p in probs))
print("first 8 minimal degrees:", e_min)

# the countable construction dominates anything with a perfectly balanced
# object: negate minimal degrees, where a balanced object contributes -inf
ours = ExtendedSequence([-x for x in e_min])
with_balanced_object = ExtendedSequence([-1, -1, -2, -3], minus_inf_count=1)
verdict = extended_weak_majorizes(ours, with_balanced_object)
print("weakly majorizes a game with one balanced object:", verdict.verdict.value)

"""Classify small games: who sees play, and why unplayable games fail.

Builds classic rock-paper-scissors and the four-object variant with a well,
prints their exact equilibria or the dominance witness that rules them out.
"""

from tourneylab import classify_playability, from_edge_list

classic = from_edge_list(
    3, [(0, 1), (1, 2), (2, 0)], labels=["rock", "paper", "scissors"]
)
# rock beats scissors is edge (0, 2) here: "winner loser" per pair
well_game = from_edge_list(
    4,
    [(0, 2), (2, 1), (1, 0), (3, 0), (3, 2), (1, 3)],
    labels=["rock", "paper", "scissors", "well"],
)

for game in (classic, well_game):
    rep = classify_playability(game)
    print(f"{game.n}-object game on {', '.join(game.labels)}")
    print(f"  classification: {rep.playability.value}")
    print(f"  strongly connected: {rep.is_strong}")
    print(f"  witness: {rep.witness_text(game.labels)}")
    if rep.equilibrium is not None:
        mix = ", ".join(
            f"{lab}={p}" for lab, p in zip(game.labels, rep.equilibrium)
        )
        print(f"  equilibrium: {mix}")
    print()

print("The well weakly dominates rock, so no equilibrium ever plays rock;")
print("four-object games are in fact never playable (see demo 04).")

import itertools
import random

import pytest

from tourneylab import (
    EdgeListParseError,
    Tournament,
    canonical_form,
    degree_profile,
    enumerate_tournaments,
    format_edge_list,
    from_edge_list,
    is_strong,
    k_minimizing_check,
    landau_bound_check,
    parse_edge_list,
)
from tourneylab.construct import imbalanced_rps
from tests.conftest import make_transitive

# published counts of tournaments up to isomorphism, n = 1..7
CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456}


def brute_canonical(t: Tournament) -> int:
    best = None
    for perm in itertools.permutations(range(t.n)):
        m = 0
        for i in range(t.n):
            for j in range(i + 1, t.n):
                m = (m << 1) | (1 if t.beats[perm[i]][perm[j]] else 0)
        if best is None or m < best:
            best = m
    return best


# ---------------------------------------------------------------------------
# construction and parsing
# ---------------------------------------------------------------------------

def test_from_edge_list_classic(classic3):
    assert classic3.n == 3
    assert classic3.beats[0][1] and classic3.beats[1][2] and classic3.beats[2][0]


def test_from_edge_list_two_vertices():
    t = from_edge_list(2, [(0, 1)])
    assert t.beats[0][1] and not t.beats[1][0]


@pytest.mark.parametrize(
    "edges, message",
    [
        ([(0, 1), (1, 0), (1, 2)], "contradictory"),
        ([(0, 1), (0, 1), (1, 2), (0, 2)], "duplicate"),
        ([(0, 0), (0, 1), (1, 2), (0, 2)], "self-loop"),
        ([(0, 1), (1, 2)], "missing"),
        ([(0, 5)], "out of range"),
    ],
)
def test_from_edge_list_errors(edges, message):
    with pytest.raises(ValueError, match=message):
        from_edge_list(3, edges)


def test_parse_and_format_round_trip(rps_well):
    text = format_edge_list(rps_well)
    again = parse_edge_list(text)
    assert again == rps_well
    assert "# label 3 well" in text


def test_parse_handles_comments_and_blanks():
    t = parse_edge_list("# a comment\n\n3\n0 1\n# another\n1 2\n2 0\n")
    assert t.n == 3


def test_parse_errors_carry_line_numbers():
    with pytest.raises(EdgeListParseError, match="line 2"):
        parse_edge_list("3\n0 1 2\n")
    with pytest.raises(EdgeListParseError, match="line 1"):
        parse_edge_list("x\n")
    with pytest.raises(EdgeListParseError, match="no vertex count"):
        parse_edge_list("# nothing\n")
    err = None
    try:
        parse_edge_list("3\n0 1\n1 0\n1 2\n")
    except EdgeListParseError as exc:
        err = exc
    assert err is not None and "contradictory" in str(err)


def test_tournament_is_immutable(classic3):
    with pytest.raises(AttributeError):
        classic3.n = 5


# ---------------------------------------------------------------------------
# degree profiles
# ---------------------------------------------------------------------------

def test_degree_profile_cyclic(classic3):
    assert degree_profile(classic3).e_in == (1, 1, 1)


def test_degree_profile_imbalanced5():
    p = degree_profile(imbalanced_rps(2))
    assert sorted(p.e_in) == [1, 2, 2, 2, 3]
    assert sorted(p.e_out) == [1, 2, 2, 2, 3]


def test_degree_profile_transitive(transitive3):
    assert degree_profile(transitive3).e_in == (2, 1, 0)


def test_degree_profile_invariants():
    for t in enumerate_tournaments(5, up_to_iso=True):
        p = degree_profile(t)
        assert all(a + b == t.n - 1 for a, b in zip(p.e_in, p.e_out))
        assert sum(p.e_in) == sum(p.e_out) == t.n * (t.n - 1) // 2
        assert p.e_min == tuple(min(a, b) for a, b in zip(p.e_in, p.e_out))


# ---------------------------------------------------------------------------
# strong connectivity
# ---------------------------------------------------------------------------

def test_is_strong_cases(classic3, transitive3, strong_unplayable5):
    assert is_strong(classic3)
    assert not is_strong(transitive3)
    assert is_strong(imbalanced_rps(3))
    assert is_strong(strong_unplayable5)
    assert is_strong(Tournament(1, [[False]]))


# ---------------------------------------------------------------------------
# enumeration and canonical forms
# ---------------------------------------------------------------------------

def test_enumerate_labeled_count():
    assert sum(1 for _ in enumerate_tournaments(3)) == 8
    assert sum(1 for _ in enumerate_tournaments(4)) == 64


@pytest.mark.parametrize("n", sorted(CLASS_COUNTS))
def test_enumerate_iso_counts(n):
    assert sum(1 for _ in enumerate_tournaments(n, up_to_iso=True)) == CLASS_COUNTS[n]


def test_enumerate_deterministic():
    a = [t.beats for t in enumerate_tournaments(5, up_to_iso=True)]
    b = [t.beats for t in enumerate_tournaments(5, up_to_iso=True)]
    assert a == b
    la = [t.beats for t in enumerate_tournaments(3)]
    lb = [t.beats for t in enumerate_tournaments(3)]
    assert la == lb


def test_enumerate_iso_bound():
    with pytest.raises(ValueError):
        next(enumerate_tournaments(9, up_to_iso=True))


def test_canonical_form_matches_brute_force():
    for t in enumerate_tournaments(4):
        assert canonical_form(t) == brute_canonical(t)
    rng = random.Random(5)
    for n in (5, 6):
        for _ in range(40):
            edges = []
            for i in range(n):
                for j in range(i + 1, n):
                    edges.append((i, j) if rng.random() < 0.5 else (j, i))
            t = from_edge_list(n, edges)
            assert canonical_form(t) == brute_canonical(t)


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(11)
    t = imbalanced_rps(3)
    base = canonical_form(t)
    for _ in range(10):
        perm = list(range(t.n))
        rng.shuffle(perm)
        beats = [[t.beats[perm[i]][perm[j]] for j in range(t.n)] for i in range(t.n)]
        assert canonical_form(Tournament(t.n, beats)) == base


def test_iso_classes_are_mutually_non_isomorphic():
    forms = [canonical_form(t) for t in enumerate_tournaments(5, up_to_iso=True)]
    assert len(forms) == len(set(forms))


# ---------------------------------------------------------------------------
# structural conditions
# ---------------------------------------------------------------------------

def test_k_minimizing_classic(classic3):
    assert k_minimizing_check(classic3, 1)


def test_k_minimizing_rps_well(rps_well):
    # the 1-minimizing choices {paper} and {well} are both beaten outside;
    # the failure is at k=2 on {paper, well}: well's only defeater is paper
    assert k_minimizing_check(rps_well, 1)
    assert not k_minimizing_check(rps_well, 2)


def test_k_minimizing_imbalanced7():
    t = imbalanced_rps(3)
    for k in range(1, 5):
        assert k_minimizing_check(t, k)


def test_k_minimizing_two_single_loss_objects():
    # a beats b and everything else; b loses only to a: both have one loss,
    # so the 2-minimizing set {a, b} violates the condition
    t = from_edge_list(
        5,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (4, 0), (2, 3), (3, 4), (2, 4)],
    )
    losses = degree_profile(t).e_out
    assert sorted(losses)[:2] == [1, 1]
    assert not k_minimizing_check(t, 2)


def test_k_minimizing_range_errors(classic3, rps_well):
    with pytest.raises(ValueError):
        k_minimizing_check(classic3, 3)
    with pytest.raises(ValueError):
        k_minimizing_check(rps_well, 0)
    with pytest.raises(ValueError):
        k_minimizing_check(rps_well, 3)


def test_landau_bounds_imbalanced5_with_equality():
    t = imbalanced_rps(2)
    assert landau_bound_check(t)
    losses = sorted(degree_profile(t).e_out)
    assert sum(losses[:1]) == 1
    assert sum(losses[:2]) == 3
    assert sum(losses[:3]) == 5  # m(m+1)/2 + m at m = 2


def test_landau_bounds_other_cases(classic3, transitive5):
    assert landau_bound_check(classic3)
    assert not landau_bound_check(transitive5)
    assert not landau_bound_check(make_transitive(7))


def test_landau_bounds_even_rejected(rps_well):
    with pytest.raises(ValueError):
        landau_bound_check(rps_well)

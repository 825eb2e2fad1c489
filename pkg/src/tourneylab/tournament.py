"""Tournaments: construction, degree profiles, canonical enumeration, and the
structural playability conditions (prefix degree bounds, k-minimizing sets).

Convention used everywhere: ``beats(i, j)`` means object i defeats object j,
and e_in[i] counts the objects i defeats (a win is an incoming edge at the
winner). e_out[i] therefore counts i's losses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class EdgeListParseError(ValueError):
    """Edge-list text that does not describe a tournament; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Tournament:
    """An orientation of the complete graph on n vertices, with optional labels."""

    __slots__ = ("n", "beats", "labels")

    def __init__(
        self,
        n: int,
        beats: Sequence[Sequence[bool]],
        labels: Sequence[str] | None = None,
    ):
        if n < 1:
            raise ValueError("tournament needs at least one vertex")
        rows = tuple(tuple(bool(x) for x in row) for row in beats)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("beats relation must be an n x n grid")
        for i in range(n):
            if rows[i][i]:
                raise ValueError(f"vertex {i} cannot beat itself")
            for j in range(i + 1, n):
                if rows[i][j] == rows[j][i]:
                    raise ValueError(f"pair ({i},{j}) must be oriented exactly one way")
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("need one label per vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "beats", rows)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Tournament is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tournament)
            and self.beats == other.beats
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.beats, self.labels))

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, edges={self.edges()})"

    def edges(self) -> list[tuple[int, int]]:
        """All (winner, loser) pairs, sorted."""
        return [
            (i, j)
            for i in range(self.n)
            for j in range(self.n)
            if self.beats[i][j]
        ]

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labeled {label!r}") from None

    def relabel(self, labels: Sequence[str]) -> "Tournament":
        return Tournament(self.n, self.beats, labels)

    def wins(self, i: int) -> int:
        return sum(self.beats[i])


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex win/loss counts; e_min[i] = min(e_in[i], e_out[i])."""

    e_in: tuple[int, ...]
    e_out: tuple[int, ...]
    e_min: tuple[int, ...]


def from_edge_list(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Tournament:
    """Build a validated tournament from (winner, loser) pairs.

    Every unordered pair must appear exactly once; duplicates, contradictory
    orientations, self-loops, and missing pairs are errors.
    """
    if n < 1:
        raise ValueError("tournament needs at least one vertex")
    beats = [[False] * n for _ in range(n)]
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i},{j}) out of range for n={n}")
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if beats[i][j]:
            raise ValueError(f"duplicate edge ({i},{j})")
        if beats[j][i]:
            raise ValueError(f"contradictory pair: both ({j},{i}) and ({i},{j}) given")
        beats[i][j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if not beats[i][j] and not beats[j][i]:
                raise ValueError(f"missing orientation for pair ({i},{j})")
    return Tournament(n, beats, labels)


def parse_edge_list(text: str) -> Tournament:
    """Parse the shared text format: first line n, then one "i j" per line.

    ``#`` starts a comment; ``# label <index> <name>`` comments attach labels.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "label":
                try:
                    labels[int(parts[1])] = parts[2]
                except ValueError:
                    raise EdgeListParseError("bad label comment", lineno) from None
            continue
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListParseError("expected vertex count on first data line", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise EdgeListParseError("vertex count is not an integer", lineno) from None
            if n < 1:
                raise EdgeListParseError("vertex count must be positive", lineno)
            continue
        if len(fields) != 2:
            raise EdgeListParseError("expected 'winner loser' pair", lineno)
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListParseError("edge endpoints must be integers", lineno) from None
    if n is None:
        raise EdgeListParseError("empty input: no vertex count")
    label_seq = None
    if labels:
        label_seq = [labels.get(i, str(i)) for i in range(n)]
    try:
        return from_edge_list(n, edges, label_seq)
    except ValueError as exc:
        raise EdgeListParseError(str(exc)) from exc


def format_edge_list(t: Tournament) -> str:
    """Serialize in the shared text format, with label comments when non-default."""
    lines = [str(t.n)]
    default = tuple(str(i) for i in range(t.n))
    if t.labels != default:
        for i, name in enumerate(t.labels):
            lines.append(f"# label {i} {name}")
    for i, j in t.edges():
        lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"


def degree_profile(t: Tournament) -> DegreeProfile:
    e_in = tuple(sum(row) for row in t.beats)
    e_out = tuple(t.n - 1 - w for w in e_in)
    e_min = tuple(min(a, b) for a, b in zip(e_in, e_out))
    return DegreeProfile(e_in, e_out, e_min)


def _reachable(n: int, adj: Sequence[Sequence[bool]], start: int) -> int:
    seen = [False] * n
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        u = stack.pop()
        row = adj[u]
        for v in range(n):
            if row[v] and not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count


def is_strong(t: Tournament) -> bool:
    """True iff the beats digraph is strongly connected."""
    if t.n == 1:
        return True
    if _reachable(t.n, t.beats, 0) != t.n:
        return False
    reverse = tuple(tuple(t.beats[j][i] for j in range(t.n)) for i in range(t.n))
    return _reachable(t.n, reverse, 0) == t.n


# ---------------------------------------------------------------------------
# canonical forms and enumeration
# ---------------------------------------------------------------------------

def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _packed(t_beats: Sequence[Sequence[bool]], perm: Sequence[int], n: int) -> int:
    # row-major upper triangle, row 0 most significant
    m = 0
    for i in range(n):
        bi = t_beats[perm[i]]
        for j in range(i + 1, n):
            m = (m << 1) | (1 if bi[perm[j]] else 0)
    return m


def canonical_form(t: Tournament) -> int:
    """Lexicographically minimal upper-triangle bit string over all relabelings.

    The string's row 0 is forced: the first vertex must have minimal wins with
    its defeaters listed before the vertices it beats, which prunes the
    permutation search to (losses)! * (wins)! orderings per candidate.
    """
    n = t.n
    if n == 1:
        return 0
    wins = [t.wins(i) for i in range(n)]
    wmin = min(wins)
    best: int | None = None
    for v0 in range(n):
        if wins[v0] != wmin:
            continue
        defeaters = [u for u in range(n) if u != v0 and t.beats[u][v0]]
        beaten = [u for u in range(n) if t.beats[v0][u]]
        for pd in itertools.permutations(defeaters):
            for pb in itertools.permutations(beaten):
                m = _packed(t.beats, (v0,) + pd + pb, n)
                if best is None or m < best:
                    best = m
    assert best is not None
    return best


def tournament_from_canonical(n: int, packed: int) -> Tournament:
    """Inverse of the packing used by canonical_form (not re-canonicalized)."""
    ps = _pairs(n)
    total = len(ps)
    beats = [[False] * n for _ in range(n)]
    for b, (i, j) in enumerate(ps):
        if (packed >> (total - 1 - b)) & 1:
            beats[i][j] = True
        else:
            beats[j][i] = True
    return Tournament(n, beats)


_ISO_CACHE: dict[int, tuple[int, ...]] = {1: (0,)}


def _iso_classes(n: int, _check=None) -> tuple[int, ...]:
    """Sorted canonical forms of all isomorphism classes, by vertex extension.

    Cached once complete; `_check` is polled during the build so callers can
    enforce a time budget. 9 vertices is allowed here for the opt-in theorem
    run even though the public enumeration stops at 8.
    """
    if n > 9:
        raise ValueError("isomorphism classes are built for n <= 9 only")
    cached = _ISO_CACHE.get(n)
    if cached is not None:
        return cached
    seen: set[int] = set()
    for packed in _iso_classes(n - 1, _check):
        if _check is not None:
            _check()
        base = tournament_from_canonical(n - 1, packed)
        for pattern in range(1 << (n - 1)):
            beats = [list(row) + [False] for row in base.beats]
            beats.append([False] * n)
            for u in range(n - 1):
                if (pattern >> u) & 1:
                    beats[u][n - 1] = True
                else:
                    beats[n - 1][u] = True
            seen.add(canonical_form(Tournament(n, beats)))
    out = tuple(sorted(seen))
    _ISO_CACHE[n] = out
    return out


def enumerate_tournaments(n: int, up_to_iso: bool = False) -> Iterator[Tournament]:
    """All labeled n-tournaments, or one canonical representative per class.

    Deterministic: labeled order follows the packed bit masks ascending, and
    canonical representatives are yielded in ascending canonical form.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if up_to_iso:
        if n > 8:
            raise ValueError("isomorphism-free enumeration is limited to n <= 8")
        for packed in _iso_classes(n):
            yield tournament_from_canonical(n, packed)
        return
    total = n * (n - 1) // 2
    for mask in range(1 << total):
        yield tournament_from_canonical(n, mask)


# ---------------------------------------------------------------------------
# structural playability conditions
# ---------------------------------------------------------------------------

def _k_limit(n: int) -> int:
    # (2m+1)-vertex games admit k <= m+1; even orders (used only by the
    # 4-object example) admit k <= n/2
    return (n + 1) // 2 if n % 2 == 1 else n // 2


def k_minimizing_check(t: Tournament, k: int) -> bool:
    """Necessary condition for playability on the k objects with fewest losses.

    Passes iff every tie-break choice of the k-minimizing set M satisfies:
    each member of M is beaten by some object outside M, or the objects
    beating members of M are exactly the complement of M.
    """
    n = t.n
    if not 1 <= k <= _k_limit(n):
        raise ValueError(f"k={k} out of range for n={n}")
    losses = degree_profile(t).e_out
    order = sorted(range(n), key=lambda i: (losses[i], i))
    threshold = losses[order[k - 1]]
    fixed = [i for i in order[:k] if losses[i] < threshold]
    tied = [i for i in range(n) if losses[i] == threshold]
    need = k - len(fixed)
    for choice in itertools.combinations(tied, need):
        members = set(fixed) | set(choice)
        outside = [o for o in range(n) if o not in members]
        each_beaten_outside = all(
            any(t.beats[o][b] for o in outside) for b in members
        )
        beating = {o for o in outside if any(t.beats[o][b] for b in members)}
        whole_rest_beats = bool(outside) and set(outside) == beating
        if not (each_beaten_outside or whole_rest_beats):
            return False
    return True


def landau_bound_check(t: Tournament) -> bool:
    """Prefix bounds on sorted wins and losses that every playable game meets.

    For n = 2m+1: the k smallest losses (and wins) must sum to at least
    k(k+1)/2 for k <= m, and the (m+1)-prefix to at least m(m+1)/2 + m.
    """
    n = t.n
    if n % 2 == 0:
        raise ValueError("defined for odd vertex counts only")
    m = (n - 1) // 2
    profile = degree_profile(t)
    for seq in (sorted(profile.e_out), sorted(profile.e_in)):
        for k in range(1, m + 1):
            if sum(seq[:k]) < k * (k + 1) // 2:
                return False
        if m >= 1 and sum(seq[: m + 1]) < m * (m + 1) // 2 + m:
            return False
    return True

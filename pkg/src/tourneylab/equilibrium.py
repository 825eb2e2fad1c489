"""Payoff matrices and exact Nash-equilibrium analysis of tournament games.

The equilibrium set that matters for playability is ker(A) intersected with
the probability simplex; for odd tournaments it is either empty or a single
strictly positive point, and the classifier reports which, together with the
strong-connectivity cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .rational import RationalMatrix, Vector, kernel_basis, solve_affine
from .tournament import Tournament, is_strong

SUPPORT_ENUM_LIMIT = 8


def payoff_matrix(t: Tournament) -> RationalMatrix:
    """Skew-symmetric matrix with A[i][j] = +1 iff i defeats j."""
    n = t.n
    one = Fraction(1)
    return RationalMatrix(
        [
            [one if t.beats[i][j] else (-one if i != j else Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
    )


def assert_probability_vector(v: Sequence[Fraction]) -> Vector:
    vec = tuple(Fraction(x) for x in v)
    if any(x < 0 for x in vec):
        raise ValueError("probability vector entries must be >= 0")
    if sum(vec) != 1:
        raise ValueError("probability vector entries must sum to 1")
    return vec


@dataclass(frozen=True)
class EquilibriumPolytope:
    """Exact description of ker(A) ∩ simplex, with the defining matrix kept."""

    matrix: RationalMatrix
    kernel_dim: int
    vertices: tuple[Vector, ...]
    interior_point: Vector | None
    support_mask: tuple[bool, ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_single_point(self) -> bool:
        return len(self.vertices) == 1


def _empty_polytope(A: RationalMatrix, kdim: int) -> EquilibriumPolytope:
    return EquilibriumPolytope(A, kdim, (), None, (False,) * A.cols)


def _from_vertices(
    A: RationalMatrix, kdim: int, vertices: list[Vector]
) -> EquilibriumPolytope:
    vertices = sorted(set(vertices))
    if not vertices:
        return _empty_polytope(A, kdim)
    n = A.cols
    count = Fraction(len(vertices))
    interior = tuple(sum(v[i] for v in vertices) / count for i in range(n))
    mask = tuple(x > 0 for x in interior)
    return EquilibriumPolytope(A, kdim, tuple(vertices), interior, mask)


def equilibrium_polytope(A: RationalMatrix) -> EquilibriumPolytope:
    """Exact ker(A) ∩ simplex.

    Kernel dimension 0 or 1 is resolved directly; higher dimensions fall back
    to support-subset vertex enumeration, bounded at 2**SUPPORT_ENUM_LIMIT.
    """
    basis = kernel_basis(A)
    kdim = len(basis)
    n = A.cols
    if kdim == 0:
        return _empty_polytope(A, 0)
    if kdim == 1:
        v = basis[0]
        total = sum(v)
        if total == 0:
            return _empty_polytope(A, 1)
        point = tuple(x / total for x in v)
        if any(x < 0 for x in point):
            return _empty_polytope(A, 1)
        return _from_vertices(A, 1, [point])
    if n > SUPPORT_ENUM_LIMIT:
        raise ValueError(
            f"support enumeration bounded at n <= {SUPPORT_ENUM_LIMIT}, got {n}"
        )
    vertices: list[Vector] = []
    rows = [list(row) for row in A.entries]
    for size in range(1, n + 1):
        for support in itertools.combinations(range(n), size):
            sub = RationalMatrix(
                [[row[j] for j in support] for row in rows] + [[Fraction(1)] * size]
            )
            rhs = [Fraction(0)] * A.rows + [Fraction(1)]
            solved = solve_affine(sub, rhs)
            if solved is None:
                continue
            particular, null = solved
            if null:
                continue  # not a basic solution for this support
            if any(x < 0 for x in particular):
                continue
            full = [Fraction(0)] * n
            for j, x in zip(support, particular):
                full[j] = x
            vertices.append(tuple(full))
    return _from_vertices(A, kdim, vertices)


class Playability(Enum):
    UNPLAYABLE = "unplayable"
    WEAKLY_PLAYABLE_ONLY = "weakly_playable_only"
    PLAYABLE = "playable"
    STRONGLY_PLAYABLE = "strongly_playable"


@dataclass(frozen=True)
class PlayabilityReport:
    """Classification plus witness data and the strong-connectivity cross-check."""

    playability: Playability
    polytope: EquilibriumPolytope
    is_strong: bool
    equilibrium: Vector | None = None
    dominating_pair: tuple[int, int] | None = None  # (dominated, dominator)
    zero_probability_object: int | None = None

    def witness_text(self, labels: Sequence[str]) -> str:
        if self.dominating_pair is not None:
            a, b = self.dominating_pair
            return f"{labels[b]} weakly dominates {labels[a]}"
        if self.zero_probability_object is not None:
            return (
                f"{labels[self.zero_probability_object]} has zero probability "
                "in every equilibrium"
            )
        if self.equilibrium is not None:
            return "unique totally mixed equilibrium"
        return "no equilibrium plays every object (empty kernel polytope)"


def classify_playability(t: Tournament) -> PlayabilityReport:
    """Classify per the kernel polytope; odd tournaments are Unplayable or
    StronglyPlayable and the report carries the is_strong cross-check."""
    A = payoff_matrix(t)
    P = equilibrium_polytope(A)
    strong = is_strong(t)
    if P.is_empty:
        dominated = find_dominated(t, mode="weak", against="pure")
        pair = (dominated[0][0], dominated[0][1]) if dominated else None
        return PlayabilityReport(
            Playability.UNPLAYABLE, P, strong, dominating_pair=pair
        )
    if not all(P.support_mask):
        zero_obj = P.support_mask.index(False)
        return PlayabilityReport(
            Playability.UNPLAYABLE, P, strong, zero_probability_object=zero_obj
        )
    if P.is_single_point:
        return PlayabilityReport(
            Playability.STRONGLY_PLAYABLE, P, strong, equilibrium=P.vertices[0]
        )
    # every object sees play at the interior point, but some equilibrium does
    # not play everything (a multi-vertex polytope always has boundary vertices)
    return PlayabilityReport(
        Playability.PLAYABLE, P, strong, equilibrium=P.interior_point
    )


# ---------------------------------------------------------------------------
# dominance
# ---------------------------------------------------------------------------

def _vertex_enumerate(
    equalities: list[tuple[list[Fraction], Fraction]],
    inequalities: list[tuple[list[Fraction], Fraction]],
    dim: int,
) -> list[Vector]:
    """Vertices of a bounded polyhedron {x : Ex = e, Gx >= h} by basis search."""
    vertices: set[Vector] = set()
    base_rows = [row for row, _ in equalities]
    base_rhs = [rhs for _, rhs in equalities]
    need = dim - len(equalities)
    for combo in itertools.combinations(range(len(inequalities)), max(need, 0)):
        rows = base_rows + [inequalities[k][0] for k in combo]
        rhs = base_rhs + [inequalities[k][1] for k in combo]
        solved = solve_affine(RationalMatrix(rows), rhs)
        if solved is None:
            continue
        x, null = solved
        if null:
            continue
        if all(
            sum(g * xi for g, xi in zip(grow, x)) >= h for grow, h in inequalities
        ):
            vertices.add(x)
    return sorted(vertices)


def _mixed_dominator(t: Tournament, i: int, mode: str) -> Vector | None:
    """Best convex combination of the other rows against row i, or None."""
    A = payoff_matrix(t)
    n = t.n
    others = [k for k in range(n) if k != i]
    d = len(others)
    row_i = A.entries[i]
    # variables: weights over `others` (+ a slack level t for strict mode)
    if mode == "weak":
        eqs = [([Fraction(1)] * d, Fraction(1))]
        ineqs = [
            ([Fraction(1) if p == q else Fraction(0) for p in range(d)], Fraction(0))
            for q in range(d)
        ]
        for j in range(n):
            ineqs.append(([A.entries[k][j] for k in others], row_i[j]))
        verts = _vertex_enumerate(eqs, ineqs, d)
        best: tuple[Fraction, Vector] | None = None
        for w in verts:
            slack = sum(
                sum(wk * A.entries[k][j] for wk, k in zip(w, others)) - row_i[j]
                for j in range(n)
            )
            if best is None or slack > best[0]:
                best = (slack, w)
        if best is None or best[0] <= 0:
            return None
        weights = best[1]
    else:  # strict: maximize the worst margin
        dim = d + 1  # (w, t)
        eqs = [([Fraction(1)] * d + [Fraction(0)], Fraction(1))]
        ineqs = [
            (
                [Fraction(1) if p == q else Fraction(0) for p in range(d)] + [Fraction(0)],
                Fraction(0),
            )
            for q in range(d)
        ]
        for j in range(n):
            ineqs.append(
                ([A.entries[k][j] for k in others] + [Fraction(-1)], row_i[j])
            )
        # payoffs lie in [-1, 1] so the margin is within [-3, 3]
        ineqs.append(([Fraction(0)] * d + [Fraction(1)], Fraction(-3)))
        ineqs.append(([Fraction(0)] * d + [Fraction(-1)], Fraction(-3)))
        verts = _vertex_enumerate(eqs, ineqs, dim)
        best = None
        for x in verts:
            if best is None or x[d] > best[0]:
                best = (x[d], x[:d])
        if best is None or best[0] <= 0:
            return None
        weights = best[1]
    full = [Fraction(0)] * n
    for wk, k in zip(weights, others):
        full[k] = wk
    return tuple(full)


def find_dominated(
    t: Tournament, mode: str = "weak", against: str = "pure"
) -> list[tuple[int, int | Vector]]:
    """Dominated objects with a dominating strategy each.

    Pure mode compares full payoff rows over every opponent object (weak:
    >= everywhere and > somewhere; strict: > everywhere). Mixed mode solves the
    exact feasibility problem over convex combinations of the other rows by
    vertex enumeration; the dominating strategy is returned as a full-length
    weight vector.
    """
    if mode not in ("weak", "strict"):
        raise ValueError("mode must be 'weak' or 'strict'")
    if against not in ("pure", "mixed"):
        raise ValueError("against must be 'pure' or 'mixed'")
    A = payoff_matrix(t)
    n = t.n
    out: list[tuple[int, int | Vector]] = []
    for i in range(n):
        if against == "pure":
            row_i = A.entries[i]
            for k in range(n):
                if k == i:
                    continue
                row_k = A.entries[k]
                if mode == "weak":
                    if all(a >= b for a, b in zip(row_k, row_i)) and row_k != row_i:
                        out.append((i, k))
                        break
                else:
                    if all(a > b for a, b in zip(row_k, row_i)):
                        out.append((i, k))
                        break
        else:
            w = _mixed_dominator(t, i, mode)
            if w is not None:
                out.append((i, w))
    return out


# ---------------------------------------------------------------------------
# worst-case equilibrium selection
# ---------------------------------------------------------------------------

def _min_ties_point(P: EquilibriumPolytope) -> Vector:
    """Exact minimizer of sum(v**2) by support enumeration + affine projection."""
    A = P.matrix
    n = A.cols
    if n > SUPPORT_ENUM_LIMIT:
        raise ValueError(f"support enumeration bounded at n <= {SUPPORT_ENUM_LIMIT}")
    best: tuple[Fraction, Vector] | None = None
    rows = [list(row) for row in A.entries]
    for size in range(1, n + 1):
        for support in itertools.combinations(range(n), size):
            sub = RationalMatrix(
                [[row[j] for j in support] for row in rows] + [[Fraction(1)] * size]
            )
            rhs = [Fraction(0)] * A.rows + [Fraction(1)]
            solved = solve_affine(sub, rhs)
            if solved is None:
                continue
            x0, null = solved
            if null:
                # minimize ||x0 + N t||^2: normal equations over the null basis
                gram = RationalMatrix(
                    [[sum(a * b for a, b in zip(u, v)) for v in null] for u in null]
                )
                rhs_t = [-sum(a * b for a, b in zip(u, x0)) for u in null]
                sol = solve_affine(gram, rhs_t)
                assert sol is not None and not sol[1]  # Gram of a basis is PD
                tstar = sol[0]
                x = tuple(
                    xi + sum(tk * nk[p] for tk, nk in zip(tstar, null))
                    for p, xi in enumerate(x0)
                )
            else:
                x = x0
            if any(xi < 0 for xi in x):
                continue
            value = sum(xi * xi for xi in x)
            candidate = [Fraction(0)] * n
            for j, xi in zip(support, x):
                candidate[j] = xi
            key = (value, tuple(candidate))
            if best is None or key < (best[0], best[1]):
                best = (value, tuple(candidate))
    assert best is not None  # nonempty polytope always yields its vertices
    return best[1]


def _max_entropy_point(P: EquilibriumPolytope) -> tuple[float, ...]:
    """Projected Newton ascent for -sum(v ln v) on the polytope's affine hull.

    The hull is the kernel slice restricted to the support coordinates;
    off-support coordinates are zero at every equilibrium and stay pinned.
    """
    A = P.matrix
    n = A.cols
    support = [i for i in range(n) if P.support_mask[i]]
    rows = [[row[j] for j in support] for row in A.entries]
    rows.append([Fraction(1)] * len(support))
    rhs = [Fraction(0)] * A.rows + [Fraction(1)]
    solved = solve_affine(RationalMatrix(rows), rhs)
    assert solved is not None
    _, null = solved
    assert P.interior_point is not None
    v = [float(P.interior_point[j]) for j in support]
    m = len(support)

    def assemble(vals: Sequence[float]) -> tuple[float, ...]:
        full = [0.0] * n
        for j, x in zip(support, vals):
            full[j] = x
        return tuple(full)

    if not null:
        return assemble(v)
    basis = [[float(x) for x in b] for b in null]
    d = len(basis)
    floor = 1e-15
    for _ in range(200):
        grad_v = [-(math.log(max(x, floor)) + 1.0) for x in v]
        grad = [sum(b[i] * grad_v[i] for i in range(m)) for b in basis]
        gnorm = math.sqrt(sum(g * g for g in grad))
        if gnorm < 1e-12:
            break
        # Newton system: (B^T diag(1/v) B) step = grad
        hess = [
            [
                sum(basis[p][i] * basis[q][i] / max(v[i], floor) for i in range(m))
                for q in range(d)
            ]
            for p in range(d)
        ]
        step = _solve_float(hess, grad)
        if step is None:
            step = grad
        scale = 1.0
        improved = False
        h0 = _entropy_float(v, floor)
        for _ in range(60):
            trial = [
                v[i] + scale * sum(s * basis[p][i] for p, s in enumerate(step))
                for i in range(m)
            ]
            if min(trial) > 0 and _entropy_float(trial, floor) >= h0:
                v = trial
                improved = True
                break
            scale *= 0.5
        if not improved:
            break
    return assemble(v)


def _entropy_float(v: Sequence[float], floor: float) -> float:
    return -sum(x * math.log(max(x, floor)) for x in v if x > 0)


def _solve_float(mat: list[list[float]], rhs: list[float]) -> list[float] | None:
    n = len(mat)
    a = [row[:] + [r] for row, r in zip(mat, rhs)]
    for c in range(n):
        piv = max(range(c, n), key=lambda r: abs(a[r][c]))
        if abs(a[piv][c]) < 1e-300:
            return None
        a[c], a[piv] = a[piv], a[c]
        inv = 1.0 / a[c][c]
        for r in range(n):
            if r != c and a[r][c] != 0.0:
                f = a[r][c] * inv
                for j in range(c, n + 1):
                    a[r][j] -= f * a[c][j]
    return [a[r][n] / a[r][r] for r in range(n)]


def worst_case_equilibrium(
    P: EquilibriumPolytope, criterion: str = "min_ties"
) -> tuple[tuple, bool]:
    """Distribution used for imbalance statistics, with an exactness flag.

    min_ties minimizes sum(v**2) exactly (Fractions, flag True). max_entropy
    maximizes -sum(v ln v) numerically to 1e-10 on a deterministic schedule
    (floats, flag False) unless the polytope is a single point.
    """
    if criterion not in ("min_ties", "max_entropy"):
        raise ValueError("criterion must be 'min_ties' or 'max_entropy'")
    if P.is_empty:
        raise ValueError("empty polytope has no equilibrium")
    if P.is_single_point:
        return P.vertices[0], True
    if criterion == "min_ties":
        return _min_ties_point(P), True
    return _max_entropy_point(P), False

"""Exhaustive desk-scale verification of the maximal-imbalance theorem and the
even-order/structural lemmas, over all tournaments of the requested size.

Reports are plain dataclasses with deterministic JSON and Markdown renderings;
two runs produce byte-identical output. Playability verdicts use the kernel
polytope; strong connectivity is tallied alongside as a cross-check but never
substituted for it (strongness is necessary, not sufficient — see
StructuralLemmasReport.strong_but_unplayable_count).
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Callable, Sequence

import mpmath

from .construct import imbalanced_rps
from .equilibrium import equilibrium_polytope, payoff_matrix
from .imbalance import Majorization, majorizes, nash_ties, uniform_profile, ui_variance
from .rational import ParityClass, Vector, determinant, kernel_basis, parity, pfaffian
from .tournament import (
    canonical_form,
    degree_profile,
    is_strong,
    k_minimizing_check,
    landau_bound_check,
    tournament_from_canonical,
    _iso_classes,
)

BUDGET_ENV_VAR = "TOURNEYLAB_BUDGET_SECS"
ENTROPY_GUARD_BAND = mpmath.mpf("1e-30")
ENTROPY_PRECISION_BITS = 256


class BudgetExceededError(RuntimeError):
    """Raised when a verification run exhausts its time budget."""


class GuardBandError(RuntimeError):
    """Two distinct exact distributions whose entropies agree to within the
    guard band; the comparison needs manual review instead of a verdict."""


class _Deadline:
    def __init__(self, budget_secs: float | None):
        if budget_secs is None:
            raw = os.environ.get(BUDGET_ENV_VAR)
            budget_secs = float(raw) if raw else None
        self.expires = None if budget_secs is None else time.monotonic() + budget_secs

    def check(self) -> None:
        if self.expires is not None and time.monotonic() > self.expires:
            raise BudgetExceededError("verification time budget exceeded")


def _entropy_bits(masses: Sequence[Fraction]) -> mpmath.mpf:
    with mpmath.workprec(ENTROPY_PRECISION_BITS):
        total = mpmath.mpf(0)
        for m in masses:
            if m > 0:
                x = mpmath.mpf(m.numerator) / mpmath.mpf(m.denominator)
                total -= x * mpmath.log(x)
        return total


def compare_entropies(x: Sequence[Fraction], y: Sequence[Fraction]) -> int:
    """Sign of H(x) - H(y) for exact mass lists, with a 1e-30 guard band.

    Identical multisets compare equal exactly; distinct multisets whose 256-bit
    entropies land inside the guard band raise GuardBandError rather than
    returning a silent verdict.
    """
    if sorted(x) == sorted(y):
        return 0
    diff = _entropy_bits(x) - _entropy_bits(y)
    if abs(diff) < ENTROPY_GUARD_BAND:
        raise GuardBandError(
            "entropy comparison inside the guard band; manual review required"
        )
    return 1 if diff > 0 else -1


# ---------------------------------------------------------------------------
# per-class statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _ClassStats:
    packed: int
    wins_sorted: tuple[int, ...]
    playable: bool
    strong: bool
    ui_v: Fraction | None = None
    ties: Fraction | None = None
    score_masses: tuple[Fraction, ...] | None = None
    equilibrium_sorted: Vector | None = None


def _unique_positive_equilibrium(t) -> Vector | None:
    """The totally mixed equilibrium of a tournament game, or None.

    Works straight off the kernel: a kernel of dimension >= 2 cannot meet the
    simplex (zeroing a coordinate of any simplex kernel point would hand a
    nontrivial kernel to an even-order ±1 skew matrix, whose determinant is an
    odd square), so only the one-dimensional case needs scaling.
    """
    basis = kernel_basis(payoff_matrix(t))
    if len(basis) != 1:
        return None
    v = basis[0]
    total = sum(v)
    if total == 0:
        return None
    point = tuple(x / total for x in v)
    if any(x <= 0 for x in point):
        return None
    return point


def _class_stats(args: tuple[int, int]) -> _ClassStats:
    objects, packed = args
    t = tournament_from_canonical(objects, packed)
    profile = uniform_profile(t)
    wins_sorted = tuple(sorted(degree_profile(t).e_in))
    strong = is_strong(t)
    eq = _unique_positive_equilibrium(t)
    if eq is None:
        return _ClassStats(packed, wins_sorted, False, strong)
    return _ClassStats(
        packed,
        wins_sorted,
        True,
        strong,
        ui_v=ui_variance(profile),
        ties=nash_ties(eq),
        score_masses=tuple(profile.score_distribution.values()),
        equilibrium_sorted=tuple(sorted(eq, reverse=True)),
    )


def _map_jobs(
    fn: Callable, items: list, jobs: int, deadline: _Deadline
) -> list:
    if jobs <= 1:
        out = []
        for k, item in enumerate(items):
            if k % 64 == 0:
                deadline.check()
            out.append(fn(item))
        return out
    with Pool(processes=jobs) as pool:
        out = []
        for k, res in enumerate(pool.imap(fn, items, chunksize=32)):
            if k % 64 == 0:
                deadline.check()
            out.append(res)
        return out


# ---------------------------------------------------------------------------
# theorem verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StatisticVerdict:
    name: str
    construction_value: str
    best_competitor_value: str | None
    attained: bool
    unique: bool


@dataclass(frozen=True)
class MajorizationTally:
    strict: int
    equal: int
    no: int
    counterexamples: tuple[tuple[int, str], ...]  # (canonical form, sequence)


@dataclass(frozen=True)
class TheoremReport:
    n: int
    objects: int
    class_count: int
    playable_count: int
    construction_canonical: int
    champion_canonical: int
    champion_edges: tuple[tuple[int, int], ...]
    statistics: tuple[StatisticVerdict, ...]
    e_in_majorization: MajorizationTally
    equilibrium_majorization: MajorizationTally
    schur_violations: int
    unique_variance_and_ties: bool      # assertion (a)
    attains_entropy_extremes: bool      # assertion (b)
    e_in_strictly_majorizes: bool       # assertion (c)
    equilibrium_strictly_majorizes: bool  # assertion (d)

    @property
    def ok(self) -> bool:
        return (
            self.unique_variance_and_ties
            and self.attains_entropy_extremes
            and self.e_in_strictly_majorizes
            and self.equilibrium_strictly_majorizes
            and self.schur_violations == 0
        )

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "report": "theorem",
            "n": self.n,
            "objects": self.objects,
            "class_count": self.class_count,
            "playable_count": self.playable_count,
            "construction_canonical": self.construction_canonical,
            "champion_canonical": self.champion_canonical,
            "champion_edges": [list(e) for e in self.champion_edges],
            "statistics": [
                {
                    "name": s.name,
                    "construction_value": s.construction_value,
                    "best_competitor_value": s.best_competitor_value,
                    "attained": s.attained,
                    "unique": s.unique,
                }
                for s in self.statistics
            ],
            "e_in_majorization": _tally_dict(self.e_in_majorization),
            "equilibrium_majorization": _tally_dict(self.equilibrium_majorization),
            "schur_violations": self.schur_violations,
            "assertions": {
                "unique_variance_and_ties": self.unique_variance_and_ties,
                "attains_entropy_extremes": self.attains_entropy_extremes,
                "e_in_strictly_majorizes": self.e_in_strictly_majorizes,
                "equilibrium_strictly_majorizes": self.equilibrium_strictly_majorizes,
            },
            "ok": self.ok,
        }

    def to_markdown(self) -> str:
        lines = [
            f"# Maximal-imbalance theorem at {self.objects} objects",
            "",
            f"- isomorphism classes: {self.class_count}",
            f"- playable classes: {self.playable_count}",
            f"- construction canonical form: {self.construction_canonical}",
            f"- overall: {'PASS' if self.ok else 'FAIL'}",
            "",
            "| statistic | construction | best competitor | attained | unique |",
            "|---|---|---|---|---|",
        ]
        for s in self.statistics:
            lines.append(
                f"| {s.name} | {s.construction_value} | "
                f"{s.best_competitor_value or '-'} | {s.attained} | {s.unique} |"
            )
        lines += [
            "",
            _tally_markdown("e_in majorization", self.e_in_majorization),
            _tally_markdown("equilibrium majorization", self.equilibrium_majorization),
            f"- Schur spot-check violations: {self.schur_violations}",
        ]
        return "\n".join(lines) + "\n"


def _tally_dict(t: MajorizationTally) -> dict:
    return {
        "strict": t.strict,
        "equal": t.equal,
        "no": t.no,
        "counterexamples": [
            {"canonical": c, "sequence": seq} for c, seq in t.counterexamples
        ],
    }


def _tally_markdown(name: str, t: MajorizationTally) -> str:
    base = f"- {name}: strict={t.strict} equal={t.equal} no={t.no}"
    if t.counterexamples:
        details = "; ".join(f"class {c}: {seq}" for c, seq in t.counterexamples)
        base += f" (counterexamples: {details})"
    return base


def verify_theorem(
    n: int,
    allow_large: bool = False,
    jobs: int = 1,
    budget_secs: float | None = None,
) -> TheoremReport:
    """Exhaustively test the extremal claims for the (2n+1)-object construction.

    Checks, over every playable isomorphism class: (a) unique maximum of the
    payoff variance and of expected ties, (b) maximum score-entropy and
    minimum equilibrium entropy, (c)/(d) strict majorization of the
    construction's win and equilibrium sequences. n <= 3 by default; n = 4
    (9 objects) only with allow_large, and subject to the budget.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 4:
        raise ValueError("theorem verification is bounded at 9 objects")
    if n == 4 and not allow_large:
        raise BudgetExceededError(
            "9-object verification exceeds the default budget; pass allow_large"
        )
    deadline = _Deadline(budget_secs)
    objects = 2 * n + 1
    packed_classes = list(_iso_classes(objects, _check=deadline.check))
    stats: list[_ClassStats] = _map_jobs(
        _class_stats, [(objects, c) for c in packed_classes], jobs, deadline
    )
    playable = [s for s in stats if s.playable]
    cons_canon = canonical_form(imbalanced_rps(n))
    cons = next(s for s in playable if s.packed == cons_canon)
    others = [s for s in playable if s.packed != cons_canon]

    uiv_unique = all(s.ui_v < cons.ui_v for s in others)
    ties_unique = all(s.ties < cons.ties for s in others)
    uie_attained = all(
        compare_entropies(cons.score_masses, s.score_masses) >= 0 for s in others
    )
    ne_attained = all(
        compare_entropies(cons.equilibrium_sorted, s.equilibrium_sorted) <= 0
        for s in others
    )
    uie_unique = all(
        compare_entropies(cons.score_masses, s.score_masses) > 0 for s in others
    )
    ne_unique = all(
        compare_entropies(cons.equilibrium_sorted, s.equilibrium_sorted) < 0
        for s in others
    )

    def tally(key: Callable[[_ClassStats], Sequence]) -> MajorizationTally:
        counts = {Majorization.STRICT: 0, Majorization.EQUAL: 0, Majorization.NO: 0}
        bad: list[tuple[int, str]] = []
        for s in others:
            verdict = majorizes(key(cons), key(s))
            counts[verdict] += 1
            if verdict is not Majorization.STRICT:
                bad.append((s.packed, str([str(x) for x in sorted(key(s), reverse=True)])))
        return MajorizationTally(
            counts[Majorization.STRICT],
            counts[Majorization.EQUAL],
            counts[Majorization.NO],
            tuple(bad),
        )

    ein_tally = tally(lambda s: s.wins_sorted)
    eq_tally = tally(lambda s: s.equilibrium_sorted)

    schur_violations = 0
    for a in playable:
        deadline.check()
        for b in playable:
            if a.packed == b.packed:
                continue
            if majorizes(a.wins_sorted, b.wins_sorted) is Majorization.STRICT:
                if not a.ui_v > b.ui_v:
                    schur_violations += 1
            if (
                majorizes(a.equilibrium_sorted, b.equilibrium_sorted)
                is Majorization.STRICT
            ):
                if not a.ties > b.ties:
                    schur_violations += 1

    def frac(x: Fraction) -> str:
        return str(x)

    best_uiv = max((s.ui_v for s in others), default=None)
    best_ties = max((s.ties for s in others), default=None)
    statistics = (
        StatisticVerdict(
            "ui_variance",
            frac(cons.ui_v),
            frac(best_uiv) if best_uiv is not None else None,
            attained=all(s.ui_v <= cons.ui_v for s in others),
            unique=uiv_unique,
        ),
        StatisticVerdict(
            "nash_ties",
            frac(cons.ties),
            frac(best_ties) if best_ties is not None else None,
            attained=all(s.ties <= cons.ties for s in others),
            unique=ties_unique,
        ),
        StatisticVerdict(
            "ui_entropy",
            repr(_float_entropy(cons.score_masses)),
            repr(max((_float_entropy(s.score_masses) for s in others), default=None))
            if others
            else None,
            attained=uie_attained,
            unique=uie_unique,
        ),
        StatisticVerdict(
            "nash_entropy",
            repr(_float_entropy(cons.equilibrium_sorted)),
            repr(min((_float_entropy(s.equilibrium_sorted) for s in others), default=None))
            if others
            else None,
            attained=ne_attained,
            unique=ne_unique,
        ),
    )

    champion = max(playable, key=lambda s: (s.ui_v, -s.packed))
    champion_t = tournament_from_canonical(objects, champion.packed)
    return TheoremReport(
        n=n,
        objects=objects,
        class_count=len(stats),
        playable_count=len(playable),
        construction_canonical=cons_canon,
        champion_canonical=champion.packed,
        champion_edges=tuple(champion_t.edges()),
        statistics=statistics,
        e_in_majorization=ein_tally,
        equilibrium_majorization=eq_tally,
        schur_violations=schur_violations,
        unique_variance_and_ties=uiv_unique and ties_unique,
        attains_entropy_extremes=uie_attained and ne_attained,
        e_in_strictly_majorizes=ein_tally.equal == 0 and ein_tally.no == 0,
        equilibrium_strictly_majorizes=eq_tally.equal == 0 and eq_tally.no == 0,
    )


def _float_entropy(masses: Sequence[Fraction]) -> float:
    return -sum(float(m) * math.log(float(m)) for m in masses if m > 0) + 0.0


# ---------------------------------------------------------------------------
# even-order unplayability
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvenOrderResult:
    n: int
    tournament_count: int
    all_polytopes_empty: bool
    all_determinants_odd_squares: bool
    all_pfaffians_odd: bool
    failures: tuple[int, ...]  # packed masks


@dataclass(frozen=True)
class EvenUnplayabilityReport:
    max_n: int
    results: tuple[EvenOrderResult, ...]

    @property
    def ok(self) -> bool:
        return all(
            r.all_polytopes_empty
            and r.all_determinants_odd_squares
            and r.all_pfaffians_odd
            for r in self.results
        )

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "report": "even_unplayable",
            "max_n": self.max_n,
            "results": [
                {
                    "n": r.n,
                    "tournament_count": r.tournament_count,
                    "all_polytopes_empty": r.all_polytopes_empty,
                    "all_determinants_odd_squares": r.all_determinants_odd_squares,
                    "all_pfaffians_odd": r.all_pfaffians_odd,
                    "failures": list(r.failures),
                }
                for r in self.results
            ],
            "ok": self.ok,
        }

    def to_markdown(self) -> str:
        lines = [
            f"# Even-order unplayability up to {self.max_n} objects",
            "",
            f"- overall: {'PASS' if self.ok else 'FAIL'}",
            "",
            "| n | labeled tournaments | polytopes empty | det = odd^2 | pfaffian odd |",
            "|---|---|---|---|---|",
        ]
        for r in self.results:
            lines.append(
                f"| {r.n} | {r.tournament_count} | {r.all_polytopes_empty} | "
                f"{r.all_determinants_odd_squares} | {r.all_pfaffians_odd} |"
            )
        return "\n".join(lines) + "\n"


def _is_odd_square(x: Fraction) -> bool:
    num, den = x.numerator, x.denominator
    if num <= 0:
        return False
    a, b = math.isqrt(num), math.isqrt(den)
    return a * a == num and b * b == den and a % 2 == 1 and b % 2 == 1


def _even_batch(args: tuple[int, int, int]) -> tuple[int, list[int]]:
    n, start, stop = args
    failures: list[int] = []
    count = 0
    for mask in range(start, stop):
        t = tournament_from_canonical(n, mask)
        A = payoff_matrix(t)
        ok = (
            equilibrium_polytope(A).is_empty
            and _is_odd_square(determinant(A))
            and parity(pfaffian(A)) is ParityClass.ODD
        )
        count += 1
        if not ok:
            failures.append(mask)
    return count, failures


def verify_even_unplayable(
    max_n: int, jobs: int = 1, budget_secs: float | None = None
) -> EvenUnplayabilityReport:
    """Every labeled even tournament up to max_n: empty kernel polytope,
    determinant an odd square, Pfaffian odd."""
    if max_n > 6:
        raise ValueError("even-order exhaustion is bounded at 6 objects")
    deadline = _Deadline(budget_secs)
    results = []
    for n in range(2, max_n + 1, 2):
        total = 1 << (n * (n - 1) // 2)
        step = max(total // max(jobs * 8, 1), 1)
        batches = [(n, s, min(s + step, total)) for s in range(0, total, step)]
        outs = _map_jobs(_even_batch, batches, jobs, deadline)
        count = sum(c for c, _ in outs)
        failures = sorted(f for _, fs in outs for f in fs)
        results.append(
            EvenOrderResult(
                n=n,
                tournament_count=count,
                all_polytopes_empty=not failures,
                all_determinants_odd_squares=not failures,
                all_pfaffians_odd=not failures,
                failures=tuple(failures),
            )
        )
    return EvenUnplayabilityReport(max_n=max_n, results=tuple(results))


# ---------------------------------------------------------------------------
# structural lemmas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructuralLemmasReport:
    n: int
    class_count: int
    playable_count: int
    strong_count: int
    strong_but_unplayable_count: int
    strong_but_unplayable_examples: tuple[int, ...]
    landau_failures: tuple[int, ...]
    k_minimizing_failures: tuple[int, ...]
    max_probability_failures: tuple[int, ...]
    contrapositive_failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not (
            self.landau_failures
            or self.k_minimizing_failures
            or self.max_probability_failures
            or self.contrapositive_failures
        )

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "report": "structural",
            "n": self.n,
            "class_count": self.class_count,
            "playable_count": self.playable_count,
            "strong_count": self.strong_count,
            "strong_but_unplayable_count": self.strong_but_unplayable_count,
            "strong_but_unplayable_examples": list(self.strong_but_unplayable_examples),
            "landau_failures": list(self.landau_failures),
            "k_minimizing_failures": list(self.k_minimizing_failures),
            "max_probability_failures": list(self.max_probability_failures),
            "contrapositive_failures": list(self.contrapositive_failures),
            "ok": self.ok,
        }

    def to_markdown(self) -> str:
        return "\n".join(
            [
                f"# Structural conditions over {self.n}-object classes",
                "",
                f"- classes: {self.class_count} "
                f"(playable {self.playable_count}, strong {self.strong_count})",
                f"- strong but unplayable: {self.strong_but_unplayable_count}",
                f"- degree-prefix bound failures among playable: {len(self.landau_failures)}",
                f"- k-minimizing failures among playable: {len(self.k_minimizing_failures)}",
                f"- max-probability (1/3) failures: {len(self.max_probability_failures)}",
                f"- contrapositive failures: {len(self.contrapositive_failures)}",
                f"- overall: {'PASS' if self.ok else 'FAIL'}",
            ]
        ) + "\n"


def _structural_stats(args: tuple[int, int]) -> tuple[int, bool, bool, bool, bool, Fraction | None]:
    objects, packed = args
    t = tournament_from_canonical(objects, packed)
    eq = _unique_positive_equilibrium(t)
    strong = is_strong(t)
    landau = landau_bound_check(t)
    m = (objects - 1) // 2
    kmin_all = all(k_minimizing_check(t, k) for k in range(1, m + 2))
    max_prob = max(eq) if eq is not None else None
    return packed, eq is not None, strong, landau, kmin_all, max_prob


def verify_structural_lemmas(
    n: int, jobs: int = 1, budget_secs: float | None = None
) -> StructuralLemmasReport:
    """Playable classes must meet the degree-prefix bounds, every k-minimizing
    condition, and the 1/3 probability cap; classes failing the k-minimizing
    condition must be unplayable."""
    if n % 2 == 0 or n > 7:
        raise ValueError("structural verification runs on odd n <= 7")
    deadline = _Deadline(budget_secs)
    packed_classes = list(_iso_classes(n, _check=deadline.check))
    rows = _map_jobs(
        _structural_stats, [(n, c) for c in packed_classes], jobs, deadline
    )
    landau_fail, kmin_fail, prob_fail, contra_fail = [], [], [], []
    strong_unplayable = []
    playable_count = strong_count = 0
    third = Fraction(1, 3)
    for packed, playable, strong, landau, kmin_all, max_prob in rows:
        if strong:
            strong_count += 1
        if playable:
            playable_count += 1
            if not landau:
                landau_fail.append(packed)
            if not kmin_all:
                kmin_fail.append(packed)
            if max_prob is not None and max_prob > third:
                prob_fail.append(packed)
        else:
            if strong:
                strong_unplayable.append(packed)
        if not kmin_all and playable:
            contra_fail.append(packed)
    return StructuralLemmasReport(
        n=n,
        class_count=len(rows),
        playable_count=playable_count,
        strong_count=strong_count,
        strong_but_unplayable_count=len(strong_unplayable),
        strong_but_unplayable_examples=tuple(strong_unplayable[:5]),
        landau_failures=tuple(landau_fail),
        k_minimizing_failures=tuple(kmin_fail),
        max_probability_failures=tuple(prob_fail),
        contrapositive_failures=tuple(contra_fail),
    )

"""tourneylab: exact-arithmetic analysis of rock-paper-scissors games on
tournaments — equilibria, playability, imbalance statistics, extremal
constructions, blow-ups, and exhaustive small-case verification."""

from .construct import (
    blow_up,
    blow_up_equilibrium,
    blow_up_matrix,
    classic_cycle,
    imbalanced_equilibrium_closed_form,
    imbalanced_rps,
    nrps_closed_forms,
)
from .equilibrium import (
    EquilibriumPolytope,
    Playability,
    PlayabilityReport,
    classify_playability,
    equilibrium_polytope,
    find_dominated,
    payoff_matrix,
    worst_case_equilibrium,
)
from .imbalance import (
    ExtendedComparison,
    ExtendedSequence,
    ExtendedVerdict,
    ImbalanceReport,
    Majorization,
    UniformPayoffProfile,
    extended_weak_majorizes,
    imbalance_report,
    majorizes,
    nash_entropy,
    nash_ties,
    ui_entropy,
    ui_theil,
    ui_variance,
    uniform_profile,
)
from .rational import (
    ParityClass,
    Rational,
    RationalMatrix,
    determinant,
    kernel_basis,
    parity,
    pfaffian,
)
from .tournament import (
    DegreeProfile,
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
from .verify import (
    BudgetExceededError,
    EvenUnplayabilityReport,
    GuardBandError,
    StructuralLemmasReport,
    TheoremReport,
    compare_entropies,
    verify_even_unplayable,
    verify_structural_lemmas,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DegreeProfile",
    "EdgeListParseError",
    "EquilibriumPolytope",
    "EvenUnplayabilityReport",
    "ExtendedComparison",
    "ExtendedSequence",
    "ExtendedVerdict",
    "GuardBandError",
    "ImbalanceReport",
    "Majorization",
    "ParityClass",
    "Playability",
    "PlayabilityReport",
    "Rational",
    "RationalMatrix",
    "StructuralLemmasReport",
    "TheoremReport",
    "Tournament",
    "UniformPayoffProfile",
    "blow_up",
    "blow_up_equilibrium",
    "blow_up_matrix",
    "canonical_form",
    "classic_cycle",
    "classify_playability",
    "compare_entropies",
    "degree_profile",
    "determinant",
    "enumerate_tournaments",
    "equilibrium_polytope",
    "extended_weak_majorizes",
    "find_dominated",
    "format_edge_list",
    "from_edge_list",
    "imbalance_report",
    "imbalanced_equilibrium_closed_form",
    "imbalanced_rps",
    "is_strong",
    "k_minimizing_check",
    "kernel_basis",
    "landau_bound_check",
    "majorizes",
    "nash_entropy",
    "nash_ties",
    "nrps_closed_forms",
    "parity",
    "parse_edge_list",
    "payoff_matrix",
    "pfaffian",
    "ui_entropy",
    "ui_theil",
    "ui_variance",
    "uniform_profile",
    "verify_even_unplayable",
    "verify_structural_lemmas",
    "verify_theorem",
    "worst_case_equilibrium",
]

"""Big-integer toolkit for the quartic equations over Heegner discriminants.

The package splits into small layers: arith (primality, budgeted
factoring), pell (the x^2 - d y^2 = 1 sequences and their splittings),
normform (binary quadratic forms and representability verdicts),
quartic (the six equations and their Pell parametrizations), scan (the
systematic simultaneous-representability search), growth (exact checks
of the exponential-growth relations), and verify (the bundled
end-to-end suite, also reachable as `rta verify-paper`).
"""

from .arith import (
    Budget,
    DEFAULT_BUDGET,
    Factorization,
    HARD_BUDGET,
    factor,
    is_prime,
    is_square,
    jacobi,
    perfect_power,
    small_primes,
    v2,
)
from .fixtures import load_solutions
from .growth import (
    JRelationParams,
    MatiyasevichReport,
    check_growth_lower_bound,
    check_matiyasevich,
    check_robinson,
    interval_even,
    j_holds,
    j_params,
    odd_quotient_divides,
)
from .normform import (
    FormVariant,
    PrimeClass,
    ReprVerdict,
    Witness,
    classify_prime,
    compose_witnesses,
    decide_by_factoring,
    find_witness,
    poison_in,
    representable,
)
from .pell import (
    HEEGNER_DS,
    HeegnerParams,
    NPellPair,
    OddIndexSplit,
    PellPair,
    compose,
    double,
    next_pair,
    npell,
    npell_iter,
    nth,
    odd_index_split,
    params,
    power_of_two_index,
)
from .quartic import (
    QUARTIC_DS,
    PellSystemSolution,
    QuarticSpec,
    QuarticTuple,
    evaluate,
    is_nontrivial,
    is_solution,
    pell_from_solution,
    pell_index_of,
    quartic_spec,
    solution_from_pell,
)
from .scan import Overall, SearchReport, residue_prefilter_d2, scan_d2, scan_odd_d
from .verify import CheckResult, all_checks, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "CheckResult",
    "DEFAULT_BUDGET",
    "Factorization",
    "FormVariant",
    "HARD_BUDGET",
    "HEEGNER_DS",
    "HeegnerParams",
    "JRelationParams",
    "MatiyasevichReport",
    "NPellPair",
    "OddIndexSplit",
    "Overall",
    "PellPair",
    "PellSystemSolution",
    "PrimeClass",
    "QUARTIC_DS",
    "QuarticSpec",
    "QuarticTuple",
    "ReprVerdict",
    "SearchReport",
    "Witness",
    "all_checks",
    "check_growth_lower_bound",
    "check_matiyasevich",
    "check_robinson",
    "classify_prime",
    "compose",
    "compose_witnesses",
    "decide_by_factoring",
    "double",
    "evaluate",
    "factor",
    "find_witness",
    "interval_even",
    "is_nontrivial",
    "is_prime",
    "is_solution",
    "is_square",
    "j_holds",
    "j_params",
    "jacobi",
    "load_solutions",
    "next_pair",
    "npell",
    "npell_iter",
    "nth",
    "odd_index_split",
    "odd_quotient_divides",
    "params",
    "pell_from_solution",
    "pell_index_of",
    "perfect_power",
    "poison_in",
    "power_of_two_index",
    "quartic_spec",
    "representable",
    "residue_prefilter_d2",
    "run_all",
    "run_check",
    "scan_d2",
    "scan_odd_d",
    "small_primes",
    "solution_from_pell",
    "v2",
]

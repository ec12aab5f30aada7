"""monoforge: gadget construction, reduction, solving and certificate
checking for balanced monotone 3-SAT and two-level quantified 3-SAT."""

from .formula import (
    Assignment,
    Clause,
    CnfFormula,
    FormulaError,
    InstanceClass,
    InvalidInstanceError,
    OccurrenceProfile,
    ValidationReport,
    Violation,
    canonical_clause,
    canonicalize,
    cnf,
    map_variables,
    negate_formula,
    occurrence_profile,
    satisfies,
    simplify_under,
    validate_class,
)
from .fileio import (
    ParseError,
    formula_from_json,
    formula_to_json,
    read_clause_list,
    read_dimacs,
    write_clause_list,
    write_dimacs,
)
from .solver import SolveResult, Solver, Status, solve
from .models import ModelCount, ModelEnumeration, count_models, enumerate_models
from .rup import RupCheck, RupParseError, RupProof, RupStep, parse_rup, verify_rup
from .gadgets import (
    FreshVarAllocator,
    GadgetInstantiation,
    build_core8,
    build_F2,
    build_F3,
    build_frakM,
    build_frakMbar,
    build_G,
    build_H,
    build_M,
    build_M_enforcer,
    build_Mbar_enforcer,
    build_N,
    build_S,
    build_Sbar,
    build_U,
    build_U_NAE,
    build_y_core,
    build_z_core,
)
from .reductions import ReductionOutput, reduce_3sat22_to_mono22, reduce_star22_to_mono22
from .qbf import (
    BalanceSpec,
    PadVariant,
    Qbf2Formula,
    QbfResult,
    QbfValue,
    build_Q1mon,
    build_Q3,
    monotonize,
    pad_to_balance,
    qbf_truth,
    read_qdimacs,
    transform_1122,
    transform_2222,
    triple_copy,
    validate_balanced,
    write_qdimacs,
)
from .nae import (
    ColoringError,
    VariableGraph,
    complete_component_check,
    four_coloring,
    is_nae_satisfied,
    nae_solve_e2,
    solve_complement_closed_22,
    strip_trivial_pairs,
    variable_graph,
)
from .miner import MinerConfig, SearchTrace, mine, random_candidate, swap_move
from .generate import (
    GenerationError,
    random_3sat22,
    random_balanced_qbf,
    random_mono_22,
    random_mono_3sat_star22,
    random_mono_nae_e2,
)

__version__ = "0.1.0"

"""Pareto-optimal committees under weak-order preferences.

Compare committees under five set extensions, test and certify Pareto
optimality (exhaustively or with polynomial algorithms where they exist),
and elect efficient committees with serial-dictatorship mechanisms.
"""

from .errors import (
    CommitteeError,
    InstanceTooLarge,
    NonImprovingStep,
    ParseError,
    PreconditionViolated,
    SizeMismatch,
    ValidationError,
)
from .extensions import Comparison, Extension, compare, signature
from .graph import BipartiteGraph, max_matching, min_vertex_cover
from .mechanisms import (
    Manipulation,
    MechanismId,
    best_greedy_strict,
    committee_sd,
    fair_sd,
    run_mechanism,
    sp_check,
    worst_sd,
)
from .model import (
    Profile,
    WeakOrder,
    format_profile,
    is_dichotomous,
    is_strict,
    make_committee,
    parse_profile,
    rank_vector,
    topwidth,
)
from .oracle import (
    Verdict,
    enumerate_efficient,
    improvement_chain,
    pareto_dominates,
    verify_bruteforce,
)
from .polyalgos import (
    Tw2Decomposition,
    rs_improve_dichotomous_tw2,
    rs_score_elect,
    tw2_decomposition,
    worst_verify,
)
from .reductions import (
    SetSystem,
    SimpleGraph,
    brute_hitting_set,
    brute_vertex_cover,
    profile_from_hitting_set,
    profile_from_vertex_cover,
)
from .relations import RelationsReport, run_relations

__version__ = "0.1.0"

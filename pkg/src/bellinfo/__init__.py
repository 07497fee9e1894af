"""Bell-state measurement statistics for spectrum {1, -1} gate observables.

Builds the joint outcome distribution of two gates measured on a Bell state,
the entropy and information flow between the two binary trials, and decides
when ensembles of gates can be pairwise informationally independent.
"""
from ._core import BACKEND
from .errors import BudgetExceeded, DomainError, OracleMismatch
from .independence import (
    Configuration,
    DependenceReport,
    Ensemble,
    ImpossibilityReport,
    IndependenceLocus,
    certify_ensemble,
    independence_locus,
    is_independent,
    search_independent_configurations,
    triple_impossibility_check,
)
from .information import (
    InfoReport,
    ThetaParam,
    degree_of_dependence,
    entropy,
    entropy_of_distribution,
    info_report,
    information_flow,
    mutual_information,
    theta_param,
)
from .measurement import (
    JointDistribution,
    MarginalPair,
    azimuth_invariance_check,
    born_joint_distribution,
    closed_form_distribution,
    correlation,
    marginal,
    sample_outcomes,
)
from .operators import (
    BipartiteState,
    EigenFrame,
    GateAngles,
    HermitianGate,
    LiftedObservable,
    bell_state,
    eigenframe,
    inner,
    lift,
    make_gate,
    tensor_observable,
)

__version__ = "0.1.0"

"""Exact genus, Hilbert-function and speciality bounds for curves in P^4
satisfying a flag condition of type (s, t), plus finite verification
campaigns for the supporting inequalities.
"""

from flaggenus.errors import (
    DomainAuditError,
    FlagGenusError,
    FormulaMismatchError,
    PreconditionError,
    RangeError,
    ValidationError,
)
from flaggenus.core import Decomposition, FlagParams, decompose, restricted_binomial
from flaggenus.bounds import (
    BoundReport,
    bound_report,
    ci_genus,
    coeff_A,
    coeff_A_duke,
    coeff_A_tau,
    extremal_space_genus_P,
    genus_bound_duke,
    genus_bound_G,
    genus_bound_G_tau,
    halphen_H,
    R_const,
    rho,
    speciality_bounds,
)
from flaggenus.hilbert import (
    HilbertProfile,
    caractere,
    ci_hilbert,
    ci_speciality,
    cumulative_h_sigma,
    genus_from_hilbert,
    hilbert_profile,
    plane_section_h,
    tail_deficiency,
)
from flaggenus.classify import CaseLabel, classify, theorem2_estimate

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CaseLabel",
    "Decomposition",
    "DomainAuditError",
    "FlagGenusError",
    "FlagParams",
    "FormulaMismatchError",
    "HilbertProfile",
    "PreconditionError",
    "R_const",
    "RangeError",
    "ValidationError",
    "bound_report",
    "caractere",
    "ci_genus",
    "ci_hilbert",
    "ci_speciality",
    "classify",
    "coeff_A",
    "coeff_A_duke",
    "coeff_A_tau",
    "cumulative_h_sigma",
    "decompose",
    "extremal_space_genus_P",
    "genus_bound_G",
    "genus_bound_G_tau",
    "genus_bound_duke",
    "genus_from_hilbert",
    "halphen_H",
    "hilbert_profile",
    "plane_section_h",
    "restricted_binomial",
    "rho",
    "speciality_bounds",
    "tail_deficiency",
    "theorem2_estimate",
]

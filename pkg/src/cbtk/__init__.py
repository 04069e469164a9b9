"""Exact-arithmetic toolkit for Cayley-Bacharach point thresholds of
complete intersections, with finite-field verification of the underlying
Hilbert-function inequalities."""

from .monomials import (
    HilbertTable,
    Monomial,
    MonomialIdeal,
    NotArtinianError,
    artinian_multiplicity,
    ci_hilbert,
    format_ideal,
    format_monomial,
    hilbert_function,
    lex_compare,
    minimalize,
    parse_ideal,
    parse_monomial,
    pure_power_ideal,
    standard_monomials,
)
from .lpp import (
    AciParams,
    c_sequence,
    check_degrees,
    delta_m,
    lpp_ideal,
    lpp_monomial,
    lpp_multiplicity,
    phi,
    sigma,
)
from .bounds import (
    BoundEntry,
    BoundReport,
    NotApplicableError,
    best_threshold,
    bound_codim3,
    bound_delta2,
    bound_engheta_hmmcs,
    bound_phi_chain,
    bound_symmetric,
    egh_conjectural,
    hf_profile,
)
from .gfp import Form, GradedPieceTooLargeError, graded_rank_hf, rank_mod_p
from .verify import (
    AciInstance,
    CampaignConfig,
    CampaignReport,
    CertificationFailedError,
    VerificationError,
    check_hf_dominance,
    check_linkage_symmetry,
    exhaustive_monomial_max,
    random_aci,
    random_regular_sequence,
    run_campaign,
)

__all__ = [
    "AciInstance",
    "BoundEntry",
    "BoundReport",
    "CampaignConfig",
    "CampaignReport",
    "CertificationFailedError",
    "Form",
    "GradedPieceTooLargeError",
    "NotApplicableError",
    "VerificationError",
    "best_threshold",
    "bound_codim3",
    "bound_delta2",
    "bound_engheta_hmmcs",
    "bound_phi_chain",
    "bound_symmetric",
    "check_hf_dominance",
    "check_linkage_symmetry",
    "egh_conjectural",
    "exhaustive_monomial_max",
    "graded_rank_hf",
    "hf_profile",
    "random_aci",
    "random_regular_sequence",
    "rank_mod_p",
    "run_campaign",
    "AciParams",
    "HilbertTable",
    "Monomial",
    "MonomialIdeal",
    "NotArtinianError",
    "artinian_multiplicity",
    "c_sequence",
    "check_degrees",
    "ci_hilbert",
    "delta_m",
    "format_ideal",
    "format_monomial",
    "hilbert_function",
    "lex_compare",
    "lpp_ideal",
    "lpp_monomial",
    "lpp_multiplicity",
    "minimalize",
    "parse_ideal",
    "parse_monomial",
    "phi",
    "pure_power_ideal",
    "sigma",
    "standard_monomials",
]

__version__ = "0.1.0"

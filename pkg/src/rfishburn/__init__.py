"""Exact arithmetic for generalized Fishburn coefficient sequences:
congruences, p-dissections, and empirical mod-p relation spaces."""

from .congruence import (
    CongruenceRelation,
    RelationSpace,
    ResidueSet,
    membership,
    relation_family,
    relation_space,
    s_set,
    s_star,
    t_set,
    t_star,
    verify_congruence,
    verify_relation,
)
from .dissection import (
    alpha,
    dissect,
    gamma,
    i0_of,
    verify_alpha_i0,
    verify_gamma_identity,
    verify_triangular_inversion,
)
from .fishburn import XiSequence, partial_sum_F, xi_bar_p, xi_r, xi_via_glaisher
from .reports import VerificationReport
from .series import ExactPoly, TruncatedSeries
from .special import (
    bernoulli_number,
    bernoulli_poly,
    c_array,
    chi12,
    f_poly,
    gen_stirling1,
    glaisher_T,
    legendre,
)

__version__ = "0.1.0"

__all__ = [
    "CongruenceRelation",
    "ExactPoly",
    "RelationSpace",
    "ResidueSet",
    "TruncatedSeries",
    "VerificationReport",
    "XiSequence",
    "alpha",
    "bernoulli_number",
    "bernoulli_poly",
    "c_array",
    "chi12",
    "dissect",
    "f_poly",
    "gamma",
    "gen_stirling1",
    "glaisher_T",
    "i0_of",
    "legendre",
    "membership",
    "partial_sum_F",
    "relation_family",
    "relation_space",
    "s_set",
    "s_star",
    "t_set",
    "t_star",
    "verify_alpha_i0",
    "verify_congruence",
    "verify_gamma_identity",
    "verify_relation",
    "verify_triangular_inversion",
    "xi_bar_p",
    "xi_r",
    "xi_via_glaisher",
    "__version__",
]

"""The generic pair (K, E) with E = acl(Q(e...)) and K = acl(E(t...))."""

from .catalog import CATALOG, CatalogPoint, Sampler, catalog, enumerate_tame
from .emit import (
    EmitError, block_locus, emit_chi, emit_minimal_tame, emit_theta, minimal_tame_data,
    theta_witness,
)
from .lam import e_independent, e_rank, lambda_eval
from .model import PairElement, element, elements, is_e_name, is_t_name
from .rank import (
    Base, BaseError, LambdaGenerators, OrdinalRank, homogeneous_vanishing_ideal,
    lambda_field_generators, rm_rank, transcendence_degree, vanishing_ideal,
)
from .rewrite import RewriteError, disjoin_conjugates, rewrite_lambda_elim, substitute_parameter
from .tame import (
    TameFormula, TameFormulaError, make_formula, parse_formula, tame_conjoin, tame_eval,
    tame_to_zariski_on_E, top, zariski_holds,
)

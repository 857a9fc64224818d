"""Finite-group engine for chief-series subgroup criteria.

Permutation and table groups with a small structure library (Sylow
subgroups, chief series, formations) drive one central question: does a
subgroup admit a chief series on which every factor passes the
normalizer-index test?  `satisfies_partial_pi` answers it with a
replayable witness or refusal, and `verify_theorem`/`run_corpus` sweep
the structural theorems built on that property over concrete groups.
"""

from .arith import is_pi_number, is_prime, p_part, prime_set
from .catalog import (
    build_group,
    catalog,
    corpus_names,
    from_description,
    group_names,
    two_group_names,
)
from .formations import Formation, U, Up, f_hypercenter, is_factor_central
from .groups import (
    FiniteGroup,
    LimitExceeded,
    Limits,
    PermGroup,
    StructureFingerprint,
    Subgroup,
    TableGroup,
    recognize_small,
    semidirect_product,
    subgroup_generated,
)
from .partialpi import (
    FactorCheck,
    PiRefusal,
    PiWitness,
    factor_condition,
    satisfies_partial_pi,
    satisfies_partial_pi_within,
    witness_series_through,
)
from .perm import Perm
from .series import (
    ChiefSeries,
    chief_factors,
    fitting_subgroup,
    hypercenter,
    is_p_soluble,
    is_p_supersoluble,
    is_soluble,
    is_supersoluble,
    minimal_normal_subgroups,
    normal_subgroups,
    one_chief_series,
    p_length,
    socle,
)
from .structure import (
    centralizer,
    centre,
    derived_subgroup,
    frattini_subgroup_of_p_subgroup,
    normalizer,
    p_residual,
)
from .sylow import (
    cyclic_subgroups_of_order,
    is_quaternion_free,
    maximal_subgroups_of_p_group,
    sylow_subgroup,
    two_maximal_subgroups_of_p_group,
    two_minimal_subgroups,
)
from .verify import THEOREM_IDS, TheoremReport, run_corpus, verify_all, verify_theorem

__all__ = [
    "build_group",
    "catalog",
    "centralizer",
    "centre",
    "chief_factors",
    "ChiefSeries",
    "corpus_names",
    "cyclic_subgroups_of_order",
    "derived_subgroup",
    "f_hypercenter",
    "factor_condition",
    "FactorCheck",
    "FiniteGroup",
    "fitting_subgroup",
    "Formation",
    "frattini_subgroup_of_p_subgroup",
    "from_description",
    "group_names",
    "hypercenter",
    "is_factor_central",
    "is_p_soluble",
    "is_p_supersoluble",
    "is_pi_number",
    "is_prime",
    "is_quaternion_free",
    "is_soluble",
    "is_supersoluble",
    "LimitExceeded",
    "Limits",
    "maximal_subgroups_of_p_group",
    "minimal_normal_subgroups",
    "normal_subgroups",
    "normalizer",
    "one_chief_series",
    "p_length",
    "p_part",
    "p_residual",
    "Perm",
    "PermGroup",
    "PiRefusal",
    "PiWitness",
    "prime_set",
    "recognize_small",
    "run_corpus",
    "satisfies_partial_pi",
    "satisfies_partial_pi_within",
    "semidirect_product",
    "socle",
    "StructureFingerprint",
    "Subgroup",
    "subgroup_generated",
    "sylow_subgroup",
    "TableGroup",
    "THEOREM_IDS",
    "TheoremReport",
    "two_group_names",
    "two_maximal_subgroups_of_p_group",
    "two_minimal_subgroups",
    "U",
    "Up",
    "verify_all",
    "verify_theorem",
    "witness_series_through",
]

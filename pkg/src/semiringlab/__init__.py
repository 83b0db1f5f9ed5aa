"""Workbench for finite additively idempotent semirings.

Core objects: operation-table semirings, certified congruence partitions,
materialized matrix semirings, the generator families, and executable checks
of the simplicity / subdirect-irreducibility characterizations.
"""

from .checkers import (
    ConditionVerdict,
    CrossCheckReport,
    check_downward_directed,
    check_greatest_not_absorbing,
    check_matrix_si_criterion,
    check_padded_separation,
    check_si_consequences,
    check_si_criterion,
    check_two_element,
    check_two_sided_separation,
    crosscheck,
    enumerate_small,
    mv_separator_witness,
    tropical_witness,
)
from .congruence import (
    Monolith,
    Partition,
    hat_congruence,
    is_congruence,
    is_congruence_simple,
    is_subdirectly_irreducible,
    lambda_rho,
    monolith,
    principal_congruence,
    tilde_congruence,
)
from .constructions import (
    FiniteLattice,
    adjoin_least,
    adjoin_unity,
    corner,
    gen_boolean,
    gen_end0,
    gen_l2,
    gen_lukasiewicz,
    gen_xl,
    lattice_from_order,
    load_lattice,
)
from .core import (
    ClassFlags,
    ElementProfile,
    FiniteSemiring,
    NaturalOrder,
    classify,
    dump_semiring,
    element_profile,
    is_isomorphic,
    load_semiring,
    natural_order,
    semiring_from_dict,
    verify_axioms,
)
from .errors import (
    CrossCheckError,
    DegenerateInputError,
    InputError,
    PreconditionError,
    SizeLimitError,
    TableFormatError,
)
from .lexgroup import (
    GROUP_UNIT,
    LEAST_ABOVE_UNIT,
    LexGroupElement,
    lex_cmp,
    lex_inv,
    lex_join,
    lex_meet,
    lex_mul,
    mv_product,
    sample_interval,
)
from .matrixring import (
    MatrixSemiring,
    WitnessChain,
    const_embed,
    extract_constant_pair,
    matrix_semiring,
)

__version__ = "0.1.0"

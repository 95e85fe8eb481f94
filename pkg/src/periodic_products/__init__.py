"""Computable layer of n-periodic products of finite groups.

Free-product word calculus, the rank-1 elementary-period criterion, and
theorem-backed verdicts (inheritably normal subgroups, simplicity, the
Hopfian property) for products of finite factors.
"""

from .description import ProductSpec, load_group, load_product, parse_product
from .errors import (
    BadReference,
    BoundExceeded,
    CriterionFails,
    FamilyMismatch,
    InvalidInput,
    InvariantViolation,
    NotAGroup,
    NotCertified,
    NotNormal,
    ParseError,
    PeriodicProductError,
    SideConditionViolated,
    StrictViolation,
)
from .finite_group import (
    FiniteGroup,
    SubgroupSet,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    enumerate_normal_subgroups,
    exponent_divides,
    involutions,
    normal_closure,
    power_subgroup,
    quaternion,
    quotient,
    subgroup_as_group,
    subgroup_generated,
    symmetric,
)
from .periods import (
    NinePower,
    PeriodClass,
    PeriodTag,
    Relation,
    classify_rank1,
    enumerate_certified,
    find_nine_power,
    relation_for,
)
from .theorems import (
    Answer,
    ProofBindings,
    Question,
    Verdict,
    congruence_check,
    corollary1_scan,
    corollary3_verdict,
    global_normal_witness,
    hopfian_verdict,
    inheritably_factorizable_verdict,
    inheritably_normal_verdict,
    proof_word_suite,
    simplicity_verdict,
)
from .words import (
    CyclicWord,
    FactorFamily,
    Syllable,
    Word,
    cyclic_reduce,
    deletion_retraction,
    induced_quotient_hom,
    invert,
    is_conjugate,
    is_involution,
    multiply,
    parse_word,
    power,
    reduce,
    torsion_core,
    two_involution_witness,
)

__version__ = "0.1.0"

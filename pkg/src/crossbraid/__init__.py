"""Exact enumeration of crossed braidings and enrichment obstructions."""

from .errors import (
    BetaNotCocycle,
    BudgetExceeded,
    CrossbraidError,
    DegreeTooHigh,
    GroupTooLarge,
    InvalidElement,
    InvalidGrading,
    NonTrivialAction,
    NotAbelian,
    NotACocycle,
    NotAGroup,
    NotAHomomorphism,
    NotCentral,
    NotNormal,
    NotSurjective,
    ParentMismatch,
    UnknownBuiltin,
)
from .exact import (
    CongruenceSolution,
    SmithDecomposition,
    UnityExponent,
    diagonalize_mod,
    smith_normal_form,
    solve_congruences,
)
from .groups import (
    DualGroup,
    FiniteGroup,
    GroupHom,
    Subgroup,
    abelian_basis,
    all_subgroups,
    annihilator,
    build_group,
    builtin_group,
    center,
    centralizer,
    closure,
    commuting_normal_pairs,
    conjugacy_classes,
    count_homs_to_abelian,
    cyclic,
    derived_subgroup,
    dihedral,
    dual_group,
    enumerate_homs_to_abelian,
    from_generators,
    is_isomorphic,
    is_normal,
    normal_subgroups,
    parse_permutation,
    product_group,
    quaternion,
    quotient,
    subgroup_as_group,
    symmetric,
    trivial_group,
)
from .cohomology import (
    CoefficientModule,
    Cochain,
    CohomologyGroup,
    cohomology_group,
    count_splittings,
    differential,
    is_coboundary,
    is_cocycle,
    mu_module,
    pushforward,
    random_cochain,
    trivial_module,
)
from .twisted_center import (
    CenterCensus,
    InvertiblesOfCenter,
    SimpleLabel,
    TwistedGroupData,
    beta,
    beta_restricted_cocycle,
    invertibles_of_center,
    simple_census,
)
from .subcats import (
    BicharacterReport,
    OmegaBicharacter,
    SubcatData,
    centralizer_subcat,
    contains,
    enumerate_subcats,
    fpdim,
    verify_bicharacter,
    working_modulus,
)
from .braidings import (
    CrossedBraidingCertificate,
    GradingSpec,
    TheoremChecks,
    check_theorem_conditions,
    enumerate_pointed,
    enumerate_rep,
    gradings_of_rep,
)
from .obstructions import (
    ExtensionData,
    FiberedReport,
    ObstructionReport,
    extension_cocycle,
    fibered_enrichment_extends,
    fully_faithful_obstruction,
    zesting_lift_exists,
)
from .serialize import (
    H3_BATTERY,
    certificate_to_json,
    cochain_from_json,
    cochain_to_json,
    dump_json,
    grading_to_json,
    group_from_json,
    group_to_json,
    load_h3_fixture,
    subcat_to_json,
)

__version__ = "0.1.0"

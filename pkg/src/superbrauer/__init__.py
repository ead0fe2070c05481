"""Exact-arithmetic Brauer groups and lazy cohomology of modified supergroup
algebras k[G] (x) Lambda(V) with triangular structure R_u."""

from .errors import (
    BudgetExceeded,
    CapExceeded,
    E8Refused,
    NotCocycle,
    NotInvariant,
    NotInvertible,
    NotMinusOne,
    NotSplit,
    NotSymmetric,
    ParseError,
    SuperbrauerError,
    TrivialInvolution,
    VerificationFailed,
)
from .groups import (
    AbelianInvariants,
    CentralInvolution,
    FiniteGroup,
    GroupCharacter,
    QuotientData,
    abelianization,
    all_characters,
    close_generators,
    cyclic_group,
    direct_product,
    group_from_table,
    load_group_file,
    parse_group_spec,
    quotient_by_central_involution,
    serialize_group,
    splitting_character,
    symmetric_group,
)
from .cohomology import (
    CohomologyClass,
    CohomologyGroup,
    CoefficientModule,
    Cochain2,
    coboundary,
    cochain_from_sparse,
    h2,
    h2_closed_field,
    h2_real_closed,
    inflation,
    is_cocycle,
    restriction,
    restriction_square_class,
    transgression,
    u_subgroup,
)
from .forms import (
    Representation,
    SymFormSpace,
    acts_as_minus_one,
    invariant_symmetric_forms,
    is_invariant_form,
)
from .sharp import (
    ALG_CLOSED,
    REAL_CLOSED,
    BMElement,
    BMGroup,
    FieldDescriptor,
    QGroup,
    QkGElement,
    SharpGroup,
    TwistedGroupAlgebra,
    ZGrading,
    abelian_invariants_from_table,
    bm_group,
    field_from_name,
    h2_sharp,
    q_group,
    quaternion_symbol,
    sharp,
    sharp_inverse,
    theta,
    twisted_group_algebra,
)
from .supergroup import (
    BMSupergroup,
    HCochain2,
    LazyCohomology,
    SupergroupAlgebra,
    VerifyReport,
    bm_supergroup,
    build_en,
    build_supergroup,
    convolve,
    dual_r_matrix,
    eps_tensor_eps,
    is_convolution_invertible,
    is_lazy,
    is_left_cocycle,
    is_right_cocycle,
    lambda_cocycle,
    lazy_cohomology,
    omega_sigma,
    r_matrix_RA,
    r_u,
    verify_hopf,
    verify_quasitriangular,
    verify_triangular,
)
from .weyl import (
    GroupDatum,
    RootSystemType,
    TableRow,
    WeylGroupData,
    build_weyl,
    group_datum,
    table_row,
)

__version__ = "0.1.0"

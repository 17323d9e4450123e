"""Exact-arithmetic toolkit for Novikov bialgebras, Yang-Baxter equations,
Rota-Baxter structures and the Lie bialgebras they induce."""

from .algebra import (
    Algebra,
    BilinearFormOnAlgebra,
    KindMismatchError,
    Representation,
    StructureMap,
    adjoint_rep,
    check_bilinear_form,
    check_identity,
    check_representation,
    check_structure_map,
    coadjoint_rep,
    direct_sum,
    endomorphism,
)
from .bialgebra import (
    BialgebraBundle,
    Coproduct,
    check_bialgebra,
    check_coalgebra,
    dual_product,
)
from .constructions import (
    DiffClassification,
    DiffDoubleBundle,
    DoubleBundle,
    InducedNovikov,
    LieBundle,
    NotFactorizableError,
    PreconditionError,
    QuadraticRB,
    check_manin_triple,
    check_quadratic_rb,
    classify_differential_r,
    delta_omega,
    descendent_algebra,
    differential_double,
    factorize_element,
    induce_lie_bialgebra,
    induce_novikov_bialgebra,
    induced_lie_algebra,
    lift_r_hat,
    novikov_double,
    r_from_quadratic_rb,
    rb_from_factorizable,
    rb_twin,
    sym_invariance_via_iso,
)
from .fixtures import FIXTURE_NAMES, Fixture, catalog, fixture
from .kernel import (
    DegenerateFormError,
    DimensionError,
    Matrix,
    Poly,
    Tensor2,
    Tensor3,
    dual_basis_wrt_form,
    format_rational,
    mat_inverse,
    mat_rank,
    parse_rational,
    poly_is_zero,
)
from .report import CheckResult, CompositeReport, FormReport
from .yangbaxter import (
    BudgetError,
    Classification,
    RMaps,
    RMatrix,
    admissible_aybe_check,
    a_star_product_from_r,
    build_r_maps,
    classify_r,
    coboundary_coproduct,
    grid_search_r,
    invariance_check,
    parametric_residual,
    ybe_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

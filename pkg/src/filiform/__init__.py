"""Exact structure-constant computations for filiform Leibniz algebras."""

from .catalog import (
    FamilyId, ParameterError, TranscriptionError, make, make_f1, make_f2, make_f3, make_m1,
    make_m2, make_m3, make_m4, make_ngf1, make_ngf2, make_ngf3,
)
from .core import (
    Algebra, DimensionError, LinearMap, NotLeibnizError, abelian, change_basis, direct_sum,
    is_filiform, is_lie, is_nilpotent, leibniz_defect, left_annihilator, lower_central_series,
    product, right_annihilator,
)
from .derivation import (
    b2_dim, derivation_space, expected_der_basis, graded_der_decomposition, h1_dim,
    inner_derivations, is_derivation,
)
from .gradation import (
    GradationError, GradationReport, admissible_weight_lattice, best_diagonal_gradation,
    natural_grading, verify_weights,
)
from .linalg import BACKEND, Subspace

__version__ = "0.1.0"

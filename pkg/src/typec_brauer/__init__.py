"""Exact engine for the type C Brauer algebra.

Symmetric Brauer diagrams with Laurent-polynomial coefficients, the
layer decomposition into hyperoctahedral groups, cell modules with
their invariant forms, and desk-scale decomposition matrices.
"""

from .algebra import (
    AlgebraElement,
    evaluate_word,
    generator,
    idempotent_f,
    involution,
    layer_of,
    multiply,
    verify_relations,
)
from .diagrams import (
    BrauerDiagram,
    arc_count,
    compose,
    enumerate_symmetric_diagrams,
    flip,
    is_symmetric,
    mirror,
)
from .hyperoctahedral import (
    SignedPermutation,
    enumerate_group,
    from_through_strands,
    group_compose,
    to_symmetric_perm,
)
from .inflation import (
    GroupAlgebraScalar,
    InflationTriple,
    SymmetricDangle,
    check_stratification,
    enumerate_dangles,
    inflation_multiply,
    phi,
    psi,
    psi_inverse,
)
from .representations import (
    Bipartition,
    cell_module,
    decomposition_matrix,
    gram_matrix,
    h_cell_module,
    qh_verdict,
    specht_module,
)
from .scalars import GENERIC, FieldSpec, Laurent, LaurentFraction, specialize

__version__ = "0.1.0"

"""Exact symbolic algebra for the braid and mapping class groups of the
Klein bottle and the torus: normal-form engines, presentation verification,
the double-cover embedding, Smith normal form, and a dimension oracle.
"""

from .abelian import (
    AbelianGroup,
    cokernel,
    nab_quotient_nonorientable,
    nab_quotient_orientable,
    smith_normal_form,
)
from .dims import DimAnswer, SurfaceSpec, consistency_sweep, dim_query
from .embeddings import (
    KleinPoint,
    TorusPoint,
    certify_injectivity_ball,
    induced_sl2,
    ker_phi_mcgk,
    lift_configuration,
    lift_matrices,
    phi1,
    phi1_closed_form,
)
from .klein import E1, E2, E3, E4, MCG_K, KleinElement, KleinEndo, mcg_compose
from .torusbraid import B2TElement, verify_all_presentations
from .words import (
    Alphabet,
    FreeWord,
    Generator,
    GroupHom,
    Presentation,
    oracle_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Alphabet",
    "B2TElement",
    "DimAnswer",
    "E1",
    "E2",
    "E3",
    "E4",
    "FreeWord",
    "Generator",
    "GroupHom",
    "KleinElement",
    "KleinEndo",
    "mcg_compose",
    "KleinPoint",
    "MCG_K",
    "Presentation",
    "SurfaceSpec",
    "TorusPoint",
    "certify_injectivity_ball",
    "cokernel",
    "consistency_sweep",
    "dim_query",
    "induced_sl2",
    "ker_phi_mcgk",
    "lift_configuration",
    "lift_matrices",
    "nab_quotient_nonorientable",
    "nab_quotient_orientable",
    "oracle_normal_form",
    "phi1",
    "phi1_closed_form",
    "smith_normal_form",
    "verify_all_presentations",
]

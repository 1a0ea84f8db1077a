"""Exact algebra for twisted Bernoulli shift data.

Triplets (H, mu, chi) -- a countable abelian group, a normalized scalar
2-cocycle and a character -- determine a lattice shift action on a twisted
group algebra.  This package does every computation about them exactly:
cocycle cohomology, conjugacy of the actions, centralizers, factoriality
of the base algebra, and the rational-time malleability flow on the
tensor square.
"""

from .abelian import (
    AbElem,
    AbGroup,
    AbHom,
    Character,
    StructureReport,
    abstractly_isomorphic,
    dual_characters,
    enumerate_automorphisms,
    enumerate_isomorphisms,
    group_structure,
    is_isomorphism,
)
from .algebra import (
    AlgebraElement,
    TensorElement,
    apply_diagonal_character,
    malleability_flow,
    malleability_unitary,
)
from .classify import (
    CentralizerReport,
    ConjugacyReport,
    PiPhi,
    VerifyReport,
    build_pi,
    centralizer,
    check_conditions,
    decide_conjugacy,
    verify_pi,
)
from .cocycle import (
    Bicharacter,
    BilinearCocycle,
    CocycleError,
    TableCocycle,
    coboundary_cocycle,
    coboundary_witness,
    cohomologous,
    degeneracy_witness,
    is_nondegenerate,
    star_bicharacter,
    to_table,
    trivial_cocycle,
)
from .configs import Config, dipole, mu_hat, mu_tilde
from .dynamics import (
    Motion,
    Triplet,
    beta,
    is_dual_fixed,
    motion_identity,
    motion_mul,
    rho,
    verify_motion_relations,
    weak_mixing_witness,
)
from .families import (
    det_form_cocycle,
    lattice_det_triplet,
    mod_q_character,
    mod_q_cocycle,
    mod_q_group,
    mod_q_triplet,
    product_triplet,
    trivial_triplet,
)
from .lattice import (
    DELTA,
    E1,
    E2,
    ETA,
    ORIGIN,
    XI,
    AffineSL2,
    LatticePoint,
    det2,
    gcd2,
    named_elements,
    spiral_index,
    spiral_points,
)
from .scalars import Cyclotomic, Phase

__version__ = "0.1.0"

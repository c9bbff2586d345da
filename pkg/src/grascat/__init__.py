"""grascat: computable combinatorics of Grassmannian cluster algebras.

Semistandard tableaux and the dominant-monomial dictionary, quiver and seed
mutation, exact g-vectors, Jacobian algebras with their E-invariants,
Hernandez-Leclerc subset formulas, and the braid action on vector tuples.
"""

from .braid import (
    VectorTuple,
    braid_property_check,
    is_consecutively_generic,
    sigma,
    twisted_shift,
)
from .cluster import (
    ExploreResult,
    Quiver,
    Seed,
    explore,
    grassmannian_initial_seed,
    mutate_quiver,
    mutate_seed,
)
from .cmcat import (
    KSubset,
    Profile,
    cyclic_shift_profile,
    profile_balance_check,
    rim_height,
    tau_inverse_two_interval,
    tau_two_interval,
)
from .einv import (
    EValueReport,
    TwoTermComplex,
    are_compatible,
    e_pair,
    ee_symmetrized,
    generic_e,
    generic_e_pair,
    is_exchange_pair,
    is_real_g,
)
from .errors import GrascatError
from .gvec import ConePresentation, GVector, cone_presentation, g_vector
from .hl import (
    gamma_quiver,
    hl_mutation_sequence,
    kernel_subset,
    kr_compatible,
    kr_subset,
    q_ell_quiver,
    tau_kernel_subset,
)
from .qpa import Algebra, QuiverWithPotential, build_algebra, potential_relations
from .tableaux import (
    Dominance,
    DominantMonomial,
    Tableau,
    bender_knuth,
    dominance_compare,
    equivalent,
    fundamental_subset,
    monomial_to_tableau,
    promote,
    quotient,
    reduce,
    tableau_to_monomial,
    union,
)

__version__ = "0.1.0"

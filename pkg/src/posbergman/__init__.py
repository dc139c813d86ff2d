"""Initial oriented matroids, Bergman and positive Bergman complexes, and the
space of equidistant trees on K_n."""

from .errors import CapacityError, InputError
from .om import (
    OrientedMatroid,
    SignedSet,
    bases,
    basis_sign_product,
    circuits_from_matrix,
    contract,
    covectors,
    from_digraph,
    has_loops,
    incidence_matrix,
    is_acyclic,
    is_orthogonal,
    matroid_of_columns,
    positive_covectors,
    positive_flats,
    rank,
    reorient,
    validate_circuits,
)
from .initial import (
    Flag,
    flag_of,
    in_bergman_fan,
    in_positive_bergman_fan,
    init_circuit,
    is_positive_flag,
    is_valid_flag,
    matroid_mw,
    min_weight_bases,
    representative_weight,
)
from .bergman import (
    coarse_cells,
    euler_characteristic,
    f_vector,
    fine_cells,
    las_vergnas_lattice,
    lattice_of_flats,
)
from .shapes import (
    IncreasingTree,
    TreeShape,
    hook_count,
    increasing_labelings,
    permutation_of_tree,
    tree_of_permutation,
)
from .trees import (
    EquidistantTree,
    coarse_poset_positive,
    covering_statistics,
    distance_vector,
    is_positive_point,
    kn_oriented_matroid,
    tree_from_point,
)

__version__ = "0.1.0"

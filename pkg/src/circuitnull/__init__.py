"""Circuit partitions, GF(2) interlacement, and interlace polynomials of 4-regular multigraphs."""

from .errors import CapExceededError, InputFormatError
from .gf2 import Gf2Matrix, nullity, principal_submatrix, rank, set_diagonal
from .graphs import (
    DirectedView,
    EulerSystem,
    Multigraph,
    check_euler_system,
    components,
    cyclic_word_key,
    directed_euler_system,
    euler_system,
    from_double_occurrence_words,
    from_edge_list,
    orient,
    random_regular_multigraph,
    reversed_component,
)
from .interlace import (
    LoopedGraph,
    ToggleReport,
    interlace_graph,
    interlace_matrix,
    interlaced,
    interlacement_toggle_check,
    kappa_transform,
    looped_graph,
)
from .partitions import (
    CircuitPartition,
    SweepReport,
    Transition,
    format_assignment,
    induced_assignment,
    pairing_at_vertex,
    parse_assignment,
    partition_matrix,
    predicted_size,
    trace,
    transition_matchings,
    verify_extended_cle,
)
from .polynomials import (
    MultiPoly,
    courcelle,
    courcelle_from_partitions,
    evaluate,
    q2_from_partitions,
    q_from_partitions,
    q_nullity,
    q_two_variable,
    substitute,
)
from .permutations import (
    PairDigraph,
    Permutation,
    ReductionReport,
    cohn_lempel_matrix,
    compose_cycle_with_transpositions,
    even_extension,
    orbit_count,
    orbit_count_via_nullity,
    parse_permutation,
    permutation_to_digraph,
    sigma_transposition_factorization,
    verify_permutation_reduction,
)

__all__ = [
    "CapExceededError",
    "CircuitPartition",
    "DirectedView",
    "EulerSystem",
    "Gf2Matrix",
    "InputFormatError",
    "LoopedGraph",
    "MultiPoly",
    "Multigraph",
    "PairDigraph",
    "Permutation",
    "ReductionReport",
    "SweepReport",
    "ToggleReport",
    "Transition",
    "check_euler_system",
    "cohn_lempel_matrix",
    "compose_cycle_with_transpositions",
    "components",
    "courcelle",
    "courcelle_from_partitions",
    "cyclic_word_key",
    "directed_euler_system",
    "euler_system",
    "evaluate",
    "even_extension",
    "format_assignment",
    "from_double_occurrence_words",
    "from_edge_list",
    "induced_assignment",
    "interlace_graph",
    "interlace_matrix",
    "interlaced",
    "interlacement_toggle_check",
    "kappa_transform",
    "looped_graph",
    "nullity",
    "orbit_count",
    "orbit_count_via_nullity",
    "orient",
    "pairing_at_vertex",
    "parse_assignment",
    "parse_permutation",
    "partition_matrix",
    "permutation_to_digraph",
    "predicted_size",
    "principal_submatrix",
    "q2_from_partitions",
    "q_from_partitions",
    "q_nullity",
    "q_two_variable",
    "random_regular_multigraph",
    "rank",
    "reversed_component",
    "set_diagonal",
    "sigma_transposition_factorization",
    "substitute",
    "trace",
    "transition_matchings",
    "verify_extended_cle",
    "verify_permutation_reduction",
]

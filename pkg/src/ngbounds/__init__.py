"""Nordhaus-Gaddum clique/independent-set quantities and their machinery.

Exact counting of cliques and independent sets (all sizes), the
compression operator driving any graph to a threshold graph without
shrinking the product quantities, threshold codes and their closed-form
counts, packed degree sequences and the lattice-path/border analysis behind
the fixed-size product bound, multicolor families with good-sequence
certificates and the tournament construction, plus brute-force oracles and
seeded samplers to verify all of it at desk scale.
"""

from .compression import (
    NeighborhoodPartition,
    compress,
    compress_to_threshold,
    neighborhood_partition,
)
from .counting import (
    CliqueProfile,
    clique_profile,
    count_cliques,
    count_independent_sets,
    independent_profile,
    pi,
    pi_t,
    profile_by_scan,
    sigma,
    sigma_t,
)
from .graphs import (
    Graph,
    Graph6Error,
    complement,
    emit_graph6,
    is_clique,
    is_independent,
    parse_graph6,
)
from .multicolor import (
    ColoringFormatError,
    GoodSequenceCertificate,
    GraphFamily,
    Tournament,
    certificate_length,
    certificate_lower_bound,
    count_covering_tuples,
    count_good_sequences,
    emit_coloring,
    good_sequence_certificate,
    multicolor_upper_bound,
    parse_coloring,
    pigeonhole_sequence,
    product_clique_counts,
    sum_clique_counts,
    tournament_blocks,
    tournament_construction,
)
from .oracle import (
    ExponentReport,
    ExtremalRecord,
    exhaustive_coloring_extremal,
    exhaustive_extremal,
    merge_records,
    random_pi_exponent,
    random_tournament,
    sample_random_coloring,
    sample_random_graph,
)
from .packing import (
    BorderPath,
    LeadingTermBound,
    border_from_heights,
    border_integrals,
    conjugate,
    critical_ratio,
    discrete_border_max,
    leading_term_bound,
    majorizes,
    numeric_split_root,
    one_turn_max,
    one_turn_value,
    packed_pair,
    ratio_equation_residual,
    simplex_grid_max,
    two_turn_product,
)
from .threshold import (
    SplitDegrees,
    ThresholdCode,
    build,
    closed_form_counts,
    extremal_one_turn_codes,
    recognize,
    split_degrees,
)

__version__ = "0.1.0"

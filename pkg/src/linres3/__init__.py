"""Linear resolutions and linear quotients of equigenerated monomial ideals in k[x, y, z]."""
from .betti import (
    BettiTable,
    betti_table,
    betti_tables,
    has_linear_resolution_oracle,
    hilbert_consistency_check,
    is_linearly_presented_oracle,
    regularity,
    socle_degrees_from_back_twists,
    socle_degrees_from_table,
    upper_koszul_complex,
)
from .criterion import (
    BadConfigWitness,
    d_shadow,
    find_bad_configuration,
    has_linear_resolution_criterion,
    induces_bad_configuration,
    level,
    socle_monomials,
)
from .dualgraph import (
    DualGraph,
    Verdict,
    dual_graph,
    is_connected,
    is_linearly_presented,
    restricted_graph,
    simplex_graph,
)
from .harness import (
    IdealReport,
    SweepReport,
    enumerate_equigenerated,
    reisner_demo,
    run_sweep,
    stanley_reisner_ideal,
    validate_ideal,
)
from .homology import SimplicialComplex, matrix_rank, reduced_homology_ranks
from .monomials import (
    Monomial,
    MonomialIdeal,
    contains,
    divides,
    format_monomial,
    lcm,
    minimalize,
    monomials_of_degree,
    power,
    power_ideal,
)
from .quotients import (
    TreeOrder,
    colon_generators,
    find_linear_quotient_order,
    has_linear_quotients_in_order,
    prefix_linear_presentation_check,
    tree_order,
)
from .textio import format_ideal, parse_ideal, parse_monomial, render_dual_graph

__version__ = "0.1.0"

"""From daily stock prices to positroid geometry.

The pipeline: closing prices give per-date price rankings; rank
reversals between consecutive dates are crossing events (adjacent
transpositions); the accumulated crossings form a permutation of the
reference-date ranks; net price moves color its fixed points.  The
decorated permutation then determines a Grassmann necklace, a positroid,
a cell dimension, and the positroid polytope whose vertices are the 0/1
indicator vectors of the bases.
"""

from .necklace import (
    GrassmannNecklace,
    NecklaceViolation,
    cyclic_interval,
    cyclic_interval_rank,
    decorated_from_necklace,
    necklace_from_decorated,
    validate_necklace,
)
from .perms import (
    BoundedAffinePermutation,
    Color,
    DecoratedPermutation,
    Permutation,
    WiringWord,
    affine_lift,
    all_decorated_permutations,
    all_permutations,
    anti_exceedance_count,
    inversions,
    is_reduced,
    remove_letter,
    word_to_permutation,
)
from .polytope import (
    CellChain,
    CellStep,
    Facet,
    PositroidPolytope,
    RemovalFace,
    decomposition_chain,
    enumerate_facets,
    face_of_removal,
    polytope_dimension,
    polytope_from_positroid,
    vertices_from_inequalities,
)
from .positroid import (
    ExchangeFailure,
    GaleOrder,
    Positroid,
    cell_dimension,
    circuits,
    connected_components,
    gale_geq,
    gale_minimum,
    interval_rank_summands,
    matroid_rank,
    necklace_of_positroid,
    positroid_from_decorated,
    positroid_from_necklace,
    verify_exchange_axiom,
)
from .prices import (
    CrossingEvent,
    PriceCsvError,
    PriceTable,
    Ranking,
    crossing_stream,
    decorate,
    load_sample_table,
    parse_price_csv,
    permutation_at,
    rank_at_date,
    rankings,
    read_price_csv,
    sample_csv_text,
)
from .render import render_chords, render_hooks, render_wiring
from .report import (
    AnalysisReport,
    ConsistencyError,
    build_report,
    check_report,
    report_to_dict,
    report_to_json,
    report_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundedAffinePermutation",
    "CellChain",
    "CellStep",
    "Color",
    "ConsistencyError",
    "CrossingEvent",
    "DecoratedPermutation",
    "ExchangeFailure",
    "Facet",
    "GaleOrder",
    "GrassmannNecklace",
    "NecklaceViolation",
    "Permutation",
    "Positroid",
    "PositroidPolytope",
    "PriceCsvError",
    "PriceTable",
    "Ranking",
    "RemovalFace",
    "WiringWord",
    "affine_lift",
    "all_decorated_permutations",
    "all_permutations",
    "anti_exceedance_count",
    "build_report",
    "cell_dimension",
    "check_report",
    "circuits",
    "connected_components",
    "crossing_stream",
    "cyclic_interval",
    "cyclic_interval_rank",
    "decorate",
    "decorated_from_necklace",
    "decomposition_chain",
    "enumerate_facets",
    "face_of_removal",
    "gale_geq",
    "gale_minimum",
    "interval_rank_summands",
    "inversions",
    "is_reduced",
    "load_sample_table",
    "matroid_rank",
    "necklace_from_decorated",
    "necklace_of_positroid",
    "parse_price_csv",
    "permutation_at",
    "polytope_dimension",
    "polytope_from_positroid",
    "positroid_from_decorated",
    "positroid_from_necklace",
    "rank_at_date",
    "rankings",
    "read_price_csv",
    "remove_letter",
    "render_chords",
    "render_hooks",
    "render_wiring",
    "report_to_dict",
    "report_to_json",
    "report_to_text",
    "sample_csv_text",
    "validate_necklace",
    "verify_exchange_axiom",
    "vertices_from_inequalities",
    "word_to_permutation",
]

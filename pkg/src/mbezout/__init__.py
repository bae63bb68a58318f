"""Multihomogeneous embedding bounds for minimally rigid graphs.

The package computes the bound through two independent routes (an
orientation count and a matrix permanent), compares it against the
classical upper bounds, and decides for concrete graphs whether the
bound is attained, over both the euclidean space and the sphere.
"""

from .bounds import (BoundReport, BregmanMincBound, OrientationBound,
                     asymptotic_table, bezout_bound,
                     bezout_exceeds_bregman_minc,
                     bregman_minc_asymptotic_base, bregman_minc_bound,
                     compare_bounds, felsner_zickfeld_bound,
                     fz_embedding_asymptotic_base,
                     fz_orientation_asymptotic_base)
from .catalog import NAMED_GRAPHS, CatalogEntry, lookup
from .exactness import (ExactnessReport, OracleConfig, Witness,
                        conjecture_consistency, is_mbezout_exact,
                        random_prime)
from .graphs import (Graph, GraphFormatError, InvalidBaseError,
                     MaxwellReport, NoBaseCliqueError, canonical_form,
                     enumerate_fixed_bases, format_edge_list,
                     generation_tally, graph_from_json, graph_to_json,
                     henneberg_generate, is_planar, last_move_class,
                     load_graph, maxwell_check, parse_edge_list,
                     save_graph, seed_graph, validate_base)
from .groebner import (GroebnerResult, buchberger, has_solution,
                       normal_form, quotient_dimension)
from .orientations import (BoundValue, count_orientations,
                           mbezout_via_orientations, min_mbezout,
                           orientation_problem)
from .permanent import (MBezoutMatrix, build_mbezout_matrix,
                        mbezout_via_permanent, permanent,
                        permanent_reference)
from .polynomials import Polynomial, PolyRing
from .spheresystem import (DeltaChoice, DeltaSystem, SphereSystem,
                           build_sphere_system, construct_delta_poly,
                           delta_choices)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "BoundValue", "BregmanMincBound", "CatalogEntry",
    "DeltaChoice", "DeltaSystem", "ExactnessReport", "Graph",
    "GraphFormatError", "GroebnerResult", "InvalidBaseError",
    "MBezoutMatrix", "MaxwellReport", "NAMED_GRAPHS",
    "NoBaseCliqueError", "OracleConfig", "OrientationBound",
    "PolyRing", "Polynomial", "SphereSystem", "Witness",
    "asymptotic_table", "bezout_bound",
    "bezout_exceeds_bregman_minc", "bregman_minc_asymptotic_base",
    "bregman_minc_bound", "buchberger", "build_mbezout_matrix",
    "build_sphere_system", "canonical_form", "compare_bounds",
    "conjecture_consistency", "construct_delta_poly",
    "count_orientations", "delta_choices", "enumerate_fixed_bases",
    "felsner_zickfeld_bound", "format_edge_list",
    "fz_embedding_asymptotic_base", "fz_orientation_asymptotic_base",
    "generation_tally", "graph_from_json", "graph_to_json",
    "has_solution", "henneberg_generate", "is_mbezout_exact",
    "is_planar", "last_move_class", "load_graph", "lookup",
    "maxwell_check", "mbezout_via_orientations",
    "mbezout_via_permanent", "min_mbezout", "normal_form",
    "orientation_problem", "parse_edge_list", "permanent",
    "permanent_reference", "quotient_dimension", "random_prime",
    "save_graph", "seed_graph", "validate_base",
]

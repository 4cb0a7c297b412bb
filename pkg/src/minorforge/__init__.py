"""Robust expanders, disjoint path systems, and sparse pattern embeddings.

The library is organised bottom-up: ``graphs`` holds the immutable graph
type and text format, ``expander`` the density potential and the
verifier/extractor pair, ``paths`` the certified connectors and growth
profiles, ``structures`` the suns/units/webs/nakjis and their builders,
``hpartition`` the walk-based partitions onto odd cycles and suns,
``transforms`` and ``planar`` the minor-preserving surgeries, ``generators``
the host constructions and degree-window bounds, ``oracle`` the exhaustive
containment checks, and ``pipeline`` the strategy-chained embedder that the
``minorforge`` CLI fronts.
"""

from .expander import (ExpanderParams, ExpansionCertificate, ExtractionError,
                       ExtractionResult, ParameterError,
                       adversarial_boundary_deletion, extract_expander,
                       gamma, phi_score, rho, verify_robust_expander)
from .generators import (DegreeBounds, GraphStats, gen_complete_bipartite,
                         gen_disjoint_cliques, gen_grid, gen_planar_with_k4s,
                         graph_stats, minor_degree_bounds)
from .graphs import (Graph, GraphError, complete_graph, cycle_graph,
                     disjoint_union, format_graph_text, parse_graph_text,
                     path_graph, to_dot)
from .hpartition import (BandwidthResult, CyclePartitionPlan, PartitionError,
                         SeparatorResult, SunPartitionPlan, bandwidth_order,
                         check_separable, order_bandwidth,
                         partition_onto_odd_cycle, partition_onto_sun,
                         validate_cycle_partition, validate_sun_partition)
from .oracle import (OracleResult, find_minor, find_subdivision,
                     is_k4_minor_free, validate_minor, validate_subdivision)
from .paths import (GrowthReport, IntersectionReport, PathBoundError,
                    check_path_intersection_bound, connect_avoiding,
                    consecutive_shortest_paths, growth_profile,
                    short_path_length_bound)
from .pipeline import (EmbedReport, embed_subdivision, far_apart_anchors,
                       subexpander_family)
from .planar import (DualResult, PlanarEmbedding, SubdivisionResult,
                     bipartite_subdivision, dual_graph, embed_planar,
                     gen_triangulation, maximum_matching,
                     one_sided_subdivision)
from .structures import (BuildReport, Nakji, Sun, SunSearchResult, Unit, Web,
                         build_nakjis, build_unit, build_web,
                         find_disjoint_stars, find_sun, validate_nakji,
                         validate_sun, validate_unit, validate_web)
from .transforms import (DoubleResult, SplitResult, TwoColorResult,
                         bipartite_double, split_high_degree,
                         two_color_classes)
from .viz import render_graph

__all__ = [name for name in dir() if not name.startswith("_")]
